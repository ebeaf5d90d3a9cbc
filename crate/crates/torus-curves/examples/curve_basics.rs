//! Build a (p,q) torus curve, evaluate it, and inspect the surface data
//! attached to it: exact derivative jets, the unitarized frame, and the
//! second fundamental form.
//!
//! Run with: cargo run --example curve_basics

use std::f64::consts::PI;

use torus_curves::curve::{second_fundamental_form_at, surface_frame_at, TorusCurveSpec};

fn main() {
    // The trefoil-shaped (2,3) curve on a torus with tube radius 1/2.
    let spec = TorusCurveSpec::from_float(2, 3, 0.5).unwrap();
    println!("curve: {spec}");
    println!("winding gcd: {} (primitive: {})", spec.winding_gcd(), spec.is_primitive());

    let curve = spec.trig_curve();
    println!("\npositions:");
    for t in [0.0, PI / 3.0, PI, 4.0] {
        let pos = curve.position(t);
        println!("  alpha({t:.4}) = ({:+.6}, {:+.6}, {:+.6})", pos.x, pos.y, pos.z);
    }

    // Derivatives of any order are exact: each trigonometric term
    // differentiates to another trigonometric term.
    let jet = curve.jet(0.7, 4).unwrap();
    println!("\njet at t = 0.7 (orders 0..=4):");
    for (k, d) in jet.derivatives.iter().enumerate() {
        println!("  d^{k}: ({:+.6}, {:+.6}, {:+.6})", d.x, d.y, d.z);
    }

    let frame = surface_frame_at(&spec, 0.7);
    println!("\nsurface frame at t = 0.7:");
    println!("  x_u = ({:+.6}, {:+.6}, {:+.6})", frame.tangent_u.x, frame.tangent_u.y, frame.tangent_u.z);
    println!("  x_v = ({:+.6}, {:+.6}, {:+.6})", frame.tangent_v.x, frame.tangent_v.y, frame.tangent_v.z);
    println!("  n   = ({:+.6}, {:+.6}, {:+.6})", frame.normal.x, frame.normal.y, frame.normal.z);

    let form = second_fundamental_form_at(&spec, 0.7);
    println!("\nsecond fundamental form at t = 0.7: diag({:.6}, {:.6})", form.e, form.g);
    println!("applied to the coordinate velocity (p, q): {:.6}", form.apply(2.0, 3.0));
}
