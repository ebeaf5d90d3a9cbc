//! For each winding pair there is exactly one tube radius with flat points:
//! b = p^2 / (p^2 + q^2), and then exactly q of them, all on the innermost
//! circle. Locate them exactly.
//!
//! Run with: cargo run --example locate_zero_curvature

use torus_curves::curve::TorusCurveSpec;
use torus_curves::vanishing::{critical_radius, normal_quadratic_roots, zero_curvature_points};

fn main() {
    for (p, q) in [(2i64, 3i64), (1, 4), (3, 5), (5, 2), (1, 1)] {
        let critical = critical_radius(p as u32, q as u32);
        println!("\n(p, q) = ({p}, {q}): critical tube radius b* = {critical} = {:.12}", critical.value());

        let spec =
            TorusCurveSpec::from_rational(p, q, critical.num as i64, critical.den as i64).unwrap();

        // The quadratic in cos(qt) behind the normal-curvature zeros always
        // admits cos(qt) = -1 at the critical radius.
        let quad = normal_quadratic_roots(&spec);
        println!("  roots in cos(qt): {:?} (feasible: {:?})", quad.roots, quad.feasible);

        let locus = zero_curvature_points(&spec);
        println!("  {} zero-curvature points:", locus.points.len());
        for &t in &locus.points {
            let pos = spec.position(t);
            println!(
                "    t = {t:.12}  ->  ({:+.9}, {:+.9}, {:+.9}), axis distance {:.9}",
                pos.x,
                pos.y,
                pos.z,
                pos.xy().norm()
            );
        }

        // A nearby radius loses them all.
        let off = TorusCurveSpec::from_float(p, q, (critical.value() + 0.07).min(0.95)).unwrap();
        println!(
            "  at b = {:.4}: {} zero-curvature points",
            off.b(),
            zero_curvature_points(&off).points.len()
        );
    }
}
