//! Render the planar shadow of a (p,q) curve for three tube radii: below,
//! at, and above the critical one. Only the middle picture carries markers,
//! because only there does the shadow have order >= 2 inflections.
//!
//! Run with: cargo run --example project_svg

use torus_curves::curve::{TorusCurveSpec, TubeRadius};
use torus_curves::output::render_projection_svg;
use torus_curves::projection::{higher_inflection_points, DEFAULT_RANK_TOLERANCE};

fn main() {
    let cases = [
        ("trefoil_b_0.1.svg", TubeRadius::approx(0.1).unwrap()),
        ("trefoil_b_4_13.svg", TubeRadius::exact(4, 13).unwrap()),
        ("trefoil_b_0.5.svg", TubeRadius::approx(0.5).unwrap()),
    ];
    for (name, radius) in cases {
        let spec = TorusCurveSpec::new(2, 3, radius).unwrap();
        let markers = higher_inflection_points(&spec, 4096, DEFAULT_RANK_TOLERANCE);
        let svg = render_projection_svg(&spec, 2048, &markers);
        let path = std::env::temp_dir().join(name);
        std::fs::write(&path, &svg).unwrap();
        println!(
            "b = {}: {} higher inflections -> {}",
            radius,
            markers.len(),
            path.display()
        );
        for &t in &markers {
            println!("  marker at t = {t:.12}");
        }
    }
}
