//! The rank machinery behind the inflection analysis: tangent-space
//! dimensions with their singular-value evidence, the axis-containment
//! determinant, and the two-determinant system whose unique solution is the
//! critical radius.
//!
//! Run with: cargo run --example inflection_ranks

use std::f64::consts::PI;

use torus_curves::curve::TorusCurveSpec;
use torus_curves::projection::{
    axis_containment_det, inflection_order, jet_tangent_space_dim, simultaneous_system_solve,
    verify_proposition, DEFAULT_RANK_TOLERANCE,
};

fn main() {
    let critical = TorusCurveSpec::from_rational(2, 3, 4, 13).unwrap();
    let curve = critical.trig_curve();

    println!("ranks at the zero-curvature point t = pi/3 of (2,3,4/13):");
    let jet = curve.jet(PI / 3.0, 4).unwrap();
    for m in 1..=4 {
        let report = jet_tangent_space_dim(&jet, m, DEFAULT_RANK_TOLERANCE).unwrap();
        println!(
            "  dim T_{m}(alpha) = {} (singular values {:?})",
            report.dim,
            report
                .singular_values
                .iter()
                .map(|s| format!("{s:.3e}"))
                .collect::<Vec<_>>()
        );
    }
    println!(
        "  axis containment det [(0,0,1); a'; a'''] = {:.3e}",
        axis_containment_det(&jet)
    );

    println!("\ninflection order of the shadow:");
    for (label, t) in [("zero-curvature point", PI / 3.0), ("generic point", 0.4)] {
        let report = inflection_order(&critical, t, 4, DEFAULT_RANK_TOLERANCE).unwrap();
        println!(
            "  at {label} (t = {t:.4}): order {} with planar dims {:?}",
            report.order,
            report.ranks.iter().map(|r| r.dim).collect::<Vec<_>>()
        );
    }

    println!("\nsolving det(b',b'') = det(a',a'',a''') = 0 in (b, cos qt):");
    for (p, q) in [(2u32, 3u32), (1, 4), (3, 5)] {
        let solutions = simultaneous_system_solve(p, q, (0.01, 0.99), (-1.0, 1.0)).unwrap();
        println!("  ({p},{q}): {} solution(s)", solutions.len());
        for s in &solutions {
            println!(
                "    b = {:.12}, cos(qt) = {:.12}, residuals ({:.1e}, {:.1e})",
                s.b, s.cos_qt, s.residual_planar, s.residual_spatial
            );
        }
    }

    println!("\nfull equivalence check at the critical radius:");
    print!("{}", verify_proposition(&critical, 4096).summary());
}
