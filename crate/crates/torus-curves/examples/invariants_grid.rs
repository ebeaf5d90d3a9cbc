//! Sample every invariant over a parameter grid and watch the curvature
//! collapse at the critical tube radius.
//!
//! Run with: cargo run --example invariants_grid

use std::f64::consts::TAU;

use torus_curves::curve::TorusCurveSpec;
use torus_curves::invariants::invariant_sample;

fn print_table(spec: &TorusCurveSpec, n: usize) {
    println!("\n{spec}");
    println!(
        "{:>10} {:>12} {:>12} {:>12} {:>12} {:>12}",
        "t", "speed", "kappa", "tau", "kappa_g", "kappa_n"
    );
    for i in 0..n {
        let t = TAU * i as f64 / n as f64;
        let s = invariant_sample(spec, t);
        let tau = s
            .tau
            .map(|v| format!("{v:12.6}"))
            .unwrap_or_else(|| format!("{:>12}", "undefined"));
        println!(
            "{:10.6} {:12.6} {:12.6} {tau} {:12.6} {:12.6}",
            s.t, s.speed, s.kappa, s.kappa_g, s.kappa_n
        );
    }
}

fn main() {
    // Off the critical radius the curvature stays comfortably positive.
    let generic = TorusCurveSpec::from_float(2, 3, 0.5).unwrap();
    print_table(&generic, 12);

    // At b = 4/13 the rows at t = pi/3, pi, 5*pi/3 degenerate: curvature
    // drops to rounding noise and torsion becomes undefined.
    let critical = TorusCurveSpec::from_rational(2, 3, 4, 13).unwrap();
    print_table(&critical, 12);
}
