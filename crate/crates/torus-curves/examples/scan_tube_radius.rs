//! Sweep the tube radius and watch the two degeneracies: curvature minima
//! dive to zero only at b = p^2/(p^2+q^2), and |torsion| minima reveal the
//! window where torsion never vanishes.
//!
//! Run with: cargo run --example scan_tube_radius

use torus_curves::vanishing::{critical_radius, scan_over_b, torsion_window};

fn main() {
    let (p, q) = (1u32, 4u32);
    let critical = critical_radius(p, q);
    println!("(p, q) = ({p}, {q}), critical b* = {critical} = {:.9}", critical.value());

    let window = torsion_window(p, q);
    println!(
        "nowhere-vanishing-torsion window: ({}, {}/{}) -> {}",
        window.lower,
        window.upper_num,
        window.upper_den,
        if window.is_empty { "empty" } else { "open" }
    );

    // A small grid that contains the critical radius exactly.
    let mut grid: Vec<f64> = (1..=15).map(|i| i as f64 / 16.0).collect();
    grid.push(critical.value());
    grid.sort_by(|a, b| a.partial_cmp(b).unwrap());

    let result = scan_over_b(p, q, &grid, 4096).unwrap();
    println!("\n{:>10} {:>14} {:>14} {:>14}", "b", "min kappa", "min |tau|", "argmin t");
    for row in &result.rows {
        let tau = if row.min_abs_tau.is_nan() {
            format!("{:>14}", "undefined")
        } else {
            format!("{:14.6e}", row.min_abs_tau)
        };
        println!(
            "{:10.6} {:14.6e} {tau} {:14.6}",
            row.b, row.min_kappa, row.argmin_t_kappa
        );
    }
    println!(
        "\ngrid radius closest to critical: {:.9}",
        result.rows[result.closest_to_critical()].b
    );

    // The torsion window for (2,3) is empty; the scan reports that as a
    // finding rather than an error.
    let window = torsion_window(2, 3);
    println!(
        "\n(2,3) window ({}, {}/{}) is {}",
        window.lower,
        window.upper_num,
        window.upper_den,
        if window.is_empty { "empty: torsion zeros appear at every off-critical radius" } else { "open" }
    );
}
