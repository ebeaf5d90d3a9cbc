//! Run the full verification battery for a couple of winding pairs; the
//! same battery backs the `torus-curves verify` subcommand.
//!
//! Run with: cargo run --example verify_theorem

use torus_curves::verify::run_battery;

fn main() {
    for (p, q) in [(2i64, 3i64), (1, 4)] {
        println!("=== verification battery for (p, q) = ({p}, {q}) ===");
        let report = run_battery(p, q).unwrap();
        print!("{}", report.render());
        println!();
    }
}
