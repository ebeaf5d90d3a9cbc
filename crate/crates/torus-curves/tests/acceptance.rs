//! Acceptance suite: every structural claim the crate makes, each with its
//! stated tolerance and runtime budget, one pass line per criterion.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

mod common;

use std::f64::consts::{PI, TAU};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::Rng;

use common::{close, direct_position, rng};
use torus_curves::curve::{surface_frame_at, TorusCurveSpec};
use torus_curves::invariants::{
    curvature, geodesic_curvature, geodesic_curvature_closed_form,
    geodesic_curvature_closed_form_unsquared, normal_curvature, normal_curvature_closed_form,
    normal_curvature_from_form,
};
use torus_curves::projection::{
    axis_containment_det, jet_tangent_space_dim, simultaneous_system_solve, verify_proposition,
    DEFAULT_RANK_TOLERANCE,
};
use torus_curves::vanishing::{
    critical_radius, geodesic_zero_candidates, scan_over_b, torsion_window,
    zero_curvature_points,
};

fn pass(criterion: &str, detail: String, elapsed: Duration) {
    println!(
        "acceptance {criterion}: PASS ({detail}; {:.3}s)",
        elapsed.as_secs_f64()
    );
}

fn critical_spec(p: i64, q: i64) -> TorusCurveSpec {
    let r = critical_radius(p as u32, q as u32);
    TorusCurveSpec::from_rational(p, q, r.num as i64, r.den as i64).unwrap()
}

#[test]
fn c01_critical_radius_exactness() {
    let start = Instant::now();
    let r23 = critical_radius(2, 3);
    let r14 = critical_radius(1, 4);
    let elapsed = start.elapsed();
    assert_eq!((r23.num, r23.den), (4, 13));
    assert_eq!((r14.num, r14.den), (1, 17));
    assert!(
        elapsed < Duration::from_millis(1),
        "took {:?}",
        elapsed
    );
    pass(
        "1 (critical radius exactness)",
        format!("4/13 and 1/17, {:?}", elapsed),
        elapsed,
    );
}

#[test]
fn c02_zero_curvature_point_count_and_geometry() {
    let start = Instant::now();
    for (p, q) in [(2i64, 3i64), (1, 4), (3, 5), (5, 2)] {
        let spec = critical_spec(p, q);
        let set = zero_curvature_points(&spec);
        assert!(set.is_critical, "({p},{q}) should be critical");
        assert_eq!(set.points.len(), q as usize, "({p},{q}) point count");
        let curve = spec.trig_curve();
        for &t in &set.points {
            let kappa = curvature(&curve.jet(t, 2).unwrap());
            assert!(kappa < 1e-9, "({p},{q}) t={t}: kappa={kappa:e}");
            let pos = spec.position(t);
            assert!(pos.z.abs() < 1e-12, "({p},{q}) t={t}: z={:e}", pos.z);
            let axis_distance = pos.xy().norm();
            assert!(
                (axis_distance - (1.0 - spec.b())).abs() < 1e-12,
                "({p},{q}) t={t}: axis distance {axis_distance}"
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {:?}", elapsed);
    pass(
        "2 (zero-curvature count and geometry)",
        "q points on the innermost circle for 4 winding pairs".to_string(),
        elapsed,
    );
}

#[test]
fn c03_uniqueness_scan_over_radii() {
    let start = Instant::now();
    let critical = 4.0 / 13.0;
    let mut grid: Vec<f64> = (0..401)
        .map(|i| 0.01 + (0.99 - 0.01) * i as f64 / 400.0)
        .collect();
    let nearest = (0..grid.len())
        .min_by(|&i, &j| {
            (grid[i] - critical)
                .abs()
                .partial_cmp(&(grid[j] - critical).abs())
                .unwrap()
        })
        .unwrap();
    grid[nearest] = critical;

    let result = scan_over_b(2, 3, &grid, 4096).unwrap();
    assert_eq!(result.rows.len(), 401);
    let mut floor_off_critical = f64::INFINITY;
    for row in &result.rows {
        if row.b == critical {
            assert!(
                row.min_kappa < 1e-9,
                "critical row min kappa = {:e}",
                row.min_kappa
            );
        } else {
            floor_off_critical = floor_off_critical.min(row.min_kappa);
            assert!(
                row.min_kappa > 1e-4,
                "b = {}: min kappa = {:e}",
                row.b,
                row.min_kappa
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {:?}", elapsed);
    pass(
        "3 (uniqueness scan over 401 radii)",
        format!("off-critical floor = {floor_off_critical:.3e}"),
        elapsed,
    );
}

#[test]
fn c04_decomposition_identity() {
    let start = Instant::now();
    let mut rng = rng(4);
    let mut worst: f64 = 0.0;
    for _ in 0..10_000 {
        let p = rng.gen_range(1..=6i64);
        let q = rng.gen_range(1..=6i64);
        let b = rng.gen_range(0.05..0.95);
        let t = rng.gen_range(0.0..TAU);
        let spec = TorusCurveSpec::from_float(p, q, b).unwrap();
        let jet = spec.trig_curve().jet(t, 2).unwrap();
        let frame = surface_frame_at(&spec, t);
        let kappa = curvature(&jet);
        let kg = geodesic_curvature(&jet, &frame);
        let kn = normal_curvature(&jet, &frame);
        let residual = (kappa * kappa - kg * kg - kn * kn).abs();
        let bound = 1e-9 * (kappa * kappa).max(1.0);
        worst = worst.max(residual / bound);
        assert!(
            residual <= bound,
            "({p},{q},{b}) t={t}: residual {residual:e}"
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(5), "took {:?}", elapsed);
    pass(
        "4 (decomposition identity, 10k samples)",
        format!("worst residual at {worst:.3e} of the bound"),
        elapsed,
    );
}

#[test]
fn c05_closed_form_oracle_equivalence() {
    let start = Instant::now();
    let mut rng = rng(5);
    for _ in 0..10_000 {
        let p = rng.gen_range(1..=6i64);
        let q = rng.gen_range(1..=6i64);
        let b = rng.gen_range(0.05..0.95);
        let t = rng.gen_range(0.0..TAU);
        let spec = TorusCurveSpec::from_float(p, q, b).unwrap();
        let jet = spec.trig_curve().jet(t, 2).unwrap();
        let frame = surface_frame_at(&spec, t);

        let kg_def = geodesic_curvature(&jet, &frame);
        let kg_closed = geodesic_curvature_closed_form(&spec, t);
        assert!(
            close(kg_def, kg_closed, 1e-10),
            "kg ({p},{q},{b}) t={t}: {kg_def} vs {kg_closed}"
        );

        let kn_def = normal_curvature(&jet, &frame);
        let kn_closed = normal_curvature_closed_form(&spec, t);
        let kn_form = normal_curvature_from_form(&spec, t);
        assert!(
            close(kn_def, kn_closed, 1e-10),
            "kn ({p},{q},{b}) t={t}: {kn_def} vs {kn_closed}"
        );
        assert!(
            close(kn_form, kn_closed, 1e-10),
            "kn form ({p},{q},{b}) t={t}: {kn_form} vs {kn_closed}"
        );
    }

    // The unsquared variant disagrees in magnitude away from its zeros but
    // shares the zero set on the full candidate grid.
    let mut max_disagreement: f64 = 0.0;
    for (p, q, b) in [(2i64, 3i64, 0.5), (1, 4, 0.2), (3, 5, 0.26)] {
        let spec = TorusCurveSpec::from_float(p, q, b).unwrap();
        let t_generic = 0.41 / q as f64;
        let squared = geodesic_curvature_closed_form(&spec, t_generic);
        let unsquared = geodesic_curvature_closed_form_unsquared(&spec, t_generic);
        let gap = (squared - unsquared).abs() / squared.abs().max(1e-30);
        max_disagreement = max_disagreement.max(gap);
        assert!(
            gap > 1e-3,
            "({p},{q},{b}): variants should disagree, gap = {gap:e}"
        );
        for &t in &geodesic_zero_candidates(q as u32) {
            assert!(geodesic_curvature_closed_form(&spec, t).abs() < 1e-10);
            assert!(geodesic_curvature_closed_form_unsquared(&spec, t).abs() < 1e-10);
        }
    }
    let elapsed = start.elapsed();
    pass(
        "5 (closed-form oracle equivalence)",
        format!("variant magnitude gap up to {max_disagreement:.3e}"),
        elapsed,
    );
}

#[test]
fn c06_jets_match_finite_differences() {
    let start = Instant::now();
    let h = 1e-5;
    let mut rng = rng(6);
    for _ in 0..1000 {
        let p = rng.gen_range(1..=6i64);
        let q = rng.gen_range(1..=6i64);
        let b = rng.gen_range(0.05..0.95);
        let t = rng.gen_range(0.0..TAU);
        let spec = TorusCurveSpec::from_float(p, q, b).unwrap();
        let curve = spec.trig_curve();
        let jet = curve.jet(t, 4).unwrap();
        for k in 1..=4usize {
            let lower = |t: f64| {
                if k == 1 {
                    direct_position(spec.p(), spec.q(), b, t)
                } else {
                    curve.jet(t, k - 1).unwrap().derivative(k - 1)
                }
            };
            let fd = (lower(t + h) - lower(t - h)) / (2.0 * h);
            let exact = jet.derivative(k);
            let rel = (fd - exact).norm() / exact.norm().max(1.0);
            assert!(
                rel < 1e-6,
                "({p},{q},{b}) t={t} order {k}: rel error {rel:e}"
            );
        }
    }
    let elapsed = start.elapsed();
    pass(
        "6 (jets vs central differences to order 4)",
        "1000 random points, step 1e-5, tol 1e-6".to_string(),
        elapsed,
    );
}

#[test]
fn c07_proposition_iff() {
    let start = Instant::now();
    let cases: Vec<(TorusCurveSpec, usize)> = vec![
        (critical_spec(2, 3), 3),
        (TorusCurveSpec::from_float(2, 3, 0.25).unwrap(), 0),
        (TorusCurveSpec::from_float(2, 3, 0.5).unwrap(), 0),
        (critical_spec(1, 4), 4),
        (TorusCurveSpec::from_float(1, 4, 0.3).unwrap(), 0),
    ];
    for (spec, expected) in cases {
        let report = verify_proposition(&spec, 4096);
        assert!(
            report.holds(),
            "({}, {}, b={}) iff fails:\n{}",
            spec.p(),
            spec.q(),
            spec.b(),
            report.summary()
        );
        assert_eq!(report.zero_curvature.len(), expected);
        assert_eq!(report.higher_inflections.len(), expected);
        assert!(report.max_pairwise_gap <= 1e-9);
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {:?}", elapsed);
    pass(
        "7 (zero curvature <=> higher inflection)",
        "5 configurations, pairwise gap <= 1e-9".to_string(),
        elapsed,
    );
}

#[test]
fn c08_determinant_system_unique_solution() {
    let start = Instant::now();
    for (p, q) in [(2u32, 3u32), (1, 4), (3, 5)] {
        let solutions = simultaneous_system_solve(p, q, (0.01, 0.99), (-1.0, 1.0)).unwrap();
        assert_eq!(
            solutions.len(),
            1,
            "({p},{q}): expected a unique solution, got {solutions:?}"
        );
        let expected_b = critical_radius(p, q).value();
        assert!(
            (solutions[0].b - expected_b).abs() < 1e-9,
            "({p},{q}): b = {}",
            solutions[0].b
        );
        assert!(
            (solutions[0].cos_qt + 1.0).abs() < 1e-9,
            "({p},{q}): cos qt = {}",
            solutions[0].cos_qt
        );
    }
    let elapsed = start.elapsed();
    pass(
        "8 (two-determinant system solves uniquely)",
        "(b*, -1) for (2,3), (1,4), (3,5)".to_string(),
        elapsed,
    );
}

#[test]
fn c09_torsion_window() {
    let start = Instant::now();

    // (1,4): torsion bounded away from zero strictly inside the window.
    let window = torsion_window(1, 4);
    assert!(!window.is_empty);
    let (lo, hi) = (window.lower_value(), window.upper_value());
    assert!((hi - 15.0 / 33.0).abs() < 1e-15);
    let grid: Vec<f64> = (1..=100).map(|k| lo + (hi - lo) * k as f64 / 101.0).collect();
    let scan = scan_over_b(1, 4, &grid, 2048).unwrap();
    let mut min_tau = f64::INFINITY;
    for row in &scan.rows {
        assert!(
            row.min_abs_tau.is_finite() && row.min_abs_tau > 0.0,
            "b = {}: min |tau| = {}",
            row.b,
            row.min_abs_tau
        );
        min_tau = min_tau.min(row.min_abs_tau);
    }

    // (2,3): the window is empty (4/13 > 5/22) and that is a structured
    // finding, not a failure.
    let window = torsion_window(2, 3);
    assert!(window.is_empty);
    assert_eq!((window.lower.num, window.lower.den), (4, 13));
    assert_eq!((window.upper_num, window.upper_den), (5, 22));

    let elapsed = start.elapsed();
    pass(
        "9 (torsion window)",
        format!("(1,4) min |tau| = {min_tau:.3e}; (2,3) window empty"),
        elapsed,
    );
}

#[test]
fn c10_case_analysis_at_zero_points() {
    let start = Instant::now();
    for (p, q) in [(2i64, 3i64), (1, 4), (3, 5), (5, 2)] {
        let spec = critical_spec(p, q);
        let set = zero_curvature_points(&spec);
        assert_eq!(set.points.len(), q as usize);
        let curve = spec.trig_curve();
        for &t in &set.points {
            let jet = curve.jet(t, 3).unwrap();
            let t2 = jet_tangent_space_dim(&jet, 2, DEFAULT_RANK_TOLERANCE).unwrap();
            let t3 = jet_tangent_space_dim(&jet, 3, DEFAULT_RANK_TOLERANCE).unwrap();
            assert_eq!(t2.dim, 1, "({p},{q}) t={t}: dim T2 = {}", t2.dim);
            assert_eq!(t3.dim, 2, "({p},{q}) t={t}: dim T3 = {}", t3.dim);
            let det = axis_containment_det(&jet);
            assert!(det.abs() < 1e-9, "({p},{q}) t={t}: axis det = {det:e}");
        }
    }
    let elapsed = start.elapsed();
    pass(
        "10 (projection case analysis at zero points)",
        "dim T2 = 1, dim T3 = 2, axis det < 1e-9".to_string(),
        elapsed,
    );
}

#[test]
fn c11_cli_end_to_end() {
    let start = Instant::now();
    let bin = env!("CARGO_BIN_EXE_torus-curves");
    let dir = tempfile::tempdir().unwrap();

    for (p, q) in [("2", "3"), ("1", "4")] {
        let status = Command::new(bin)
            .args(["verify", "-p", p, "-q", q])
            .output()
            .unwrap();
        assert!(
            status.status.success(),
            "verify -p {p} -q {q} failed:\n{}",
            String::from_utf8_lossy(&status.stdout)
        );
    }

    let trefoil = dir.path().join("trefoil.svg");
    let status = Command::new(bin)
        .args(["project", "-p", "2", "-q", "3", "-b", "4/13", "-o"])
        .arg(&trefoil)
        .status()
        .unwrap();
    assert!(status.success());
    let svg = std::fs::read_to_string(&trefoil).unwrap();
    assert_eq!(svg.matches("<circle").count(), 3);

    let unknot = dir.path().join("unknot.svg");
    let status = Command::new(bin)
        .args(["project", "-p", "1", "-q", "4", "-b", "1/17", "-o"])
        .arg(&unknot)
        .status()
        .unwrap();
    assert!(status.success());
    let svg = std::fs::read_to_string(&unknot).unwrap();
    assert_eq!(svg.matches("<circle").count(), 4);

    let elapsed = start.elapsed();
    pass(
        "11 (CLI end to end)",
        "verify exits 0; projections carry 3 and 4 markers".to_string(),
        elapsed,
    );
}

#[test]
fn acceptance_synopsis_mentions_candidates() {
    // The candidate parameters reported by the locate path are exactly the
    // odd multiples of pi/q; spot-check the (2,3) values once at the
    // integration level.
    let set = zero_curvature_points(&critical_spec(2, 3));
    let expected = [PI / 3.0, PI, 5.0 * PI / 3.0];
    for (got, want) in set.points.iter().zip(expected) {
        assert!((got - want).abs() < 1e-12);
    }
}
