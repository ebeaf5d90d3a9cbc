//! End-to-end checks of the command-line surface: formats, determinism and
//! the exit-code contract (0 success, 1 verification failure, 2 usage or
//! I/O error).

use std::f64::consts::PI;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_torus-curves"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

#[test]
fn invariants_csv_shape_and_row_identity() {
    let output = run(&["invariants", "-p", "1", "-q", "1", "-b", "1/2", "-n", "8"]);
    assert!(output.status.success());
    let text = stdout(&output);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 9, "header plus eight rows");
    assert_eq!(lines[0], "t,speed,kappa,tau,kappa_g,kappa_n");
    for row in &lines[1..] {
        let fields: Vec<f64> = row
            .split(',')
            .map(|f| f.parse::<f64>().expect("numeric field"))
            .collect();
        assert_eq!(fields.len(), 6);
        let (kappa, kg, kn) = (fields[2], fields[4], fields[5]);
        assert!((kappa * kappa - kg * kg - kn * kn).abs() < 1e-9);
    }
}

#[test]
fn invariants_grid_meets_the_zero_set_when_resolution_divides() {
    // 1026 samples put rows exactly on t = pi/3, pi, 5*pi/3.
    let output = run(&["invariants", "-p", "2", "-q", "3", "-b", "4/13", "-n", "1026"]);
    assert!(output.status.success());
    let text = stdout(&output);
    let rows: Vec<Vec<f64>> = text
        .lines()
        .skip(1)
        .map(|row| row.split(',').map(|f| f.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 1026);
    for target in [PI / 3.0, PI, 5.0 * PI / 3.0] {
        let nearest = rows
            .iter()
            .min_by(|a, b| {
                (a[0] - target)
                    .abs()
                    .partial_cmp(&(b[0] - target).abs())
                    .unwrap()
            })
            .unwrap();
        assert!(
            nearest[2] < 1e-6,
            "kappa at the row nearest {target} is {}",
            nearest[2]
        );
        assert!(nearest[3].is_nan(), "torsion column should be NaN there");
    }
}

#[test]
fn invariants_json_parses_with_expected_keys() {
    let output = run(&[
        "invariants", "-p", "2", "-q", "3", "-b", "0.4", "-n", "4", "--format", "json",
    ]);
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["resolution"], 4);
    assert_eq!(value["samples"].as_array().unwrap().len(), 4);
    assert_eq!(value["spec"]["p"], 2);
    let sample = &value["samples"][0];
    for key in ["kappa", "kappa_g", "kappa_n", "source", "speed", "t", "tau"] {
        assert!(sample.get(key).is_some(), "missing key {key}");
    }
}

#[test]
fn locate_reports_points_and_critical_radius() {
    let output = run(&["locate", "-p", "1", "-q", "4", "-b", "1/17"]);
    assert!(output.status.success());
    let text = stdout(&output);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["is_critical"], true);
    assert_eq!(value["critical_b"]["exact"], "1/17");
    let points = value["points"].as_array().unwrap();
    assert_eq!(points.len(), 4);
    for point in points {
        assert!(point["z"].as_f64().unwrap().abs() < 1e-12);
        let radius = (point["x"].as_f64().unwrap().powi(2)
            + point["y"].as_f64().unwrap().powi(2))
        .sqrt();
        assert!((radius - 16.0 / 17.0).abs() < 1e-12);
    }
    // Keys serialize alphabetically.
    let critical_pos = text.find("\"critical_b\"").unwrap();
    let points_pos = text.find("\"points\"").unwrap();
    let spec_pos = text.find("\"spec\"").unwrap();
    assert!(critical_pos < points_pos && points_pos < spec_pos);
}

#[test]
fn locate_off_critical_is_empty_with_reference_value() {
    let output = run(&["locate", "-p", "2", "-q", "3", "-b", "0.5"]);
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["is_critical"], false);
    assert_eq!(value["critical_b"]["exact"], "4/13");
    assert_eq!(value["points"].as_array().unwrap().len(), 0);
}

#[test]
fn scan_b_emits_footer_and_single_point_grids_work() {
    let output = run(&[
        "scan-b", "-p", "2", "-q", "3", "--b-min", "0.3", "--b-max", "0.3", "--b-steps", "1",
        "-n", "512",
    ]);
    assert!(output.status.success());
    let text = stdout(&output);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3, "header, one row, footer:\n{text}");
    assert_eq!(lines[0], "b,min_kappa,argmin_t_kappa,min_abs_tau,argmin_t_tau");
    assert!(lines[2].starts_with("# closest_to_critical_b"));
}

#[test]
fn scan_b_include_critical_pins_the_global_minimum() {
    let output = run(&[
        "scan-b", "-p", "2", "-q", "3", "--b-min", "0.1", "--b-max", "0.9", "--b-steps", "21",
        "--include-critical", "-n", "1024",
    ]);
    assert!(output.status.success());
    let text = stdout(&output);
    let rows: Vec<Vec<f64>> = text
        .lines()
        .skip(1)
        .filter(|l| !l.starts_with('#'))
        .map(|row| row.split(',').map(|f| f.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 21);
    let critical = 4.0 / 13.0;
    let best = rows
        .iter()
        .min_by(|a, b| a[1].partial_cmp(&b[1]).unwrap())
        .unwrap();
    assert_eq!(best[0], critical, "global minimum sits at the critical radius");
    assert!(best[1] < 1e-9);
}

#[test]
fn scan_b_json_carries_the_torsion_window() {
    let output = run(&[
        "scan-b", "-p", "2", "-q", "3", "--b-min", "0.2", "--b-max", "0.4", "--b-steps", "3",
        "-n", "512", "--format", "json",
    ]);
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["torsion_window"]["is_empty"], true);
    assert_eq!(value["torsion_window"]["lower"]["exact"], "4/13");
    assert_eq!(value["torsion_window"]["upper"]["exact"], "5/22");
    assert_eq!(value["rows"].as_array().unwrap().len(), 3);
}

#[test]
fn project_svg_markers_follow_the_radius() {
    for (b, expected) in [("0.1", 0), ("4/13", 3), ("0.5", 0)] {
        let output = run(&["project", "-p", "2", "-q", "3", "-b", b, "-n", "256"]);
        assert!(output.status.success());
        let svg = stdout(&output);
        assert_eq!(
            svg.matches("<circle").count(),
            expected,
            "markers for b = {b}"
        );
        assert_eq!(svg.matches("<path").count(), 1);
    }
}

#[test]
fn outputs_are_byte_deterministic() {
    for args in [
        vec!["invariants", "-p", "2", "-q", "3", "-b", "4/13", "-n", "64"],
        vec!["locate", "-p", "2", "-q", "3", "-b", "4/13"],
        vec!["project", "-p", "1", "-q", "4", "-b", "1/17", "-n", "128"],
        vec![
            "scan-b", "-p", "1", "-q", "4", "--b-min", "0.1", "--b-max", "0.3", "--b-steps",
            "3", "-n", "512",
        ],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert!(first.status.success());
        assert_eq!(first.stdout, second.stdout, "args: {args:?}");
    }
}

#[test]
fn exit_codes_follow_the_contract() {
    // Config errors: exit 2 with a one-line diagnostic.
    let output = run(&["verify", "-p", "0", "-q", "3"]);
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert_eq!(stderr.lines().count(), 1);
    assert!(stderr.contains("nonzero"));

    let output = run(&["invariants", "-p", "2", "-q", "3", "-b", "1.5", "-n", "8"]);
    assert_eq!(output.status.code(), Some(2));

    let output = run(&["invariants", "-p", "2", "-q", "3", "-b", "0.5", "-n", "1"]);
    assert_eq!(output.status.code(), Some(2));

    // Unsupported format combination.
    let output = run(&[
        "invariants", "-p", "2", "-q", "3", "-b", "0.5", "-n", "8", "--format", "svg",
    ]);
    assert_eq!(output.status.code(), Some(2));

    // Unwritable output path.
    let output = run(&[
        "locate", "-p", "2", "-q", "3", "-b", "0.5", "-o", "/nonexistent-dir/report.json",
    ]);
    assert_eq!(output.status.code(), Some(2));

    // Usage errors from the parser.
    let output = run(&["locate", "--no-such-flag"]);
    assert_eq!(output.status.code(), Some(2));

    // Success path exits 0.
    let output = run(&["locate", "-p", "2", "-q", "3", "-b", "0.5"]);
    assert_eq!(output.status.code(), Some(0));
}

#[test]
fn verify_prints_a_line_per_check() {
    let output = run(&["verify", "-p", "2", "-q", "3"]);
    assert!(output.status.success());
    let text = stdout(&output);
    let pass_lines = text.lines().filter(|l| l.starts_with("PASS")).count();
    assert!(pass_lines >= 10, "got {pass_lines} PASS lines:\n{text}");
    assert!(text.lines().last().unwrap().starts_with("OK"));
}
