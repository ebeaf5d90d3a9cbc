//! Serialization of reports: JSON with stable alphabetical keys and
//! 17-significant-digit floats, CSV with a `NaN` literal for undefined
//! torsion, and deterministic SVG rendering of planar projections.

use std::io::{self, Write};

use serde::Serialize;
use serde_json::ser::{Formatter, Serializer};
use serde_json::{json, Value};

use crate::curve::{Jet, SurfaceFrame, TorusCurveSpec, TubeRadius};
use crate::invariants::{InvariantSample, Source};
use crate::projection::{
    InflectionOrder, InflectionReport, PropositionReport, RankReport, SystemSolution,
};
use crate::vanishing::{
    critical_radius, BScanResult, CriticalMatch, TorsionWindow, ZeroCurvatureSet,
};

/// Formats a float with 17 significant digits: enough to round-trip any
/// f64 exactly. NaN prints as the literal `NaN`.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

struct SigDigitFormatter;

impl Formatter for SigDigitFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// Serializes a JSON value with sorted keys (the default map is a BTreeMap,
/// so objects already print alphabetically) and full-precision floats.
pub fn json_to_string(value: &Value) -> String {
    let mut out = Vec::new();
    let mut serializer = Serializer::with_formatter(&mut out, SigDigitFormatter);
    value
        .serialize(&mut serializer)
        .expect("serializing into memory cannot fail");
    String::from_utf8(out).expect("JSON output is UTF-8")
}

/// A finite float as a JSON number, a non-finite one as null.
fn json_f64(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        Value::Null
    }
}

fn tube_radius_json(b: &TubeRadius) -> Value {
    match b {
        TubeRadius::Exact { num, den } => json!({
            "exact": format!("{num}/{den}"),
            "float": json_f64(b.value()),
        }),
        TubeRadius::Approx(v) => json!({
            "exact": Value::Null,
            "float": json_f64(*v),
        }),
    }
}

fn spec_json(spec: &TorusCurveSpec) -> Value {
    json!({
        "b": tube_radius_json(&spec.tube_radius()),
        "p": spec.p(),
        "q": spec.q(),
        "winding_gcd": spec.winding_gcd(),
    })
}

fn vector3_json(v: &nalgebra::Vector3<f64>) -> Value {
    json!([json_f64(v.x), json_f64(v.y), json_f64(v.z)])
}

/// A jet as JSON: the parameter and the derivative vectors (position first)
/// as 3-element arrays.
pub fn jet_json(jet: &Jet) -> Value {
    json!({
        "derivatives": jet.derivatives.iter().map(vector3_json).collect::<Vec<_>>(),
        "order": jet.order(),
        "t": json_f64(jet.t),
    })
}

/// The surface frame as JSON, each vector a 3-element array.
pub fn surface_frame_json(frame: &SurfaceFrame) -> Value {
    json!({
        "normal": vector3_json(&frame.normal),
        "t": json_f64(frame.t),
        "tangent_u": vector3_json(&frame.tangent_u),
        "tangent_v": vector3_json(&frame.tangent_v),
    })
}

/// Header for the invariants CSV stream.
pub const INVARIANTS_CSV_HEADER: &str = "t,speed,kappa,tau,kappa_g,kappa_n";

/// One CSV row; undefined torsion becomes the `NaN` literal.
pub fn invariant_csv_row(sample: &InvariantSample) -> String {
    format!(
        "{},{},{},{},{},{}",
        fmt_f64(sample.t),
        fmt_f64(sample.speed),
        fmt_f64(sample.kappa),
        fmt_f64(sample.tau.unwrap_or(f64::NAN)),
        fmt_f64(sample.kappa_g),
        fmt_f64(sample.kappa_n),
    )
}

pub fn invariant_json(sample: &InvariantSample) -> Value {
    json!({
        "kappa": json_f64(sample.kappa),
        "kappa_g": json_f64(sample.kappa_g),
        "kappa_n": json_f64(sample.kappa_n),
        "source": match sample.source {
            Source::Definitional => "definitional",
            Source::ClosedForm => "closed_form",
        },
        "speed": json_f64(sample.speed),
        "t": json_f64(sample.t),
        "tau": sample.tau.map(json_f64).unwrap_or(Value::Null),
    })
}

/// The locate report: critical radius, match status, and the points with
/// their spatial positions.
pub fn locate_json(set: &ZeroCurvatureSet) -> Value {
    let spec = &set.spec;
    let critical = critical_radius(spec.p(), spec.q());
    let points: Vec<Value> = set
        .points
        .iter()
        .map(|&t| {
            let pos = spec.position(t);
            json!({
                "t": json_f64(t),
                "x": json_f64(pos.x),
                "y": json_f64(pos.y),
                "z": json_f64(pos.z),
            })
        })
        .collect();
    json!({
        "critical_b": {
            "exact": critical.to_string(),
            "float": json_f64(critical.value()),
        },
        "float_matched": set.match_kind == CriticalMatch::FloatMatched,
        "is_critical": set.is_critical,
        "points": points,
        "spec": spec_json(spec),
    })
}

/// Header for the tube-radius scan CSV.
pub const SCAN_CSV_HEADER: &str = "b,min_kappa,argmin_t_kappa,min_abs_tau,argmin_t_tau";

/// Scan result as CSV, with a footer comment marking the grid radius
/// closest to the critical one.
pub fn scan_csv(result: &BScanResult) -> String {
    let mut out = String::new();
    out.push_str(SCAN_CSV_HEADER);
    out.push('\n');
    for row in &result.rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            fmt_f64(row.b),
            fmt_f64(row.min_kappa),
            fmt_f64(row.argmin_t_kappa),
            fmt_f64(row.min_abs_tau),
            fmt_f64(row.argmin_t_tau),
        ));
    }
    let closest = result.closest_to_critical();
    out.push_str(&format!(
        "# closest_to_critical_b = {}\n",
        fmt_f64(result.rows[closest].b)
    ));
    out
}

pub fn scan_json(result: &BScanResult, window: &TorsionWindow) -> Value {
    let rows: Vec<Value> = result
        .rows
        .iter()
        .map(|row| {
            json!({
                "argmin_t_kappa": json_f64(row.argmin_t_kappa),
                "argmin_t_tau": json_f64(row.argmin_t_tau),
                "b": json_f64(row.b),
                "min_abs_tau": json_f64(row.min_abs_tau),
                "min_kappa": json_f64(row.min_kappa),
            })
        })
        .collect();
    let critical = critical_radius(result.p, result.q);
    json!({
        "closest_to_critical_b": json_f64(result.rows[result.closest_to_critical()].b),
        "critical_b": {
            "exact": critical.to_string(),
            "float": json_f64(critical.value()),
        },
        "p": result.p,
        "q": result.q,
        "rows": rows,
        "t_resolution": result.t_resolution,
        "torsion_window": torsion_window_json(window),
    })
}

/// The nowhere-vanishing-torsion window as a structured finding; emptiness
/// is a reported fact, not an error.
pub fn torsion_window_json(window: &TorsionWindow) -> Value {
    json!({
        "is_empty": window.is_empty,
        "lower": {
            "exact": window.lower.to_string(),
            "float": json_f64(window.lower_value()),
        },
        "upper": {
            "exact": format!("{}/{}", window.upper_num, window.upper_den),
            "float": json_f64(window.upper_value()),
        },
    })
}

pub fn rank_report_json(report: &RankReport) -> Value {
    json!({
        "dim": report.dim,
        "m": report.m,
        "singular_values": report
            .singular_values
            .iter()
            .map(|&s| json_f64(s))
            .collect::<Vec<_>>(),
        "t": json_f64(report.t),
        "tolerance_used": json_f64(report.tolerance_used),
    })
}

pub fn inflection_order_json(order: &InflectionOrder) -> Value {
    match *order {
        InflectionOrder::Exact(k) => json!({ "at_least": false, "order": k }),
        InflectionOrder::AtLeast(k) => json!({ "at_least": true, "order": k }),
    }
}

/// Inflection classification with its rank evidence.
pub fn inflection_report_json(report: &InflectionReport) -> Value {
    json!({
        "order": inflection_order_json(&report.order),
        "ranks": report.ranks.iter().map(rank_report_json).collect::<Vec<_>>(),
        "t": json_f64(report.t),
    })
}

pub fn proposition_json(report: &PropositionReport) -> Value {
    json!({
        "b": json_f64(report.b),
        "backward_holds": report.backward_holds,
        "forward_holds": report.forward_holds,
        "higher_inflections": report
            .higher_inflections
            .iter()
            .map(|&t| json_f64(t))
            .collect::<Vec<_>>(),
        "holds": report.holds(),
        "max_pairwise_gap": json_f64(report.max_pairwise_gap),
        "p": report.p,
        "q": report.q,
        "t_resolution": report.t_resolution,
        "zero_curvature": report
            .zero_curvature
            .iter()
            .map(|&t| json_f64(t))
            .collect::<Vec<_>>(),
    })
}

pub fn system_solutions_json(solutions: &[SystemSolution]) -> Value {
    Value::Array(
        solutions
            .iter()
            .map(|s| {
                json!({
                    "b": json_f64(s.b),
                    "cos_qt": json_f64(s.cos_qt),
                    "residual_planar": json_f64(s.residual_planar),
                    "residual_spatial": json_f64(s.residual_spatial),
                })
            })
            .collect(),
    )
}

/// Renders the planar projection as an SVG document: one closed `<path>`
/// for the curve and one `<circle>` per higher-inflection parameter. Output
/// is byte-deterministic for a fixed spec, resolution and marker set.
pub fn render_projection_svg(
    spec: &TorusCurveSpec,
    resolution: usize,
    markers: &[f64],
) -> String {
    let curve = spec.trig_curve();
    let samples: Vec<(f64, f64)> = (0..resolution)
        .map(|i| {
            let t = std::f64::consts::TAU * i as f64 / resolution as f64;
            let pos = curve.position(t);
            (pos.x, -pos.y) // SVG's y axis points down
        })
        .collect();

    let (mut min_x, mut max_x) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut min_y, mut max_y) = (f64::INFINITY, f64::NEG_INFINITY);
    for &(x, y) in &samples {
        min_x = min_x.min(x);
        max_x = max_x.max(x);
        min_y = min_y.min(y);
        max_y = max_y.max(y);
    }
    let width = max_x - min_x;
    let height = max_y - min_y;
    let diagonal = width.hypot(height);
    let margin = 0.05 * width.max(height);
    let marker_radius = 0.015 * diagonal;
    let stroke = 0.003 * diagonal;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         viewBox=\"{:.6} {:.6} {:.6} {:.6}\">\n",
        min_x - margin,
        min_y - margin,
        width + 2.0 * margin,
        height + 2.0 * margin,
    ));
    svg.push_str("  <path fill=\"none\" stroke=\"black\" stroke-width=\"");
    svg.push_str(&format!("{stroke:.6}"));
    svg.push_str("\" d=\"");
    for (i, &(x, y)) in samples.iter().enumerate() {
        let op = if i == 0 { 'M' } else { 'L' };
        svg.push_str(&format!("{op} {x:.6} {y:.6} "));
    }
    svg.push_str("Z\"/>\n");
    for &t in markers {
        let pos = curve.position(t);
        svg.push_str(&format!(
            "  <circle cx=\"{:.6}\" cy=\"{:.6}\" r=\"{:.6}\" fill=\"none\" \
             stroke=\"red\" stroke-width=\"{:.6}\"/>\n",
            pos.x,
            -pos.y,
            marker_radius,
            stroke,
        ));
    }
    svg.push_str("</svg>\n");
    svg
}
