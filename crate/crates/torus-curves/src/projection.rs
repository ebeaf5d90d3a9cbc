//! Planar projection of the curve along the rotation axis, tangent-space
//! ranks, inflection-order classification, and the two-determinant system
//! whose unique solution pins the critical radius.
//!
//! The m-tangent space at `t` is the span of the first `m` derivatives of the
//! parametrization. Ranks are measured by singular values with a recorded
//! relative cutoff, so every rank claim ships with its evidence. An
//! inflection of order `k` is a point where the first `k+1` tangent spaces of
//! the planar curve have dimension 1 while the (k+2)-nd reaches 2.

use std::f64::consts::TAU;

use nalgebra::{DMatrix, Vector2, Vector3};

use crate::curve::{Jet, TorusCurveSpec};
use crate::numeric::{bisect_root, cyclic_local_minima, golden_min};
use crate::vanishing::zero_curvature_scan;
use crate::{Error, Result};

/// Default relative singular-value cutoff for rank decisions.
pub const DEFAULT_RANK_TOLERANCE: f64 = 1e-8;

/// Matching tolerance (in `t`) between zero-curvature parameters and
/// higher-inflection parameters.
pub const MATCH_TOL: f64 = 1e-9;

/// Jet of the planar projection: the spatial jet with the third coordinate
/// dropped. Projection is linear, so it commutes with differentiation and
/// the entries are exact.
#[derive(Debug, Clone)]
pub struct ProjectedJet {
    pub t: f64,
    /// `derivatives[0]` is the planar position, `derivatives[k]` the k-th
    /// derivative of the projected curve.
    pub derivatives: Vec<Vector2<f64>>,
}

impl ProjectedJet {
    pub fn order(&self) -> usize {
        self.derivatives.len() - 1
    }

    pub fn derivative(&self, k: usize) -> Vector2<f64> {
        self.derivatives[k]
    }
}

pub fn project_jet(jet: &Jet) -> ProjectedJet {
    ProjectedJet {
        t: jet.t,
        derivatives: jet.derivatives.iter().map(|d| d.xy()).collect(),
    }
}

/// Dimension of a span of derivative vectors, with the singular values and
/// the cutoff that justified the decision.
#[derive(Debug, Clone)]
pub struct RankReport {
    pub t: f64,
    /// Number of derivative vectors considered.
    pub m: usize,
    /// Computed dimension of their span.
    pub dim: usize,
    /// Singular values, descending, padded with zeros to length `m`.
    pub singular_values: Vec<f64>,
    pub tolerance_used: f64,
}

fn rank_from_rows(t: f64, rows: Vec<Vec<f64>>, tolerance: f64) -> Result<RankReport> {
    if !(tolerance > 0.0 && tolerance < 1.0) {
        return Err(Error::BadTolerance(tolerance));
    }
    let m = rows.len();
    let ambient = rows[0].len();
    let matrix = DMatrix::from_fn(m, ambient, |i, j| rows[i][j]);
    let mut singular_values: Vec<f64> = matrix.singular_values().iter().copied().collect();
    singular_values.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let sigma_max = singular_values[0];
    if sigma_max == 0.0 {
        return Err(Error::ZeroMatrix);
    }
    let dim = singular_values
        .iter()
        .filter(|&&s| s > tolerance * sigma_max)
        .count();
    singular_values.resize(m, 0.0);
    Ok(RankReport {
        t,
        m,
        dim,
        singular_values,
        tolerance_used: tolerance,
    })
}

/// Rank of the span of spatial derivative vectors (`derivatives[0]` is the
/// first derivative here, not a position).
pub fn tangent_space_dim(
    t: f64,
    derivatives: &[Vector3<f64>],
    tolerance: f64,
) -> Result<RankReport> {
    rank_from_rows(
        t,
        derivatives.iter().map(|d| vec![d.x, d.y, d.z]).collect(),
        tolerance,
    )
}

/// Rank of the span of planar derivative vectors.
pub fn tangent_space_dim_planar(
    t: f64,
    derivatives: &[Vector2<f64>],
    tolerance: f64,
) -> Result<RankReport> {
    rank_from_rows(
        t,
        derivatives.iter().map(|d| vec![d.x, d.y]).collect(),
        tolerance,
    )
}

/// Rank of the m-tangent space of the spatial curve at the jet's parameter.
pub fn jet_tangent_space_dim(jet: &Jet, m: usize, tolerance: f64) -> Result<RankReport> {
    if m < 1 || m > jet.order() {
        return Err(Error::JetOrder(m));
    }
    tangent_space_dim(jet.t, &jet.derivatives[1..=m], tolerance)
}

/// Rank of the m-tangent space of the projected curve.
pub fn projected_tangent_space_dim(
    jet: &ProjectedJet,
    m: usize,
    tolerance: f64,
) -> Result<RankReport> {
    if m < 1 || m > jet.order() {
        return Err(Error::JetOrder(m));
    }
    tangent_space_dim_planar(jet.t, &jet.derivatives[1..=m], tolerance)
}

/// Inflection order of a planar curve point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InflectionOrder {
    /// The order is exactly `k`; `Exact(0)` means no inflection at all.
    Exact(usize),
    /// Every checked tangent space had dimension 1, so the order is at least
    /// this; degenerate curves (a straight line) land here.
    AtLeast(usize),
}

impl InflectionOrder {
    /// True for inflections of order two or more, the kind that mirrors a
    /// zero-curvature point upstairs.
    pub fn is_higher(&self) -> bool {
        match *self {
            InflectionOrder::Exact(k) => k >= 2,
            InflectionOrder::AtLeast(k) => k >= 2,
        }
    }
}

impl std::fmt::Display for InflectionOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            InflectionOrder::Exact(k) => write!(f, "{k}"),
            InflectionOrder::AtLeast(k) => write!(f, ">= {k}"),
        }
    }
}

/// An inflection classification together with the rank evidence that
/// produced it (reports for m = 2 up to the deciding tangent space).
#[derive(Debug, Clone)]
pub struct InflectionReport {
    pub t: f64,
    pub order: InflectionOrder,
    pub ranks: Vec<RankReport>,
}

/// Classifies the planar jet: scans m = 2, 3, ... for the first tangent
/// space of dimension >= 2; the order is that `m` minus 2. The jet must hold
/// at least `max_order + 2` derivatives.
pub fn classify_planar_inflection(
    jet: &ProjectedJet,
    max_order: usize,
    tolerance: f64,
) -> Result<InflectionReport> {
    if max_order > 14 {
        return Err(Error::MaxOrderTooLarge(max_order));
    }
    let deciding_m = max_order + 2;
    if jet.order() < deciding_m {
        return Err(Error::JetOrder(deciding_m));
    }
    let mut ranks = Vec::new();
    for m in 2..=deciding_m {
        let report = projected_tangent_space_dim(jet, m, tolerance)?;
        let dim = report.dim;
        ranks.push(report);
        if dim >= 2 {
            return Ok(InflectionReport {
                t: jet.t,
                order: InflectionOrder::Exact(m - 2),
                ranks,
            });
        }
    }
    Ok(InflectionReport {
        t: jet.t,
        order: InflectionOrder::AtLeast(max_order + 1),
        ranks,
    })
}

/// Inflection order of the projected (p,q) curve at `t`.
pub fn inflection_order(
    spec: &TorusCurveSpec,
    t: f64,
    max_order: usize,
    tolerance: f64,
) -> Result<InflectionReport> {
    if max_order > 14 {
        return Err(Error::MaxOrderTooLarge(max_order));
    }
    let jet = spec.trig_curve().jet(t, max_order + 2)?;
    classify_planar_inflection(&project_jet(&jet), max_order, tolerance)
}

/// Determinant of the rows `(0,0,1)`, `a'`, `a'''`; by cofactor expansion it
/// is the planar cross product of the horizontal parts of `a'` and `a'''`.
/// Its vanishing (with `a'`, `a'''` independent) puts the axis direction
/// inside the third tangent space, which is what lets the projection drop
/// that space's dimension.
pub fn axis_containment_det(jet: &Jet) -> f64 {
    assert!(jet.order() >= 3, "axis containment needs three derivatives");
    let v = jet.velocity();
    let j3 = jet.derivative(3);
    v.x * j3.y - v.y * j3.x
}

/// A common zero of the two determinant conditions, in the `(b, cos(qt))`
/// plane, with the final residuals as evidence.
#[derive(Debug, Clone, Copy)]
pub struct SystemSolution {
    pub b: f64,
    pub cos_qt: f64,
    pub residual_planar: f64,
    pub residual_spatial: f64,
}

/// Residual threshold for accepting a system solution.
const SYSTEM_RESIDUAL: f64 = 1e-10;

struct SystemEval {
    p: u32,
    q: u32,
    positive_branch: bool,
}

impl SystemEval {
    /// Both determinants at `(b, c)`: `det(b', b'')` of the projected curve
    /// and `det(a', a'', a''')` of the spatial curve, evaluated from exact
    /// jets at `t = acos(c)/q` (or its reflection on the negative branch).
    fn eval(&self, b: f64, c: f64) -> (f64, f64) {
        let spec = TorusCurveSpec::from_float(self.p as i64, self.q as i64, b)
            .expect("solver keeps b inside (0, 1)");
        let qt = c.clamp(-1.0, 1.0).acos();
        let t = if self.positive_branch {
            qt / self.q as f64
        } else {
            (TAU - qt) / self.q as f64
        };
        let jet = spec.trig_curve().jet(t, 3).expect("order 3 jet");
        let planar = project_jet(&jet);
        let b1 = planar.derivative(1);
        let b2 = planar.derivative(2);
        let f1 = b1.x * b2.y - b1.y * b2.x;
        let f2 = jet
            .velocity()
            .dot(&jet.derivative(2).cross(&jet.derivative(3)));
        (f1, f2)
    }
}

/// Finds all common zeros of the two determinant conditions over
/// `b_range x c_range`, where `c = cos(qt)`.
///
/// Both determinants contain only even powers of `sin(qt)`, so they are
/// honest functions of `(b, c)`; both sign branches of `sin(qt)` are scanned
/// anyway and the duplicates merged. Detection is a dense grid; interior
/// candidates are polished by a damped 2-d Newton iteration with a
/// finite-difference Jacobian, and candidates on the `c` boundary (where the
/// known solution sits, at `c = -1`) by bisection along the boundary line.
/// Every accepted solution has both residuals below 1e-10.
pub fn simultaneous_system_solve(
    p: u32,
    q: u32,
    b_range: (f64, f64),
    c_range: (f64, f64),
) -> Result<Vec<SystemSolution>> {
    let (b_lo, b_hi) = b_range;
    let (c_lo, c_hi) = c_range;
    if !(b_lo > 0.0 && b_lo <= b_hi && b_hi < 1.0) {
        return Err(Error::BadRange { lo: b_lo, hi: b_hi });
    }
    if !((-1.0..=1.0).contains(&c_lo) && c_lo <= c_hi && c_hi <= 1.0) {
        return Err(Error::BadRange { lo: c_lo, hi: c_hi });
    }

    let nb = 160;
    let nc = 160;
    let mut solutions: Vec<SystemSolution> = Vec::new();

    for positive_branch in [true, false] {
        let eval = SystemEval {
            p,
            q,
            positive_branch,
        };
        let bs: Vec<f64> = (0..=nb)
            .map(|i| b_lo + (b_hi - b_lo) * i as f64 / nb as f64)
            .collect();
        let cs: Vec<f64> = (0..=nc)
            .map(|j| c_lo + (c_hi - c_lo) * j as f64 / nc as f64)
            .collect();
        let mut f1 = vec![vec![0.0; nc + 1]; nb + 1];
        let mut f2 = vec![vec![0.0; nc + 1]; nb + 1];
        for (i, &b) in bs.iter().enumerate() {
            for (j, &c) in cs.iter().enumerate() {
                let (v1, v2) = eval.eval(b, c);
                f1[i][j] = v1;
                f2[i][j] = v2;
            }
        }

        // Boundary lines in c: 1-d problem in b.
        for &j in &[0usize, nc] {
            let c_edge = cs[j];
            for i in 0..nb {
                let straddles = |v: &Vec<Vec<f64>>| v[i][j] * v[i + 1][j] <= 0.0;
                if straddles(&f1) && straddles(&f2) {
                    let root = bisect_root(|b| eval.eval(b, c_edge).0, bs[i], bs[i + 1]);
                    push_if_solution(&mut solutions, &eval, root, c_edge);
                    let root = bisect_root(|b| eval.eval(b, c_edge).1, bs[i], bs[i + 1]);
                    push_if_solution(&mut solutions, &eval, root, c_edge);
                }
            }
        }

        // Interior cells where both determinants straddle zero.
        for i in 0..nb {
            for j in 0..nc {
                let corners =
                    |v: &Vec<Vec<f64>>| [v[i][j], v[i + 1][j], v[i][j + 1], v[i + 1][j + 1]];
                let straddles = |vals: [f64; 4]| {
                    let min = vals.iter().cloned().fold(f64::INFINITY, f64::min);
                    let max = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
                    min <= 0.0 && max >= 0.0
                };
                if straddles(corners(&f1)) && straddles(corners(&f2)) {
                    let b0 = 0.5 * (bs[i] + bs[i + 1]);
                    let c0 = 0.5 * (cs[j] + cs[j + 1]);
                    if let Some((b, c)) =
                        newton_polish(&eval, b0, c0, (b_lo, b_hi), (c_lo, c_hi))
                    {
                        push_if_solution(&mut solutions, &eval, b, c);
                    }
                }
            }
        }
    }

    solutions.sort_by(|a, b| (a.b, a.cos_qt).partial_cmp(&(b.b, b.cos_qt)).unwrap());
    Ok(solutions)
}

fn push_if_solution(solutions: &mut Vec<SystemSolution>, eval: &SystemEval, b: f64, c: f64) {
    if !(b > 0.0 && b < 1.0 && (-1.0..=1.0).contains(&c)) {
        return;
    }
    let (f1, f2) = eval.eval(b, c);
    if f1.abs() > SYSTEM_RESIDUAL || f2.abs() > SYSTEM_RESIDUAL {
        return;
    }
    if solutions
        .iter()
        .any(|s| (s.b - b).abs() < 1e-7 && (s.cos_qt - c).abs() < 1e-7)
    {
        return;
    }
    solutions.push(SystemSolution {
        b,
        cos_qt: c,
        residual_planar: f1.abs(),
        residual_spatial: f2.abs(),
    });
}

/// Damped Newton iteration with a central finite-difference Jacobian;
/// iterates are clamped into the search box, and steps that leave the box or
/// meet a near-singular Jacobian shrink until they behave.
fn newton_polish(
    eval: &SystemEval,
    mut b: f64,
    mut c: f64,
    b_box: (f64, f64),
    c_box: (f64, f64),
) -> Option<(f64, f64)> {
    let hb = 1e-7;
    let hc = 1e-7;
    for _ in 0..60 {
        let (f1, f2) = eval.eval(b, c);
        if f1.abs().max(f2.abs()) < 1e-12 {
            return Some((b, c));
        }
        // One-sided differences once we sit on a box face.
        let bp = (b + hb).min(b_box.1);
        let bm = (b - hb).max(b_box.0);
        let cp = (c + hc).min(c_box.1.min(1.0));
        let cm = (c - hc).max(c_box.0.max(-1.0));
        let (f1_bp, f2_bp) = eval.eval(bp, c);
        let (f1_bm, f2_bm) = eval.eval(bm, c);
        let (f1_cp, f2_cp) = eval.eval(b, cp);
        let (f1_cm, f2_cm) = eval.eval(b, cm);
        let j11 = (f1_bp - f1_bm) / (bp - bm);
        let j12 = (f1_cp - f1_cm) / (cp - cm);
        let j21 = (f2_bp - f2_bm) / (bp - bm);
        let j22 = (f2_cp - f2_cm) / (cp - cm);
        let det = j11 * j22 - j12 * j21;
        if det.abs() < 1e-14 {
            return None;
        }
        let db = -(f1 * j22 - f2 * j12) / det;
        let dc = -(f2 * j11 - f1 * j21) / det;
        let mut lambda = 1.0;
        let mut advanced = false;
        for _ in 0..8 {
            let nb = (b + lambda * db).clamp(b_box.0, b_box.1);
            let nc = (c + lambda * dc).clamp(c_box.0.max(-1.0), c_box.1.min(1.0));
            let (g1, g2) = eval.eval(nb, nc);
            if g1.abs().max(g2.abs()) < f1.abs().max(f2.abs()) {
                b = nb;
                c = nc;
                advanced = true;
                break;
            }
            lambda *= 0.5;
        }
        if !advanced {
            return None;
        }
    }
    let (f1, f2) = eval.eval(b, c);
    if f1.abs().max(f2.abs()) < 1e-10 {
        Some((b, c))
    } else {
        None
    }
}

/// Parameters where the projected curve has an inflection of order >= 2,
/// found by locating zeros of `det(b', b'')` on a grid (bisection across
/// sign changes, golden-section at touching minima) and certifying each
/// candidate by its rank profile. Ordinary inflections (order exactly 1)
/// are rejected by the certification step.
pub fn higher_inflection_points(
    spec: &TorusCurveSpec,
    t_resolution: usize,
    tolerance: f64,
) -> Vec<f64> {
    let curve = spec.trig_curve();
    let planar_det = |t: f64| {
        let jet = curve.jet(t, 2).expect("order 2 jet");
        let planar = project_jet(&jet);
        let b1 = planar.derivative(1);
        let b2 = planar.derivative(2);
        b1.x * b2.y - b1.y * b2.x
    };
    let step = TAU / t_resolution as f64;
    let values: Vec<f64> = (0..t_resolution)
        .map(|i| planar_det(i as f64 * step))
        .collect();

    // Touching zeros do not change sign, but the determinant's derivative
    // det(b', b''') does, and it is exact from jets; bisecting it pins the
    // touch point to machine precision where a value search would stall at
    // sqrt(eps). These candidates go first so that later, blurrier ones
    // within the same whisker dedupe against them.
    let det_derivative = |t: f64| {
        let jet = curve.jet(t, 3).expect("order 3 jet");
        let planar = project_jet(&jet);
        let b1 = planar.derivative(1);
        let b3 = planar.derivative(3);
        b1.x * b3.y - b1.y * b3.x
    };
    let mut candidates: Vec<f64> = Vec::new();
    let abs_values: Vec<f64> = values.iter().map(|v| v.abs()).collect();
    for i in cyclic_local_minima(&abs_values) {
        let center = i as f64 * step;
        let (lo, hi) = (center - step, center + step);
        let t = if det_derivative(lo) * det_derivative(hi) < 0.0 {
            bisect_root(det_derivative, lo, hi)
        } else {
            golden_min(|t| planar_det(t).abs(), lo, hi, 1e-12).0
        };
        candidates.push(t);
    }
    for i in 0..t_resolution {
        let a = values[i];
        let b = values[(i + 1) % t_resolution];
        if a == 0.0 {
            candidates.push(i as f64 * step);
        } else if a * b < 0.0 {
            candidates.push(bisect_root(
                planar_det,
                i as f64 * step,
                (i + 1) as f64 * step,
            ));
        }
    }

    let mut points: Vec<f64> = Vec::new();
    for t in candidates {
        let t = t.rem_euclid(TAU);
        let duplicate = points.iter().any(|&u| {
            let d = (t - u).abs();
            d < 1e-6 || TAU - d < 1e-6
        });
        if duplicate {
            continue;
        }
        let report = inflection_order(spec, t, 4, tolerance).expect("orders <= 14");
        if report.order.is_higher() {
            points.push(t);
        }
    }
    points.sort_by(|a, b| a.partial_cmp(b).unwrap());
    points
}

/// Outcome of checking, for one curve, that zero-curvature parameters and
/// higher-inflection parameters of the projection are the same set.
#[derive(Debug, Clone)]
pub struct PropositionReport {
    pub p: u32,
    pub q: u32,
    pub b: f64,
    pub t_resolution: usize,
    /// Parameters with curvature below 1e-9, from the curvature scan.
    pub zero_curvature: Vec<f64>,
    /// Parameters whose projection has an order >= 2 inflection, from the
    /// rank machinery.
    pub higher_inflections: Vec<f64>,
    /// Every zero-curvature parameter has a matching inflection parameter.
    pub forward_holds: bool,
    /// Every inflection parameter has a matching zero-curvature parameter.
    pub backward_holds: bool,
    /// Largest distance between matched parameters (0 when both sets are
    /// empty).
    pub max_pairwise_gap: f64,
}

impl PropositionReport {
    pub fn holds(&self) -> bool {
        self.forward_holds
            && self.backward_holds
            && self.zero_curvature.len() == self.higher_inflections.len()
    }

    /// Human-readable block, one line per fact.
    pub fn summary(&self) -> String {
        let fmt_list = |v: &[f64]| {
            let entries: Vec<String> = v.iter().map(|t| format!("{t:.12}")).collect();
            format!("[{}]", entries.join(", "))
        };
        let mut out = String::new();
        out.push_str(&format!(
            "curve (p, q) = ({}, {}), b = {:.17}\n",
            self.p, self.q, self.b
        ));
        out.push_str(&format!(
            "zero-curvature parameters   ({}): {}\n",
            self.zero_curvature.len(),
            fmt_list(&self.zero_curvature)
        ));
        out.push_str(&format!(
            "order->=2 inflection params ({}): {}\n",
            self.higher_inflections.len(),
            fmt_list(&self.higher_inflections)
        ));
        out.push_str(&format!(
            "zero curvature  => higher inflection: {}\n",
            if self.forward_holds { "holds" } else { "FAILS" }
        ));
        out.push_str(&format!(
            "higher inflection => zero curvature:  {}\n",
            if self.backward_holds { "holds" } else { "FAILS" }
        ));
        out.push_str(&format!(
            "equivalence: {}\n",
            if self.holds() { "holds" } else { "FAILS" }
        ));
        out
    }
}

fn circular_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).abs() % TAU;
    d.min(TAU - d)
}

/// Computes both sets independently — zero-curvature parameters through the
/// curvature scan, higher inflections through the planar rank machinery —
/// and checks the two inclusions.
pub fn verify_proposition(spec: &TorusCurveSpec, t_resolution: usize) -> PropositionReport {
    let zero_curvature = zero_curvature_scan(spec, t_resolution);
    let higher_inflections = higher_inflection_points(spec, t_resolution, DEFAULT_RANK_TOLERANCE);

    let matched_gap = |from: &[f64], to: &[f64]| -> (bool, f64) {
        let mut ok = true;
        let mut worst: f64 = 0.0;
        for &t in from {
            let best = to
                .iter()
                .map(|&u| circular_distance(t, u))
                .fold(f64::INFINITY, f64::min);
            if best <= MATCH_TOL {
                worst = worst.max(best);
            } else {
                ok = false;
            }
        }
        (ok, worst)
    };
    let (forward_holds, gap_a) = matched_gap(&zero_curvature, &higher_inflections);
    let (backward_holds, gap_b) = matched_gap(&higher_inflections, &zero_curvature);

    PropositionReport {
        p: spec.p(),
        q: spec.q(),
        b: spec.b(),
        t_resolution,
        zero_curvature,
        higher_inflections,
        forward_holds,
        backward_holds,
        max_pairwise_gap: gap_a.max(gap_b),
    }
}
