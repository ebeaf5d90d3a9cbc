//! The vanishing-curvature locus: the critical tube radius, the candidate
//! parameter values, the normal-curvature quadratic, the exact zero set, and
//! numeric scans that certify uniqueness in `b` and probe the torsion
//! behaviour across tube radii.

use std::f64::consts::{PI, TAU};

use num_integer::Integer;

use crate::curve::{TorusCurveSpec, TubeRadius};
use crate::invariants::{curvature, torsion};
use crate::numeric::{cyclic_local_minima, golden_min};
use crate::{Error, Result};

/// Refinement tolerance (in `t`) for the scan minimizers.
const REFINE_TOL: f64 = 1e-12;

/// Curvature below this is treated as an exact zero by the scanners.
pub const KAPPA_ZERO: f64 = 1e-9;

/// The one tube radius at which the (p,q) curve loses curvature somewhere:
/// `b = p^2 / (p^2 + q^2)`, kept as an exact reduced fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CriticalRadius {
    pub num: u64,
    pub den: u64,
}

impl CriticalRadius {
    pub fn value(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// The radius as an exact `TubeRadius`.
    pub fn tube_radius(&self) -> TubeRadius {
        TubeRadius::exact(self.num as i64, self.den as i64)
            .expect("critical radius is always in (0, 1)")
    }
}

impl std::fmt::Display for CriticalRadius {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// `p^2 / (p^2 + q^2)` in lowest terms.
pub fn critical_radius(p: u32, q: u32) -> CriticalRadius {
    assert!(p >= 1 && q >= 1, "winding counts must be positive");
    let num = (p as u64) * (p as u64);
    let den = num + (q as u64) * (q as u64);
    let g = num.gcd(&den);
    CriticalRadius {
        num: num / g,
        den: den / g,
    }
}

/// The open interval of tube radii on which the torsion of the (p,q) curve
/// is guaranteed nowhere-vanishing: `(p^2/(p^2+q^2), (q^2-p^2)/(2q^2+p^2))`.
///
/// The interval is empty unless `q^2 / p^2 > 1 + sqrt(3)`; emptiness is a
/// structured finding, not an error.
#[derive(Debug, Clone, Copy)]
pub struct TorsionWindow {
    pub lower: CriticalRadius,
    /// Numerator of the upper endpoint; negative when `q < p`.
    pub upper_num: i64,
    pub upper_den: i64,
    pub is_empty: bool,
}

impl TorsionWindow {
    pub fn lower_value(&self) -> f64 {
        self.lower.value()
    }

    pub fn upper_value(&self) -> f64 {
        self.upper_num as f64 / self.upper_den as f64
    }
}

pub fn torsion_window(p: u32, q: u32) -> TorsionWindow {
    let lower = critical_radius(p, q);
    let p2 = (p as i64) * (p as i64);
    let q2 = (q as i64) * (q as i64);
    let num = q2 - p2;
    let den = 2 * q2 + p2;
    let g = num.abs().max(1).gcd(&den);
    let (upper_num, upper_den) = (num / g, den / g);
    // lower < upper by exact cross multiplication
    let nonempty = (lower.num as i128) * (upper_den as i128)
        < (upper_num as i128) * (lower.den as i128);
    TorsionWindow {
        lower,
        upper_num,
        upper_den,
        is_empty: !nonempty,
    }
}

/// Where the geodesic curvature can vanish: `t = k*pi/q` for `k = 0..=2q`.
/// The duplicate endpoint `t = 2*pi` is retained here and collapsed by the
/// consumers that work modulo the period.
pub fn geodesic_zero_candidates(q: u32) -> Vec<f64> {
    (0..=2 * q).map(|k| k as f64 * PI / q as f64).collect()
}

/// The odd-index half of the candidates, `t = k*pi/q` for odd `k`; these are
/// the meridian-crossing points with `cos(qt) = -1` where curvature can
/// actually vanish.
pub fn zero_curvature_candidates(q: u32) -> Vec<f64> {
    (0..q).map(|j| (2 * j + 1) as f64 * PI / q as f64).collect()
}

/// Roots of the normal-curvature numerator seen as a quadratic in
/// `c = cos(qt)`: `b p^2 c^2 + p^2 c + b q^2 = 0`.
#[derive(Debug, Clone)]
pub struct QuadraticRoots {
    /// Real roots, ascending; empty when the discriminant is negative.
    pub roots: Vec<f64>,
    /// The subset of roots lying in `[-1, 1]` (clamped; a root can land a
    /// few ulps outside the interval it belongs to).
    pub feasible: Vec<f64>,
}

pub fn normal_quadratic_roots(spec: &TorusCurveSpec) -> QuadraticRoots {
    let p2 = (spec.p() as f64) * (spec.p() as f64);
    let q2 = (spec.q() as f64) * (spec.q() as f64);
    let b = spec.b();
    let (a, lin, constant) = (b * p2, p2, b * q2);
    let disc = lin * lin - 4.0 * a * constant;
    if disc < 0.0 {
        return QuadraticRoots {
            roots: Vec::new(),
            feasible: Vec::new(),
        };
    }
    let sqrt_disc = disc.sqrt();
    let mut roots = vec![(-lin - sqrt_disc) / (2.0 * a), (-lin + sqrt_disc) / (2.0 * a)];
    roots.sort_by(|x, y| x.partial_cmp(y).unwrap());
    roots.dedup();
    let feasible = roots
        .iter()
        .copied()
        .filter(|c| c.abs() <= 1.0 + 1e-9)
        .map(|c| c.clamp(-1.0, 1.0))
        .collect();
    QuadraticRoots { roots, feasible }
}

/// How the spec's tube radius compares with the critical one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CriticalMatch {
    /// Rational `b` equal to `p^2/(p^2+q^2)` as exact fractions.
    Exact,
    /// Floating `b` within 1e-12 of the critical value.
    FloatMatched,
    /// Anything else.
    Off,
}

pub fn critical_match(spec: &TorusCurveSpec) -> CriticalMatch {
    let critical = critical_radius(spec.p(), spec.q());
    match spec.tube_radius() {
        TubeRadius::Exact { num, den } => {
            if (num as i128) * (critical.den as i128) == (den as i128) * (critical.num as i128) {
                CriticalMatch::Exact
            } else {
                CriticalMatch::Off
            }
        }
        TubeRadius::Approx(value) => {
            if (value - critical.value()).abs() < 1e-12 {
                CriticalMatch::FloatMatched
            } else {
                CriticalMatch::Off
            }
        }
    }
}

/// The set of parameter values where the curve's curvature vanishes.
#[derive(Debug, Clone)]
pub struct ZeroCurvatureSet {
    pub spec: TorusCurveSpec,
    /// Parameter values in `[0, 2*pi)`, ascending. Nonempty only at the
    /// critical radius, where these are `k*pi/q` for odd `k` — `q` points on
    /// the innermost circle.
    pub points: Vec<f64>,
    pub is_critical: bool,
    pub match_kind: CriticalMatch,
}

/// Zero-curvature points of the curve. At the critical radius this returns
/// the `q` odd candidates, each re-verified by evaluating the definitional
/// curvature below [`KAPPA_ZERO`]; at any other radius the set is empty.
pub fn zero_curvature_points(spec: &TorusCurveSpec) -> ZeroCurvatureSet {
    let match_kind = critical_match(spec);
    if match_kind == CriticalMatch::Off {
        return ZeroCurvatureSet {
            spec: *spec,
            points: Vec::new(),
            is_critical: false,
            match_kind,
        };
    }
    let curve = spec.trig_curve();
    let points = zero_curvature_candidates(spec.q())
        .into_iter()
        .filter(|&t| {
            let jet = curve.jet(t, 2).expect("order 2 jet");
            curvature(&jet) < KAPPA_ZERO
        })
        .collect();
    ZeroCurvatureSet {
        spec: *spec,
        points,
        is_critical: true,
        match_kind,
    }
}

/// Scan-based detection of the same set: grid the circle, refine every local
/// curvature minimum by golden section, and keep parameters whose curvature
/// dips below [`KAPPA_ZERO`]. Independent of the candidate formula, so it can
/// confirm candidate completeness.
pub fn zero_curvature_scan(spec: &TorusCurveSpec, t_resolution: usize) -> Vec<f64> {
    let curve = spec.trig_curve();
    let kappa_at = |t: f64| curvature(&curve.jet(t, 2).expect("order 2 jet"));
    let step = TAU / t_resolution as f64;
    let values: Vec<f64> = (0..t_resolution)
        .map(|i| kappa_at(i as f64 * step))
        .collect();
    let mut found: Vec<f64> = Vec::new();
    for i in cyclic_local_minima(&values) {
        let center = i as f64 * step;
        let (t, v) = golden_min(kappa_at, center - step, center + step, REFINE_TOL);
        if v < KAPPA_ZERO {
            let t = t.rem_euclid(TAU);
            let duplicate = found.iter().any(|&u| {
                let d = (t - u).abs();
                d < 1e-6 || (TAU - d) < 1e-6
            });
            if !duplicate {
                found.push(t);
            }
        }
    }
    found.sort_by(|a, b| a.partial_cmp(b).unwrap());
    found
}

/// One row of a tube-radius scan.
#[derive(Debug, Clone, Copy)]
pub struct BScanRow {
    pub b: f64,
    /// Global minimum of curvature over the circle (grid + refinement).
    pub min_kappa: f64,
    pub argmin_t_kappa: f64,
    /// Global minimum of |torsion|, or NaN when torsion is undefined at any
    /// grid point for this radius.
    pub min_abs_tau: f64,
    pub argmin_t_tau: f64,
}

/// Scan result over a grid of tube radii.
#[derive(Debug, Clone)]
pub struct BScanResult {
    pub p: u32,
    pub q: u32,
    pub t_resolution: usize,
    pub rows: Vec<BScanRow>,
}

impl BScanResult {
    /// Index of the grid radius nearest the critical one.
    pub fn closest_to_critical(&self) -> usize {
        let critical = critical_radius(self.p, self.q).value();
        let mut best = 0;
        for (i, row) in self.rows.iter().enumerate() {
            if (row.b - critical).abs() < (self.rows[best].b - critical).abs() {
                best = i;
            }
        }
        best
    }
}

/// Per-radius curvature and torsion minima over the circle. Each radius is
/// processed independently (grid scan at `t_resolution`, golden-section
/// refinement of every local minimum), so rows may be computed in any order.
pub fn scan_over_b(
    p: u32,
    q: u32,
    b_grid: &[f64],
    t_resolution: usize,
) -> Result<BScanResult> {
    if b_grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    if t_resolution < 256 {
        return Err(Error::ResolutionTooSmall {
            got: t_resolution,
            min: 256,
        });
    }
    for &b in b_grid {
        if !(b.is_finite() && b > 0.0 && b < 1.0) {
            return Err(Error::GridOutOfRange(b));
        }
    }
    let rows = b_grid
        .iter()
        .map(|&b| {
            let spec = TorusCurveSpec::from_float(p as i64, q as i64, b)
                .expect("grid radius already validated");
            scan_single_radius(&spec, t_resolution)
        })
        .collect();
    Ok(BScanResult {
        p,
        q,
        t_resolution,
        rows,
    })
}

fn scan_single_radius(spec: &TorusCurveSpec, t_resolution: usize) -> BScanRow {
    let curve = spec.trig_curve();
    let step = TAU / t_resolution as f64;
    let mut kappas = Vec::with_capacity(t_resolution);
    let mut taus = Vec::with_capacity(t_resolution);
    for i in 0..t_resolution {
        let jet = curve.jet(i as f64 * step, 3).expect("order 3 jet");
        kappas.push(curvature(&jet));
        taus.push(torsion(&jet));
    }

    let kappa_at = |t: f64| curvature(&curve.jet(t, 2).expect("order 2 jet"));
    let (argmin_t_kappa, min_kappa) = refine_minima(&kappas, step, kappa_at);

    let (min_abs_tau, argmin_t_tau) = if taus.iter().any(|t| t.is_none()) {
        (f64::NAN, f64::NAN)
    } else {
        let abs_taus: Vec<f64> = taus.iter().map(|t| t.unwrap().abs()).collect();
        let tau_at = |t: f64| {
            torsion(&curve.jet(t, 3).expect("order 3 jet"))
                .map(f64::abs)
                .unwrap_or(f64::INFINITY)
        };
        let (argmin, min) = refine_minima(&abs_taus, step, tau_at);
        (min, argmin)
    };

    BScanRow {
        b: spec.b(),
        min_kappa,
        argmin_t_kappa,
        min_abs_tau,
        argmin_t_tau,
    }
}

fn refine_minima(values: &[f64], step: f64, f: impl Fn(f64) -> f64 + Copy) -> (f64, f64) {
    let mut best_t = f64::NAN;
    let mut best_v = f64::INFINITY;
    for i in cyclic_local_minima(values) {
        let center = i as f64 * step;
        let (t, v) = golden_min(f, center - step, center + step, REFINE_TOL);
        if v < best_v {
            best_v = v;
            best_t = t.rem_euclid(TAU);
        }
    }
    (best_t, best_v)
}
