//! The torus surface, the (p,q) curve on it, exact derivative jets, the
//! unitarized surface frame and the second fundamental form.
//!
//! The surface is the standard torus of revolution with major radius 1 and
//! tube radius `b`, parametrized by
//!
//! ```text
//! x(u, v) = ((1 + b cos v) cos u, (1 + b cos v) sin u, b sin v)
//! ```
//!
//! and the (p,q) curve is its restriction to `u = p t`, `v = q t`. The curve
//! is stored as a trigonometric polynomial (a short list of sinusoidal terms
//! per coordinate), so derivatives of any order are exact: differentiating a
//! term multiplies its amplitude by the frequency and advances its phase by a
//! quarter turn.

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use nalgebra::Vector3;
use num_integer::Integer;

use crate::{Error, Result};

/// Hard ceiling on jet orders; guards the `A * w^k` amplitude growth.
pub const MAX_JET_ORDER: usize = 16;

/// Tube radius of the torus, kept exact when supplied as a fraction so that
/// razor-thin conditions on `b` can be tested by rational equality.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TubeRadius {
    /// An exact fraction `num/den`, stored in lowest terms.
    Exact { num: i64, den: i64 },
    /// A plain floating-point radius.
    Approx(f64),
}

impl TubeRadius {
    /// Exact rational radius. Reduces to lowest terms and requires
    /// `0 < num/den < 1`.
    pub fn exact(num: i64, den: i64) -> Result<Self> {
        if den == 0 || num <= 0 || den < 0 || num >= den {
            return Err(Error::BadRational { num, den });
        }
        let g = num.gcd(&den);
        Ok(TubeRadius::Exact {
            num: num / g,
            den: den / g,
        })
    }

    /// Floating-point radius in the open unit interval.
    pub fn approx(value: f64) -> Result<Self> {
        if !value.is_finite() || value <= 0.0 || value >= 1.0 {
            return Err(Error::TubeRadiusOutOfRange(value));
        }
        Ok(TubeRadius::Approx(value))
    }

    /// The radius as a double, rounding the exact form once.
    pub fn value(&self) -> f64 {
        match *self {
            TubeRadius::Exact { num, den } => num as f64 / den as f64,
            TubeRadius::Approx(value) => value,
        }
    }

    /// The exact fraction, if this radius carries one.
    pub fn as_exact(&self) -> Option<(i64, i64)> {
        match *self {
            TubeRadius::Exact { num, den } => Some((num, den)),
            TubeRadius::Approx(_) => None,
        }
    }
}

impl FromStr for TubeRadius {
    type Err = Error;

    /// Parses either `num/den` or a decimal literal.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((num, den)) = s.split_once('/') {
            let num: i64 = num
                .trim()
                .parse()
                .map_err(|_| Error::BadRadiusLiteral(s.to_string()))?;
            let den: i64 = den
                .trim()
                .parse()
                .map_err(|_| Error::BadRadiusLiteral(s.to_string()))?;
            TubeRadius::exact(num, den)
        } else {
            let value: f64 = s
                .parse()
                .map_err(|_| Error::BadRadiusLiteral(s.to_string()))?;
            TubeRadius::approx(value)
        }
    }
}

impl fmt::Display for TubeRadius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TubeRadius::Exact { num, den } => write!(f, "{num}/{den}"),
            TubeRadius::Approx(value) => write!(f, "{value}"),
        }
    }
}

/// A full problem instance: winding counts `p` (around the axis) and `q`
/// (around the tube) plus the tube radius `b`.
///
/// Negative winding inputs are normalized to positive counts with the
/// reversal recorded; every quantity computed here depends only on `p²` and
/// `q²`, so the flags are labels, not geometry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorusCurveSpec {
    p: u32,
    q: u32,
    b: TubeRadius,
    p_reversed: bool,
    q_reversed: bool,
}

impl TorusCurveSpec {
    pub fn new(p: i64, q: i64, b: TubeRadius) -> Result<Self> {
        if p == 0 {
            return Err(Error::ZeroWinding(p));
        }
        if q == 0 {
            return Err(Error::ZeroWinding(q));
        }
        // Re-validate: `TubeRadius` is constructible by matching on the enum.
        let value = b.value();
        if !value.is_finite() || value <= 0.0 || value >= 1.0 {
            return Err(Error::TubeRadiusOutOfRange(value));
        }
        Ok(TorusCurveSpec {
            p: p.unsigned_abs() as u32,
            q: q.unsigned_abs() as u32,
            b,
            p_reversed: p < 0,
            q_reversed: q < 0,
        })
    }

    pub fn from_float(p: i64, q: i64, b: f64) -> Result<Self> {
        Self::new(p, q, TubeRadius::approx(b)?)
    }

    pub fn from_rational(p: i64, q: i64, num: i64, den: i64) -> Result<Self> {
        Self::new(p, q, TubeRadius::exact(num, den)?)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn tube_radius(&self) -> TubeRadius {
        self.b
    }

    /// The tube radius as a double.
    pub fn b(&self) -> f64 {
        self.b.value()
    }

    /// True when either winding input was negative.
    pub fn orientation_reversed(&self) -> (bool, bool) {
        (self.p_reversed, self.q_reversed)
    }

    /// gcd of the winding counts. Values above 1 mean the curve traces the
    /// underlying primitive curve that many times; pointwise invariants are
    /// unaffected, but reports carry the multiplicity as a warning.
    pub fn winding_gcd(&self) -> u32 {
        self.p.gcd(&self.q)
    }

    pub fn is_primitive(&self) -> bool {
        self.winding_gcd() == 1
    }

    /// The curve as a trigonometric polynomial.
    pub fn trig_curve(&self) -> TrigCurve {
        build_trig_curve(self)
    }

    /// Curve position at `t`, evaluated through the trigonometric form.
    pub fn position(&self, t: f64) -> Vector3<f64> {
        self.trig_curve().position(t)
    }
}

impl fmt::Display for TorusCurveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}) curve, b = {}", self.p, self.q, self.b)
    }
}

/// One sinusoidal term `amplitude * cos(frequency * t + quarter * pi/2)`.
///
/// The phase is a quarter-turn counter, so differentiation stays exact:
/// the derivative is `(amplitude * frequency, frequency, quarter + 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigTerm {
    pub amplitude: f64,
    pub frequency: i32,
    pub quarter: u8,
}

impl TrigTerm {
    pub fn cos(amplitude: f64, frequency: i32) -> Self {
        TrigTerm {
            amplitude,
            frequency,
            quarter: 0,
        }
    }

    pub fn sin(amplitude: f64, frequency: i32) -> Self {
        // sin x = cos(x + 3*pi/2)
        TrigTerm {
            amplitude,
            frequency,
            quarter: 3,
        }
    }

    pub fn eval(&self, t: f64) -> f64 {
        let (s, c) = (self.frequency as f64 * t).sin_cos();
        self.amplitude * quarter_value(self.quarter, s, c)
    }

    pub fn derivative(&self) -> TrigTerm {
        TrigTerm {
            amplitude: self.amplitude * self.frequency as f64,
            frequency: self.frequency,
            quarter: (self.quarter + 1) & 3,
        }
    }
}

#[inline]
fn quarter_value(quarter: u8, s: f64, c: f64) -> f64 {
    match quarter & 3 {
        0 => c,
        1 => -s,
        2 => -c,
        _ => s,
    }
}

/// A curve in R^3 whose coordinates are trigonometric polynomials.
#[derive(Debug, Clone)]
pub struct TrigCurve {
    pub x: Vec<TrigTerm>,
    pub y: Vec<TrigTerm>,
    pub z: Vec<TrigTerm>,
}

impl TrigCurve {
    pub fn from_components(x: Vec<TrigTerm>, y: Vec<TrigTerm>, z: Vec<TrigTerm>) -> Self {
        TrigCurve { x, y, z }
    }

    pub fn position(&self, t: f64) -> Vector3<f64> {
        let t = t.rem_euclid(TAU);
        Vector3::new(
            self.x.iter().map(|term| term.eval(t)).sum(),
            self.y.iter().map(|term| term.eval(t)).sum(),
            self.z.iter().map(|term| term.eval(t)).sum(),
        )
    }

    /// Position and the first `m` derivatives at `t`. See [`jet_at`].
    pub fn jet(&self, t: f64, m: usize) -> Result<Jet> {
        jet_at(self, t, m)
    }
}

/// Expands `(1 + b cos qt) (cos, sin)(pt)` into pure sinusoids via the
/// product-to-sum identities, e.g.
/// `(1 + b cos qt) cos pt = cos pt + (b/2) cos (p+q)t + (b/2) cos (p-q)t`.
pub fn build_trig_curve(spec: &TorusCurveSpec) -> TrigCurve {
    let p = spec.p() as i32;
    let q = spec.q() as i32;
    let b = spec.b();
    TrigCurve {
        x: vec![
            TrigTerm::cos(1.0, p),
            TrigTerm::cos(b / 2.0, p + q),
            TrigTerm::cos(b / 2.0, p - q),
        ],
        y: vec![
            TrigTerm::sin(1.0, p),
            TrigTerm::sin(b / 2.0, p + q),
            TrigTerm::sin(b / 2.0, p - q),
        ],
        z: vec![TrigTerm::sin(b, q)],
    }
}

/// Position and derivatives of a curve at one parameter value.
///
/// `derivatives[0]` is the position, `derivatives[k]` the k-th derivative
/// with respect to `t`. The stored `t` is reduced into `[0, 2*pi)`.
#[derive(Debug, Clone)]
pub struct Jet {
    pub t: f64,
    pub derivatives: Vec<Vector3<f64>>,
}

impl Jet {
    /// Builds a jet from raw derivative vectors; used for degenerate test
    /// inputs. `derivatives[0]` must be the position.
    pub fn from_parts(t: f64, derivatives: Vec<Vector3<f64>>) -> Self {
        debug_assert!(!derivatives.is_empty());
        Jet { t, derivatives }
    }

    /// Highest derivative order held.
    pub fn order(&self) -> usize {
        self.derivatives.len() - 1
    }

    pub fn position(&self) -> Vector3<f64> {
        self.derivatives[0]
    }

    pub fn velocity(&self) -> Vector3<f64> {
        self.derivatives[1]
    }

    /// The k-th derivative; panics when `k` exceeds the stored order.
    pub fn derivative(&self, k: usize) -> Vector3<f64> {
        self.derivatives[k]
    }
}

/// Exact jet of order `m`: each sinusoidal term contributes
/// `A * w^k * cos(w t + (quarter + k) * pi/2)` to the k-th derivative, so a
/// single `sin_cos` per term serves every order. Orders above
/// [`MAX_JET_ORDER`] are rejected.
pub fn jet_at(curve: &TrigCurve, t: f64, m: usize) -> Result<Jet> {
    if !(1..=MAX_JET_ORDER).contains(&m) {
        return Err(Error::JetOrder(m));
    }
    if !t.is_finite() {
        return Err(Error::NonFiniteParameter);
    }
    let t = t.rem_euclid(TAU);
    let mut derivatives = vec![Vector3::zeros(); m + 1];
    accumulate(&curve.x, t, m, &mut derivatives, 0);
    accumulate(&curve.y, t, m, &mut derivatives, 1);
    accumulate(&curve.z, t, m, &mut derivatives, 2);
    Ok(Jet { t, derivatives })
}

fn accumulate(terms: &[TrigTerm], t: f64, m: usize, out: &mut [Vector3<f64>], coord: usize) {
    for term in terms {
        let w = term.frequency as f64;
        let (s, c) = (w * t).sin_cos();
        let mut amplitude = term.amplitude;
        let mut quarter = term.quarter;
        for entry in out.iter_mut().take(m + 1) {
            entry[coord] += amplitude * quarter_value(quarter, s, c);
            amplitude *= w;
            quarter = (quarter + 1) & 3;
        }
    }
}

/// The unitarized moving frame of the torus along the curve: unit tangents in
/// the two coordinate directions and the outward unit normal.
#[derive(Debug, Clone, Copy)]
pub struct SurfaceFrame {
    pub t: f64,
    /// Unit tangent in the `u` (around-the-axis) direction.
    pub tangent_u: Vector3<f64>,
    /// Unit tangent in the `v` (around-the-tube) direction.
    pub tangent_v: Vector3<f64>,
    /// Outward unit normal, `tangent_u x tangent_v`. Points away from the
    /// core circle on the outer rim: at `t = 0` it is `(1, 0, 0)`.
    pub normal: Vector3<f64>,
}

impl SurfaceFrame {
    /// Inward unit normal. This is the orientation under which the second
    /// fundamental form of [`second_fundamental_form_at`] measures bending,
    /// so normal-projection formulas use it.
    pub fn inward_normal(&self) -> Vector3<f64> {
        -self.normal
    }
}

/// Frame obtained by differentiating the surface patch in `u` and `v` at
/// `(u, v) = (pt, qt)` and normalizing.
pub fn surface_frame_at(spec: &TorusCurveSpec, t: f64) -> SurfaceFrame {
    let t = t.rem_euclid(TAU);
    let (su, cu) = (spec.p() as f64 * t).sin_cos();
    let (sv, cv) = (spec.q() as f64 * t).sin_cos();
    SurfaceFrame {
        t,
        tangent_u: Vector3::new(-su, cu, 0.0),
        tangent_v: Vector3::new(-sv * cu, -sv * su, cv),
        normal: Vector3::new(cu * cv, su * cv, sv),
    }
}

/// Second fundamental form of the torus along the curve, in the coordinate
/// basis `(du, dv)`.
///
/// The entries are `e = (1 + b cos qt) cos qt`, `f = 0`, `g = b`; the form is
/// oriented by the inward normal (the sign convention under which the outer
/// rim of the torus has positive normal curvature).
#[derive(Debug, Clone, Copy)]
pub struct FormMatrix {
    pub e: f64,
    pub f: f64,
    pub g: f64,
}

impl FormMatrix {
    /// Applies the form to a coordinate velocity `(du, dv)`.
    pub fn apply(&self, du: f64, dv: f64) -> f64 {
        self.e * du * du + 2.0 * self.f * du * dv + self.g * dv * dv
    }
}

pub fn second_fundamental_form_at(spec: &TorusCurveSpec, t: f64) -> FormMatrix {
    let t = t.rem_euclid(TAU);
    let cv = (spec.q() as f64 * t).cos();
    let b = spec.b();
    FormMatrix {
        e: (1.0 + b * cv) * cv,
        f: 0.0,
        g: b,
    }
}
