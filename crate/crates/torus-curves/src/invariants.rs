//! Curvature, torsion and the geodesic/normal decomposition at a parameter
//! value, each by a definitional route and by a closed form, with the two
//! routes kept separate so they can audit one another.
//!
//! Conventions:
//!
//! - Geodesic curvature is the scalar triple product `[n, a', a'']` scaled by
//!   `(dt/ds)^3`, with `n` the outward frame normal.
//! - Normal curvature is the projection of `a''` on the inward normal scaled
//!   by `(dt/ds)^2`; the inward orientation is the one the second fundamental
//!   form matrix is written in, and it makes the outer rim positively curved.
//! - With either orientation the decomposition `k^2 = k_g^2 + k_n^2` holds.

use crate::curve::{surface_frame_at, Jet, SurfaceFrame, TorusCurveSpec};

/// Torsion is reported as undefined when `|a' x a''| < guard * |a'|^2`;
/// the relative form keeps the cutoff scale-free.
pub const TORSION_GUARD: f64 = 1e-9;

/// Which route produced an [`InvariantSample`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    /// Triple products and projections of exact jets.
    Definitional,
    /// The closed-form expressions in `b`, `cos(qt)`, `sin(qt)`.
    ClosedForm,
}

/// All scalar invariants of the curve at one parameter value.
#[derive(Debug, Clone, Copy)]
pub struct InvariantSample {
    pub t: f64,
    /// `|a'(t)|`, the speed of the parametrization.
    pub speed: f64,
    pub kappa: f64,
    /// `None` marks undefined torsion (curvature below the guard).
    pub tau: Option<f64>,
    pub kappa_g: f64,
    pub kappa_n: f64,
    pub source: Source,
}

/// `dt/ds = 1 / |a'|`, the reparametrization factor to unit speed.
pub fn speed_factor(jet: &Jet) -> f64 {
    assert!(jet.order() >= 1, "speed_factor needs a first derivative");
    1.0 / jet.velocity().norm()
}

/// Curvature via `|a' x a''| / |a'|^3`, the parametrization-free form of the
/// second arclength derivative's norm.
pub fn curvature(jet: &Jet) -> f64 {
    assert!(jet.order() >= 2, "curvature needs two derivatives");
    let v = jet.velocity();
    let a = jet.derivative(2);
    v.cross(&a).norm() * speed_factor(jet).powi(3)
}

/// Torsion via `[a', a'', a'''] / |a' x a''|^2`, or `None` where the
/// curvature is too small for the osculating plane to be meaningful.
pub fn torsion(jet: &Jet) -> Option<f64> {
    assert!(jet.order() >= 3, "torsion needs three derivatives");
    let v = jet.velocity();
    let a = jet.derivative(2);
    let j = jet.derivative(3);
    let cross = v.cross(&a);
    let denom = cross.norm_squared();
    if cross.norm() < TORSION_GUARD * v.norm_squared() {
        None
    } else {
        Some(cross.dot(&j) / denom)
    }
}

/// Geodesic curvature `[n, a', a''] (dt/ds)^3` with the frame's outward
/// normal in the first slot.
pub fn geodesic_curvature(jet: &Jet, frame: &SurfaceFrame) -> f64 {
    assert!(jet.order() >= 2, "geodesic curvature needs two derivatives");
    let triple = frame
        .normal
        .dot(&jet.velocity().cross(&jet.derivative(2)));
    triple * speed_factor(jet).powi(3)
}

/// `(1 + b cos qt)` and the squared speed `p^2 (1 + b cos qt)^2 + q^2 b^2`.
fn speed_parts(spec: &TorusCurveSpec, t: f64) -> (f64, f64, f64, f64) {
    let p = spec.p() as f64;
    let q = spec.q() as f64;
    let b = spec.b();
    let (sq, cq) = (q * t).sin_cos();
    let w = 1.0 + b * cq;
    let speed_sq = p * p * w * w + q * q * b * b;
    (w, speed_sq, sq, cq)
}

/// Squared speed of the parametrization in closed form.
pub fn squared_speed(spec: &TorusCurveSpec, t: f64) -> f64 {
    speed_parts(spec, t).1
}

/// Geodesic curvature in closed form:
///
/// ```text
/// p sin(qt) (p^2 (1 + b cos qt)^2 + 2 q^2 b^2)
/// --------------------------------------------
///    (p^2 (1 + b cos qt)^2 + q^2 b^2)^(3/2)
/// ```
///
/// This equals the triple-product route everywhere; its numerator's second
/// factor is bounded below by `p^2 (1-b)^2 + 2 q^2 b^2 > 0`, so the zero set
/// is exactly `sin(qt) = 0`.
pub fn geodesic_curvature_closed_form(spec: &TorusCurveSpec, t: f64) -> f64 {
    let p = spec.p() as f64;
    let q = spec.q() as f64;
    let b = spec.b();
    let (w, speed_sq, sq, _) = speed_parts(spec, t);
    p * sq * (p * p * w * w + 2.0 * q * q * b * b) / speed_sq.powf(1.5)
}

/// Variant of the closed form with the `(1 + b cos qt)` factor unsquared.
/// It shares the `sin(qt) = 0` zero set (the modified factor is still
/// strictly positive) but disagrees in magnitude with the triple-product
/// route; kept for diagnostic comparison.
pub fn geodesic_curvature_closed_form_unsquared(spec: &TorusCurveSpec, t: f64) -> f64 {
    let p = spec.p() as f64;
    let q = spec.q() as f64;
    let b = spec.b();
    let (w, speed_sq, sq, _) = speed_parts(spec, t);
    p * sq * (p * p * w + 2.0 * q * q * b * b) / speed_sq.powf(1.5)
}

/// Normal curvature as the projection of the acceleration on the inward
/// normal, `(-n) . a'' (dt/ds)^2`.
pub fn normal_curvature(jet: &Jet, frame: &SurfaceFrame) -> f64 {
    assert!(jet.order() >= 2, "normal curvature needs two derivatives");
    let factor = speed_factor(jet);
    frame.inward_normal().dot(&jet.derivative(2)) * factor * factor
}

/// Normal curvature in closed form:
///
/// ```text
/// (1 + b cos qt) cos qt p^2 + b q^2
/// ---------------------------------
///  p^2 (1 + b cos qt)^2 + q^2 b^2
/// ```
pub fn normal_curvature_closed_form(spec: &TorusCurveSpec, t: f64) -> f64 {
    let p = spec.p() as f64;
    let q = spec.q() as f64;
    let b = spec.b();
    let (w, speed_sq, _, cq) = speed_parts(spec, t);
    (w * cq * p * p + b * q * q) / speed_sq
}

/// Normal curvature through the second fundamental form matrix applied to
/// the coordinate velocity `(p, q)`, divided by the squared speed.
pub fn normal_curvature_from_form(spec: &TorusCurveSpec, t: f64) -> f64 {
    let form = crate::curve::second_fundamental_form_at(spec, t);
    form.apply(spec.p() as f64, spec.q() as f64) / squared_speed(spec, t)
}

/// Every invariant at `t`, by the definitional routes.
pub fn invariant_sample(spec: &TorusCurveSpec, t: f64) -> InvariantSample {
    let jet = spec
        .trig_curve()
        .jet(t, 3)
        .expect("order 3 is always valid");
    sample_from_jet(spec, &jet)
}

/// Definitional sample from an existing jet (order >= 3).
pub fn sample_from_jet(spec: &TorusCurveSpec, jet: &Jet) -> InvariantSample {
    let frame = surface_frame_at(spec, jet.t);
    InvariantSample {
        t: jet.t,
        speed: jet.velocity().norm(),
        kappa: curvature(jet),
        tau: torsion(jet),
        kappa_g: geodesic_curvature(jet, &frame),
        kappa_n: normal_curvature(jet, &frame),
        source: Source::Definitional,
    }
}

/// Every invariant at `t` via the closed forms (the curvature is recombined
/// from the decomposition). Torsion has no closed form here and comes from
/// the jet route.
pub fn invariant_sample_closed_form(spec: &TorusCurveSpec, t: f64) -> InvariantSample {
    let jet = spec
        .trig_curve()
        .jet(t, 3)
        .expect("order 3 is always valid");
    let kappa_g = geodesic_curvature_closed_form(spec, t);
    let kappa_n = normal_curvature_closed_form(spec, t);
    InvariantSample {
        t: jet.t,
        speed: squared_speed(spec, t).sqrt(),
        kappa: kappa_g.hypot(kappa_n),
        tau: torsion(&jet),
        kappa_g,
        kappa_n,
        source: Source::ClosedForm,
    }
}
