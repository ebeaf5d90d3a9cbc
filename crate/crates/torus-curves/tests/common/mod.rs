//! Shared oracles for the integration suites. Everything here evaluates the
//! product-form parametrization directly, independent of the trigonometric
//! jet machinery it is used to check.
//!
//! Each suite compiles this module separately and uses a different subset.
#![allow(dead_code)]

use nalgebra::Vector3;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Direct substitution into
/// `((1 + b cos qt) cos pt, (1 + b cos qt) sin pt, b sin qt)`.
pub fn direct_position(p: u32, q: u32, b: f64, t: f64) -> Vector3<f64> {
    let (pf, qf) = (p as f64, q as f64);
    let w = 1.0 + b * (qf * t).cos();
    Vector3::new(w * (pf * t).cos(), w * (pf * t).sin(), b * (qf * t).sin())
}

/// Deterministic generator for the randomized criteria.
pub fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x70f2_5eed ^ salt)
}

/// Relative agreement with an absolute floor of 1: tolerates exact zeros on
/// both sides without dividing by them.
pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}
