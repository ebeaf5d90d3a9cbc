//! Differential invariants of (p,q) curves on the standard torus of
//! revolution.
//!
//! A (p,q) torus curve winds `p` times around the axis of revolution and `q`
//! times around the tube of a torus with major radius 1 and tube radius
//! `0 < b < 1`. This crate computes the classical invariants of such curves
//! (speed, curvature, torsion, and the geodesic/normal curvature split), and
//! analyzes the two places where the family degenerates:
//!
//! - **Vanishing curvature.** The curve has zero-curvature points for exactly
//!   one tube radius, `b = p² / (p² + q²)`, and at that radius there are
//!   exactly `q` such points, all on the innermost circle of the torus. The
//!   [`vanishing`] module builds that locus exactly (rational-`b` aware) and
//!   certifies uniqueness by scanning.
//! - **Higher inflections of the shadow.** Project the curve to the plane of
//!   rotation. The projection has an inflection of order at least two exactly
//!   at the images of the zero-curvature points. The [`projection`] module
//!   measures tangent-space ranks with audited SVD cutoffs and checks both
//!   directions of that equivalence.
//!
//! Curves are stored as trigonometric polynomials ([`curve::TrigCurve`]), so
//! derivative jets of any order are exact — no finite differencing anywhere
//! in the evaluation path.
//!
//! ```
//! use torus_curves::curve::TorusCurveSpec;
//! use torus_curves::vanishing::{critical_radius, zero_curvature_points};
//!
//! let critical = critical_radius(2, 3);
//! assert_eq!((critical.num, critical.den), (4, 13));
//!
//! let spec = TorusCurveSpec::from_rational(2, 3, 4, 13).unwrap();
//! let locus = zero_curvature_points(&spec);
//! assert_eq!(locus.points.len(), 3);
//! ```
//!
//! The `torus-curves` binary exposes the same machinery as subcommands
//! (`invariants`, `locate`, `scan-b`, `project`, `verify`); each major
//! capability also has a runnable program under `examples/`.

pub mod cli;
pub mod curve;
pub mod invariants;
pub mod output;
pub mod projection;
pub mod vanishing;
pub mod verify;

mod error;
mod numeric;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
