use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Winding numbers must be nonzero integers.
    #[error("winding number must be nonzero, got {0}")]
    ZeroWinding(i64),

    /// The tube radius must lie strictly between 0 and 1.
    #[error("tube radius must satisfy 0 < b < 1, got {0}")]
    TubeRadiusOutOfRange(f64),

    /// A rational tube radius with a zero denominator or out of range.
    #[error("invalid rational tube radius {num}/{den}")]
    BadRational { num: i64, den: i64 },

    /// String that parses neither as `num/den` nor as a decimal.
    #[error("cannot parse tube radius from {0:?}")]
    BadRadiusLiteral(String),

    /// Jet orders outside 1..=16 are rejected; high orders blow up the
    /// per-term amplitude factor and nothing here needs them.
    #[error("jet order must be between 1 and 16, got {0}")]
    JetOrder(usize),

    /// Curve parameters must be finite.
    #[error("curve parameter must be finite")]
    NonFiniteParameter,

    /// A scan was requested over an empty grid.
    #[error("scan grid is empty")]
    EmptyGrid,

    /// Grid values must stay inside the open unit interval.
    #[error("grid value {0} is outside (0, 1)")]
    GridOutOfRange(f64),

    /// Scan resolutions below the supported floor.
    #[error("resolution {got} is below the minimum of {min}")]
    ResolutionTooSmall { got: usize, min: usize },

    /// Rank detection on an all-zero derivative matrix is undefined.
    #[error("rank of an all-zero derivative matrix is undefined")]
    ZeroMatrix,

    /// Inflection classification beyond the jet-order guard.
    #[error("maximum inflection order must be at most 14, got {0}")]
    MaxOrderTooLarge(usize),

    /// A search range the solver cannot work with.
    #[error("invalid search range [{lo}, {hi}]")]
    BadRange { lo: f64, hi: f64 },

    /// Rank tolerances must lie in (0, 1).
    #[error("rank tolerance must lie in (0, 1), got {0}")]
    BadTolerance(f64),
}
