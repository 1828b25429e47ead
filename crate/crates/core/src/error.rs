use thiserror::Error;

/// Result alias used across the crate.
pub type Result<T> = std::result::Result<T, GeoError>;

/// Errors shared by all geometric-calculus modules.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeoError {
    /// Input value outside the positive reals (zero, negative, NaN, infinite).
    #[error("value must be a strictly positive finite real, got {0}")]
    NonPositiveValue(f64),

    /// A result left the finite log-coordinate range, or an exact integer
    /// quantity (factorial, binomial) stopped being exactly representable.
    #[error("result is not exactly representable in finite log coordinates")]
    Overflow,

    /// Division by the geometric zero 1 (log 0).
    #[error("the geometric zero 1 cannot act as a divisor")]
    GeometricZeroDivisor,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("nodes are not a valid geometric progression: {0}")]
    NodeSpacing(String),

    #[error("at least {min} entries required, got {got}")]
    TableTooSmall { min: usize, got: usize },

    #[error("index out of range: {0}")]
    Index(String),

    #[error("degree must be between 1 and {max}, got {got}")]
    Degree { got: usize, max: usize },

    /// The operation needs a sequence whose tail is known to be all 1s.
    #[error("operation needs a sequence with a geometric-zero tail")]
    InfiniteTail,
}
