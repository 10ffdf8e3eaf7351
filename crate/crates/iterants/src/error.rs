use crate::scalar::Backend;

/// Errors shared across the crate.
///
/// Operations never coerce silently: mixing scalar backends, dividing by
/// zero, shifting past the grid and similar misuses are reported here.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Two operands carry different scalar backends.
    #[error("scalar backend mismatch: {0:?} vs {1:?}")]
    BackendMismatch(Backend, Backend),

    /// Division by an exact or floating zero.
    #[error("division by zero")]
    DivisionByZero,

    /// A rational was constructed with denominator zero.
    #[error("zero denominator")]
    ZeroDenominator,

    /// The element has determinant zero under the matrix representation.
    #[error("element is not invertible")]
    NotInvertible,

    /// Comparison involving a NaN float.
    #[error("values are not comparable")]
    NotComparable,

    /// The operation requires the float backend.
    #[error("{0} requires the float backend")]
    FloatRequired(&'static str),

    /// The operation requires the exact backend.
    #[error("{0} requires the exact backend")]
    ExactRequired(&'static str),

    /// A parameter that must be positive was not.
    #[error("{0} must be positive")]
    NotPositive(&'static str),

    /// Unfolding or substitution on an expression without a reentry marker.
    #[error("expression has no reentry marker")]
    NoReentry,

    /// An iterated map failed at a specific step of the orbit.
    #[error("orbit step {index} failed: {message}")]
    OrbitStep { index: usize, message: String },

    /// Two time grids differ in step or length.
    #[error("time grid mismatch")]
    GridMismatch,

    /// The grid is too short for the requested operation.
    #[error("time grid needs at least {needed} points, has {actual}")]
    GridTooShort { needed: usize, actual: usize },

    /// An eigenpair check received the zero vector.
    #[error("eigenvector must be nonzero")]
    ZeroVector,

    /// A machine-checked derivation step failed its identity assertion.
    #[error("derivation step failed: {0}")]
    DerivationStep(&'static str),

    /// Text that does not match the expected grammar.
    #[error("parse error: {0}")]
    Parse(String),
}
