//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("arity mismatch: expected a tuple of {expected} monomials, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("exponent vectors must have nonnegative entries")]
    NegativeExponent,

    #[error("zero vector has no primitive form")]
    ZeroVector,

    #[error("a monomial term needs a nonzero coefficient")]
    ZeroCoefficient,

    #[error("generator list must be nonempty")]
    EmptyGenerators,

    #[error("ambient dimension must be at least 1")]
    ZeroAmbientDimension,

    #[error("not m-primary: no generator is a positive pure power of variable {variable}")]
    NotMPrimary { variable: usize },

    #[error("exponent k must be at least 1, got {got}")]
    NonPositiveExponent { got: u64 },

    #[error("not a complete intersection")]
    NotCompleteIntersection,

    #[error("operation requires ambient dimension >= {required}, found {found}")]
    AmbientDimensionTooSmall { required: usize, found: usize },

    #[error("essential set index {index} out of range for a tuple of {len} monomials")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("staircase box of {volume} points exceeds the enumeration limit {limit}")]
    BoxTooLarge { volume: u128, limit: u128 },

    #[error("internal consistency check failed: {0}")]
    Inconsistency(String),
}
