//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by constructors and operations in this crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Exponent vectors of unequal or zero length.
    #[error("exponent vectors must have equal nonzero length (got {a_len} and {b_len})")]
    LengthMismatch { a_len: usize, b_len: usize },

    /// Every `a_i` is zero; the family degenerates to a real-valued map.
    #[error("at least one exponent a_i must be >= 1")]
    DegenerateFamily,

    /// A coordinate with `a_i = 0` and `b_i = 0` would contribute the constant
    /// term 1, so the polynomial could not vanish at the origin.
    #[error("coordinate {index} has a_i = 0 and b_i = 0, which would give a constant term")]
    ConstantTerm { index: usize },

    /// A point or vector of the wrong dimension was supplied.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// An operation that needs at least one term was called on the zero
    /// polynomial.
    #[error("the zero polynomial has no {0}")]
    ZeroPolynomial(&'static str),

    /// Surface operations require exactly two complex coordinates.
    #[error("surface operations require n = 2 (got n = {0})")]
    NotSurface(usize),

    /// The zero set is a smooth manifold at the origin (some coordinate has
    /// a_i = 1 and b_i = 0); the singular classification does not apply.
    #[error("the surface is regular at the origin and is not classified")]
    RegularSurface,

    /// An operation was invoked on a surface type it is not defined for.
    #[error("{op} is not defined for surface type {ty}")]
    WrongSurfaceType { op: &'static str, ty: String },

    /// Weighted-homogeneous data requires every a_i >= 1.
    #[error("weighted type requires every a_i >= 1 (isolated singularity)")]
    NonIsolated,

    /// A parameter was outside its documented range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Two arcs coincide to working precision, so their contact order diverges.
    #[error("arcs are identical to working precision; contact order is infinite")]
    InfiniteContactOrder,

    /// A numeric estimator could not produce a stable answer.
    #[error("estimation failed: {0}")]
    EstimationFailed(String),

    /// Reading or writing an external file failed.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// A CSV or JSON payload did not match the documented schema.
    #[error("malformed input: {0}")]
    Malformed(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
