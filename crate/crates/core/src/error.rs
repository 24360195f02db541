use crate::scalar::Scalar;

/// Errors shared by every module in this crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Dimension / shape mismatch (ragged input, non-square matrix, bad mask).
    #[error("shape error: {0}")]
    Shape(String),

    /// Input outside an operation's domain (zero lambda, nonpositive weight, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A determinant that must be nonzero vanished; carries the offending value.
    #[error("singular: determinant/polynomial value is {det}")]
    Singular { det: Scalar },

    /// Subset enumeration request beyond the configured cap.
    #[error("capacity error: n = {n} exceeds subset cap {cap} (override with a larger cap, float mode only beyond 16)")]
    Capacity { n: usize, cap: usize },

    /// Symmetric elimination found a nonpositive pivot.
    #[error("definiteness error: matrix is not positive definite")]
    NotPositiveDefinite,

    /// The spanning family has a vanishing Gram determinant.
    #[error("degenerate basis: Gram determinant is zero")]
    DegenerateBasis,
}

pub type Result<T> = std::result::Result<T, Error>;
