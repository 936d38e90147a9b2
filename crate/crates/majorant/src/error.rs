//! Error type shared by all modules of the crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by matrix construction, bound computation and detection.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("matrix is not Hermitian: max |A - A†| = {max_asymmetry:.3e} exceeds {tol:.1e}")]
    NotHermitian { max_asymmetry: f64, tol: f64 },

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vector totals differ: {lhs} vs {rhs} (tol {tol:.1e})")]
    TotalMismatch { lhs: f64, rhs: f64, tol: f64 },

    #[error("invalid state: {reason}")]
    InvalidState { reason: String },

    #[error("observable group {index} has rank {rank}; a rank-one projective observable is required")]
    NotRankOne { index: usize, rank: usize },

    #[error("problem size {size} exceeds the enumeration limit {limit}")]
    DimensionTooLarge { size: usize, limit: usize },

    #[error("parameter {name} = {value} outside [{min}, {max}]")]
    ParameterOutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("component {value:.3e} at index {index} is below the negativity tolerance")]
    NegativeComponent { index: usize, value: f64 },

    #[error("overlap matrix deviates from unitarity by {deviation:.3e}")]
    NotUnitary { deviation: f64 },

    #[error("empty input: {what}")]
    Empty { what: &'static str },

    #[error("invalid selection: {reason}")]
    InvalidSelection { reason: String },
}
