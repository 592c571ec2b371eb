use thiserror::Error;

/// Errors raised by matrix construction, counting, spectral analysis and the
/// brute-force enumerators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: matrix has size {matrix}, vector has length {vector}")]
    DimensionMismatch { matrix: usize, vector: usize },

    #[error("matrix size must be at least 1")]
    EmptyMatrix,

    #[error("k-angulations need k >= 3, got k = {0}")]
    InvalidK(i64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("sequence too short: need {needed} terms, got {got}")]
    SequenceTooShort { needed: usize, got: usize },

    #[error("improper Riordan triple: the A-sequence must start with a nonzero term")]
    ImproperRiordan,

    #[error("matrix first row is not the Toeplitz continuation of the band")]
    NotToeplitz,

    #[error("subdiagonal value is zero; not a production matrix")]
    ZeroSubdiagonal,

    #[error("no real root found")]
    NoRealRoot,

    #[error("enumeration guard exceeded: {what} = {value} > {limit} (use force to override)")]
    GuardExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
