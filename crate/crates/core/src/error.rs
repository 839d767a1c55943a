use thiserror::Error;

/// Errors raised across the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("object cap exceeded: {needed} objects requested, cap is {cap}")]
    CapExceeded { needed: u128, cap: u128 },

    #[error("inadmissible group parameters: {0}")]
    Inadmissible(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("integrity check failed: {0}")]
    Integrity(String),

    #[error("not a normal subgroup: {0}")]
    NotNormal(String),

    #[error("data file: {0}")]
    Data(String),
}

pub type Result<T> = std::result::Result<T, Error>;
