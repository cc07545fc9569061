use thiserror::Error;

/// Every fallible operation in the crate reports one of these.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("zero vector where a nonzero class is required")]
    ZeroVector,
    #[error("generators are linearly dependent over Q")]
    DependentGenerators,
    #[error("non-unimodular sublattice")]
    NonUnimodular,
    #[error("matrix does not preserve the intersection form")]
    NonSymplectic,
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("invalid chain notation: {0}")]
    InvalidNotation(String),
    #[error("no rewrite rule: {0}")]
    NoRewriteRule(String),
    #[error("token is not Torelli-valued: {0}")]
    NotTorelli(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
