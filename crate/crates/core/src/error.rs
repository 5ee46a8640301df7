use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspace basis vectors are linearly dependent")]
    BadBasis,
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("subspace is not a two-sided ideal: {0}")]
    NotAnIdeal(String),
    #[error("action leaves the kernel of mu: {0}")]
    ActionEscapesKernel(String),
    #[error("invalid extension: {0}")]
    InvalidExtension(String),
    #[error("internal assertion failed: {0}")]
    InternalAssertion(String),
    #[error("cochain is not a cocycle: {0}")]
    NotACocycle(String),
    #[error("truncation degrees differ: {0} vs {1}")]
    TruncationMismatch(usize, usize),
    #[error("computation needs a truncation degree above {0}")]
    NeedsHigherTruncation(usize),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("output check failed: {0}")]
    OutputCheckFailed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
