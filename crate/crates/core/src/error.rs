use thiserror::Error;

#[derive(Debug, Error)]
pub enum AtlasError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("chirality mismatch: {0}")]
    Chirality(String),
    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("chart precondition failed: {0}")]
    ChartPrecondition(String),
    #[error("not closed under the bracket: {0}")]
    NotClosed(String),
    #[error("identity failed: {0}")]
    IdentityFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, AtlasError>;
