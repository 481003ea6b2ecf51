use mft_algebra::AlgebraError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum KontsevichError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("consistency error: {0}")]
    Consistency(String),
    #[error("extraction error: {0}")]
    Extraction(String),
}
