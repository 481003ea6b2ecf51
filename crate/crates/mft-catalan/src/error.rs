use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalanError {
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("size guard: {0}")]
    TooLarge(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
}
