use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QuarticError {
    #[error("invalid spectrum: {0}")]
    InvalidSpectrum(String),
    #[error("fixed point left the neighbourhood of lambda = 0 after {iterations} iterations (residual {residual:e})")]
    OutsideNeighbourhood { iterations: usize, residual: f64 },
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("root validation failed: {0}")]
    RootValidation(String),
    #[error("{0} is at a pole")]
    AtPole(String),
    #[error("index {0} out of range")]
    Index(usize),
}
