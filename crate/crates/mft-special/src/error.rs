use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecialError {
    #[error("argument {0} outside the domain: {1}")]
    Domain(f64, &'static str),
    #[error("series did not converge after {terms} terms (partial sum {partial})")]
    NoConvergence { terms: usize, partial: f64 },
    #[error("quadrature tolerance not met: value {value}, error estimate {error}")]
    ToleranceNotMet { value: f64, error: f64 },
}
