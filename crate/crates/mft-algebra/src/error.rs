use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("variable budget exceeded: needs r{needed} but budget is {budget}")]
    Budget { needed: usize, budget: usize },
    #[error("leading coefficient is not invertible")]
    NonInvertible,
    #[error("Bell polynomial B({n},{k}) requested with k > n")]
    BellRange { n: usize, k: usize },
    #[error("negative exponent on r{0}; only r0 may appear in a denominator")]
    NegativeExponent(usize),
    #[error("coupling exponents differ: {0} vs {1}")]
    LambdaMismatch(i32, i32),
    #[error("could not parse rational '{0}'")]
    Parse(String),
}
