use mft_special::SpecialError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CubicError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("lambda = {lambda} lies outside the radius lambda_c = {lambda_c}; real branch covers c in ({c_min}, 0]")]
    OutsideRadius { lambda: f64, lambda_c: f64, c_min: f64 },
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error(transparent)]
    Numeric(#[from] SpecialError),
}
