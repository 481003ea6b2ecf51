//! Planar sector of the renormalised cubic matrix model on Moyal-type measures.
//!
//! The implicit constant `c(lambda)` is solved on its real branch, the shifted
//! 1-point function is evaluated in closed form and the Kontsevich times are
//! obtained by quadrature.

mod error;
mod measure;
mod npoint;
pub mod series;
mod solution;

pub use error::CubicError;
pub use measure::MoyalMeasure;
pub use npoint::{n_point_from_w, n_point_multi};
pub use solution::{c_series, critical_coupling, solve_c, CubicSolution};
