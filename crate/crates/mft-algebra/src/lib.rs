//! Exact algebra for the symbolic side of the matrix-model toolkit.
//!
//! Everything here is built on arbitrary precision rationals. The central
//! types are [`MomentPolynomial`] (polynomials in the moments `r0, r1, ...`
//! where only `r0` may carry negative powers), [`FormalSeries`] and
//! [`LaurentExpr`] (Laurent polynomials in boundary variables with moment
//! polynomial coefficients and a fixed power of the coupling).

mod bell;
mod error;
mod laurent;
mod poly;
pub mod rational;
mod series;

pub use bell::{bell_polynomial, Ring};
pub use error::AlgebraError;
pub use laurent::LaurentExpr;
pub use poly::{MomentPolynomial, Weight};
pub use rational::{parse_rational, rat, rat_int, Rational};
pub use series::FormalSeries;
