//! Numeric kernels shared by the numeric crates.

mod combinatorics;
mod dilog;
mod error;
mod hyp2f1;
mod quadrature;

pub use combinatorics::{binomial, catalan, double_factorial, odd_double_factorial};
pub use dilog::dilog;
pub use error::SpecialError;
pub use hyp2f1::hyp2f1;
pub use quadrature::{integrate, integrate_halfline, integrate_halfline_split, Quadrature, QuadratureOptions};

/// Euler gamma function.
pub fn gamma(x: f64) -> f64 {
    statrs::function::gamma::gamma(x)
}
