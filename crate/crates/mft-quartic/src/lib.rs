//! Planar 2-point function of the quartic matrix model for finite matrices.
//!
//! The external matrix is given by its distinct eigenvalues and their
//! multiplicities. [`deform`] solves for the deformed spectrum, which fixes
//! the rational function `R`; everything else is evaluated from `R` and the
//! roots of `R(z) = R(u)`.
//!
//! ```
//! use mft_quartic::{deform, RationalR, Spectrum};
//!
//! let s = Spectrum::new(vec![0.5], vec![1.0], 1.0, 0.0).unwrap();
//! let r = RationalR::new(deform(&s).unwrap()).unwrap();
//! assert_eq!(r.two_point(0.5, 0.5).unwrap(), 1.0);
//! ```

mod error;
mod rational;
pub mod roots;
mod spectrum;

pub use error::QuarticError;
pub use rational::{Preimages, RationalR, POLE_WARNING};
pub use spectrum::{deform, implicit_residual, DeformedSpectrum, Spectrum};
