//! Exact solution of the renormalised cubic (Kontsevich) matrix model.
//!
//! Correlation functions are [`LaurentExpr`]s in the boundary variables with
//! coefficients in the moments `r0, r1, ...`. Genus zero with two
//! boundaries is the only object outside that cone and lives in [`RatFn`].

mod correlation;
mod error;
mod free_energy;
mod intersection;
mod loop_equation;
mod ops;
mod ratfn;
mod virasoro;

pub use correlation::{Body, CorrelationFn, Solver};
pub use error::KontsevichError;
pub use free_energy::{
    delta_rho, free_energies_laplacian, free_energy, free_energy_annihilate, free_energy_checked, genus_two,
    r_coefficient, r_coefficients, FreeEnergy, Route,
};
pub use intersection::IntersectionTable;
pub use loop_equation::loop_residual;
pub use ops::{annihilate, create_boundary, create_from_free_energy, khat_apply, khat_inverse, max_moment};
pub use ratfn::RatFn;
pub use virasoro::{virasoro_parts, TruncatedZ, VirasoroReport};

pub use mft_algebra::LaurentExpr;
