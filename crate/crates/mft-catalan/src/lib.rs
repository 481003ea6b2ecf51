//! Catalan tuples and tables, the four compositions and their inverses, and
//! the table expansion of the planar quartic `N`-point function.
//!
//! ```
//! use mft_catalan::{expand_planar, CatalanTable};
//!
//! assert_eq!(CatalanTable::enumerate(3).unwrap().len(), 7);
//! assert_eq!(expand_planar(6).unwrap().len(), 7);
//! ```

mod error;
mod expansion;
mod recursion;
mod render;
mod table;
mod tree;
mod tuple;

use num_bigint::BigUint;

pub use error::CatalanError;
pub use expansion::{
    crosses, evaluate_planar, expand_planar, table_sign, table_to_monomial, ExpansionMonomial, Parity, PlanarData,
    Thread, MAX_POINTS,
};
pub use recursion::naive_recursion_eval;
pub use render::render_chords;
pub use table::{CatalanTable, MAX_TABLE_LENGTH};
pub use tree::{trees, PocketTree, TreeKind};
pub use tuple::CatalanTuple;

/// `d_k = C(3k+1, k)/(k+1)`, the number of tables of length `k+1`.
pub fn table_count(k: u64) -> BigUint {
    mft_special::binomial(3 * k + 1, k) / BigUint::from(k + 1)
}

/// `h_k = C(3k, k)/(2k+1)`, the number of tables of length `k+1` with
/// zeroth pocket `(0)`.
pub fn special_table_count(k: u64) -> BigUint {
    mft_special::binomial(3 * k, k) / BigUint::from(2 * k + 1)
}
