//! A brute-force oracle: explicit finite fields, 2x2 matrix groups over
//! them, and generator-closure subgroup search.
//!
//! Everything here is exhaustive and only meant for small fields; it exists
//! to cross-check the closed-form spectra in [`crate::spectra`].

mod field;
mod matrix;

pub use field::{Elem, FieldCtx, FIELD_DEGREE_CAP, FIELD_SIZE_CAP};
pub use matrix::{
    enumerate_group, find_binary_octahedral, find_binary_tetrahedral, omega_bruteforce,
    order_statistics, projective_order, search_sl2_subgroup, subgroup_closure, FoundSubgroup,
    Mat2, MatrixFamily, Mode, ProjMatrix, CLOSURE_CAP, ENUMERATION_CAP, SEARCH_ATTEMPTS,
};

use crate::error::Result;

/// `GF(p^n)` with the least monic irreducible modulus; see [`FieldCtx::new`].
pub fn field_ctx(p: u64, n: u32) -> Result<FieldCtx> {
    FieldCtx::new(p, n)
}
