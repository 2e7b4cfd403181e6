//! Exact integer and rational linear algebra: Smith and Hermite normal
//! forms, lattice operations, torsion invariants, and linear algebra over
//! the two-element field.

mod f2;
mod group;
mod hermite;
mod matrix;
mod rational;
mod snf;

pub use f2::{f2_complement, f2_in_span, f2_nullspace, f2_span_basis, F2Matrix, F2Vec};
pub use group::FiniteAbelianGroup;
pub use hermite::{
    hermite_basis, hermite_basis_i64, integer_left_kernel, lattice_contains, lattice_coordinates, lattice_index,
    lattice_intersect_coordinate_subspace,
};
pub use matrix::IntMatrix;
pub use rational::{is_integral, rat, rat_frac, rational_inverse, rational_solve, Rational, Solution};
pub use snf::{smith_normal_form, torsion_invariants, SmithForm};

use alloc::vec::Vec;
use num_bigint::BigInt;

pub(crate) fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}
