//! Exact dense linear algebra over the rationals and prime fields.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::{compose, kron, kron_all, middle_swap_perm, swap_map, Matrix};
pub use scalar::{FieldSpec, Scalar, MAX_PRIME};
pub use subspace::{
    complement_basis, invert, kernel_basis, left_tensor_coords, pair_tensor_coords, rank,
    right_inverse, right_tensor_coords, rref, solve_affine, solve_linear_map, Rref, Subspace,
};
