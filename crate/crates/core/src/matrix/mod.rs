//! Dense symmetric linear algebra: Jacobi eigendecomposition, group
//! inverses and block {1}-inverses.

mod dense;
mod eigen;
mod inverse;

pub use dense::{DenseSymMatrix, Matrix};
pub use eigen::{
    sym_eigendecompose, sym_eigenvalues, EigenDecomposition, JACOBI_MAX_SWEEPS, JACOBI_TOLERANCE,
};
pub use inverse::{
    block_one_inverse, group_inverse_residuals, one_inverse_passes, pseudo_group_inverse,
    shifted_rank_one_inverse, sym_inverse, verify_one_inverse, BlockOneInverse,
};

/// Eigenvalues with `|λ| ≤ ZERO_EIGENVALUE_RTOL · max(1, |λ_max|)` are zero.
pub const ZERO_EIGENVALUE_RTOL: f64 = 1e-10;

/// Default comparison tolerance, scaled by `max(1, ‖·‖_max)`.
pub const ONE_INVERSE_RTOL: f64 = 1e-8;

/// Asymmetry accepted when symmetrizing computed products.
pub(crate) const SYMMETRY_TOL: f64 = 1e-10;
