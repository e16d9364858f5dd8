use crate::error::{Error, Result};

use super::dense::{DenseSymMatrix, Matrix};
use super::eigen::sym_eigendecompose;
use super::{ONE_INVERSE_RTOL, SYMMETRY_TOL};

/// Group inverse `M♯ = Q Λ⁺ Qᵀ`; for a symmetric matrix this coincides with
/// the Moore-Penrose inverse.
pub fn pseudo_group_inverse(m: &DenseSymMatrix) -> Result<DenseSymMatrix> {
    let e = sym_eigendecompose(m)?;
    let zero = e.zero_threshold();
    Ok(e.spectral_map(|l| if l.abs() <= zero { 0.0 } else { 1.0 / l }))
}

/// Inverse of a nonsingular symmetric matrix. `block` names the matrix in the
/// singularity error.
pub fn sym_inverse(m: &DenseSymMatrix, block: &'static str) -> Result<DenseSymMatrix> {
    let e = sym_eigendecompose(m)?;
    if e.order() > 0 && e.min_abs_eigenvalue() <= e.zero_threshold() {
        return Err(Error::Singular {
            block,
            min_abs_eigenvalue: e.min_abs_eigenvalue(),
        });
    }
    Ok(e.spectral_map(|l| 1.0 / l))
}

/// `‖M X M − M‖_max`. Callers compare against `1e-8 · max(1, ‖M‖_max)`.
pub fn verify_one_inverse(m: &DenseSymMatrix, x: &DenseSymMatrix) -> Result<f64> {
    if m.order() != x.order() {
        return Err(Error::DimensionMismatch {
            op: "verify_one_inverse",
            left: (m.order(), m.order()),
            right: (x.order(), x.order()),
        });
    }
    let mxm = m.as_matrix().matmul(x.as_matrix())?.matmul(m.as_matrix())?;
    mxm.max_abs_diff(m.as_matrix())
}

/// Whether a `verify_one_inverse` residual passes for `m`.
pub fn one_inverse_passes(m: &DenseSymMatrix, residual: f64) -> bool {
    residual <= ONE_INVERSE_RTOL * m.max_abs().max(1.0)
}

/// Residuals of the three group-inverse equations
/// `(‖MXM − M‖, ‖XMX − X‖, ‖MX − XM‖)`, all max-norm.
pub fn group_inverse_residuals(m: &DenseSymMatrix, x: &DenseSymMatrix) -> Result<[f64; 3]> {
    let (m, x) = (m.as_matrix(), x.as_matrix());
    let mx = m.matmul(x)?;
    let xm = x.matmul(m)?;
    Ok([
        mx.matmul(m)?.max_abs_diff(m)?,
        xm.matmul(x)?.max_abs_diff(x)?,
        mx.max_abs_diff(&xm)?,
    ])
}

/// Intermediate products of [`block_one_inverse`], exposed so callers can
/// check structural identities of the Schur complement.
#[derive(Debug, Clone)]
pub struct BlockOneInverse {
    /// `H = A − B D⁻¹ Bᵀ`.
    pub schur: DenseSymMatrix,
    pub schur_inverse: DenseSymMatrix,
    pub d_inverse: DenseSymMatrix,
    /// The assembled symmetric {1}-inverse of `[[A, B], [Bᵀ, D]]`.
    pub inverse: DenseSymMatrix,
}

/// Symmetric {1}-inverse of `L = [[A, B], [Bᵀ, D]]` for nonsingular `D`:
///
/// ```text
/// X = [[ H♯,          −H♯ B D⁻¹               ],
///      [ −D⁻¹ Bᵀ H♯,  D⁻¹ + D⁻¹ Bᵀ H♯ B D⁻¹   ]],   H = A − B D⁻¹ Bᵀ
/// ```
pub fn block_one_inverse(
    a: &DenseSymMatrix,
    b: &Matrix,
    d: &DenseSymMatrix,
) -> Result<BlockOneInverse> {
    if b.rows() != a.order() || b.cols() != d.order() {
        return Err(Error::DimensionMismatch {
            op: "block_one_inverse",
            left: (a.order(), d.order()),
            right: b.shape(),
        });
    }
    let d_inv = sym_inverse(d, "D")?;
    let b_dinv = b.matmul(d_inv.as_matrix())?;
    let correction = b_dinv.matmul(&b.transpose())?;
    let schur = DenseSymMatrix::symmetrize(a.as_matrix().sub(&correction)?, SYMMETRY_TOL)?;
    let schur_inv = pseudo_group_inverse(&schur)?;

    let upper_right = schur_inv.as_matrix().matmul(&b_dinv)?.scale(-1.0);
    let lower_left = upper_right.transpose();
    let lower_right = d_inv.as_matrix().add(
        &b_dinv
            .transpose()
            .matmul(schur_inv.as_matrix())?
            .matmul(&b_dinv)?,
    )?;
    let x = Matrix::from_blocks(&[
        vec![schur_inv.as_matrix(), &upper_right],
        vec![&lower_left, &lower_right],
    ])?;
    Ok(BlockOneInverse {
        schur,
        schur_inverse: schur_inv,
        d_inverse: d_inv,
        inverse: DenseSymMatrix::symmetrize(x, SYMMETRY_TOL)?,
    })
}

/// `(L + aI − (a/b)J)⁻¹ = (L + aI)⁻¹ + J / (a(b − n))` for a graph Laplacian
/// `L` of order `n`. The result is checked against the target matrix before
/// it is returned.
pub fn shifted_rank_one_inverse(l: &DenseSymMatrix, a: f64, b: f64) -> Result<DenseSymMatrix> {
    let n = l.order();
    if !a.is_finite() || a <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "shift a must be positive, got {a}"
        )));
    }
    if !b.is_finite() || b == 0.0 {
        return Err(Error::InvalidArgument(format!(
            "b must be finite and nonzero, got {b}"
        )));
    }
    if b == n as f64 {
        return Err(Error::DivisionByZero(
            "b equals the order n; 1/(a(b - n)) is undefined",
        ));
    }
    let shifted = l.add(&DenseSymMatrix::identity(n).scale(a))?;
    let shifted_inv = sym_inverse(&shifted, "L + aI")?;
    let rank_one = DenseSymMatrix::new(Matrix::ones(n, n))?.scale(1.0 / (a * (b - n as f64)));
    let result = shifted_inv.add(&rank_one)?;

    let target = shifted.sub(&DenseSymMatrix::new(Matrix::ones(n, n))?.scale(a / b))?;
    let product = target.as_matrix().matmul(result.as_matrix())?;
    let gap = product.max_abs_diff(&Matrix::identity(n))?;
    if gap > ONE_INVERSE_RTOL * result.max_abs().max(1.0) {
        return Err(Error::Singular {
            block: "L + aI - (a/b)J",
            min_abs_eigenvalue: (a * (b - n as f64) / b).abs(),
        });
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2() -> DenseSymMatrix {
        DenseSymMatrix::from_rows(&[[1.0, -1.0], [-1.0, 1.0]]).unwrap()
    }

    fn k3() -> DenseSymMatrix {
        DenseSymMatrix::from_rows(&[[2.0, -1.0, -1.0], [-1.0, 2.0, -1.0], [-1.0, -1.0, 2.0]])
            .unwrap()
    }

    fn assert_close(a: &Matrix, b: &Matrix, tol: f64) {
        let gap = a.max_abs_diff(b).unwrap();
        assert!(gap <= tol, "gap {gap:e}\n{a:?}\n{b:?}");
    }

    #[test]
    fn group_inverse_k2() {
        let x = pseudo_group_inverse(&k2()).unwrap();
        let want = Matrix::from_rows(&[[0.25, -0.25], [-0.25, 0.25]]).unwrap();
        assert_close(x.as_matrix(), &want, 1e-12);
    }

    #[test]
    fn group_inverse_of_zero_is_zero() {
        let x = pseudo_group_inverse(&DenseSymMatrix::zeros(3)).unwrap();
        assert_eq!(x.max_abs(), 0.0);
    }

    #[test]
    fn group_inverse_k3_closed_form() {
        // (3I - J) / 9
        let x = pseudo_group_inverse(&k3()).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 2.0 / 9.0 } else { -1.0 / 9.0 };
                assert!((x.get(i, j) - want).abs() < 1e-12);
            }
        }
        let [r1, r2, r3] = group_inverse_residuals(&k3(), &x).unwrap();
        assert!(r1 < 1e-12 && r2 < 1e-12 && r3 < 1e-12);
        assert!(verify_one_inverse(&k3(), &x).unwrap() < 1e-12);
    }

    #[test]
    fn verify_identity() {
        let i2 = DenseSymMatrix::identity(2);
        assert_eq!(verify_one_inverse(&i2, &i2).unwrap(), 0.0);
        assert!(verify_one_inverse(&i2, &DenseSymMatrix::identity(3)).is_err());
    }

    #[test]
    fn block_inverse_k2_partition() {
        let a = DenseSymMatrix::from_rows(&[[1.0]]).unwrap();
        let b = Matrix::from_rows(&[[-1.0]]).unwrap();
        let d = DenseSymMatrix::from_rows(&[[1.0]]).unwrap();
        let out = block_one_inverse(&a, &b, &d).unwrap();
        assert!(out.schur.max_abs() < 1e-15);
        let want = Matrix::from_rows(&[[0.0, 0.0], [0.0, 1.0]]).unwrap();
        assert_close(out.inverse.as_matrix(), &want, 1e-15);
        assert!(verify_one_inverse(&k2(), &out.inverse).unwrap() < 1e-15);
    }

    #[test]
    fn block_inverse_block_diagonal_identity() {
        let i1 = DenseSymMatrix::identity(1);
        let out = block_one_inverse(&i1, &Matrix::zeros(1, 1), &i1).unwrap();
        assert_close(out.inverse.as_matrix(), &Matrix::identity(2), 1e-15);
    }

    #[test]
    fn block_inverse_names_singular_block() {
        let a = DenseSymMatrix::identity(1);
        let d = DenseSymMatrix::zeros(1);
        let err = block_one_inverse(&a, &Matrix::zeros(1, 1), &d).unwrap_err();
        assert!(matches!(err, Error::Singular { block: "D", .. }));
    }

    #[test]
    fn shifted_inverse_one_by_one() {
        let l = DenseSymMatrix::zeros(1);
        let x = shifted_rank_one_inverse(&l, 1.0, 2.0).unwrap();
        assert!((x.get(0, 0) - 2.0).abs() < 1e-14);
    }

    #[test]
    fn shifted_inverse_k2_direct_oracle() {
        // Target L + I - J/3 = [[5/3, -4/3], [-4/3, 5/3]], det = 1, inverse by cofactors.
        let x = shifted_rank_one_inverse(&k2(), 1.0, 3.0).unwrap();
        let want = Matrix::from_rows(&[[5.0 / 3.0, 4.0 / 3.0], [4.0 / 3.0, 5.0 / 3.0]]).unwrap();
        assert_close(x.as_matrix(), &want, 1e-10);
        assert_eq!(x.get(0, 1), x.get(1, 0));
    }

    #[test]
    fn shifted_inverse_rejects_b_equal_n() {
        assert!(matches!(
            shifted_rank_one_inverse(&k2(), 1.0, 2.0),
            Err(Error::DivisionByZero(_))
        ));
        assert!(matches!(
            shifted_rank_one_inverse(&k2(), 0.0, 3.0),
            Err(Error::InvalidArgument(_))
        ));
    }
}
