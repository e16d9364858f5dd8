use crate::error::{Error, Result};

use super::dense::{DenseSymMatrix, Matrix};

/// Off-diagonal Frobenius norm target, relative to `max(1, ‖M‖_F)`.
pub const JACOBI_TOLERANCE: f64 = 1e-12;
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// `M = Q Λ Qᵀ` with eigenvalues sorted in descending order and the
/// eigenvectors stored as the columns of `Q`.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Matrix,
}

impl EigenDecomposition {
    pub fn order(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Relative zero threshold `1e-10 · max(1, |λ_max|)`.
    pub fn zero_threshold(&self) -> f64 {
        let largest = self
            .eigenvalues
            .iter()
            .fold(0.0_f64, |acc, l| acc.max(l.abs()));
        super::ZERO_EIGENVALUE_RTOL * largest.max(1.0)
    }

    pub fn min_abs_eigenvalue(&self) -> f64 {
        self.eigenvalues
            .iter()
            .fold(f64::INFINITY, |acc, l| acc.min(l.abs()))
    }

    /// `Q f(Λ) Qᵀ` for an arbitrary spectral map.
    pub fn spectral_map(&self, f: impl Fn(f64) -> f64) -> DenseSymMatrix {
        let n = self.order();
        let q = &self.eigenvectors;
        let mapped: Vec<f64> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let mut acc = 0.0;
                for (k, &w) in mapped.iter().enumerate() {
                    if w != 0.0 {
                        acc += q[(i, k)] * w * q[(j, k)];
                    }
                }
                out[(i, j)] = acc;
                out[(j, i)] = acc;
            }
        }
        DenseSymMatrix::new(out).expect("mirrored assembly is exactly symmetric")
    }

    pub fn reconstruct(&self) -> DenseSymMatrix {
        self.spectral_map(|l| l)
    }

    /// `‖QᵀQ − I‖_max`.
    pub fn orthogonality_defect(&self) -> f64 {
        let q = &self.eigenvectors;
        let qtq = q.transpose().matmul(q).expect("square");
        qtq.max_abs_diff(&Matrix::identity(self.order()))
            .expect("same shape")
    }
}

fn off_diagonal_norm(a: &Matrix) -> f64 {
    let n = a.rows();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += a[(i, j)] * a[(i, j)];
            }
        }
    }
    acc.sqrt()
}

/// Cyclic Jacobi eigendecomposition. The sweep order (row-major over the
/// strict upper triangle) is fixed, so the result is deterministic.
pub fn sym_eigendecompose(m: &DenseSymMatrix) -> Result<EigenDecomposition> {
    let n = m.order();
    let mut a = m.as_matrix().clone();
    let mut v = Matrix::identity(n);

    let frob = a.as_slice().iter().map(|x| x * x).sum::<f64>().sqrt();
    let target = JACOBI_TOLERANCE * frob.max(1.0);

    let mut sweeps = 0;
    let mut off = off_diagonal_norm(&a);
    while off > target {
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                a[(p, p)] -= t * apq;
                a[(q, q)] += t * apq;
                a[(p, q)] = 0.0;
                a[(q, p)] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[(r, p)];
                    let arq = a[(r, q)];
                    let new_rp = arp - s * (arq + tau * arp);
                    let new_rq = arq + s * (arp - tau * arq);
                    a[(r, p)] = new_rp;
                    a[(p, r)] = new_rp;
                    a[(r, q)] = new_rq;
                    a[(q, r)] = new_rq;
                }
                for r in 0..n {
                    let vrp = v[(r, p)];
                    let vrq = v[(r, q)];
                    v[(r, p)] = vrp - s * (vrq + tau * vrp);
                    v[(r, q)] = vrq + s * (vrp - tau * vrq);
                }
            }
        }
        sweeps += 1;
        off = off_diagonal_norm(&a);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].total_cmp(&a[(i, i)]));
    let eigenvalues = order.iter().map(|&k| a[(k, k)]).collect();
    let mut eigenvectors = Matrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        for r in 0..n {
            eigenvectors[(r, dst)] = v[(r, src)];
        }
    }
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// Eigenvalues only, descending.
pub fn sym_eigenvalues(m: &DenseSymMatrix) -> Result<Vec<f64>> {
    Ok(sym_eigendecompose(m)?.eigenvalues)
}
