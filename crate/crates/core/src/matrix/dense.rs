use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};

/// Row-major dense real matrix. Zero-sized dimensions are allowed so that
/// empty crown blocks compose without special cases.
#[derive(Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    /// The all-ones matrix `J`.
    pub fn ones(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![1.0; rows * cols],
        }
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    pub fn from_row_major(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                op: "from_row_major",
                left: (rows, cols),
                right: (data.len(), 1),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    op: "from_rows",
                    left: (rows.len(), cols),
                    right: (1, r.len()),
                });
            }
            data.extend_from_slice(r);
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn matmul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                op: "matmul",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                let rhs_row = rhs.row(k);
                let out_row = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (o, &b) in out_row.iter_mut().zip(rhs_row) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn matvec(&self, v: &[f64]) -> Result<Vec<f64>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch {
                op: "matvec",
                left: self.shape(),
                right: (v.len(), 1),
            });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, "add", |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, "sub", |a, b| a - b)
    }

    fn zip_with(
        &self,
        rhs: &Matrix,
        op: &'static str,
        f: impl Fn(f64, f64) -> f64,
    ) -> Result<Matrix> {
        if self.shape() != rhs.shape() {
            return Err(Error::DimensionMismatch {
                op,
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, s: f64) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    /// Largest absolute entry; `0.0` for an empty matrix.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |acc, x| acc.max(x.abs()))
    }

    pub fn max_abs_diff(&self, rhs: &Matrix) -> Result<f64> {
        Ok(self.sub(rhs)?.max_abs())
    }

    pub fn trace(&self) -> f64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    /// `1ᵀ M 1`.
    pub fn sum(&self) -> f64 {
        self.data.iter().sum()
    }

    pub fn row_sums(&self) -> Vec<f64> {
        (0..self.rows).map(|i| self.row(i).iter().sum()).collect()
    }

    /// Copies `rows x cols` starting at `(r0, c0)`.
    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut out = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out[(i, j)] = self[(r0 + i, c0 + j)];
            }
        }
        out
    }

    /// Assembles a block matrix. Every block in a block-row must share its
    /// row count and every block in a block-column its column count.
    pub fn from_blocks(blocks: &[Vec<&Matrix>]) -> Result<Matrix> {
        let row_heights: Vec<usize> = blocks
            .iter()
            .map(|r| r.first().map_or(0, |b| b.rows))
            .collect();
        let col_widths: Vec<usize> = blocks
            .first()
            .map(|r| r.iter().map(|b| b.cols).collect())
            .unwrap_or_default();
        let total_rows = row_heights.iter().sum();
        let total_cols = col_widths.iter().sum();
        let mut out = Matrix::zeros(total_rows, total_cols);
        let mut r0 = 0;
        for (bi, block_row) in blocks.iter().enumerate() {
            if block_row.len() != col_widths.len() {
                return Err(Error::DimensionMismatch {
                    op: "from_blocks",
                    left: (bi, col_widths.len()),
                    right: (bi, block_row.len()),
                });
            }
            let mut c0 = 0;
            for (bj, block) in block_row.iter().enumerate() {
                if block.rows != row_heights[bi] || block.cols != col_widths[bj] {
                    return Err(Error::DimensionMismatch {
                        op: "from_blocks",
                        left: (row_heights[bi], col_widths[bj]),
                        right: block.shape(),
                    });
                }
                for i in 0..block.rows {
                    for j in 0..block.cols {
                        out[(r0 + i, c0 + j)] = block[(i, j)];
                    }
                }
                c0 += col_widths[bj];
            }
            r0 += row_heights[bi];
        }
        Ok(out)
    }

    /// Block-diagonal assembly; zero-sized blocks contribute nothing.
    pub fn block_diagonal(blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)];
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = f64;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{:>10.6} ", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Square symmetric real matrix. Symmetry is exact: every constructor either
/// checks `a[i][j] == a[j][i]` bit-for-bit or mirrors the upper triangle.
#[derive(Clone, PartialEq)]
pub struct DenseSymMatrix(Matrix);

impl DenseSymMatrix {
    /// Accepts `m` only if it is square and exactly symmetric.
    pub fn new(m: Matrix) -> Result<Self> {
        Self::check_square(&m)?;
        for i in 0..m.rows {
            for j in (i + 1)..m.cols {
                if m[(i, j)] != m[(j, i)] {
                    return Err(Error::Asymmetric {
                        row: i,
                        col: j,
                        gap: (m[(i, j)] - m[(j, i)]).abs(),
                    });
                }
            }
        }
        Ok(Self(m))
    }

    /// Accepts a numerically symmetric `m` (asymmetry within `tol` scaled by
    /// `max(1, ‖m‖_max)`) and averages it with its transpose.
    pub fn symmetrize(m: Matrix, tol: f64) -> Result<Self> {
        Self::check_square(&m)?;
        let bound = tol * m.max_abs().max(1.0);
        let mut out = m;
        for i in 0..out.rows {
            for j in (i + 1)..out.cols {
                let (a, b) = (out[(i, j)], out[(j, i)]);
                if (a - b).abs() > bound {
                    return Err(Error::Asymmetric {
                        row: i,
                        col: j,
                        gap: (a - b).abs(),
                    });
                }
                let avg = 0.5 * (a + b);
                out[(i, j)] = avg;
                out[(j, i)] = avg;
            }
        }
        Ok(Self(out))
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        Self::new(Matrix::from_rows(rows)?)
    }

    pub fn zeros(n: usize) -> Self {
        Self(Matrix::zeros(n, n))
    }

    pub fn identity(n: usize) -> Self {
        Self(Matrix::identity(n))
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        Self(Matrix::from_diagonal(diag))
    }

    fn check_square(m: &Matrix) -> Result<()> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows,
                cols: m.cols,
            });
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.0.rows
    }

    pub fn as_matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.0[(i, j)]
    }

    pub fn scale(&self, s: f64) -> Self {
        Self(self.0.scale(s))
    }

    pub fn add(&self, rhs: &DenseSymMatrix) -> Result<Self> {
        Ok(Self(self.0.add(&rhs.0)?))
    }

    pub fn sub(&self, rhs: &DenseSymMatrix) -> Result<Self> {
        Ok(Self(self.0.sub(&rhs.0)?))
    }

    pub fn trace(&self) -> f64 {
        self.0.trace()
    }

    pub fn max_abs(&self) -> f64 {
        self.0.max_abs()
    }

    /// `Bᵀ A B`, symmetric by construction.
    pub fn congruence(&self, b: &Matrix) -> Result<Self> {
        let t = b.transpose().matmul(&self.0)?.matmul(b)?;
        Self::symmetrize(t, 1e-12)
    }

    pub fn block_diagonal(blocks: &[DenseSymMatrix]) -> Self {
        let inner: Vec<Matrix> = blocks.iter().map(|b| b.0.clone()).collect();
        Self(Matrix::block_diagonal(&inner))
    }

    /// Symmetric principal submatrix on `start..start + len`.
    pub fn principal(&self, start: usize, len: usize) -> Self {
        Self(self.0.submatrix(start, start, len, len))
    }
}

impl Index<(usize, usize)> for DenseSymMatrix {
    type Output = f64;

    fn index(&self, idx: (usize, usize)) -> &f64 {
        &self.0[idx]
    }
}

impl AsRef<Matrix> for DenseSymMatrix {
    fn as_ref(&self) -> &Matrix {
        &self.0
    }
}

impl fmt::Debug for DenseSymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DenseSym")?;
        self.0.fmt(f)
    }
}

impl TryFrom<Matrix> for DenseSymMatrix {
    type Error = Error;

    fn try_from(m: Matrix) -> Result<Self> {
        Self::new(m)
    }
}
