//! Dense linear algebra for operator matrices.
//!
//! Everything here is deliberately small and deterministic: a row-major
//! matrix, a cyclic Jacobi eigensolver for symmetric matrices, and the
//! minimum-norm solvers built on top of it. Matrices in this crate are
//! desk-scale (a few hundred rows), so dense storage and O(n^3) methods
//! are the right trade-off.

use crate::error::Error;

/// Dense row-major matrix of `f64`.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn add_to(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] += v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matmul");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.add_to(i, j, a * other.get(k, j));
                }
            }
        }
        out
    }

    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(self.cols, x.len(), "shape mismatch in matvec");
        let mut out = vec![0.0; self.rows];
        for i in 0..self.rows {
            let mut acc = 0.0;
            for j in 0..self.cols {
                acc += self.get(i, j) * x[j];
            }
            out[i] = acc;
        }
        out
    }

    /// Column `j` as an owned vector.
    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn max_asymmetry(&self) -> f64 {
        assert_eq!(self.rows, self.cols);
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                worst = worst.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        worst
    }

    /// Gram-style product `A^T diag(w) A`, filled from the upper triangle so
    /// the result is symmetric bit-for-bit.
    pub fn gram_weighted(&self, w: &[f64]) -> Matrix {
        assert_eq!(self.rows, w.len(), "weight length mismatch");
        let n = self.cols;
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let mut acc = 0.0;
                for k in 0..self.rows {
                    acc += self.get(k, i) * w[k] * self.get(k, j);
                }
                out.set(i, j, acc);
                out.set(j, i, acc);
            }
        }
        out
    }

    /// Forces exact symmetry by averaging mirrored entries.
    pub fn symmetrized(&self) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut out = self.clone();
        for i in 0..n {
            for j in (i + 1)..n {
                let v = 0.5 * (self.get(i, j) + self.get(j, i));
                out.set(i, j, v);
                out.set(j, i, v);
            }
        }
        out
    }
}

/// Eigendecomposition of a symmetric matrix: ascending eigenvalues and the
/// matching eigenvectors as columns.
#[derive(Clone, Debug)]
pub struct SymEig {
    pub values: Vec<f64>,
    pub vectors: Matrix,
}

/// Cyclic Jacobi diagonalization of a symmetric matrix.
///
/// Sweeps the strict upper triangle in a fixed row-major order, rotating
/// away each off-diagonal entry, until the off-diagonal mass is negligible
/// relative to the matrix scale. The fixed sweep order keeps results
/// bit-stable across runs.
pub fn jacobi_eigh(a: &Matrix) -> SymEig {
    assert_eq!(a.rows, a.cols, "jacobi_eigh needs a square matrix");
    let n = a.rows;
    let mut m = a.symmetrized();
    let mut v = Matrix::identity(n);
    if n == 0 {
        return SymEig {
            values: vec![],
            vectors: v,
        };
    }
    let scale = m.max_abs().max(1e-300);
    let tol = 1e-15 * scale;
    const MAX_SWEEPS: usize = 64;

    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off = off.max(m.get(p, q).abs());
            }
        }
        if off <= tol {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m.get(p, q);
                if apq.abs() <= tol * 1e-2 {
                    continue;
                }
                let app = m.get(p, p);
                let aqq = m.get(q, q);
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // Rotate rows/columns p and q of m.
                for k in 0..n {
                    let mkp = m.get(k, p);
                    let mkq = m.get(k, q);
                    m.set(k, p, c * mkp - s * mkq);
                    m.set(k, q, s * mkp + c * mkq);
                }
                for k in 0..n {
                    let mpk = m.get(p, k);
                    let mqk = m.get(q, k);
                    m.set(p, k, c * mpk - s * mqk);
                    m.set(q, k, s * mpk + c * mqk);
                }
                // Accumulate the rotation into the eigenvector matrix.
                for k in 0..n {
                    let vkp = v.get(k, p);
                    let vkq = v.get(k, q);
                    v.set(k, p, c * vkp - s * vkq);
                    v.set(k, q, s * vkp + c * vkq);
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m.get(i, i).partial_cmp(&m.get(j, j)).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| m.get(i, i)).collect();
    let vectors = Matrix::from_fn(n, n, |i, j| v.get(i, order[j]));
    SymEig { values, vectors }
}

/// Number of eigenvalues of a symmetric PSD matrix above `rel_tol * max|lambda|`.
pub fn rank_sym(a: &Matrix, rel_tol: f64) -> usize {
    let eig = jacobi_eigh(a);
    let max = eig.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if max == 0.0 {
        return 0;
    }
    eig.values.iter().filter(|&&l| l.abs() > rel_tol * max).count()
}

/// Minimum-norm solution of `A x = b` for symmetric PSD `A`, by inverting
/// only the eigenvalues above `rel_tol * max|lambda|`.
pub fn pseudo_solve(a: &Matrix, b: &[f64], rel_tol: f64) -> Vec<f64> {
    let eig = jacobi_eigh(a);
    pseudo_solve_with(&eig, b, rel_tol)
}

/// Same as [`pseudo_solve`] but reusing a precomputed eigendecomposition;
/// DtN assembly solves one system per boundary basis form against the same
/// quadratic form.
pub fn pseudo_solve_with(eig: &SymEig, b: &[f64], rel_tol: f64) -> Vec<f64> {
    let n = b.len();
    assert_eq!(eig.values.len(), n);
    let max = eig.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let cutoff = rel_tol * max;
    let mut out = vec![0.0; n];
    for (j, &lambda) in eig.values.iter().enumerate() {
        if lambda.abs() <= cutoff || lambda == 0.0 {
            continue;
        }
        let mut coeff = 0.0;
        for i in 0..n {
            coeff += eig.vectors.get(i, j) * b[i];
        }
        coeff /= lambda;
        for i in 0..n {
            out[i] += coeff * eig.vectors.get(i, j);
        }
    }
    out
}

/// Basis (as matrix columns) of the near-null space of a symmetric matrix.
pub fn nullspace_sym(a: &Matrix, rel_tol: f64) -> Matrix {
    let eig = jacobi_eigh(a);
    let n = a.rows();
    let max = eig.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let cutoff = rel_tol * max;
    let keep: Vec<usize> = (0..n)
        .filter(|&j| eig.values[j].abs() <= cutoff)
        .collect();
    Matrix::from_fn(n, keep.len(), |i, j| eig.vectors.get(i, keep[j]))
}

/// Rank of a general rectangular matrix by Gaussian elimination with
/// partial pivoting. Kept independent of the Jacobi path so it can act as
/// a second opinion in kernel-dimension cross-checks.
pub fn rank_gauss(a: &Matrix, rel_tol: f64) -> usize {
    let mut m = a.clone();
    let (rows, cols) = (m.rows, m.cols);
    let scale = m.max_abs();
    if scale == 0.0 {
        return 0;
    }
    let tol = rel_tol * scale;
    let mut rank = 0;
    let mut pivot_row = 0;
    for col in 0..cols {
        let mut best = pivot_row;
        for r in pivot_row..rows {
            if m.get(r, col).abs() > m.get(best, col).abs() {
                best = r;
            }
        }
        if pivot_row >= rows || m.get(best, col).abs() <= tol {
            continue;
        }
        if best != pivot_row {
            for c in 0..cols {
                let tmp = m.get(pivot_row, c);
                m.set(pivot_row, c, m.get(best, c));
                m.set(best, c, tmp);
            }
        }
        let p = m.get(pivot_row, col);
        for r in (pivot_row + 1)..rows {
            let f = m.get(r, col) / p;
            if f == 0.0 {
                continue;
            }
            for c in col..cols {
                let v = m.get(r, c) - f * m.get(pivot_row, c);
                m.set(r, c, v);
            }
        }
        rank += 1;
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    rank
}

/// Certifies that `W^{1/2} M W^{-1/2}` is symmetric and returns it.
///
/// This is the similarity transform that turns an operator self-adjoint
/// under a diagonal-weight inner product into an ordinary symmetric matrix.
pub fn weighted_symmetrize(m: &Matrix, weights: &[f64], tol: f64) -> Result<Matrix, Error> {
    assert_eq!(m.rows(), m.cols());
    assert_eq!(m.rows(), weights.len());
    let n = m.rows();
    let sqrt_w: Vec<f64> = weights.iter().map(|w| w.sqrt()).collect();
    let s = Matrix::from_fn(n, n, |i, j| sqrt_w[i] * m.get(i, j) / sqrt_w[j]);
    let asym = s.max_asymmetry();
    let scale = s.max_abs().max(1.0);
    if asym > tol * scale {
        return Err(Error::AsymmetricOperator { max_asymmetry: asym });
    }
    Ok(s.symmetrized())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_diagonal_matrix() {
        let mut a = Matrix::zeros(3, 3);
        a.set(0, 0, 3.0);
        a.set(1, 1, 1.0);
        a.set(2, 2, 2.0);
        let eig = jacobi_eigh(&a);
        assert_eq!(eig.values, vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn jacobi_reconstructs_matrix() {
        // Fixed symmetric matrix with known-messy spectrum.
        let a = Matrix::from_fn(4, 4, |i, j| 1.0 / (1.0 + (i + j) as f64) + if i == j { 2.0 } else { 0.0 });
        let eig = jacobi_eigh(&a);
        // V diag(L) V^T == A
        let n = 4;
        let mut recon = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0.0;
                for k in 0..n {
                    acc += eig.vectors.get(i, k) * eig.values[k] * eig.vectors.get(j, k);
                }
                recon.set(i, j, acc);
            }
        }
        for i in 0..n {
            for j in 0..n {
                assert!((recon.get(i, j) - a.get(i, j)).abs() < 1e-12);
            }
        }
        // Orthonormal eigenvectors.
        let vtv = eig.vectors.transpose().matmul(&eig.vectors);
        for i in 0..n {
            for j in 0..n {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((vtv.get(i, j) - expect).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn pseudo_solve_min_norm_on_singular_system() {
        // A = diag(2, 0); b = (4, 0): min-norm solution (2, 0).
        let mut a = Matrix::zeros(2, 2);
        a.set(0, 0, 2.0);
        let x = pseudo_solve(&a, &[4.0, 0.0], 1e-12);
        assert!((x[0] - 2.0).abs() < 1e-12);
        assert!(x[1].abs() < 1e-12);
    }

    #[test]
    fn rank_gauss_and_rank_sym_agree_on_gram() {
        // Rank-2 rectangular matrix.
        let a = Matrix::from_fn(4, 3, |i, j| (i as f64) * (j as f64) + if j == 0 { 1.0 } else { 0.0 });
        let g = a.gram_weighted(&[1.0; 4]);
        assert_eq!(rank_gauss(&a, 1e-10), rank_sym(&g, 1e-10));
    }

    #[test]
    fn weighted_symmetrize_rejects_asymmetric() {
        let mut m = Matrix::zeros(2, 2);
        m.set(0, 1, 1.0);
        let err = weighted_symmetrize(&m, &[1.0, 1.0], 1e-10).unwrap_err();
        match err {
            Error::AsymmetricOperator { max_asymmetry } => assert!(max_asymmetry > 0.9),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn nullspace_of_projector() {
        // P = I - J/2 on R^2 has nullspace spanned by (1,1)/sqrt(2).
        let a = Matrix::from_fn(2, 2, |i, j| if i == j { 0.5 } else { -0.5 });
        let ns = nullspace_sym(&a, 1e-9);
        assert_eq!(ns.cols(), 1);
        let ratio = ns.get(0, 0) / ns.get(1, 0);
        assert!((ratio - 1.0).abs() < 1e-10);
    }
}
