//! Small dense-matrix routines.
//!
//! Everything here targets the matrix sizes this crate actually sees
//! (latent and observation dimensions in the tens), so the implementations
//! favour determinism and clarity over asymptotics: plain loops, cyclic
//! Jacobi for symmetric eigendecompositions, Cholesky for SPD solves.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{CoreError, Result};
use crate::math;

/// Dense row-major `f64` matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    /// Builds from a flat row-major buffer. Panics if the length disagrees.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), rows * cols, "row-major buffer length mismatch");
        Mat { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Mat::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = f(r, c);
            }
        }
        m
    }

    /// Single-row matrix view of a slice (copies).
    pub fn from_row(row: &[f64]) -> Self {
        Mat::from_vec(1, row.len(), row.to_vec())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[f64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [f64] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn is_finite(&self) -> bool {
        math::all_finite(&self.data)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)];
            }
        }
        t
    }

    /// Matrix product `self * other`.
    pub fn matmul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matmul inner dimension mismatch");
        let mut out = Mat::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            let a_row = self.row(r);
            let out_row = out.row_mut(r);
            for (k, &a) in a_row.iter().enumerate() {
                if a == 0.0 {
                    continue;
                }
                let b_row = other.row(k);
                for c in 0..b_row.len() {
                    out_row[c] += a * b_row[c];
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn matvec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(self.cols, v.len(), "matvec dimension mismatch");
        (0..self.rows).map(|r| math::dot(self.row(r), v)).collect()
    }

    /// `self += scale * other`, entrywise.
    pub fn add_scaled(&mut self, other: &Mat, scale: f64) {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.cols, other.cols);
        for (a, b) in self.data.iter_mut().zip(other.data.iter()) {
            *a += scale * b;
        }
    }

    pub fn scale(&mut self, s: f64) {
        for a in self.data.iter_mut() {
            *a *= s;
        }
    }

    /// Horizontal concatenation `[self | other]` (same row count).
    pub fn hcat(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows, "hcat row mismatch");
        let mut out = Mat::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            out.row_mut(r)[..self.cols].copy_from_slice(self.row(r));
            out.row_mut(r)[self.cols..].copy_from_slice(other.row(r));
        }
        out
    }

    /// Copies a contiguous column range into a new matrix.
    pub fn col_block(&self, start: usize, len: usize) -> Mat {
        assert!(start + len <= self.cols, "column block out of range");
        let mut out = Mat::zeros(self.rows, len);
        for r in 0..self.rows {
            out.row_mut(r).copy_from_slice(&self.row(r)[start..start + len]);
        }
        out
    }

    pub fn trace(&self) -> f64 {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }
}

impl core::ops::Index<(usize, usize)> for Mat {
    type Output = f64;

    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &f64 {
        &self.data[r * self.cols + c]
    }
}

impl core::ops::IndexMut<(usize, usize)> for Mat {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut f64 {
        &mut self.data[r * self.cols + c]
    }
}

/// Lower-triangular Cholesky factor of a symmetric positive-definite matrix.
pub fn cholesky(a: &Mat) -> Result<Mat> {
    let n = a.rows();
    if a.cols() != n {
        return Err(CoreError::ShapeMismatch { context: "cholesky", expected: n, got: a.cols() });
    }
    let mut l = Mat::zeros(n, n);
    for i in 0..n {
        for j in 0..=i {
            let mut s = a[(i, j)];
            for k in 0..j {
                s -= l[(i, k)] * l[(j, k)];
            }
            if i == j {
                if s <= 0.0 || !s.is_finite() {
                    return Err(CoreError::NotPositiveDefinite("cholesky"));
                }
                l[(i, j)] = math::sqrt(s);
            } else {
                l[(i, j)] = s / l[(j, j)];
            }
        }
    }
    Ok(l)
}

/// Solves `A x = b` given the Cholesky factor `L` of `A`.
pub fn chol_solve(l: &Mat, b: &[f64]) -> Vec<f64> {
    let n = l.rows();
    assert_eq!(b.len(), n);
    // Forward: L y = b
    let mut y = vec![0.0; n];
    for i in 0..n {
        let mut s = b[i];
        for k in 0..i {
            s -= l[(i, k)] * y[k];
        }
        y[i] = s / l[(i, i)];
    }
    // Backward: L^T x = y
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut s = y[i];
        for k in i + 1..n {
            s -= l[(k, i)] * x[k];
        }
        x[i] = s / l[(i, i)];
    }
    x
}

/// log(det A) from the Cholesky factor of A.
pub fn chol_logdet(l: &Mat) -> f64 {
    let mut s = 0.0;
    for i in 0..l.rows() {
        s += math::ln(l[(i, i)]);
    }
    2.0 * s
}

/// Inverse of an SPD matrix from its Cholesky factor.
pub fn chol_inverse(l: &Mat) -> Mat {
    let n = l.rows();
    let mut inv = Mat::zeros(n, n);
    let mut e = vec![0.0; n];
    for j in 0..n {
        e[j] = 1.0;
        let col = chol_solve(l, &e);
        e[j] = 0.0;
        for i in 0..n {
            inv[(i, j)] = col[i];
        }
    }
    // Symmetrize to wash out round-off asymmetry.
    for i in 0..n {
        for j in 0..i {
            let v = 0.5 * (inv[(i, j)] + inv[(j, i)]);
            inv[(i, j)] = v;
            inv[(j, i)] = v;
        }
    }
    inv
}

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// Returns `(eigenvalues, V)` with `A = V diag(vals) V^T`; eigenvectors are
/// the columns of `V`, sorted by descending eigenvalue.
pub fn sym_eigen(a: &Mat) -> Result<(Vec<f64>, Mat)> {
    let n = a.rows();
    if a.cols() != n {
        return Err(CoreError::ShapeMismatch { context: "sym_eigen", expected: n, got: a.cols() });
    }
    let mut m = a.clone();
    // Work on the symmetrized copy; callers may carry tiny asymmetries.
    for i in 0..n {
        for j in 0..i {
            let v = 0.5 * (m[(i, j)] + m[(j, i)]);
            m[(i, j)] = v;
            m[(j, i)] = v;
        }
    }
    let mut v = Mat::identity(n);
    let max_sweeps = 64;
    for _ in 0..max_sweeps {
        let mut off = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                off += m[(i, j)] * m[(i, j)];
            }
        }
        if off < 1e-26 * (1.0 + m.trace() * m.trace()) {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[(p, q)];
                if math::abs(apq) < 1e-300 {
                    continue;
                }
                let app = m[(p, p)];
                let aqq = m[(q, q)];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + math::sqrt(1.0 + theta * theta))
                } else {
                    -1.0 / (-theta + math::sqrt(1.0 + theta * theta))
                };
                let c = 1.0 / math::sqrt(1.0 + t * t);
                let s = t * c;
                for k in 0..n {
                    let mkp = m[(k, p)];
                    let mkq = m[(k, q)];
                    m[(k, p)] = c * mkp - s * mkq;
                    m[(k, q)] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[(p, k)];
                    let mqk = m[(q, k)];
                    m[(p, k)] = c * mpk - s * mqk;
                    m[(q, k)] = s * mpk + c * mqk;
                }
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut vals: Vec<f64> = (0..n).map(|i| m[(i, i)]).collect();
    if !math::all_finite(&vals) {
        return Err(CoreError::NonFinite {
            context: "sym_eigen",
            detail: alloc::string::String::from("eigenvalues"),
        });
    }
    // Sort descending, reordering eigenvector columns to match.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| vals[j].partial_cmp(&vals[i]).unwrap());
    let sorted_vals: Vec<f64> = order.iter().map(|&i| vals[i]).collect();
    let mut sorted_v = Mat::zeros(n, n);
    for (new_c, &old_c) in order.iter().enumerate() {
        for r in 0..n {
            sorted_v[(r, new_c)] = v[(r, old_c)];
        }
    }
    vals = sorted_vals;
    Ok((vals, sorted_v))
}

/// Symmetric PSD square root via eigendecomposition.
///
/// Negative eigenvalues (round-off on PSD inputs) are clamped to zero.
pub fn spd_sqrt(a: &Mat) -> Result<Mat> {
    let (vals, v) = sym_eigen(a)?;
    let n = a.rows();
    let mut out = Mat::zeros(n, n);
    for k in 0..n {
        let lam = if vals[k] > 0.0 { math::sqrt(vals[k]) } else { 0.0 };
        if lam == 0.0 {
            continue;
        }
        for i in 0..n {
            let vi = v[(i, k)] * lam;
            if vi == 0.0 {
                continue;
            }
            for j in 0..n {
                out[(i, j)] += vi * v[(j, k)];
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn approx(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn matmul_hand_example() {
        let a = Mat::from_vec(2, 3, vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        let b = Mat::from_vec(3, 2, vec![7.0, 8.0, 9.0, 10.0, 11.0, 12.0]);
        let c = a.matmul(&b);
        assert_eq!(c.data(), &[58.0, 64.0, 139.0, 154.0]);
    }

    #[test]
    fn cholesky_solve_roundtrip() {
        let a = Mat::from_vec(3, 3, vec![4.0, 1.0, 0.5, 1.0, 3.0, 0.2, 0.5, 0.2, 2.0]);
        let l = cholesky(&a).unwrap();
        let x = chol_solve(&l, &[1.0, 2.0, 3.0]);
        let back = a.matvec(&x);
        assert!(approx(back[0], 1.0, 1e-12));
        assert!(approx(back[1], 2.0, 1e-12));
        assert!(approx(back[2], 3.0, 1e-12));
        // logdet against the 1x1/2x2 minors expansion computed by hand.
        let det = 4.0 * (3.0 * 2.0 - 0.04) - 1.0 * (2.0 - 0.1) + 0.5 * (0.2 - 1.5);
        assert!(approx(chol_logdet(&l), det.ln(), 1e-12));
    }

    #[test]
    fn cholesky_rejects_indefinite() {
        let a = Mat::from_vec(2, 2, vec![1.0, 2.0, 2.0, 1.0]);
        assert!(matches!(cholesky(&a), Err(CoreError::NotPositiveDefinite(_))));
    }

    #[test]
    fn chol_inverse_matches_identity() {
        let a = Mat::from_vec(2, 2, vec![2.0, 0.3, 0.3, 1.0]);
        let inv = chol_inverse(&cholesky(&a).unwrap());
        let prod = a.matmul(&inv);
        assert!(approx(prod[(0, 0)], 1.0, 1e-12));
        assert!(approx(prod[(0, 1)], 0.0, 1e-12));
        assert!(approx(prod[(1, 1)], 1.0, 1e-12));
    }

    #[test]
    fn jacobi_eigen_reconstructs_matrix() {
        let a = Mat::from_vec(
            4,
            4,
            vec![
                4.0, 1.0, 0.2, 0.0, 1.0, 3.0, 0.1, 0.4, 0.2, 0.1, 2.0, 0.3, 0.0, 0.4, 0.3, 1.5,
            ],
        );
        let (vals, v) = sym_eigen(&a).unwrap();
        // Descending order.
        for w in vals.windows(2) {
            assert!(w[0] >= w[1]);
        }
        // V diag(vals) V^T == A
        let mut rec = Mat::zeros(4, 4);
        for k in 0..4 {
            for i in 0..4 {
                for j in 0..4 {
                    rec[(i, j)] += vals[k] * v[(i, k)] * v[(j, k)];
                }
            }
        }
        for i in 0..4 {
            for j in 0..4 {
                assert!(approx(rec[(i, j)], a[(i, j)], 1e-10), "({i},{j})");
            }
        }
    }

    #[test]
    fn spd_sqrt_squares_back() {
        let a = Mat::from_vec(3, 3, vec![2.0, 0.5, 0.1, 0.5, 1.5, 0.2, 0.1, 0.2, 1.0]);
        let s = spd_sqrt(&a).unwrap();
        let sq = s.matmul(&s);
        for i in 0..3 {
            for j in 0..3 {
                assert!(approx(sq[(i, j)], a[(i, j)], 1e-10));
            }
        }
    }

    #[test]
    fn eigen_of_diagonal_is_exact() {
        let a = Mat::from_vec(3, 3, vec![3.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 2.0]);
        let (vals, _) = sym_eigen(&a).unwrap();
        assert_eq!(vals, vec![3.0, 2.0, 1.0]);
    }
}
