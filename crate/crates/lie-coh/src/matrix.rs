//! Dense matrices over the Gaussian rationals, with exact row reduction.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Outcome of Gauss-Jordan elimination: `reduced = ops * original`, where
/// `ops` is invertible. `pivots[k]` is the column of the k-th pivot.
pub struct Rref {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut m = Matrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Scalar> {
        self.row(i).to_vec()
    }

    pub fn col_vec(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn conj(&self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].conj())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &other[(i, j)])
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &other[(i, j)])
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] * c)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let prod = a * b;
                        out[(i, j)] += &prod;
                    }
                }
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "shape mismatch in apply");
        let mut out = vec![Scalar::zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if !a.is_zero() && !v[j].is_zero() {
                    let prod = a * &v[j];
                    out[i] += &prod;
                }
            }
        }
        out
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "shape mismatch in vstack");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "shape mismatch in hstack");
        Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols { self[(i, j)].clone() } else { other[(i, j - self.cols)].clone() }
        })
    }

    /// Gauss-Jordan reduction, searching pivots only in the first
    /// `pivot_cols` columns. Columns past the limit are carried along,
    /// which is what the augmented-solve helpers rely on.
    pub fn rref_limited(&self, pivot_cols: usize) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut next_row = 0usize;
        for col in 0..pivot_cols.min(m.cols) {
            let Some(pr) = (next_row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(next_row, pr);
            let inv = m[(next_row, col)].inv().expect("pivot is nonzero");
            m.scale_row(next_row, &inv);
            for r in 0..m.rows {
                if r != next_row && !m[(r, col)].is_zero() {
                    let factor = m[(r, col)].clone();
                    m.sub_scaled_row(r, next_row, &factor);
                }
            }
            pivots.push(col);
            next_row += 1;
            if next_row == m.rows {
                break;
            }
        }
        Rref { reduced: m, pivots }
    }

    pub fn rref(&self) -> Rref {
        self.rref_limited(self.cols)
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right kernel `{x : A x = 0}` as rows, in the
    /// canonical form induced by the RREF free columns.
    pub fn kernel_rows(&self) -> Vec<Vec<Scalar>> {
        let Rref { reduced, pivots } = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (k, &c) in pivots.iter().enumerate() {
                v[c] = Some(k);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut x = vec![Scalar::zero(); self.cols];
            x[free] = Scalar::one();
            for (k, &pc) in pivots.iter().enumerate() {
                x[pc] = -&reduced[(k, free)];
            }
            basis.push(x);
        }
        basis
    }

    /// Exact inverse; errors when singular.
    pub fn inverse(&self) -> Result<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n));
        let red = aug.rref_limited(n);
        if red.pivots.len() != n {
            return Err(Error::Dimension("matrix is singular".into()));
        }
        Ok(Matrix::from_fn(n, n, |i, j| red.reduced[(i, n + j)].clone()))
    }

    /// Determinant by elimination without row normalization.
    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "det of non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(pr) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return Scalar::zero();
            };
            if pr != col {
                m.swap_rows(col, pr);
                det = -det;
            }
            let pivot = m[(col, col)].clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("pivot nonzero");
            for r in col + 1..n {
                if !m[(r, col)].is_zero() {
                    let factor = &m[(r, col)] * &inv;
                    m.sub_scaled_row(r, col, &factor);
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: &Scalar) {
        for j in 0..self.cols {
            let v = &self[(r, j)] * c;
            self[(r, j)] = v;
        }
    }

    /// row[r] -= factor * row[src]
    fn sub_scaled_row(&mut self, r: usize, src: usize, factor: &Scalar) {
        for j in 0..self.cols {
            let d = &self[(src, j)] * factor;
            self[(r, j)] -= &d;
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Solves `A x = b` repeatedly for a fixed `A` with full column rank,
/// using one precomputed reduction of `[A | I]`.
pub struct LinSolver {
    unknowns: usize,
    equations: usize,
    /// E with (E*A) in RREF; stored as the right block of rref([A|I]).
    ops: Matrix,
    /// pivots[k] = column (unknown index) of k-th pivot of E*A.
    pivots: Vec<usize>,
}

impl LinSolver {
    pub fn new(a: &Matrix) -> Self {
        let n = a.nrows();
        let m = a.ncols();
        let red = a.hstack(&Matrix::identity(n)).rref_limited(m);
        let ops = Matrix::from_fn(n, n, |i, j| red.reduced[(i, m + j)].clone());
        LinSolver { unknowns: m, equations: n, ops, pivots: red.pivots }
    }

    /// Returns a solution (free unknowns set to zero) or `None` when the
    /// system is inconsistent. Unique when `a` has full column rank.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.equations);
        let y = self.ops.apply(b);
        for r in self.pivots.len()..self.equations {
            if !y[r].is_zero() {
                return None;
            }
        }
        let mut x = vec![Scalar::zero(); self.unknowns];
        for (k, &col) in self.pivots.iter().enumerate() {
            x[col] = y[k].clone();
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    fn m(rows: &[&[&str]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|x| s(x)).collect()).collect())
    }

    #[test]
    fn rref_small() {
        let a = m(&[&["1", "2", "3"], &["2", "4", "6"], &["0", "1", "1"]]);
        let r = a.rref();
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.reduced.row(0), &[s("1"), s("0"), s("1")][..]);
        assert_eq!(r.reduced.row(1), &[s("0"), s("1"), s("1")][..]);
        assert!(r.reduced.row(2).iter().all(Scalar::is_zero));
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&["1", "i", "0"], &["0", "0", "1"]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel_rows();
        assert_eq!(k.len(), 1);
        for x in &k {
            assert!(a.apply(x).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(&[&["1", "i"], &["1", "2"]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        let sing = m(&[&["1", "2"], &["2", "4"]]);
        assert!(sing.inverse().is_err());
    }

    #[test]
    fn det_values() {
        let a = m(&[&["0", "1"], &["1", "0"]]);
        assert_eq!(a.det(), s("-1"));
        let b = m(&[&["2", "0"], &["0", "3/2"]]);
        assert_eq!(b.det(), s("3"));
        let c = m(&[&["1", "2"], &["2", "4"]]);
        assert_eq!(c.det(), s("0"));
    }

    #[test]
    fn solver_consistent_and_not() {
        let a = m(&[&["1", "0"], &["1", "1"], &["0", "2"]]);
        let solver = LinSolver::new(&a);
        let x = solver.solve(&[s("3"), s("5"), s("4")]).unwrap();
        assert_eq!(x, vec![s("3"), s("2")]);
        assert!(solver.solve(&[s("1"), s("0"), s("0")]).is_none());
    }
}
