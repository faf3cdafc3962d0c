//! Subspaces of Q(i)^n in reduced row echelon normal form.
//!
//! The RREF basis is a complete invariant: two subspaces are equal iff
//! their stored data is equal, so `PartialEq` is derived.

use crate::error::{Error, Result};
use crate::matrix::{LinSolver, Matrix};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    /// Full-row-rank matrix in RREF; rows are the canonical basis.
    basis: Matrix,
    /// Pivot column of each basis row.
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zero(0, ambient), pivots: vec![] }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_rows(ambient: usize, rows: Vec<Vec<Scalar>>) -> Self {
        for r in &rows {
            assert_eq!(r.len(), ambient, "row length != ambient dimension");
        }
        if rows.is_empty() {
            return Subspace::zero(ambient);
        }
        let red = Matrix::from_rows(rows).rref();
        let rank = red.pivots.len();
        let basis = Matrix::from_fn(rank, ambient, |i, j| red.reduced[(i, j)].clone());
        Subspace { ambient, basis, pivots: red.pivots }
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        Subspace::from_rows(m.ncols(), m.rows_iter().map(|r| r.to_vec()).collect())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_row(&self, i: usize) -> &[Scalar] {
        self.basis.row(i)
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero_space(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Residual of `v` after eliminating all pivot coordinates; zero iff
    /// `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient);
        let mut out = v.to_vec();
        for (k, &pc) in self.pivots.iter().enumerate() {
            if out[pc].is_zero() {
                continue;
            }
            let c = out[pc].clone();
            for j in 0..self.ambient {
                let d = &c * &self.basis[(k, j)];
                out[j] -= &d;
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Coordinates of `v` in the canonical basis, or `None` if outside.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc].clone()).collect())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient);
        self.basis.rows_iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut rows: Vec<Vec<Scalar>> = self.basis.rows_iter().map(|r| r.to_vec()).collect();
        rows.extend(other.basis.rows_iter().map(|r| r.to_vec()));
        Subspace::from_rows(self.ambient, rows)
    }

    /// Intersection via the joint-kernel method: pairs (x, y) with
    /// x^T A = y^T B span the same vector from both sides.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let a = self.dim();
        let b = other.dim();
        if a == 0 || b == 0 {
            return Subspace::zero(self.ambient);
        }
        // columns of the system: the a + b coefficients; rows: ambient coords
        let sys = Matrix::from_fn(self.ambient, a + b, |i, j| {
            if j < a {
                self.basis[(j, i)].clone()
            } else {
                -&other.basis[(j - a, i)]
            }
        });
        let mut rows = Vec::new();
        for lam in sys.kernel_rows() {
            let mut v = vec![Scalar::zero(); self.ambient];
            for (k, c) in lam.iter().take(a).enumerate() {
                if c.is_zero() {
                    continue;
                }
                for j in 0..self.ambient {
                    let d = c * &self.basis[(k, j)];
                    v[j] += &d;
                }
            }
            rows.push(v);
        }
        Subspace::from_rows(self.ambient, rows)
    }

    pub fn quotient_dim(&self, sub: &Subspace) -> Result<usize> {
        if !sub.is_subspace_of(self) {
            return Err(Error::Inclusion(format!(
                "dim-{} space is not contained in the dim-{} space",
                sub.dim(),
                self.dim()
            )));
        }
        Ok(self.dim() - sub.dim())
    }

    /// Image of the subspace under the antilinear map x -> S conj(x).
    pub fn conjugate_by(&self, s: &Matrix) -> Subspace {
        assert_eq!(s.ncols(), self.ambient);
        let rows = self
            .basis
            .rows_iter()
            .map(|r| {
                let cr: Vec<Scalar> = r.iter().map(Scalar::conj).collect();
                s.apply(&cr)
            })
            .collect();
        Subspace::from_rows(self.ambient, rows)
    }

    /// Kernel of the linear map given by `m` (as `{x : m x = 0}`),
    /// intersected with this subspace.
    pub fn kernel_within(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.ncols(), self.ambient);
        if self.dim() == 0 {
            return self.clone();
        }
        // rows of self.basis are candidate vectors; coefficients c with
        // m (c^T basis)^T = 0 form the kernel of m * basis^T.
        let composed = m.mul(&self.basis.transpose());
        let mut rows = Vec::new();
        for c in composed.kernel_rows() {
            let mut v = vec![Scalar::zero(); self.ambient];
            for (k, coef) in c.iter().enumerate() {
                if coef.is_zero() {
                    continue;
                }
                for j in 0..self.ambient {
                    let d = coef * &self.basis[(k, j)];
                    v[j] += &d;
                }
            }
            rows.push(v);
        }
        Subspace::from_rows(self.ambient, rows)
    }
}

/// Quotient `num / den` with explicit complement representatives:
/// the rows of `num`'s canonical basis that stay independent over `den`,
/// taken in order. Coordinates are computed by one precomputed solver.
pub struct QuotientMap {
    ambient: usize,
    den: Subspace,
    reps: Vec<Vec<Scalar>>,
    solver: Option<LinSolver>,
}

impl QuotientMap {
    pub fn new(num: &Subspace, den: &Subspace) -> Result<Self> {
        if !den.is_subspace_of(num) {
            return Err(Error::Inclusion("quotient denominator not inside numerator".into()));
        }
        let ambient = num.ambient();
        let mut cur = den.clone();
        let mut reps = Vec::new();
        for r in num.basis().rows_iter() {
            if !cur.contains(r) {
                reps.push(r.to_vec());
                cur = cur.sum(&Subspace::from_rows(ambient, vec![r.to_vec()]));
            }
        }
        debug_assert_eq!(reps.len(), num.dim() - den.dim());
        let solver = if den.dim() + reps.len() > 0 {
            // unknowns: den coefficients then rep coefficients; equations: ambient coords
            let cols = den.dim() + reps.len();
            let a = Matrix::from_fn(ambient, cols, |i, j| {
                if j < den.dim() {
                    den.basis()[(j, i)].clone()
                } else {
                    reps[j - den.dim()][i].clone()
                }
            });
            Some(LinSolver::new(&a))
        } else {
            None
        };
        Ok(QuotientMap { ambient, den: den.clone(), reps, solver })
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn reps(&self) -> &[Vec<Scalar>] {
        &self.reps
    }

    /// Quotient coordinates of `v`; errors when `v` is outside the
    /// numerator span.
    pub fn project(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient);
        let Some(solver) = &self.solver else {
            if v.iter().all(Scalar::is_zero) {
                return Ok(vec![]);
            }
            return Err(Error::Inclusion("vector outside zero space".into()));
        };
        let x = solver
            .solve(v)
            .ok_or_else(|| Error::Inclusion("vector outside the numerator span".into()))?;
        Ok(x[self.den.dim()..].to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    fn sp(ambient: usize, rows: &[&[&str]]) -> Subspace {
        Subspace::from_rows(
            ambient,
            rows.iter().map(|r| r.iter().map(|x| s(x)).collect()).collect(),
        )
    }

    #[test]
    fn canonical_form_equality() {
        let a = sp(3, &[&["1", "1", "0"], &["0", "1", "1"]]);
        let b = sp(3, &[&["1", "0", "-1"], &["1", "2", "1"]]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn membership_and_coords() {
        let a = sp(3, &[&["1", "0", "i"], &["0", "1", "2"]]);
        let v = vec![s("2"), s("-1"), s("2*i-2")];
        assert!(a.contains(&v));
        assert_eq!(a.coords(&v).unwrap(), vec![s("2"), s("-1")]);
        assert!(!a.contains(&[s("0"), s("0"), s("1")]));
        assert!(a.coords(&[s("0"), s("0"), s("1")]).is_none());
    }

    #[test]
    fn sum_intersect_modular_numbers() {
        let a = sp(4, &[&["1", "0", "0", "0"], &["0", "1", "0", "0"]]);
        let b = sp(4, &[&["0", "1", "0", "0"], &["0", "0", "1", "0"]]);
        assert_eq!(a.sum(&b).dim(), 3);
        let cap = a.intersect(&b);
        assert_eq!(cap.dim(), 1);
        assert!(cap.contains(&[s("0"), s("1"), s("0"), s("0")]));
        // rank-nullity flavored identity
        assert_eq!(a.sum(&b).dim() + cap.dim(), a.dim() + b.dim());
    }

    #[test]
    fn quotient_map_coordinates() {
        let num = sp(3, &[&["1", "0", "0"], &["0", "1", "0"], &["0", "0", "1"]]);
        let den = sp(3, &[&["1", "1", "0"]]);
        let q = QuotientMap::new(&num, &den).unwrap();
        assert_eq!(q.dim(), 2);
        // v = den-vector should project to zero
        assert!(q.project(&[s("2"), s("2"), s("0")]).unwrap().iter().all(Scalar::is_zero));
        let p = q.project(&[s("1"), s("0"), s("3")]).unwrap();
        assert_eq!(p.len(), 2);
        assert!(!p.iter().all(Scalar::is_zero));
        assert!(QuotientMap::new(&den.clone(), &num).is_err());
    }

    #[test]
    fn kernel_within_restricts() {
        let space = sp(3, &[&["1", "0", "0"], &["0", "1", "0"]]);
        // map (x,y,z) -> x + y
        let m = Matrix::from_rows(vec![vec![s("1"), s("1"), s("0")]]);
        let k = space.kernel_within(&m);
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[s("1"), s("-1"), s("0")]));
    }

    #[test]
    fn quotient_dim_requires_inclusion() {
        let a = sp(3, &[&["1", "0", "0"]]);
        let b = sp(3, &[&["0", "1", "0"]]);
        assert!(a.quotient_dim(&b).is_err());
        let big = a.sum(&b);
        assert_eq!(big.quotient_dim(&a).unwrap(), 1);
    }
}
