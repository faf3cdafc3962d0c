//! Finite-dimensional Lie algebras over Q(i) with optional antilinear
//! real structure, plus subalgebra utilities and structure
//! classification relative to the real form.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::subspace::Subspace;

#[derive(Clone, Debug)]
pub struct LieAlgebra {
    dim: usize,
    names: Vec<String>,
    /// Structure table: entry (i, j) holds the coordinates of [x_i, x_j].
    table: Vec<Vec<Scalar>>,
    /// Antilinear involution sigma(x) = S conj(x), when present.
    real_structure: Option<Matrix>,
}

/// Classification of a subalgebra v against the real form:
/// elliptic when v + conj(v) is everything, complex when the sum is
/// direct as well, essentially real when v is conj-stable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureClass {
    pub elliptic: bool,
    pub complex: bool,
    pub essentially_real: bool,
    pub corank_real_part: usize,
}

impl LieAlgebra {
    /// Builds from an explicit full table without validating anything;
    /// pair with `check_antisymmetry` / `check_jacobi`.
    pub fn from_table(
        names: Vec<String>,
        table: Vec<Vec<Scalar>>,
        real_structure: Option<Matrix>,
    ) -> Self {
        let dim = names.len();
        assert_eq!(table.len(), dim * dim, "table must list all basis pairs");
        for entry in &table {
            assert_eq!(entry.len(), dim, "bracket coordinates must have length dim");
        }
        if let Some(s) = &real_structure {
            assert_eq!((s.nrows(), s.ncols()), (dim, dim));
        }
        LieAlgebra { dim, names, table, real_structure }
    }

    /// Builds from brackets on pairs i < j, antisymmetrizing the rest.
    pub fn from_upper_pairs(
        names: Vec<String>,
        pairs: Vec<((usize, usize), Vec<Scalar>)>,
        real_structure: Option<Matrix>,
    ) -> Self {
        let dim = names.len();
        let mut table = vec![vec![Scalar::zero(); dim]; dim * dim];
        for ((i, j), v) in pairs {
            assert!(i < j && j < dim, "pairs must satisfy i < j < dim");
            assert_eq!(v.len(), dim);
            table[j * dim + i] = v.iter().map(|c| -c).collect();
            table[i * dim + j] = v;
        }
        LieAlgebra::from_table(names, table, real_structure)
    }

    pub fn abelian(n: usize) -> Self {
        let names = (0..n).map(|i| format!("x{}", i + 1)).collect();
        LieAlgebra::from_upper_pairs(names, vec![], None)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn real_structure(&self) -> Option<&Matrix> {
        self.real_structure.as_ref()
    }

    pub fn set_real_structure(&mut self, s: Option<Matrix>) {
        if let Some(m) = &s {
            assert_eq!((m.nrows(), m.ncols()), (self.dim, self.dim));
        }
        self.real_structure = s;
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i * self.dim + j]
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![Scalar::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let c = &x[i] * &y[j];
                for (w, t) in self.bracket_basis(i, j).iter().enumerate() {
                    if !t.is_zero() {
                        let term = &c * t;
                        out[w] += &term;
                    }
                }
            }
        }
        out
    }

    /// Matrix of ad(y): x -> [y, x] on basis columns.
    pub fn ad(&self, y: &[Scalar]) -> Matrix {
        let mut m = Matrix::zero(self.dim, self.dim);
        for j in 0..self.dim {
            let mut e = vec![Scalar::zero(); self.dim];
            e[j] = Scalar::one();
            let col = self.bracket(y, &e);
            for (i, c) in col.into_iter().enumerate() {
                m[(i, j)] = c;
            }
        }
        m
    }

    pub fn check_antisymmetry(&self) -> Option<(usize, usize)> {
        for i in 0..self.dim {
            for j in i..self.dim {
                let left = self.bracket_basis(i, j);
                let right = self.bracket_basis(j, i);
                let bad = left.iter().zip(right.iter()).any(|(a, b)| !(a + b).is_zero());
                if bad {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// First failing basis triple of the Jacobi identity, if any.
    pub fn check_jacobi(&self) -> Option<(usize, usize, usize)> {
        let basis: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|i| {
                let mut e = vec![Scalar::zero(); self.dim];
                e[i] = Scalar::one();
                e
            })
            .collect();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let bij = self.bracket_basis(i, j).to_vec();
                for k in j + 1..self.dim {
                    let bjk = self.bracket_basis(j, k).to_vec();
                    let bki = self.bracket_basis(k, i).to_vec();
                    let t1 = self.bracket(&bij, &basis[k]);
                    let t2 = self.bracket(&bjk, &basis[i]);
                    let t3 = self.bracket(&bki, &basis[j]);
                    let ok = (0..self.dim)
                        .all(|w| (&(&t1[w] + &t2[w]) + &t3[w]).is_zero());
                    if !ok {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Verifies that sigma is an antilinear involutive automorphism.
    pub fn check_real_structure(&self) -> Result<()> {
        let s = self.real_structure.as_ref().ok_or(Error::MissingRealStructure)?;
        // involution: S conj(S) = I
        let sc = s.mul(&s.conj());
        if sc != Matrix::identity(self.dim) {
            return Err(Error::RealStructure("sigma is not an involution".into()));
        }
        // automorphism: sigma[x,y] = [sigma x, sigma y] on basis pairs
        for i in 0..self.dim {
            let si = s.col_vec(i);
            for j in 0..self.dim {
                let sj = s.col_vec(j);
                let lhs = {
                    let br: Vec<Scalar> =
                        self.bracket_basis(i, j).iter().map(Scalar::conj).collect();
                    s.apply(&br)
                };
                let rhs = self.bracket(&si, &sj);
                if lhs != rhs {
                    return Err(Error::RealStructure(format!(
                        "sigma fails to preserve the bracket on pair ({}, {})",
                        self.names[i], self.names[j]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Real dimension of the sigma-fixed real form.
    pub fn real_form_dim(&self) -> Result<usize> {
        let s = self.real_structure.as_ref().ok_or(Error::MissingRealStructure)?;
        // write S = P + iQ and x = a + ib; S conj(x) = x reads
        // (P - I) a + Q b = 0 and Q a - (P + I) b = 0 over the reals.
        let n = self.dim;
        let zero = num_rational::BigRational::from_integer(0.into());
        let mut sys = Matrix::zero(2 * n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                let p = s[(r, c)].re().clone();
                let q = s[(r, c)].im().clone();
                let pm = Scalar::new(p, zero.clone());
                let qm = Scalar::new(q, zero.clone());
                sys[(r, c)] = pm.clone();
                sys[(r, n + c)] = qm.clone();
                sys[(n + r, c)] = qm;
                sys[(n + r, n + c)] = -pm;
            }
        }
        for d in 0..n {
            sys[(d, d)] -= &Scalar::one();
            sys[(n + d, n + d)] -= &Scalar::one();
        }
        Ok(2 * n - sys.rank())
    }

    /// Closure witness: first pair of basis rows of `v` whose bracket
    /// leaves the span.
    pub fn subalgebra_witness(&self, v: &Subspace) -> Option<(usize, usize)> {
        assert_eq!(v.ambient(), self.dim);
        for a in 0..v.dim() {
            for b in a + 1..v.dim() {
                let br = self.bracket(v.basis_row(a), v.basis_row(b));
                if !v.contains(&br) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn require_subalgebra(&self, v: &Subspace) -> Result<()> {
        match self.subalgebra_witness(v) {
            None => Ok(()),
            Some((a, b)) => Err(Error::NotSubalgebra(a, b)),
        }
    }

    pub fn is_ideal(&self, v: &Subspace) -> bool {
        (0..self.dim).all(|i| {
            let mut e = vec![Scalar::zero(); self.dim];
            e[i] = Scalar::one();
            (0..v.dim()).all(|a| v.contains(&self.bracket(&e, v.basis_row(a))))
        })
    }

    pub fn conjugate_subspace(&self, v: &Subspace) -> Result<Subspace> {
        let s = self.real_structure.as_ref().ok_or(Error::MissingRealStructure)?;
        Ok(v.conjugate_by(s))
    }

    pub fn classify(&self, v: &Subspace) -> Result<StructureClass> {
        self.require_subalgebra(v)?;
        let vbar = self.conjugate_subspace(v)?;
        let sum = v.sum(&vbar);
        let cap = v.intersect(&vbar);
        let essentially_real = *v == vbar;
        let elliptic = sum.is_full();
        let complex = elliptic && cap.is_zero_space();
        // v = g with g nonzero is essentially real, not complex
        Ok(StructureClass {
            elliptic,
            complex,
            essentially_real,
            corank_real_part: self.dim - cap.dim(),
        })
    }

    /// The abstract Lie algebra structure on a subalgebra, in the
    /// canonical echelon basis of `v`. Also reports the coordinate rows
    /// of the chosen basis inside the big algebra.
    pub fn restrict(&self, v: &Subspace) -> Result<LieAlgebra> {
        self.require_subalgebra(v)?;
        let k = v.dim();
        let names = (0..k).map(|a| format!("y{}", a + 1)).collect();
        let mut table = vec![vec![Scalar::zero(); k]; k * k];
        for a in 0..k {
            for b in 0..k {
                let br = self.bracket(v.basis_row(a), v.basis_row(b));
                let co = v
                    .coords(&br)
                    .ok_or_else(|| Error::Inclusion("bracket left the subalgebra".into()))?;
                table[a * k + b] = co;
            }
        }
        Ok(LieAlgebra::from_table(names, table, None))
    }

    /// Coordinates of a subspace of `v` (given in ambient coordinates)
    /// with respect to the canonical basis of `v`.
    pub fn subspace_in_restricted(&self, v: &Subspace, inner: &Subspace) -> Result<Subspace> {
        if !inner.is_subspace_of(v) {
            return Err(Error::Inclusion("subspace is not inside the subalgebra".into()));
        }
        let rows = inner
            .basis()
            .rows_iter()
            .map(|r| v.coords(r).expect("checked inclusion"))
            .collect();
        Ok(Subspace::from_rows(v.dim(), rows))
    }

    /// Killing form matrix B(x_i, x_j) = tr(ad x_i ad x_j).
    pub fn killing_form(&self) -> Matrix {
        let ads: Vec<Matrix> = (0..self.dim)
            .map(|i| {
                let mut e = vec![Scalar::zero(); self.dim];
                e[i] = Scalar::one();
                self.ad(&e)
            })
            .collect();
        let mut b = Matrix::zero(self.dim, self.dim);
        for i in 0..self.dim {
            for j in i..self.dim {
                let prod = ads[i].mul(&ads[j]);
                let mut tr = Scalar::zero();
                for d in 0..self.dim {
                    tr += &prod[(d, d)];
                }
                b[(i, j)] = tr.clone();
                b[(j, i)] = tr;
            }
        }
        b
    }
}

/// sl2 with basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
/// The attached real structure fixes su(2).
pub fn sl2() -> LieAlgebra {
    let s = |t: &str| t.parse::<Scalar>().unwrap();
    let names = vec!["h".to_string(), "e".to_string(), "f".to_string()];
    let pairs = vec![
        ((0, 1), vec![s("0"), s("2"), s("0")]),
        ((0, 2), vec![s("0"), s("0"), s("-2")]),
        ((1, 2), vec![s("1"), s("0"), s("0")]),
    ];
    let sigma = Matrix::from_rows(vec![
        vec![s("-1"), s("0"), s("0")],
        vec![s("0"), s("0"), s("-1")],
        vec![s("0"), s("-1"), s("0")],
    ]);
    LieAlgebra::from_upper_pairs(names, pairs, Some(sigma))
}

/// Heisenberg algebra: [x, y] = z.
pub fn heisenberg() -> LieAlgebra {
    let s = |t: &str| t.parse::<Scalar>().unwrap();
    let names = vec!["x".to_string(), "y".to_string(), "z".to_string()];
    let pairs = vec![((0, 1), vec![s("0"), s("0"), s("1")])];
    LieAlgebra::from_upper_pairs(names, pairs, None)
}

/// Two-dimensional solvable algebra: [a, b] = b.
pub fn solvable2() -> LieAlgebra {
    let s = |t: &str| t.parse::<Scalar>().unwrap();
    let names = vec!["a".to_string(), "b".to_string()];
    let pairs = vec![((0, 1), vec![s("0"), s("1")])];
    LieAlgebra::from_upper_pairs(names, pairs, None)
}
