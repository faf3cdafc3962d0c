//! The Chevalley-Eilenberg complex C^*(g; M) over the canonical basis of
//! lex-sorted index subsets tensor the module basis, together with the
//! contraction and Lie-derivative operators on cochains.
//!
//! Differential convention (arguments 1-based):
//! (du)(x_1..x_{p+1}) = sum_j (-1)^{j+1} rho(x_j) u(.. x_j^ ..)
//!   + sum_{j<k} (-1)^{j+k} u([x_j, x_k], .. x_j^ .. x_k^ ..).

use crate::error::{Error, Result};
use crate::exterior::{insert_front, DegreeBasis};
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::rep::{cochain_action_matrix, Representation};
use crate::scalar::Scalar;

/// An alternating form with module coefficients, stored over the
/// canonical basis: index = (lex rank of subset) * module_dim + module index.
#[derive(Clone, PartialEq, Eq)]
pub struct Cochain {
    pub degree: usize,
    pub algebra_dim: usize,
    pub module_dim: usize,
    pub coeffs: Vec<Scalar>,
}

impl Cochain {
    pub fn zero(degree: usize, algebra_dim: usize, module_dim: usize) -> Self {
        let len = DegreeBasis::new(algebra_dim, degree, module_dim).len();
        Cochain { degree, algebra_dim, module_dim, coeffs: vec![Scalar::zero(); len] }
    }

    pub fn from_coeffs(
        degree: usize,
        algebra_dim: usize,
        module_dim: usize,
        coeffs: Vec<Scalar>,
    ) -> Self {
        let len = DegreeBasis::new(algebra_dim, degree, module_dim).len();
        assert_eq!(coeffs.len(), len, "coefficient vector has wrong length");
        Cochain { degree, algebra_dim, module_dim, coeffs }
    }

    pub fn basis(&self) -> DegreeBasis {
        DegreeBasis::new(self.algebra_dim, self.degree, self.module_dim)
    }

    pub fn get(&self, subset: &[usize], mu: usize) -> Scalar {
        let basis = self.basis();
        let rank = basis.subset_rank(subset).expect("subset of the right size");
        self.coeffs[basis.flat(rank, mu)].clone()
    }

    pub fn set(&mut self, subset: &[usize], mu: usize, value: Scalar) {
        let basis = self.basis();
        let rank = basis.subset_rank(subset).expect("subset of the right size");
        let flat = basis.flat(rank, mu);
        self.coeffs[flat] = value;
    }

    /// Full multilinear evaluation on arbitrary coordinate vectors,
    /// returning a module vector. Alternation is handled by expanding
    /// over index tuples and sorting each tuple.
    pub fn evaluate(&self, args: &[Vec<Scalar>]) -> Vec<Scalar> {
        assert_eq!(args.len(), self.degree);
        for a in args {
            assert_eq!(a.len(), self.algebra_dim);
        }
        let basis = self.basis();
        let mut out = vec![Scalar::zero(); self.module_dim];
        let mut tuple = vec![0usize; self.degree];
        self.eval_rec(&basis, args, 0, &Scalar::one(), &mut tuple, &mut out);
        out
    }

    fn eval_rec(
        &self,
        basis: &DegreeBasis,
        args: &[Vec<Scalar>],
        slot: usize,
        coef: &Scalar,
        tuple: &mut Vec<usize>,
        out: &mut Vec<Scalar>,
    ) {
        if slot == self.degree {
            let (sorted, sign) = match sort_with_sign(tuple) {
                Some(v) => v,
                None => return,
            };
            let Some(rank) = basis.subset_rank(&sorted) else {
                return;
            };
            for mu in 0..self.module_dim {
                let c = &self.coeffs[basis.flat(rank, mu)];
                if !c.is_zero() {
                    let mut term = coef * c;
                    if sign < 0 {
                        term = -term;
                    }
                    out[mu] += &term;
                }
            }
            return;
        }
        for (k, v) in args[slot].iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            tuple[slot] = k;
            let next = coef * v;
            self.eval_rec(basis, args, slot + 1, &next, tuple, out);
        }
    }
}

/// Sorts a tuple of indices; `None` on repeats, otherwise the
/// alternation sign of the sorting permutation.
fn sort_with_sign(tuple: &[usize]) -> Option<(Vec<usize>, i32)> {
    let mut v = tuple.to_vec();
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, sign))
}

/// Matrix of d: C^p(g;M) -> C^{p+1}(g;M) over the canonical bases.
pub fn ce_differential(g: &LieAlgebra, rep: &Representation, p: usize) -> Matrix {
    assert_eq!(g.dim(), rep.algebra_dim);
    let n = g.dim();
    let m = rep.dim_m;
    let in_basis = DegreeBasis::new(n, p, m);
    let out_basis = DegreeBasis::new(n, p + 1, m);
    let mut d = Matrix::zero(out_basis.len(), in_basis.len());
    for (ki, subset) in out_basis.subsets.iter().enumerate() {
        // action terms
        for (jj, &xj) in subset.iter().enumerate() {
            let sign_pos = jj % 2 == 0; // (-1)^{j+1}, 1-based
            let removed: Vec<usize> = subset
                .iter()
                .enumerate()
                .filter(|&(t, _)| t != jj)
                .map(|(_, &x)| x)
                .collect();
            let cj = in_basis.subset_rank(&removed).expect("subset");
            let rho = &rep.action[xj];
            for mu in 0..m {
                for nu in 0..m {
                    let c = &rho[(mu, nu)];
                    if c.is_zero() {
                        continue;
                    }
                    let entry = if sign_pos { c.clone() } else { -c };
                    d[(out_basis.flat(ki, mu), in_basis.flat(cj, nu))] += &entry;
                }
            }
        }
        // bracket terms
        for jj in 0..subset.len() {
            for kk in jj + 1..subset.len() {
                let sign_pos = (jj + kk) % 2 == 0; // (-1)^{j+k}, 1-based
                let b = g.bracket_basis(subset[jj], subset[kk]);
                let rest: Vec<usize> = subset
                    .iter()
                    .enumerate()
                    .filter(|&(t, _)| t != jj && t != kk)
                    .map(|(_, &x)| x)
                    .collect();
                for (w, bw) in b.iter().enumerate() {
                    if bw.is_zero() {
                        continue;
                    }
                    let Some((sorted, s2)) = insert_front(w, &rest) else {
                        continue;
                    };
                    let cj = in_basis.subset_rank(&sorted).expect("subset");
                    let mut coef = bw.clone();
                    if !sign_pos {
                        coef = -coef;
                    }
                    if s2 < 0 {
                        coef = -coef;
                    }
                    for mu in 0..m {
                        d[(out_basis.flat(ki, mu), in_basis.flat(cj, mu))] += &coef;
                    }
                }
            }
        }
    }
    d
}

/// A finite cochain complex in fixed bases: `dims[q]` spaces with
/// differentials `d[q]: q -> q+1`; the last differential has zero rows.
#[derive(Clone)]
pub struct CochainComplex {
    pub dims: Vec<usize>,
    pub d: Vec<Matrix>,
}

impl CochainComplex {
    pub fn new(dims: Vec<usize>, d: Vec<Matrix>) -> Self {
        assert_eq!(d.len(), dims.len(), "one outgoing differential per degree");
        for q in 0..dims.len() {
            assert_eq!(d[q].ncols(), dims[q]);
            let next = if q + 1 < dims.len() { dims[q + 1] } else { 0 };
            assert_eq!(d[q].nrows(), next);
        }
        CochainComplex { dims, d }
    }

    pub fn top(&self) -> usize {
        self.dims.len().saturating_sub(1)
    }

    pub fn check_dd(&self) -> Result<()> {
        for q in 0..self.d.len().saturating_sub(1) {
            if !self.d[q + 1].mul(&self.d[q]).is_zero() {
                return Err(Error::DSquare(q, q + 2));
            }
        }
        Ok(())
    }

    pub fn cohomology_dims(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.d.iter().map(Matrix::rank).collect();
        (0..self.dims.len())
            .map(|q| {
                let out = ranks[q];
                let inc = if q > 0 { ranks[q - 1] } else { 0 };
                self.dims[q] - out - inc
            })
            .collect()
    }
}

/// The full complex C^*(g; M) in degrees 0..=dim g, with d*d verified.
pub fn ce_complex(g: &LieAlgebra, rep: &Representation) -> Result<CochainComplex> {
    let n = g.dim();
    let m = rep.dim_m;
    let dims: Vec<usize> = (0..=n).map(|q| DegreeBasis::new(n, q, m).len()).collect();
    let mut d: Vec<Matrix> = (0..n).map(|q| ce_differential(g, rep, q)).collect();
    d.push(Matrix::zero(0, dims[n]));
    let complex = CochainComplex::new(dims, d);
    complex.check_dd()?;
    Ok(complex)
}

/// Contraction (insertion) operator: (i_Y u)(x_1..x_{p-1}) = u(Y, x_1..).
pub fn insertion_matrix(n: usize, m: usize, y: &[Scalar], p: usize) -> Matrix {
    assert!(p >= 1);
    assert_eq!(y.len(), n);
    let in_basis = DegreeBasis::new(n, p, m);
    let out_basis = DegreeBasis::new(n, p - 1, m);
    let mut mat = Matrix::zero(out_basis.len(), in_basis.len());
    for (ki, rest) in out_basis.subsets.iter().enumerate() {
        for (w, yw) in y.iter().enumerate() {
            if yw.is_zero() {
                continue;
            }
            let Some((sorted, sign)) = insert_front(w, rest) else {
                continue;
            };
            let cj = in_basis.subset_rank(&sorted).expect("subset");
            let mut coef = yw.clone();
            if sign < 0 {
                coef = -coef;
            }
            for mu in 0..m {
                mat[(out_basis.flat(ki, mu), in_basis.flat(cj, mu))] += &coef;
            }
        }
    }
    mat
}

/// Lie derivative L_Y on C^p(g;M):
/// (L_Y u)(x_1..x_p) = rho(Y) u(x_1..x_p) - sum_t u(x_1,..,[Y,x_t],..,x_p).
pub fn lie_derivative_matrix(
    g: &LieAlgebra,
    rep: &Representation,
    y: &[Scalar],
    p: usize,
) -> Matrix {
    cochain_action_matrix(g.dim(), p, &g.ad(y), &rep.act(y))
}

pub fn lie_derivative(
    g: &LieAlgebra,
    rep: &Representation,
    y: &[Scalar],
    u: &Cochain,
) -> Cochain {
    let mat = lie_derivative_matrix(g, rep, y, u.degree);
    Cochain::from_coeffs(u.degree, u.algebra_dim, u.module_dim, mat.apply(&u.coeffs))
}

/// Test oracle: the same differential assembled through generic
/// multilinear evaluation instead of subset bookkeeping.
pub fn ce_differential_by_evaluation(
    g: &LieAlgebra,
    rep: &Representation,
    p: usize,
) -> Matrix {
    let n = g.dim();
    let m = rep.dim_m;
    let in_basis = DegreeBasis::new(n, p, m);
    let out_basis = DegreeBasis::new(n, p + 1, m);
    let unit = |i: usize| {
        let mut e = vec![Scalar::zero(); n];
        e[i] = Scalar::one();
        e
    };
    let mut d = Matrix::zero(out_basis.len(), in_basis.len());
    for col in 0..in_basis.len() {
        let mut coeffs = vec![Scalar::zero(); in_basis.len()];
        coeffs[col] = Scalar::one();
        let u = Cochain::from_coeffs(p, n, m, coeffs);
        for (ki, subset) in out_basis.subsets.iter().enumerate() {
            let mut value = vec![Scalar::zero(); m];
            for jj in 0..subset.len() {
                let args: Vec<Vec<Scalar>> = subset
                    .iter()
                    .enumerate()
                    .filter(|&(t, _)| t != jj)
                    .map(|(_, &x)| unit(x))
                    .collect();
                let inner = u.evaluate(&args);
                let acted = rep.action[subset[jj]].apply(&inner);
                for mu in 0..m {
                    if jj % 2 == 0 {
                        value[mu] += &acted[mu];
                    } else {
                        value[mu] -= &acted[mu];
                    }
                }
            }
            for jj in 0..subset.len() {
                for kk in jj + 1..subset.len() {
                    let mut args = vec![g.bracket(&unit(subset[jj]), &unit(subset[kk]))];
                    args.extend(
                        subset
                            .iter()
                            .enumerate()
                            .filter(|&(t, _)| t != jj && t != kk)
                            .map(|(_, &x)| unit(x)),
                    );
                    let inner = u.evaluate(&args);
                    for mu in 0..m {
                        if (jj + kk) % 2 == 0 {
                            value[mu] += &inner[mu];
                        } else {
                            value[mu] -= &inner[mu];
                        }
                    }
                }
            }
            for mu in 0..m {
                d[(out_basis.flat(ki, mu), col)] = value[mu].clone();
            }
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{heisenberg, sl2, solvable2, LieAlgebra};

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    #[test]
    fn sl2_degree_one_differential() {
        let g = sl2();
        let triv = Representation::trivial(3, 1);
        let d1 = ce_differential(&g, &triv, 1);
        // rows: (h,e), (h,f), (e,f); cols: h*, e*, f*
        let expect = Matrix::from_rows(vec![
            vec![s("0"), s("-2"), s("0")],
            vec![s("0"), s("0"), s("2")],
            vec![s("-1"), s("0"), s("0")],
        ]);
        assert_eq!(d1, expect);
    }

    #[test]
    fn betti_numbers_small_algebras() {
        let triv1 = Representation::trivial(3, 1);
        assert_eq!(ce_complex(&sl2(), &triv1).unwrap().cohomology_dims(), vec![1, 0, 0, 1]);
        assert_eq!(
            ce_complex(&heisenberg(), &triv1).unwrap().cohomology_dims(),
            vec![1, 2, 2, 1]
        );
        let triv2 = Representation::trivial(2, 1);
        assert_eq!(
            ce_complex(&solvable2(), &triv2).unwrap().cohomology_dims(),
            vec![1, 1, 0]
        );
        let ab = LieAlgebra::abelian(4);
        let triv4 = Representation::trivial(4, 1);
        assert_eq!(
            ce_complex(&ab, &triv4).unwrap().cohomology_dims(),
            vec![1, 4, 6, 4, 1]
        );
    }

    #[test]
    fn whitehead_vanishing_for_adjoint_sl2() {
        let g = sl2();
        let ad = Representation::adjoint(&g);
        let c = ce_complex(&g, &ad).unwrap();
        assert_eq!(c.cohomology_dims(), vec![0, 0, 0, 0]);
    }

    #[test]
    fn differential_matches_evaluation_oracle() {
        let cases: Vec<(LieAlgebra, Representation)> = vec![
            (sl2(), Representation::trivial(3, 1)),
            (sl2(), Representation::adjoint(&sl2())),
            (heisenberg(), Representation::adjoint(&heisenberg())),
            (solvable2(), Representation::trivial(2, 1)),
        ];
        for (g, rep) in cases {
            for p in 0..=g.dim() {
                let fast = ce_differential(&g, &rep, p);
                let slow = ce_differential_by_evaluation(&g, &rep, p);
                assert_eq!(fast, slow, "mismatch at degree {p}");
            }
        }
    }

    #[test]
    fn cartan_formula() {
        // L_Y = d i_Y + i_Y d on every degree
        let g = sl2();
        for rep in [Representation::trivial(3, 1), Representation::adjoint(&g)] {
            let y = vec![s("1"), s("2"), s("-1/2")];
            for p in 0..=3usize {
                let lie = lie_derivative_matrix(&g, &rep, &y, p);
                let m = rep.dim_m;
                let d_p = ce_differential(&g, &rep, p);
                let term2 = if p + 1 <= 3 {
                    insertion_matrix(3, m, &y, p + 1).mul(&d_p)
                } else {
                    Matrix::zero(lie.nrows(), lie.ncols())
                };
                let total = if p >= 1 {
                    let d_down = ce_differential(&g, &rep, p - 1);
                    d_down.mul(&insertion_matrix(3, m, &y, p)).add(&term2)
                } else {
                    term2
                };
                assert_eq!(lie, total, "Cartan fails at degree {p}");
            }
        }
    }

    #[test]
    fn lie_derivative_weight_of_f_dual() {
        // L_h f* = 2 f* in C^1(sl2) with trivial coefficients
        let g = sl2();
        let triv = Representation::trivial(3, 1);
        let mut fstar = Cochain::zero(1, 3, 1);
        fstar.set(&[2], 0, s("1"));
        let h = vec![s("1"), s("0"), s("0")];
        let out = lie_derivative(&g, &triv, &h, &fstar);
        assert_eq!(out.get(&[2], 0), s("2"));
        assert_eq!(out.get(&[0], 0), s("0"));
        assert_eq!(out.get(&[1], 0), s("0"));
    }

    #[test]
    fn evaluate_alternates() {
        let mut u = Cochain::zero(2, 3, 1);
        u.set(&[0, 1], 0, s("1"));
        let e0 = vec![s("1"), s("0"), s("0")];
        let e1 = vec![s("0"), s("1"), s("0")];
        assert_eq!(u.evaluate(&[e0.clone(), e1.clone()]), vec![s("1")]);
        assert_eq!(u.evaluate(&[e1.clone(), e0.clone()]), vec![s("-1")]);
        assert_eq!(u.evaluate(&[e0.clone(), e0.clone()]), vec![s("0")]);
        // bilinearity with a combination
        let mix = vec![s("2"), s("3"), s("0")];
        assert_eq!(u.evaluate(&[e0, mix]), vec![s("3")]);
    }

    #[test]
    fn insertion_and_kernel_shape() {
        // i_h on C^2(sl2): u(h,e)=a, u(h,f)=b, u(e,f)=c -> (i_h u)(e)=a, (i_h u)(f)=b
        let y = vec![s("1"), s("0"), s("0")];
        let m = insertion_matrix(3, 1, &y, 2);
        assert_eq!(m.nrows(), 3);
        assert_eq!(m.ncols(), 3);
        let u = vec![s("5"), s("7"), s("11")];
        let out = m.apply(&u);
        // output basis: h*, e*, f*: (i_h u)(h) = 0, (e) = 5, (f) = 7
        assert_eq!(out, vec![s("0"), s("5"), s("7")]);
    }

    #[test]
    fn dd_violation_detected_for_broken_rep() {
        // a non-homomorphism coefficient action must break d*d = 0
        let g = sl2();
        let mut rep = Representation::adjoint(&g);
        rep.action[0] = rep.action[0].scale(&s("3"));
        assert!(rep.homomorphism_witness(&g).is_some());
        assert!(ce_complex(&g, &rep).is_err());
    }
}
