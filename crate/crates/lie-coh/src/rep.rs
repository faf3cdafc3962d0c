//! Representations of a Lie algebra and the standard constructions:
//! trivial, adjoint, quotient by a subalgebra, dual, and alternating
//! forms with coefficients.

use crate::error::{Error, Result};
use crate::exterior::{replace_entry, DegreeBasis};
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::subspace::Subspace;

#[derive(Clone)]
pub struct Representation {
    /// Dimension of the acting algebra (one action matrix per basis element).
    pub algebra_dim: usize,
    pub dim_m: usize,
    pub action: Vec<Matrix>,
}

impl Representation {
    pub fn new(algebra_dim: usize, dim_m: usize, action: Vec<Matrix>) -> Self {
        assert_eq!(action.len(), algebra_dim);
        for m in &action {
            assert_eq!((m.nrows(), m.ncols()), (dim_m, dim_m));
        }
        Representation { algebra_dim, dim_m, action }
    }

    pub fn trivial(algebra_dim: usize, dim_m: usize) -> Self {
        Representation::new(algebra_dim, dim_m, vec![Matrix::zero(dim_m, dim_m); algebra_dim])
    }

    pub fn adjoint(g: &LieAlgebra) -> Self {
        let n = g.dim();
        let action = (0..n)
            .map(|i| {
                let mut e = vec![Scalar::zero(); n];
                e[i] = Scalar::one();
                g.ad(&e)
            })
            .collect();
        Representation::new(n, n, action)
    }

    /// Action matrix of an arbitrary element (coordinate vector).
    pub fn act(&self, x: &[Scalar]) -> Matrix {
        assert_eq!(x.len(), self.algebra_dim);
        let mut out = Matrix::zero(self.dim_m, self.dim_m);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.action[i].scale(c));
            }
        }
        out
    }

    /// First basis pair where rho([x_i, x_j]) != [rho(x_i), rho(x_j)].
    pub fn homomorphism_witness(&self, g: &LieAlgebra) -> Option<(usize, usize)> {
        assert_eq!(g.dim(), self.algebra_dim);
        for i in 0..self.algebra_dim {
            for j in i + 1..self.algebra_dim {
                let lhs = self.act(g.bracket_basis(i, j));
                let commutator = self.action[i]
                    .mul(&self.action[j])
                    .sub(&self.action[j].mul(&self.action[i]));
                if lhs != commutator {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn require_homomorphism(&self, g: &LieAlgebra) -> Result<()> {
        match self.homomorphism_witness(g) {
            None => Ok(()),
            Some((i, j)) => Err(Error::NotHomomorphism(i, j)),
        }
    }

    /// Dual action rho*(x) = -rho(x)^T.
    pub fn dual(&self) -> Representation {
        let action = self.action.iter().map(|m| m.transpose().scale(&-Scalar::one())).collect();
        Representation::new(self.algebra_dim, self.dim_m, action)
    }

    /// Restriction along a subalgebra: one action matrix per canonical
    /// basis row of `v`.
    pub fn restrict_to(&self, v: &Subspace) -> Representation {
        assert_eq!(v.ambient(), self.algebra_dim);
        let action: Vec<Matrix> = (0..v.dim()).map(|a| self.act(v.basis_row(a))).collect();
        Representation::new(v.dim(), self.dim_m, action)
    }

    /// Invariant vectors: the joint kernel of all action matrices.
    pub fn invariants(&self) -> Subspace {
        let mut space = Subspace::full(self.dim_m);
        for m in &self.action {
            space = space.kernel_within(m);
        }
        space
    }
}

/// Data of the quotient module g/v as a representation of v: the
/// canonical complement coordinates are the non-pivot columns of the
/// echelon basis of v, in increasing column order.
pub struct QuotientModule {
    pub rep: Representation,
    /// Ambient column indices giving the complement basis.
    pub complement_cols: Vec<usize>,
}

impl QuotientModule {
    /// Reduction g -> g/v in complement coordinates.
    pub fn reduce(&self, v: &Subspace, x: &[Scalar]) -> Vec<Scalar> {
        let red = v.reduce(x);
        self.complement_cols.iter().map(|&c| red[c].clone()).collect()
    }
}

/// Representation of the subalgebra v on g/v via y . (x mod v) = [y, x] mod v.
pub fn quotient_module(g: &LieAlgebra, v: &Subspace) -> Result<QuotientModule> {
    g.require_subalgebra(v)?;
    let n = g.dim();
    let pivots: Vec<usize> = v.pivots().to_vec();
    let complement_cols: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let m = complement_cols.len();
    let mut action = Vec::with_capacity(v.dim());
    for a in 0..v.dim() {
        let y = v.basis_row(a);
        let mut mat = Matrix::zero(m, m);
        for (b, &cb) in complement_cols.iter().enumerate() {
            let mut e = vec![Scalar::zero(); n];
            e[cb] = Scalar::one();
            let red = v.reduce(&g.bracket(y, &e));
            for (w, &cw) in complement_cols.iter().enumerate() {
                mat[(w, b)] = red[cw].clone();
            }
        }
        action.push(mat);
    }
    Ok(QuotientModule {
        rep: Representation::new(v.dim(), m, action),
        complement_cols,
    })
}

/// Representation of all of g on g/v; demands that v is an ideal, since
/// otherwise the action does not descend.
pub fn ideal_quotient_rep(g: &LieAlgebra, v: &Subspace) -> Result<Representation> {
    g.require_subalgebra(v)?;
    if !g.is_ideal(v) {
        return Err(Error::Invalid(
            "quotient coefficients need an ideal, and this subalgebra is not one".into(),
        ));
    }
    let n = g.dim();
    let pivots: Vec<usize> = v.pivots().to_vec();
    let complement_cols: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let m = complement_cols.len();
    let mut action = Vec::with_capacity(n);
    for a in 0..n {
        let mut y = vec![Scalar::zero(); n];
        y[a] = Scalar::one();
        let mut mat = Matrix::zero(m, m);
        for (b, &cb) in complement_cols.iter().enumerate() {
            let mut e = vec![Scalar::zero(); n];
            e[cb] = Scalar::one();
            let red = v.reduce(&g.bracket(&y, &e));
            for (w, &cw) in complement_cols.iter().enumerate() {
                mat[(w, b)] = red[cw].clone();
            }
        }
        action.push(mat);
    }
    Ok(Representation::new(n, m, action))
}

/// Action on degree-`p` alternating forms C^p(W; M) induced by an action
/// `a` on W and an action `c` on M:
/// (x.u)(w_1..w_p) = c(x) u(w_1..w_p) - sum_t u(w_1,.., a(x) w_t, .., w_p).
pub fn cochain_action_matrix(
    w_dim: usize,
    p: usize,
    a: &Matrix,
    c: &Matrix,
) -> Matrix {
    let m_dim = c.nrows();
    let basis = DegreeBasis::new(w_dim, p, m_dim);
    let size = basis.len();
    let mut out = Matrix::zero(size, size);
    for (ki, subset) in basis.subsets.iter().enumerate() {
        // coefficient action, diagonal in the subset index
        for mu in 0..m_dim {
            for nu in 0..m_dim {
                if !c[(mu, nu)].is_zero() {
                    out[(basis.flat(ki, mu), basis.flat(ki, nu))] += &c[(mu, nu)];
                }
            }
        }
        // argument action: replace slot t by each basis vector hit by a
        for t in 0..p {
            let col = subset[t];
            for w in 0..w_dim {
                if a[(w, col)].is_zero() {
                    continue;
                }
                let Some((sorted, sign)) = replace_entry(subset, t, w) else {
                    continue;
                };
                let kj = basis.subset_rank(&sorted).expect("valid subset");
                let mut coef = a[(w, col)].clone();
                if sign < 0 {
                    coef = -coef;
                }
                for mu in 0..m_dim {
                    out[(basis.flat(ki, mu), basis.flat(kj, mu))] -= &coef;
                }
            }
        }
    }
    out
}

/// Forms module C^p(W; M) for a common acting algebra: `w_rep` acts on W,
/// `coeff` on M. Basis: lex-sorted p-subsets of the W-basis (outer index)
/// tensor the M-basis (inner index).
pub fn forms_module(w_rep: &Representation, p: usize, coeff: &Representation) -> Representation {
    assert_eq!(w_rep.algebra_dim, coeff.algebra_dim);
    let w = w_rep.dim_m;
    let size = DegreeBasis::new(w, p, coeff.dim_m).len();
    let action = (0..w_rep.algebra_dim)
        .map(|i| cochain_action_matrix(w, p, &w_rep.action[i], &coeff.action[i]))
        .collect();
    Representation::new(w_rep.algebra_dim, size, action)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{heisenberg, sl2};

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    fn borel(g: &LieAlgebra) -> Subspace {
        Subspace::from_rows(
            g.dim(),
            vec![
                vec![s("1"), s("0"), s("0")],
                vec![s("0"), s("1"), s("0")],
            ],
        )
    }

    #[test]
    fn adjoint_is_homomorphism() {
        for g in [sl2(), heisenberg()] {
            let ad = Representation::adjoint(&g);
            assert_eq!(ad.homomorphism_witness(&g), None);
        }
    }

    #[test]
    fn broken_action_has_witness() {
        let g = sl2();
        let mut ad = Representation::adjoint(&g);
        ad.action[1] = ad.action[1].scale(&s("2"));
        assert!(ad.homomorphism_witness(&g).is_some());
    }

    #[test]
    fn quotient_action_signs() {
        // sl2 mod borel: class of f; h . (f mod v) = [h,f] mod v = -2 (f mod v)
        let g = sl2();
        let v = borel(&g);
        let q = quotient_module(&g, &v).unwrap();
        assert_eq!(q.rep.dim_m, 1);
        assert_eq!(q.complement_cols, vec![2]);
        assert_eq!(q.rep.action[0][(0, 0)], s("-2"));
        assert_eq!(q.rep.action[1][(0, 0)], s("0"));
        // dual of the quotient: h acts by +2
        let d = q.rep.dual();
        assert_eq!(d.action[0][(0, 0)], s("2"));
    }

    #[test]
    fn forms_on_quotient_matches_dual_in_dim_one() {
        let g = sl2();
        let v = borel(&g);
        let q = quotient_module(&g, &v).unwrap();
        let triv = Representation::trivial(v.dim(), 1);
        let c1 = forms_module(&q.rep, 1, &triv);
        // C^1 of a line with trivial coefficients is the dual line
        assert_eq!(c1.dim_m, 1);
        assert_eq!(c1.action[0][(0, 0)], s("2"));
        let c0 = forms_module(&q.rep, 0, &triv);
        assert_eq!(c0.dim_m, 1);
        assert!(c0.action[0].is_zero());
    }

    #[test]
    fn top_forms_give_negative_trace() {
        let g = sl2();
        let ad = Representation::adjoint(&g);
        let triv = Representation::trivial(3, 1);
        let top = forms_module(&ad, 3, &triv);
        assert_eq!(top.dim_m, 1);
        for i in 0..3 {
            let mut tr = Scalar::zero();
            for d in 0..3 {
                tr += &ad.action[i][(d, d)];
            }
            assert_eq!(top.action[i][(0, 0)], -tr);
        }
    }

    #[test]
    fn forms_module_is_still_a_homomorphism() {
        let g = sl2();
        let v = borel(&g);
        let vb = g.restrict(&v).unwrap();
        let q = quotient_module(&g, &v).unwrap();
        let triv = Representation::trivial(v.dim(), 1);
        for p in 0..2 {
            let fm = forms_module(&q.rep, p, &triv);
            assert_eq!(fm.homomorphism_witness(&vb), None);
        }
        // and with nontrivial coefficients on the big algebra
        let ad = Representation::adjoint(&g);
        let fm = forms_module(&ad, 2, &ad);
        assert_eq!(fm.homomorphism_witness(&g), None);
    }

    #[test]
    fn invariants_of_adjoint_sl2_are_zero() {
        let g = sl2();
        let ad = Representation::adjoint(&g);
        assert_eq!(ad.invariants().dim(), 0);
        let triv = Representation::trivial(3, 2);
        assert_eq!(triv.invariants().dim(), 2);
    }

    #[test]
    fn restrict_to_subalgebra_rows() {
        let g = sl2();
        let v = borel(&g);
        let ad = Representation::adjoint(&g);
        let r = ad.restrict_to(&v);
        assert_eq!(r.algebra_dim, 2);
        assert_eq!(r.action[0], ad.action[0]);
        assert_eq!(r.action[1], ad.action[1]);
    }
}
