//! The bigraded spaces attached to a subalgebra v of g:
//! N^{p,q} consists of the (p+q)-forms vanishing whenever q+1 arguments
//! lie in v, with N^{0,q} the whole degree and N^{p,q} = 0 for q < 0.
//! The inclusions N^{p+1,q-1} within N^{p,q} give the quotients
//! C^{p,q} = N^{p,q} / N^{p+1,q-1}, each column carrying a differential
//! induced from the ambient one, plus the relative (basic) subcomplex
//! and the column-cohomology comparison.

use crate::cochain::{
    ce_complex, ce_differential, insertion_matrix, lie_derivative_matrix, CochainComplex,
};
use crate::error::{Error, Result};
use crate::exterior::{binomial, wedge_coords, DegreeBasis};
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::rep::{forms_module, quotient_module, Representation};
use crate::scalar::Scalar;
use crate::subspace::{QuotientMap, Subspace};

/// One bigraded position: the space N^{p,q} inside C^{p+q}(g;M) and the
/// dimension of the quotient by N^{p+1,q-1}.
pub struct BigradedSlot {
    pub p: usize,
    pub q: usize,
    pub n_space: Subspace,
    pub quotient_dim: usize,
}

/// Basis rows of N^{p,q} as a subspace of C^{p+q}(g;M).
pub fn n_space_subspace(
    g: &LieAlgebra,
    rep: &Representation,
    v: &Subspace,
    p: usize,
    q_signed: isize,
) -> Subspace {
    let n = g.dim();
    let m = rep.dim_m;
    if q_signed < 0 {
        // degree p+q may still be meaningful, but the space is zero by
        // convention; use the right ambient dimension when it exists.
        let deg = p as isize + q_signed;
        let amb = if (0..=n as isize).contains(&deg) {
            DegreeBasis::new(n, deg as usize, m).len()
        } else {
            0
        };
        return Subspace::zero(amb);
    }
    let q = q_signed as usize;
    let deg = p + q;
    if deg > n {
        return Subspace::zero(0);
    }
    let amb_lambda = binomial(n, deg);
    let amb = amb_lambda * m;
    if p == 0 {
        return Subspace::full(amb);
    }
    // constraints: evaluations on q+1 vectors from v and p-1 basis vectors
    // vanish. Rows are wedge coordinates; the module factor is spectator,
    // so solve at the scalar level and tensor with the module.
    let k = v.dim();
    if q + 1 > k {
        // cannot pick q+1 independent arguments from v: no constraints
        return Subspace::full(amb);
    }
    let v_rows: Vec<Vec<Scalar>> = v.basis().rows_iter().map(|r| r.to_vec()).collect();
    let unit = |i: usize| {
        let mut e = vec![Scalar::zero(); n];
        e[i] = Scalar::one();
        e
    };
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for vs in crate::exterior::subsets_lex(k, q + 1) {
        for ts in crate::exterior::subsets_lex(n, p - 1) {
            let mut args: Vec<Vec<Scalar>> = vs.iter().map(|&a| v_rows[a].clone()).collect();
            args.extend(ts.iter().map(|&t| unit(t)));
            let w = wedge_coords(&args, n);
            if w.iter().all(Scalar::is_zero) {
                continue;
            }
            rows.push(w);
        }
    }
    let lambda_kernel = if rows.is_empty() {
        Subspace::full(amb_lambda)
    } else {
        let c = Matrix::from_rows(rows);
        Subspace::from_rows(amb_lambda, c.kernel_rows())
    };
    tensor_with_module(&lambda_kernel, m)
}

/// Kernel at the scalar level tensored with the full module: rows are
/// ordered (kernel row, module index), which preserves echelon form.
fn tensor_with_module(lambda: &Subspace, m: usize) -> Subspace {
    let amb = lambda.ambient() * m;
    let mut rows = Vec::with_capacity(lambda.dim() * m);
    for r in 0..lambda.dim() {
        let base = lambda.basis_row(r);
        for mu in 0..m {
            let mut row = vec![Scalar::zero(); amb];
            for (i, c) in base.iter().enumerate() {
                if !c.is_zero() {
                    row[i * m + mu] = c.clone();
                }
            }
            rows.push(row);
        }
    }
    Subspace::from_rows(amb, rows)
}

pub fn n_space(
    g: &LieAlgebra,
    rep: &Representation,
    v: &Subspace,
    p: usize,
    q: usize,
) -> Result<BigradedSlot> {
    g.require_subalgebra(v)?;
    let num = n_space_subspace(g, rep, v, p, q as isize);
    let den = n_space_subspace(g, rep, v, p + 1, q as isize - 1);
    let quotient_dim = num.quotient_dim(&den)?;
    Ok(BigradedSlot { p, q, n_space: num, quotient_dim })
}

/// The induced column complex (C^{p,*}, d') with its slot data.
pub struct InducedComplex {
    pub p: usize,
    pub complex: CochainComplex,
    pub slots: Vec<BigradedSlot>,
}

/// Builds C^{p,q} for q = 0..=dim v with the induced differential and
/// verifies that the ambient differential is compatible with both the
/// numerators and denominators.
pub fn induced_complex(
    g: &LieAlgebra,
    rep: &Representation,
    v: &Subspace,
    p: usize,
) -> Result<InducedComplex> {
    g.require_subalgebra(v)?;
    let qmax = v.dim();
    let mut slots = Vec::with_capacity(qmax + 1);
    let mut maps = Vec::with_capacity(qmax + 1);
    for q in 0..=qmax {
        let num = n_space_subspace(g, rep, v, p, q as isize);
        let den = n_space_subspace(g, rep, v, p + 1, q as isize - 1);
        let qm = QuotientMap::new(&num, &den)?;
        slots.push(BigradedSlot { p, q, quotient_dim: qm.dim(), n_space: num });
        maps.push(qm);
    }
    let dims: Vec<usize> = maps.iter().map(QuotientMap::dim).collect();
    let mut d = Vec::with_capacity(qmax + 1);
    for q in 0..=qmax {
        let rows_out = if q + 1 <= qmax { dims[q + 1] } else { 0 };
        let mut mat = Matrix::zero(rows_out, dims[q]);
        if dims[q] > 0 && p + q < g.dim() {
            let amb_d = ce_differential(g, rep, p + q);
            for (col, repv) in maps[q].reps().iter().enumerate() {
                let image = amb_d.apply(repv);
                if q + 1 <= qmax {
                    let co = maps[q + 1].project(&image).map_err(|_| {
                        Error::Inclusion(format!(
                            "differential leaves N^({},{}) at column {}",
                            p, q, col
                        ))
                    })?;
                    for (r, val) in co.into_iter().enumerate() {
                        mat[(r, col)] = val;
                    }
                } else {
                    // past the last column the quotient is zero because the
                    // denominator N^{p+1,q} already fills N^{p,q+1}
                    let den_next = n_space_subspace(g, rep, v, p + 1, q as isize);
                    if !den_next.contains(&image) {
                        return Err(Error::Inclusion(format!(
                            "differential escapes the bigrading past column q={q}"
                        )));
                    }
                }
            }
        }
        d.push(mat);
    }
    let complex = CochainComplex::new(dims, d);
    complex.check_dd()?;
    Ok(InducedComplex { p, complex, slots })
}

/// Dimensions of H^{p,q} for q = 0..=dim v.
pub fn bigraded_cohomology(
    g: &LieAlgebra,
    rep: &Representation,
    v: &Subspace,
    p: usize,
) -> Result<Vec<usize>> {
    Ok(induced_complex(g, rep, v, p)?.complex.cohomology_dims())
}

/// The relative (basic) subcomplex of C^*(g;M): forms killed by every
/// insertion i_Y and Lie derivative L_Y for Y in v.
pub struct RelativeComplex {
    pub spaces: Vec<Subspace>,
    pub complex: CochainComplex,
}

pub fn relative_complex(
    g: &LieAlgebra,
    rep: &Representation,
    v: &Subspace,
) -> Result<RelativeComplex> {
    g.require_subalgebra(v)?;
    let n = g.dim();
    let m = rep.dim_m;
    let mut spaces: Vec<Subspace> = Vec::with_capacity(n + 1);
    for deg in 0..=n {
        let amb = DegreeBasis::new(n, deg, m).len();
        let mut space = Subspace::full(amb);
        for a in 0..v.dim() {
            let y = v.basis_row(a);
            if deg >= 1 {
                space = space.kernel_within(&insertion_matrix(n, m, y, deg));
            }
            space = space.kernel_within(&lie_derivative_matrix(g, rep, y, deg));
            if space.is_zero_space() {
                break;
            }
        }
        spaces.push(space);
    }
    let dims: Vec<usize> = spaces.iter().map(Subspace::dim).collect();
    let mut d = Vec::with_capacity(n + 1);
    for deg in 0..=n {
        let rows_out = if deg + 1 <= n { dims[deg + 1] } else { 0 };
        let mut mat = Matrix::zero(rows_out, dims[deg]);
        if deg < n && dims[deg] > 0 {
            let amb_d = ce_differential(g, rep, deg);
            for col in 0..dims[deg] {
                let image = amb_d.apply(spaces[deg].basis_row(col));
                let co = spaces[deg + 1].coords(&image).ok_or_else(|| {
                    Error::Inclusion(format!(
                        "differential leaves the relative complex at degree {deg}"
                    ))
                })?;
                for (r, val) in co.into_iter().enumerate() {
                    mat[(r, col)] = val;
                }
            }
        }
        d.push(mat);
    }
    let complex = CochainComplex::new(dims, d);
    complex.check_dd()?;
    Ok(RelativeComplex { spaces, complex })
}

/// Column-cohomology comparison: dims of H^{p,q} over q on the left
/// against H^q(v; C^p(g/v; M)) on the right.
pub struct ColumnComparison {
    pub p: usize,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub pass: bool,
}

pub fn hs_isomorphism_check(
    g: &LieAlgebra,
    rep: &Representation,
    v: &Subspace,
    p: usize,
) -> Result<ColumnComparison> {
    let left = bigraded_cohomology(g, rep, v, p)?;
    let v_alg = g.restrict(v)?;
    let q = quotient_module(g, v)?;
    let coeff = rep.restrict_to(v);
    let module = forms_module(&q.rep, p, &coeff);
    module.require_homomorphism(&v_alg)?;
    let right = ce_complex(&v_alg, &module)?.cohomology_dims();
    let pass = left == right;
    Ok(ColumnComparison { p, left, right, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::sl2;

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    fn sl2_borel() -> (LieAlgebra, Subspace) {
        let g = sl2();
        let v = Subspace::from_rows(
            3,
            vec![
                vec![s("1"), s("0"), s("0")],
                vec![s("0"), s("1"), s("0")],
            ],
        );
        (g, v)
    }

    #[test]
    fn n_space_sl2_borel_examples() {
        let (g, v) = sl2_borel();
        let triv = Representation::trivial(3, 1);
        // N^{1,0} inside C^1: forms vanishing on v = span{f*}
        let slot = n_space(&g, &triv, &v, 1, 0).unwrap();
        assert_eq!(slot.n_space.dim(), 1);
        assert!(slot.n_space.contains(&[s("0"), s("0"), s("1")]));
        assert_eq!(slot.quotient_dim, 1);
        // N^{2,0} inside C^2: vanish when any argument is in v: zero here
        let slot2 = n_space(&g, &triv, &v, 2, 0).unwrap();
        assert_eq!(slot2.n_space.dim(), 0);
        // N^{0,q} is everything
        let slot0 = n_space(&g, &triv, &v, 0, 2).unwrap();
        assert!(slot0.n_space.is_full());
    }

    #[test]
    fn n_space_dimension_formula() {
        // dim N^{p,q} = sum_{j >= p} C(c, j) C(k, p+q-j) * dim M with
        // c = codim v, k = dim v
        let (g, v) = sl2_borel();
        let ad = Representation::adjoint(&g);
        let c = g.dim() - v.dim();
        let k = v.dim();
        for p in 0..=3usize {
            for q in 0..=3usize {
                if p + q > 3 {
                    continue;
                }
                let slot = n_space_subspace(&g, &ad, &v, p, q as isize);
                let expect: usize = (p..=p + q)
                    .map(|j| binomial(c, j) * binomial(k, p + q - j))
                    .sum::<usize>()
                    * ad.dim_m;
                assert_eq!(slot.dim(), expect, "p={p} q={q}");
            }
        }
    }

    #[test]
    fn induced_complex_columns_sl2_borel() {
        let (g, v) = sl2_borel();
        let triv = Representation::trivial(3, 1);
        let col0 = induced_complex(&g, &triv, &v, 0).unwrap();
        assert_eq!(col0.complex.dims, vec![1, 2, 1]);
        assert_eq!(col0.complex.cohomology_dims(), vec![1, 1, 0]);
        let col1 = induced_complex(&g, &triv, &v, 1).unwrap();
        assert_eq!(col1.complex.dims, vec![1, 2, 1]);
        assert_eq!(col1.complex.cohomology_dims(), vec![0, 1, 1]);
        // p beyond the codimension: zero column
        let col2 = induced_complex(&g, &triv, &v, 2).unwrap();
        assert_eq!(col2.complex.dims, vec![0, 0, 0]);
    }

    #[test]
    fn relative_complex_sl2_borel() {
        let (g, v) = sl2_borel();
        let triv = Representation::trivial(3, 1);
        let rel = relative_complex(&g, &triv, &v).unwrap();
        assert_eq!(rel.complex.dims, vec![1, 0, 0, 0]);
        assert_eq!(rel.complex.cohomology_dims(), vec![1, 0, 0, 0]);
    }

    #[test]
    fn relative_complex_of_pair_inside_borel() {
        // pair (v, k): v = borel of sl2, k = span{h}; coefficients C^p(g/v)
        let (g, v) = sl2_borel();
        let v_alg = g.restrict(&v).unwrap();
        let k_in_v = g
            .subspace_in_restricted(
                &v,
                &Subspace::from_rows(3, vec![vec![s("1"), s("0"), s("0")]]),
            )
            .unwrap();
        let q = quotient_module(&g, &v).unwrap();
        let triv = Representation::trivial(v.dim(), 1);
        let expectations = [(0usize, vec![1, 0, 0]), (1usize, vec![0, 1, 0])];
        for (p, expect) in expectations {
            let module = forms_module(&q.rep, p, &triv);
            let rel = relative_complex(&v_alg, &module, &k_in_v).unwrap();
            assert_eq!(rel.complex.cohomology_dims(), expect, "p={p}");
        }
    }

    #[test]
    fn hs_isomorphism_sl2_borel() {
        let (g, v) = sl2_borel();
        let triv = Representation::trivial(3, 1);
        for p in 0..=2 {
            let cmp = hs_isomorphism_check(&g, &triv, &v, p).unwrap();
            assert!(cmp.pass, "p={p}: {:?} vs {:?}", cmp.left, cmp.right);
        }
        let cmp0 = hs_isomorphism_check(&g, &triv, &v, 0).unwrap();
        assert_eq!(cmp0.left, vec![1, 1, 0]);
    }

    #[test]
    fn trivial_subalgebra_gives_plain_complex() {
        let g = sl2();
        let triv = Representation::trivial(3, 1);
        let v0 = Subspace::zero(3);
        // with v = 0 the relative conditions are empty
        let rel = relative_complex(&g, &triv, &v0).unwrap();
        assert_eq!(rel.complex.dims, vec![1, 3, 3, 1]);
        assert_eq!(rel.complex.cohomology_dims(), vec![1, 0, 0, 1]);
    }

    #[test]
    fn full_subalgebra_relative_is_invariants() {
        let g = sl2();
        let ad = Representation::adjoint(&g);
        let full = Subspace::full(3);
        let rel = relative_complex(&g, &ad, &full).unwrap();
        // degree 0: invariant vectors of the adjoint rep: none for sl2
        assert_eq!(rel.complex.dims[0], 0);
        for d in 1..=3 {
            assert_eq!(rel.complex.dims[d], 0);
        }
    }
}
