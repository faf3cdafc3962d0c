//! Chevalley-basis construction of the rank-one and rank-two semisimple
//! algebras from their Cartan matrices, with the compact real structure
//! sigma(h) = -h, sigma(e) = -f and the positive definite pairing
//! <x, y> = -B(x, sigma(y)) built on top.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::subspace::Subspace;

type Root = Vec<i64>;

#[derive(Clone)]
pub struct CartanDatum {
    pub name: String,
    pub rank: usize,
    /// a[i][j] = <alpha_i, alpha_j^vee>
    pub cartan: Vec<Vec<i64>>,
    /// squared lengths (alpha_i, alpha_i); only the ratios matter
    pub length_sq: Vec<BigRational>,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl CartanDatum {
    pub fn new(name: &str, cartan: Vec<Vec<i64>>, length_sq: Vec<BigRational>) -> Result<Self> {
        let rank = cartan.len();
        if rank == 0 || length_sq.len() != rank || cartan.iter().any(|r| r.len() != rank) {
            return Err(Error::Roots("Cartan matrix must be square with one length per row".into()));
        }
        for i in 0..rank {
            if cartan[i][i] != 2 {
                return Err(Error::Roots("Cartan diagonal must be 2".into()));
            }
            for j in 0..rank {
                if i != j && cartan[i][j] > 0 {
                    return Err(Error::Roots("off-diagonal Cartan entries must be <= 0".into()));
                }
                // symmetrizability: (alpha_i, alpha_j) computed either way
                let lhs = &length_sq[j] * BigRational::from_integer(cartan[i][j].into());
                let rhs = &length_sq[i] * BigRational::from_integer(cartan[j][i].into());
                if lhs != rhs {
                    return Err(Error::Roots("lengths do not symmetrize the Cartan matrix".into()));
                }
            }
        }
        Ok(CartanDatum { name: name.to_string(), rank, cartan, length_sq })
    }
}

/// The built-in Cartan data: A1, A2, B2 (alpha_1 long), G2 (alpha_1 short).
pub fn preset(name: &str) -> Result<CartanDatum> {
    match name.to_ascii_uppercase().as_str() {
        "A1" => CartanDatum::new("A1", vec![vec![2]], vec![rat(2, 1)]),
        "A2" => CartanDatum::new(
            "A2",
            vec![vec![2, -1], vec![-1, 2]],
            vec![rat(2, 1), rat(2, 1)],
        ),
        "B2" => CartanDatum::new(
            "B2",
            vec![vec![2, -2], vec![-1, 2]],
            vec![rat(2, 1), rat(1, 1)],
        ),
        "G2" => CartanDatum::new(
            "G2",
            vec![vec![2, -1], vec![-3, 2]],
            vec![rat(2, 1), rat(6, 1)],
        ),
        other => Err(Error::Roots(format!("unknown preset {other:?} (try A1, A2, B2, G2)"))),
    }
}

struct RootSystem {
    rank: usize,
    cartan: Vec<Vec<i64>>,
    length_sq: Vec<BigRational>,
    positives: Vec<Root>,
    /// positives followed by their negatives
    all: Vec<Root>,
    index: HashMap<Root, usize>,
}

fn add_roots(a: &[i64], b: &[i64]) -> Root {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn neg_root(a: &[i64]) -> Root {
    a.iter().map(|x| -x).collect()
}

fn height(a: &[i64]) -> i64 {
    a.iter().sum()
}

impl RootSystem {
    fn build(datum: &CartanDatum) -> Result<Self> {
        let rank = datum.rank;
        let mut positives: Vec<Root> = Vec::new();
        let mut seen: HashMap<Root, ()> = HashMap::new();
        let mut layer: Vec<Root> = Vec::new();
        for i in 0..rank {
            let mut r = vec![0i64; rank];
            r[i] = 1;
            seen.insert(r.clone(), ());
            positives.push(r.clone());
            layer.push(r);
        }
        let mut guard = 0;
        while !layer.is_empty() {
            guard += 1;
            if guard > 64 {
                return Err(Error::Roots("root generation did not terminate".into()));
            }
            let mut next: Vec<Root> = Vec::new();
            for beta in &layer {
                for i in 0..rank {
                    let mut alpha = vec![0i64; rank];
                    alpha[i] = 1;
                    // down count of the alpha_i string through beta
                    let mut p = 0i64;
                    let mut probe = beta.clone();
                    loop {
                        probe = probe.iter().zip(&alpha).map(|(x, y)| x - y).collect();
                        if seen.contains_key(&probe) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing: i64 = (0..rank).map(|j| beta[j] * datum.cartan[j][i]).sum();
                    if p - pairing > 0 {
                        let gamma = add_roots(beta, &alpha);
                        if !seen.contains_key(&gamma) {
                            seen.insert(gamma.clone(), ());
                            positives.push(gamma.clone());
                            next.push(gamma);
                        }
                    }
                }
            }
            layer = next;
        }
        positives.sort_by(|a, b| {
            height(a).cmp(&height(b)).then_with(|| b.cmp(a))
        });
        let mut all = positives.clone();
        all.extend(positives.iter().map(|r| neg_root(r)));
        let mut index = HashMap::new();
        for (k, r) in all.iter().enumerate() {
            index.insert(r.clone(), k);
        }
        Ok(RootSystem {
            rank,
            cartan: datum.cartan.clone(),
            length_sq: datum.length_sq.clone(),
            positives,
            all,
            index,
        })
    }

    fn ip(&self, a: &[i64], b: &[i64]) -> BigRational {
        // (alpha_i, alpha_j) = length_sq[j]/2 * cartan[i][j]
        let mut acc = BigRational::zero();
        for i in 0..self.rank {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                if b[j] == 0 {
                    continue;
                }
                let base = &self.length_sq[j] * rat(self.cartan[i][j], 2);
                acc += base * BigRational::from_integer((a[i] * b[j]).into());
            }
        }
        acc
    }

    fn pairing(&self, beta: &[i64], i: usize) -> i64 {
        (0..self.rank).map(|j| beta[j] * self.cartan[j][i]).sum()
    }

    /// Largest t with beta - t*alpha still a root (over the full set).
    fn string_down(&self, alpha: usize, beta: usize) -> usize {
        let a = self.all[alpha].clone();
        let mut probe = self.all[beta].clone();
        let mut t = 0;
        loop {
            probe = probe.iter().zip(&a).map(|(x, y)| x - y).collect();
            if self.index.contains_key(&probe) {
                t += 1;
            } else {
                return t;
            }
        }
    }

    /// All N_{mu,nu} on pairs with mu + nu a root, from the extraspecial
    /// seeds +(p+1) propagated by antisymmetry, negation symmetry, the
    /// zero-sum triple relation, and Jacobi elimination.
    fn structure_constants(&self) -> Result<HashMap<(usize, usize), BigRational>> {
        let m = self.all.len();
        let mut n: HashMap<(usize, usize), BigRational> = HashMap::new();
        let mut pending_err: Option<Error> = None;
        let insert = |map: &mut HashMap<(usize, usize), BigRational>,
                          key: (usize, usize),
                          val: BigRational,
                          changed: &mut bool,
                          err: &mut Option<Error>| {
            match map.get(&key) {
                Some(old) => {
                    if *old != val {
                        *err = Some(Error::Roots(format!(
                            "inconsistent structure constant at pair {key:?}"
                        )));
                    }
                }
                None => {
                    map.insert(key, val);
                    *changed = true;
                }
            }
        };
        // extraspecial seeds: for each positive root of height >= 2 pick
        // the smallest simple index that stays in the positive system
        let mut changed = true;
        for gamma in &self.positives {
            if height(gamma) < 2 {
                continue;
            }
            let mut seeded = false;
            for i in 0..self.rank {
                let mut alpha = vec![0i64; self.rank];
                alpha[i] = 1;
                let rest: Root = gamma.iter().zip(&alpha).map(|(x, y)| x - y).collect();
                if height(&rest) > 0 && self.index.contains_key(&rest) {
                    let ai = self.index[&alpha];
                    let bi = self.index[&rest];
                    let p = self.string_down(ai, bi);
                    insert(
                        &mut n,
                        (ai, bi),
                        BigRational::from_integer(((p + 1) as i64).into()),
                        &mut changed,
                        &mut pending_err,
                    );
                    seeded = true;
                    break;
                }
            }
            if !seeded {
                return Err(Error::Roots("positive root with no simple summand".into()));
            }
        }
        let mut rounds = 0;
        while changed {
            changed = false;
            rounds += 1;
            if rounds > 64 {
                return Err(Error::Roots("structure constant propagation stalled".into()));
            }
            let known: Vec<((usize, usize), BigRational)> =
                n.iter().map(|(k, v)| (*k, v.clone())).collect();
            for ((a, b), val) in &known {
                let (a, b) = (*a, *b);
                // antisymmetry
                insert(&mut n, (b, a), -val, &mut changed, &mut pending_err);
                // negation symmetry N_{-a,-b} = -N_{a,b}
                let na = self.index[&neg_root(&self.all[a])];
                let nb = self.index[&neg_root(&self.all[b])];
                insert(&mut n, (na, nb), -val, &mut changed, &mut pending_err);
                // zero-sum triple a + b + c = 0 relates the cyclic pairs
                let gamma = neg_root(&add_roots(&self.all[a], &self.all[b]));
                let c = self.index[&gamma];
                let gg = self.ip(&gamma, &gamma);
                let scale_a = self.ip(&self.all[a], &self.all[a]) / gg.clone();
                let scale_b = self.ip(&self.all[b], &self.all[b]) / gg;
                insert(&mut n, (b, c), val * scale_a, &mut changed, &mut pending_err);
                insert(&mut n, (c, a), val * scale_b, &mut changed, &mut pending_err);
            }
            if let Some(e) = pending_err.take() {
                return Err(e);
            }
            // Jacobi elimination on triples with all pairwise sums nonzero
            for x in 0..m {
                for y in 0..m {
                    if y == x || self.all[y] == neg_root(&self.all[x]) {
                        continue;
                    }
                    for z in 0..m {
                        if z == x
                            || z == y
                            || self.all[z] == neg_root(&self.all[x])
                            || self.all[z] == neg_root(&self.all[y])
                        {
                            continue;
                        }
                        let total =
                            add_roots(&add_roots(&self.all[x], &self.all[y]), &self.all[z]);
                        if total.iter().all(|&c| c == 0) || !self.index.contains_key(&total) {
                            continue;
                        }
                        let mut constant = BigRational::zero();
                        let mut unknowns: Vec<((usize, usize), BigRational)> = Vec::new();
                        let mut usable = true;
                        for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
                            let s = add_roots(&self.all[a], &self.all[b]);
                            let Some(&si) = self.index.get(&s) else { continue };
                            let k1 = (a, b);
                            let k2 = (si, c);
                            match (n.get(&k1).cloned(), n.get(&k2).cloned()) {
                                (Some(v1), Some(v2)) => constant += v1 * v2,
                                (Some(v1), None) => unknowns.push((k2, v1)),
                                (None, Some(v2)) => unknowns.push((k1, v2)),
                                (None, None) => usable = false,
                            }
                        }
                        if usable && unknowns.len() == 1 && !unknowns[0].1.is_zero() {
                            let (key, factor) = unknowns.pop().unwrap();
                            let val = -constant / factor;
                            insert(&mut n, key, val, &mut changed, &mut pending_err);
                        }
                    }
                }
            }
            if let Some(e) = pending_err.take() {
                return Err(e);
            }
        }
        // completeness and the magnitude law |N| = p + 1
        for a in 0..m {
            for b in 0..m {
                let s = add_roots(&self.all[a], &self.all[b]);
                if !self.index.contains_key(&s) {
                    continue;
                }
                let Some(val) = n.get(&(a, b)) else {
                    return Err(Error::Roots(format!(
                        "structure constant left undetermined at pair ({a}, {b})"
                    )));
                };
                let expect = BigRational::from_integer(
                    ((self.string_down(a, b) + 1) as i64).into(),
                );
                if val.abs() != expect {
                    return Err(Error::Roots(format!(
                        "structure constant magnitude violates the string law at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(n)
    }
}

#[derive(Clone)]
pub struct SemisimpleAlgebra {
    pub algebra: LieAlgebra,
    pub name: String,
    pub rank: usize,
    pub positive_roots: Vec<Root>,
    /// coroot of each positive root expanded over the simple coroots
    pub coroots: Vec<Vec<i64>>,
}

fn rational_scalar(r: &BigRational) -> Scalar {
    Scalar::new(r.clone(), BigRational::zero())
}

fn integral(r: &BigRational) -> Result<i64> {
    if !r.is_integer() {
        return Err(Error::Roots("expected an integral coefficient".into()));
    }
    r.to_integer().to_i64().ok_or_else(|| Error::Roots("coefficient overflow".into()))
}

/// Builds the semisimple algebra of a Cartan datum in the Chevalley
/// basis h_1..h_r, e_1..e_m, f_1..f_m, positives sorted by height then
/// reverse-lexicographically, with the compact real structure attached.
pub fn chevalley(datum: &CartanDatum) -> Result<SemisimpleAlgebra> {
    let rs = RootSystem::build(datum)?;
    let n_const = rs.structure_constants()?;
    let r = rs.rank;
    let m = rs.positives.len();
    let dim = r + 2 * m;
    let mut names = Vec::with_capacity(dim);
    for i in 0..r {
        names.push(format!("h{}", i + 1));
    }
    for k in 0..m {
        names.push(format!("e{}", k + 1));
    }
    for k in 0..m {
        names.push(format!("f{}", k + 1));
    }
    let e_ix = |k: usize| r + k;
    let f_ix = |k: usize| r + m + k;
    let mut coroots = Vec::with_capacity(m);
    for gamma in &rs.positives {
        let gg = rs.ip(gamma, gamma);
        let mut co = Vec::with_capacity(r);
        for i in 0..r {
            let mut alpha = vec![0i64; r];
            alpha[i] = 1;
            let coeff = BigRational::from_integer(gamma[i].into()) * rs.ip(&alpha, &alpha)
                / gg.clone();
            co.push(integral(&coeff)?);
        }
        coroots.push(co);
    }
    let mut pairs: Vec<((usize, usize), Vec<Scalar>)> = Vec::new();
    let unit = |w: usize, c: Scalar| {
        let mut v = vec![Scalar::zero(); dim];
        v[w] = c;
        v
    };
    for i in 0..r {
        for k in 0..m {
            let c = rs.pairing(&rs.positives[k], i);
            if c != 0 {
                pairs.push(((i, e_ix(k)), unit(e_ix(k), Scalar::from_int(c))));
                pairs.push(((i, f_ix(k)), unit(f_ix(k), Scalar::from_int(-c))));
            }
        }
    }
    // root-root brackets through the table of all roots
    let root_slot = |idx: usize| -> (usize, bool) {
        if idx < m {
            (e_ix(idx), true)
        } else {
            (f_ix(idx - m), false)
        }
    };
    for a in 0..2 * m {
        for b in (a + 1)..2 * m {
            let (wa, _) = root_slot(a);
            let (wb, _) = root_slot(b);
            let sum = add_roots(&rs.all[a], &rs.all[b]);
            if sum.iter().all(|&c| c == 0) {
                // e_k against f_k: the coroot
                let k = a;
                let mut v = vec![Scalar::zero(); dim];
                for i in 0..r {
                    if coroots[k][i] != 0 {
                        v[i] = Scalar::from_int(coroots[k][i]);
                    }
                }
                pairs.push(((wa, wb), v));
            } else if let Some(&si) = rs.index.get(&sum) {
                let val = &n_const[&(a, b)];
                let (ws, _) = root_slot(si);
                pairs.push(((wa, wb), unit(ws, rational_scalar(val))));
            }
        }
    }
    // compact structure: sigma(h) = -h, sigma(e_k) = -f_k, sigma(f_k) = -e_k
    let mut sigma = Matrix::zero(dim, dim);
    for i in 0..r {
        sigma[(i, i)] = Scalar::from_int(-1);
    }
    for k in 0..m {
        sigma[(f_ix(k), e_ix(k))] = Scalar::from_int(-1);
        sigma[(e_ix(k), f_ix(k))] = Scalar::from_int(-1);
    }
    let algebra = LieAlgebra::from_upper_pairs(names, pairs, Some(sigma));
    if let Some((i, j, k)) = algebra.check_jacobi() {
        return Err(Error::Jacobi(i, j, k));
    }
    algebra.check_real_structure()?;
    Ok(SemisimpleAlgebra {
        algebra,
        name: datum.name.clone(),
        rank: r,
        positive_roots: rs.positives,
        coroots,
    })
}

impl SemisimpleAlgebra {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    fn span_of(&self, indices: impl Iterator<Item = usize>) -> Subspace {
        let dim = self.dim();
        let rows: Vec<Vec<Scalar>> = indices
            .map(|w| {
                let mut v = vec![Scalar::zero(); dim];
                v[w] = Scalar::one();
                v
            })
            .collect();
        Subspace::from_rows(dim, rows)
    }

    pub fn cartan_subspace(&self) -> Subspace {
        self.span_of(0..self.rank)
    }

    /// h's and e's: the standard Borel.
    pub fn borel(&self) -> Subspace {
        self.span_of(0..self.rank + self.num_positive())
    }

    /// Standard parabolic: Borel plus the f's of roots supported on the
    /// chosen simple indices (1-based).
    pub fn parabolic(&self, simple: &[usize]) -> Result<Subspace> {
        for &s in simple {
            if s == 0 || s > self.rank {
                return Err(Error::Invalid(format!(
                    "simple index {s} out of range 1..={}",
                    self.rank
                )));
            }
        }
        let m = self.num_positive();
        let extra = (0..m).filter(|&k| {
            self.positive_roots[k]
                .iter()
                .enumerate()
                .all(|(i, &c)| c == 0 || simple.contains(&(i + 1)))
        });
        let mut idx: Vec<usize> = (0..self.rank + m).collect();
        idx.extend(extra.map(|k| self.rank + m + k));
        Ok(self.span_of(idx.into_iter()))
    }

    pub fn full_subspace(&self) -> Subspace {
        Subspace::full(self.dim())
    }
}

/// The pairing <x, y> = x^T G conj(y) with G = -B . S, positive definite
/// for the compact structure of a semisimple algebra.
pub struct HermitianForm {
    pub gram: Matrix,
}

impl HermitianForm {
    pub fn new(g: &LieAlgebra) -> Result<Self> {
        let s = g.real_structure().ok_or(Error::MissingRealStructure)?;
        let b = g.killing_form();
        let gram = b.mul(s).scale(&Scalar::from_int(-1));
        Ok(HermitianForm { gram })
    }

    pub fn value(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        crate::spectral::hermitian_value(&self.gram, x, y)
    }

    /// Hermitian positive definiteness via leading principal minors.
    pub fn is_positive_definite(&self) -> bool {
        let n = self.gram.nrows();
        if self.gram.ncols() != n {
            return false;
        }
        // hermitian symmetry first
        for i in 0..n {
            for j in 0..n {
                if self.gram[(i, j)] != self.gram[(j, i)].conj() {
                    return false;
                }
            }
        }
        for k in 1..=n {
            let minor = Matrix::from_fn(k, k, |i, j| self.gram[(i, j)].clone());
            let d = minor.det();
            if !d.im().is_zero() || !d.re().is_positive() {
                return false;
            }
        }
        true
    }
}
