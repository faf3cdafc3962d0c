//! Seeded random generators for the property suites: conjugated copies
//! of known algebras, random modules, random matrices and subspaces,
//! and deliberately broken tables that validation must catch.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cochain::ce_complex;
use crate::lie::{heisenberg, sl2, solvable2, LieAlgebra};
use crate::matrix::Matrix;
use crate::rep::Representation;
use crate::scalar::Scalar;
use crate::subspace::Subspace;

#[derive(Clone, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

impl SuiteResult {
    fn new(name: &str, cases: usize) -> Self {
        SuiteResult { name: name.into(), cases, failures: 0, first_failure: None }
    }

    fn record(&mut self, detail: String) {
        self.failures += 1;
        self.first_failure.get_or_insert(detail);
    }

    pub fn pass(&self) -> bool {
        self.failures == 0
    }
}

fn small_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    match rng.random_range(0..10u8) {
        0 => Scalar::i(),
        1 => -Scalar::i(),
        2 => Scalar::from_ratio(1, 2),
        3 => Scalar::from_ratio(-3, 2),
        _ => Scalar::from_int(rng.random_range(-3i64..=3)),
    }
}

fn nonzero_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let s = small_scalar(rng);
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| small_scalar(rng))
}

/// Invertible by construction: identity hit with random elementary ops.
pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let mut m = Matrix::identity(n);
    if n < 2 {
        return m;
    }
    for _ in 0..2 * n {
        let i = rng.random_range(0..n);
        let mut j = rng.random_range(0..n);
        while j == i {
            j = rng.random_range(0..n);
        }
        match rng.random_range(0..3u8) {
            0 => {
                // swap rows i and j
                for c in 0..n {
                    let a = m[(i, c)].clone();
                    m[(i, c)] = m[(j, c)].clone();
                    m[(j, c)] = a;
                }
            }
            1 => {
                let s = nonzero_scalar(rng);
                for c in 0..n {
                    m[(i, c)] = &m[(i, c)] * &s;
                }
            }
            _ => {
                let s = small_scalar(rng);
                for c in 0..n {
                    let t = &m[(j, c)] * &s;
                    m[(i, c)] += &t;
                }
            }
        }
    }
    m
}

fn direct_sum(a: &LieAlgebra, b: &LieAlgebra) -> LieAlgebra {
    let n = a.dim() + b.dim();
    let names = (0..n).map(|i| format!("x{}", i + 1)).collect();
    let mut table = vec![vec![Scalar::zero(); n]; n * n];
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let mut v = vec![Scalar::zero(); n];
            v[..a.dim()].clone_from_slice(a.bracket_basis(i, j));
            table[i * n + j] = v;
        }
    }
    for i in 0..b.dim() {
        for j in 0..b.dim() {
            let mut v = vec![Scalar::zero(); n];
            v[a.dim()..].clone_from_slice(b.bracket_basis(i, j));
            table[(a.dim() + i) * n + (a.dim() + j)] = v;
        }
    }
    LieAlgebra::from_table(names, table, None)
}

/// Transport of structure along a random basis change; stays a Lie
/// algebra exactly, broken inputs stay broken.
pub fn conjugated(rng: &mut ChaCha8Rng, base: &LieAlgebra) -> LieAlgebra {
    let n = base.dim();
    let s = random_invertible(rng, n);
    let sinv = s.inverse().expect("elementary products are invertible");
    let names = (0..n).map(|i| format!("x{}", i + 1)).collect();
    let mut table = vec![vec![Scalar::zero(); n]; n * n];
    for i in 0..n {
        for j in 0..n {
            let raw = base.bracket(&s.col_vec(i), &s.col_vec(j));
            table[i * n + j] = sinv.apply(&raw);
        }
    }
    LieAlgebra::from_table(names, table, None)
}

pub fn random_seed_algebra(rng: &mut ChaCha8Rng) -> LieAlgebra {
    let base = match rng.random_range(0..6u8) {
        0 => sl2(),
        1 => heisenberg(),
        2 => solvable2(),
        3 => LieAlgebra::abelian(rng.random_range(1..=5)),
        4 => direct_sum(&sl2(), &LieAlgebra::abelian(2)),
        _ => direct_sum(&heisenberg(), &solvable2()),
    };
    conjugated(rng, &base)
}

pub fn random_module(rng: &mut ChaCha8Rng, g: &LieAlgebra) -> Representation {
    match rng.random_range(0..4u8) {
        0 => Representation::trivial(g.dim(), rng.random_range(1..=2)),
        1 => Representation::adjoint(g),
        2 => Representation::adjoint(g).dual(),
        _ => {
            // adjoint twisted by a module-space basis change
            let ad = Representation::adjoint(g);
            let t = random_invertible(rng, g.dim());
            let tinv = t.inverse().expect("invertible");
            let action = ad.action.iter().map(|m| t.mul(m).mul(&tinv)).collect();
            Representation::new(g.dim(), g.dim(), action)
        }
    }
}

fn random_subspace(rng: &mut ChaCha8Rng, ambient: usize) -> Subspace {
    let rows = rng.random_range(0..=ambient);
    let m = random_matrix(rng, rows, ambient);
    Subspace::from_matrix(&m)
}

pub fn suite_dd_zero(seed: u64, cases: usize) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut result = SuiteResult::new("dd_zero", cases);
    for case in 0..cases {
        let g = random_seed_algebra(&mut rng);
        let rep = random_module(&mut rng, &g);
        match ce_complex(&g, &rep) {
            Ok(complex) => {
                for q in 0..complex.top() {
                    let prod = complex.d[q + 1].mul(&complex.d[q]);
                    if !prod.is_zero() {
                        result.record(format!("case {case}: d.d != 0 between {q} and {}", q + 1));
                        break;
                    }
                }
            }
            Err(e) => result.record(format!("case {case}: {e}")),
        }
    }
    result
}

pub fn suite_rank_nullity(seed: u64, cases: usize) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut result = SuiteResult::new("rank_nullity", cases);
    for case in 0..cases {
        let rows = rng.random_range(0..=6);
        let cols = rng.random_range(1..=6);
        let m = random_matrix(&mut rng, rows, cols);
        let rank = m.rank();
        let nullity = m.kernel_rows().len();
        if rank + nullity != cols {
            result.record(format!("case {case}: rank {rank} + nullity {nullity} != {cols}"));
            continue;
        }
        if m.transpose().rank() != rank {
            result.record(format!("case {case}: row and column ranks differ"));
        }
    }
    result
}

pub fn suite_modular_law(seed: u64, cases: usize) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut result = SuiteResult::new("modular_law", cases);
    for case in 0..cases {
        let n = rng.random_range(1..=6);
        let c = random_subspace(&mut rng, n);
        // a inside c: random combinations of c's basis
        let take = if c.dim() == 0 { 0 } else { rng.random_range(0..=c.dim()) };
        let combo = random_matrix(&mut rng, take, c.dim());
        let a = Subspace::from_matrix(&combo.mul(c.basis()));
        let b = random_subspace(&mut rng, n);
        let lhs = a.sum(&b).intersect(&c);
        let rhs = a.sum(&b.intersect(&c));
        if lhs != rhs {
            result.record(format!("case {case}: modular law broken in dim {n}"));
        }
    }
    result
}

pub fn suite_flip_detection(seed: u64, cases: usize) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut result = SuiteResult::new("flip_detection", cases);
    let s = |t: &str| t.parse::<Scalar>().unwrap();
    for case in 0..cases {
        let mode = rng.random_range(0..3u8);
        let caught = match mode {
            0 | 1 => {
                // single sign flip on [h,e] or [h,f] breaks Jacobi
                let he = if mode == 0 { s("-2") } else { s("2") };
                let hf = if mode == 0 { s("-2") } else { s("2") };
                let broken = LieAlgebra::from_upper_pairs(
                    vec!["h".into(), "e".into(), "f".into()],
                    vec![
                        ((0, 1), vec![s("0"), he, s("0")]),
                        ((0, 2), vec![s("0"), s("0"), hf]),
                        ((1, 2), vec![s("1"), s("0"), s("0")]),
                    ],
                    None,
                );
                conjugated(&mut rng, &broken).check_jacobi().is_some()
            }
            _ => {
                // mirror entry with the same sign breaks antisymmetry
                let good = sl2();
                let n = good.dim();
                let mut table: Vec<Vec<Scalar>> = (0..n * n)
                    .map(|k| good.bracket_basis(k / n, k % n).to_vec())
                    .collect();
                table[2 * n + 1] = table[n + 2].clone();
                let broken = LieAlgebra::from_table(
                    (0..n).map(|i| format!("x{i}")).collect(),
                    table,
                    None,
                );
                conjugated(&mut rng, &broken).check_antisymmetry().is_some()
            }
        };
        if !caught {
            result.record(format!("case {case}: flip mode {mode} slipped through"));
        }
    }
    result
}

pub fn run_all(seed: u64, cases: usize) -> Vec<SuiteResult> {
    vec![
        suite_dd_zero(seed, cases),
        suite_rank_nullity(seed.wrapping_add(1), cases),
        suite_modular_law(seed.wrapping_add(2), cases),
        suite_flip_detection(seed.wrapping_add(3), cases),
    ]
}
