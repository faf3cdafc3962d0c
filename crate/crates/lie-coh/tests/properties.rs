//! Randomized invariants driven by proptest: the scalar field axioms,
//! canonicality of the echelon subspace form, and the basic dimension
//! laws of exact linear algebra.

use proptest::prelude::*;

use lie_coh::exterior::{binomial, subsets_lex, wedge_coords, DegreeBasis};
use lie_coh::matrix::Matrix;
use lie_coh::scalar::Scalar;
use lie_coh::subspace::Subspace;

fn scalar() -> impl Strategy<Value = Scalar> {
    ((-6i64..=6), (1i64..=4), (-6i64..=6), (1i64..=4))
        .prop_map(|(a, b, c, d)| Scalar::from_ratio(a, b) + Scalar::i() * Scalar::from_ratio(c, d))
}

fn row(n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(scalar(), n)
}

fn rows(n: usize, max_rows: usize) -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    prop::collection::vec(row(n), 0..=max_rows)
}

proptest! {
    #[test]
    fn scalar_ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!((&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Scalar::zero());
    }

    #[test]
    fn scalar_inverse_and_conjugation(a in scalar(), b in scalar()) {
        if let Some(inv) = a.inv() {
            prop_assert!((&a * &inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!(a.conj().conj(), a.clone());
        // |a|^2 = a * conj(a) as a real scalar
        let norm = Scalar::new(a.norm_sq(), num_rational::BigRational::from_integer(0.into()));
        prop_assert_eq!(&a * &a.conj(), norm);
    }

    #[test]
    fn scalar_display_round_trips(a in scalar()) {
        let text = a.to_string();
        let back: Scalar = text.parse().expect("display output parses");
        prop_assert_eq!(a, back);
    }

    #[test]
    fn subspace_form_is_canonical(base in rows(4, 3), scale_num in 1i64..=5) {
        let a = Subspace::from_rows(4, base.clone());
        // reversing the rows and rescaling them changes nothing
        let s = Scalar::from_int(scale_num);
        let mangled: Vec<Vec<Scalar>> = base
            .iter()
            .rev()
            .map(|r| r.iter().map(|x| x * &s).collect())
            .collect();
        prop_assert_eq!(&a, &Subspace::from_rows(4, mangled));
        // appending a sum of two spanning rows changes nothing
        if base.len() >= 2 {
            let mut extended = base.clone();
            let extra: Vec<Scalar> = base[0]
                .iter()
                .zip(&base[1])
                .map(|(x, y)| x + y)
                .collect();
            extended.push(extra);
            prop_assert_eq!(&a, &Subspace::from_rows(4, extended));
        }
    }

    #[test]
    fn grassmann_dimension_law(left in rows(4, 3), right in rows(4, 3)) {
        let a = Subspace::from_rows(4, left);
        let b = Subspace::from_rows(4, right);
        let sum = a.sum(&b);
        let meet = a.intersect(&b);
        prop_assert_eq!(sum.dim() + meet.dim(), a.dim() + b.dim());
        prop_assert!(a.is_subspace_of(&sum));
        prop_assert!(meet.is_subspace_of(&a));
        prop_assert!(meet.is_subspace_of(&b));
    }

    #[test]
    fn transpose_preserves_rank(entries in rows(4, 4)) {
        let m = if entries.is_empty() {
            Matrix::zero(0, 4)
        } else {
            Matrix::from_rows(entries)
        };
        prop_assert_eq!(m.rank(), m.transpose().rank());
        let kernel = m.kernel_rows();
        for r in &kernel {
            let image = m.apply(r);
            prop_assert!(image.iter().all(Scalar::is_zero));
        }
        prop_assert_eq!(m.rank() + kernel.len(), m.ncols());
    }

    #[test]
    fn wedge_vanishes_on_repeats(v in row(4), w in row(4)) {
        // v ^ v = 0 and v ^ w = -(w ^ v)
        let vv = wedge_coords(&[v.clone(), v.clone()], 4);
        prop_assert!(vv.iter().all(Scalar::is_zero));
        let vw = wedge_coords(&[v.clone(), w.clone()], 4);
        let wv = wedge_coords(&[w, v], 4);
        let neg: Vec<Scalar> = wv.iter().map(|x| Scalar::zero() - x).collect();
        prop_assert_eq!(vw, neg);
    }
}

#[test]
fn subset_ranks_are_a_bijection() {
    for n in 0..=6 {
        for deg in 0..=n {
            let basis = DegreeBasis::new(n, deg, 2);
            let subsets = subsets_lex(n, deg);
            assert_eq!(subsets.len(), binomial(n, deg));
            for (expect, subset) in subsets.iter().enumerate() {
                assert_eq!(basis.subset_rank(subset), Some(expect));
                assert_eq!(basis.flat(expect, 1), 2 * expect + 1);
            }
        }
    }
}
