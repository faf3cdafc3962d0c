//! Combinatorics of lexicographically ordered index subsets and wedge
//! coordinates of decomposable multivectors.

use std::collections::{BTreeMap, HashMap};

use crate::scalar::Scalar;

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = acc * (n - t) as u128 / (t + 1) as u128;
    }
    acc as usize
}

/// All k-subsets of {0..n-1} as sorted vectors, in lexicographic order.
pub fn subsets_lex(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(n, k));
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        if k == 0 {
            break;
        }
        // advance to the next subset in lex order
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
    out
}

/// Basis bookkeeping for degree-`deg` alternating forms on an
/// `n`-dimensional space with `module_dim` coefficient components.
/// Basis order: outer index = lex rank of the subset, inner = module index.
pub struct DegreeBasis {
    pub n: usize,
    pub deg: usize,
    pub module_dim: usize,
    pub subsets: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl DegreeBasis {
    pub fn new(n: usize, deg: usize, module_dim: usize) -> Self {
        let subsets = subsets_lex(n, deg);
        let index = subsets.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        DegreeBasis { n, deg, module_dim, subsets, index }
    }

    pub fn len(&self) -> usize {
        self.subsets.len() * self.module_dim
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn subset_rank(&self, subset: &[usize]) -> Option<usize> {
        self.index.get(subset).copied()
    }

    pub fn flat(&self, subset_rank: usize, module_idx: usize) -> usize {
        subset_rank * self.module_dim + module_idx
    }
}

/// Sorts `subset` with `elem` prepended; `None` when `elem` repeats.
/// The sign is the alternation sign of the sorting permutation.
pub fn insert_front(elem: usize, sorted_rest: &[usize]) -> Option<(Vec<usize>, i32)> {
    if sorted_rest.contains(&elem) {
        return None;
    }
    let pos = sorted_rest.iter().take_while(|&&x| x < elem).count();
    let mut out = Vec::with_capacity(sorted_rest.len() + 1);
    out.extend_from_slice(&sorted_rest[..pos]);
    out.push(elem);
    out.extend_from_slice(&sorted_rest[pos..]);
    let sign = if pos % 2 == 0 { 1 } else { -1 };
    Some((out, sign))
}

/// Replaces the slot-`t` entry of a sorted subset by `elem` and resorts;
/// `None` when `elem` collides with a remaining entry.
pub fn replace_entry(subset: &[usize], t: usize, elem: usize) -> Option<(Vec<usize>, i32)> {
    let rest: Vec<usize> = subset
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != t)
        .map(|(_, &x)| x)
        .collect();
    if rest.contains(&elem) {
        return None;
    }
    let pos = rest.iter().take_while(|&&x| x < elem).count();
    let mut out = rest.clone();
    out.insert(pos, elem);
    // moving the entry from slot t to slot pos costs |t - pos| transpositions
    let moves = t.abs_diff(pos);
    let sign = if moves % 2 == 0 { 1 } else { -1 };
    Some((out, sign))
}

/// Lex-ordered coordinates of v_1 ^ ... ^ v_d over d-subsets of {0..n-1}.
pub fn wedge_coords(vectors: &[Vec<Scalar>], n: usize) -> Vec<Scalar> {
    let d = vectors.len();
    let mut cur: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
    cur.insert(vec![], Scalar::one());
    for v in vectors {
        assert_eq!(v.len(), n);
        let mut next: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
        for (subset, coef) in &cur {
            if coef.is_zero() {
                continue;
            }
            for (k, vk) in v.iter().enumerate() {
                if vk.is_zero() {
                    continue;
                }
                // appending k and resorting flips once per larger element
                let Some((sorted, _)) = insert_front(k, subset) else {
                    continue;
                };
                let bigger = subset.iter().filter(|&&x| x > k).count();
                let sign = if bigger % 2 == 0 { 1 } else { -1 };
                let mut term = coef * vk;
                if sign < 0 {
                    term = -term;
                }
                *next.entry(sorted).or_insert_with(Scalar::zero) += &term;
            }
        }
        cur = next;
    }
    let order = subsets_lex(n, d);
    order
        .iter()
        .map(|s| cur.get(s).cloned().unwrap_or_else(Scalar::zero))
        .collect()
}
