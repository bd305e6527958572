//! Facet description of a rational polyhedral cone given by integer generators.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use num_traits::{Signed, Zero};

use crate::arith::{dot_int, primitive, Int};
use crate::error::{Error, Result};
use crate::lattice::{integer_kernel, IntMatrix};

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Primitive inner facet normals of `cone(vecs) ⊆ ℚʳ`, assuming the vectors span `ℚʳ`.
///
/// Each normal `h` satisfies `h·v ≥ 0` for every generator and vanishes on a set of
/// generators of rank `r - 1`. The result is sorted and free of duplicates; it is empty
/// exactly when the cone is the whole space.
pub fn facet_normals(r: usize, vecs: &[Vec<Int>], budget: u64) -> Result<Vec<Vec<Int>>> {
    if r == 0 {
        return Ok(Vec::new());
    }
    let distinct: Vec<Vec<Int>> = vecs
        .iter()
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let work = binomial(distinct.len(), r - 1);
    if work > budget as u128 {
        return Err(Error::LimitExceeded { what: "facet enumeration", limit: budget });
    }
    let mut found = BTreeSet::new();
    for subset in combinations(distinct.len(), r - 1) {
        let rows: Vec<Vec<Int>> = subset.iter().map(|&i| distinct[i].clone()).collect();
        let m = if rows.is_empty() {
            IntMatrix::zeros(0, r)
        } else {
            IntMatrix::from_rows(&rows)?
        };
        let ker = integer_kernel(&m);
        if ker.len() != 1 {
            continue;
        }
        let mut h = primitive(&ker[0]);
        let vals: Vec<Int> = distinct.iter().map(|v| dot_int(&h, v)).collect();
        if vals.iter().all(|x| !x.is_negative()) {
        } else if vals.iter().all(|x| !x.is_positive()) {
            h = h.iter().map(|x| -x).collect();
        } else {
            continue;
        }
        found.insert(h);
    }
    Ok(found.into_iter().collect())
}
