#![allow(dead_code)]

use std::collections::HashSet;

use cdcodes::{FieldSpec, Subspace};
use proptest::prelude::*;

pub const SMALL_Q: [u64; 4] = [2, 3, 4, 5];

pub fn field(q: u64) -> FieldSpec {
    FieldSpec::from_order(q).unwrap()
}

/// (q, n, rows) with `rows` a random `k × n` matrix, `k ≤ n + 1`.
pub fn matrix(max_n: usize) -> impl Strategy<Value = (u64, usize, Vec<Vec<u32>>)> {
    (prop::sample::select(SMALL_Q.to_vec()), 1..=max_n).prop_flat_map(|(q, n)| {
        let row = prop::collection::vec(0..q as u32, n);
        (Just(q), Just(n), prop::collection::vec(row, 0..=n + 1))
    })
}

/// Two or three random subspaces of one ambient space.
pub fn subspaces(
    max_n: usize,
    count: usize,
) -> impl Strategy<Value = (FieldSpec, usize, Vec<Subspace>)> {
    (prop::sample::select(SMALL_Q.to_vec()), 1..=max_n).prop_flat_map(move |(q, n)| {
        let row = prop::collection::vec(0..q as u32, n);
        let mat = prop::collection::vec(row, 0..=n);
        prop::collection::vec(mat, count).prop_map(move |mats| {
            let f = field(q);
            let subs = mats
                .iter()
                .map(|m| Subspace::from_rows(&f, n, m).unwrap())
                .collect();
            (f, n, subs)
        })
    })
}

/// Span of arbitrary rows, by brute force over all coefficient tuples.
pub fn span(f: &FieldSpec, n: usize, rows: &[Vec<u32>]) -> HashSet<Vec<u32>> {
    let mut out: HashSet<Vec<u32>> = HashSet::from([vec![0; n]]);
    for r in rows {
        let mut next = HashSet::new();
        for v in &out {
            for c in 0..f.order() {
                let w: Vec<u32> = v
                    .iter()
                    .zip(r)
                    .map(|(&a, &b)| f.add(a, f.mul(c, b)))
                    .collect();
                next.insert(w);
            }
        }
        out = next;
    }
    out
}

/// `log_q |S|` for a set of size `q^k`.
pub fn log_q(q: u64, size: usize) -> usize {
    let mut k = 0;
    let mut s = 1usize;
    while s < size {
        s *= q as usize;
        k += 1;
    }
    assert_eq!(s, size, "{size} is not a power of {q}");
    k
}

pub fn all_vectors(q: u32, n: usize) -> Vec<Vec<u32>> {
    let total = (q as usize).pow(n as u32);
    (0..total)
        .map(|mut i| {
            let mut v = vec![0; n];
            for x in v.iter_mut().rev() {
                *x = (i % q as usize) as u32;
                i /= q as usize;
            }
            v
        })
        .collect()
}

pub fn dot(f: &FieldSpec, a: &[u32], b: &[u32]) -> u32 {
    a.iter()
        .zip(b)
        .fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}
