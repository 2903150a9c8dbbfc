//! Subspaces of GF(q)^n in canonical (RREF) form.
//!
//! Equality, hashing and ordering all go through the RREF matrix, so a
//! `Subspace` can be used directly as a set element. The order is: ambient
//! dimension, then dimension, then pivot columns lexicographically, then the
//! matrix entries read row-major. Within one pivot pattern only the free
//! entries vary, so this is also the order in which [`enumerate_subspaces`]
//! walks the Grassmannian.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigUint;

use crate::bounds::gaussian_binomial;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg;

pub const DEFAULT_ENUMERATION_BUDGET: u64 = 1_000_000;

#[derive(Clone)]
pub struct Subspace {
    field: FieldSpec,
    n: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Canonical form of the row space of `rows`.
    pub fn from_rows(field: &FieldSpec, n: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let q = field.order();
        for row in rows {
            if row.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= q) {
                return Err(Error::ElementNotInField {
                    value: bad as u64,
                    q: q as u64,
                });
            }
        }
        Ok(Self::from_rows_unchecked(field, n, rows.to_vec()))
    }

    pub(crate) fn from_rows_unchecked(
        field: &FieldSpec,
        n: usize,
        mut rows: Vec<Vec<u32>>,
    ) -> Self {
        let pivots = if rows.is_empty() {
            Vec::new()
        } else {
            linalg::rref(field, &mut rows)
        };
        Subspace {
            field: field.clone(),
            n,
            rows,
            pivots,
        }
    }

    pub fn zero(field: &FieldSpec, n: usize) -> Self {
        Subspace {
            field: field.clone(),
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &FieldSpec, n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| u32::from(i == j)).collect())
            .collect();
        Subspace {
            field: field.clone(),
            n,
            rows,
            pivots: (0..n).collect(),
        }
    }

    /// Span of the given standard basis vectors (0-based indices).
    pub fn coordinate(field: &FieldSpec, n: usize, axes: &[usize]) -> Self {
        let rows = axes
            .iter()
            .map(|&a| (0..n).map(|j| u32::from(j == a)).collect())
            .collect();
        Self::from_rows_unchecked(field, n, rows)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// RREF basis rows.
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch(format!(
                "ambient dimensions {} and {}",
                self.n, other.n
            )));
        }
        if self.field != other.field {
            return Err(Error::AmbientMismatch(format!(
                "fields {:?} and {:?}",
                self.field, other.field
            )));
        }
        Ok(())
    }

    /// `A + B`.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(Self::from_rows_unchecked(&self.field, self.n, rows))
    }

    pub fn sum_dim(&self, other: &Subspace) -> Result<usize> {
        self.check_compatible(other)?;
        Ok(self.sum_dim_unchecked(other))
    }

    fn sum_dim_unchecked(&self, other: &Subspace) -> usize {
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        if rows.is_empty() {
            return 0;
        }
        linalg::rank(&self.field, &rows)
    }

    /// `dim(A ∩ B)` by the modular law.
    pub fn intersect_dim(&self, other: &Subspace) -> Result<usize> {
        Ok(self.dim() + other.dim() - self.sum_dim(other)?)
    }

    /// `A ∩ B` computed directly (Zassenhaus): reduce `[A | A; B | 0]` and
    /// keep the right halves of rows whose left half vanished.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let n = self.n;
        let mut rows: Vec<Vec<u32>> = self
            .rows
            .iter()
            .map(|r| r.iter().chain(r.iter()).copied().collect())
            .chain(
                other
                    .rows
                    .iter()
                    .map(|r| r.iter().copied().chain(std::iter::repeat_n(0, n)).collect()),
            )
            .collect();
        if rows.is_empty() {
            return Ok(Subspace::zero(&self.field, n));
        }
        let pivots = linalg::rref(&self.field, &mut rows);
        let inter: Vec<Vec<u32>> = rows
            .into_iter()
            .zip(pivots)
            .filter(|(_, p)| *p >= n)
            .map(|(r, _)| r[n..].to_vec())
            .collect();
        Ok(Self::from_rows_unchecked(&self.field, n, inter))
    }

    /// `d(A,B) = dim(A+B) − dim(A∩B)`, cross-checked against
    /// `dim A + dim B − 2 dim(A∩B)` with the intersection computed directly.
    pub fn dimension_distance(&self, other: &Subspace) -> Result<usize> {
        let sum = self.sum_dim(other)?;
        let inter = self.intersection(other)?.dim();
        let d1 = sum - inter;
        let d2 = self.dim() + other.dim() - 2 * inter;
        assert_eq!(d1, d2, "modular law violated for {self:?} and {other:?}");
        Ok(d1)
    }

    /// `d(A,B)` from a single rank computation.
    pub(crate) fn distance_fast(&self, other: &Subspace) -> usize {
        let s = self.sum_dim_unchecked(other);
        2 * s - self.dim() - other.dim()
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.contains_unchecked(other))
    }

    pub(crate) fn contains_unchecked(&self, other: &Subspace) -> bool {
        other.dim() <= self.dim() && self.sum_dim_unchecked(other) == self.dim()
    }

    pub fn contains_vector(&self, v: &[u32]) -> bool {
        if v.iter().all(|&x| x == 0) {
            return true;
        }
        let mut rows = self.rows.clone();
        rows.push(v.to_vec());
        linalg::rank(&self.field, &rows) == self.dim()
    }

    /// `{v : v·a = 0 for all a in A}` under the standard dot product.
    pub fn orthogonal_complement(&self) -> Subspace {
        let kernel = linalg::kernel_of_rref(&self.field, &self.rows, &self.pivots, self.n);
        Self::from_rows_unchecked(&self.field, self.n, kernel)
    }

    /// `(self | enclosing)^⊥ = {a ∈ enclosing : a·b = 0 for all b ∈ self}`.
    pub fn relative_orthogonal_complement(&self, enclosing: &Subspace) -> Result<Subspace> {
        relative_orthogonal_complement(self, enclosing)
    }

    /// All `q^dim` vectors of the subspace, as combinations of the basis rows
    /// with coefficient tuples in base-`q` counting order.
    pub fn vectors(&self) -> impl Iterator<Item = Vec<u32>> + '_ {
        let q = self.field.order() as u64;
        let count = q.pow(self.dim() as u32);
        (0..count).map(move |mut idx| {
            let mut v = vec![0u32; self.n];
            for row in &self.rows {
                let c = (idx % q) as u32;
                idx /= q;
                if c == 0 {
                    continue;
                }
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = self.field.add(*x, self.field.mul(c, r));
                }
            }
            v
        })
    }
}

/// Position of a vector when all of GF(q)^n is read as base-`q` numbers,
/// first coordinate most significant.
pub fn vector_index(q: u32, v: &[u32]) -> u64 {
    v.iter().fold(0u64, |acc, &x| acc * q as u64 + x as u64)
}

pub fn vector_from_index(q: u32, n: usize, mut idx: u64) -> Vec<u32> {
    let mut v = vec![0u32; n];
    for slot in v.iter_mut().rev() {
        *slot = (idx % q as u64) as u32;
        idx /= q as u64;
    }
    v
}

pub fn subspace_from_rows(field: &FieldSpec, n: usize, rows: &[Vec<u32>]) -> Result<Subspace> {
    Subspace::from_rows(field, n, rows)
}

pub fn sum_dim(a: &Subspace, b: &Subspace) -> Result<usize> {
    a.sum_dim(b)
}

pub fn intersect_dim(a: &Subspace, b: &Subspace) -> Result<usize> {
    a.intersect_dim(b)
}

pub fn dimension_distance(a: &Subspace, b: &Subspace) -> Result<usize> {
    a.dimension_distance(b)
}

pub fn orthogonal_complement(a: &Subspace) -> Subspace {
    a.orthogonal_complement()
}

/// Orthogonal complement of `inner` inside `outer`. The result need not be a
/// complement in the direct-sum sense: over a finite field `inner` may meet
/// its own complement, which shows up only in the returned dimension.
pub fn relative_orthogonal_complement(inner: &Subspace, outer: &Subspace) -> Result<Subspace> {
    if outer.intersect_dim(inner)? != inner.dim() {
        return Err(Error::NotASubspaceOf);
    }
    let f = &outer.field;
    // a = Σ x_i u_i with u_i the rows of `outer`; require Σ x_i (u_i·b_j) = 0.
    let mut gram_t: Vec<Vec<u32>> = inner
        .rows
        .iter()
        .map(|b| outer.rows.iter().map(|u| linalg::dot(f, u, b)).collect())
        .collect();
    let m = outer.dim();
    let coeffs = if gram_t.is_empty() {
        (0..m)
            .map(|i| (0..m).map(|j| u32::from(i == j)).collect())
            .collect()
    } else {
        let piv = linalg::rref(f, &mut gram_t);
        linalg::kernel_of_rref(f, &gram_t, &piv, m)
    };
    let rows = coeffs
        .iter()
        .map(|x| {
            let mut v = vec![0u32; outer.n];
            for (c, u) in x.iter().zip(&outer.rows) {
                for (vi, &ui) in v.iter_mut().zip(u) {
                    *vi = f.add(*vi, f.mul(*c, ui));
                }
            }
            v
        })
        .collect();
    Ok(Subspace::from_rows_unchecked(f, outer.n, rows))
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows && self.field == other.field
    }
}

impl Eq for Subspace {}

impl Hash for Subspace {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.rows.hash(state);
    }
}

impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then(self.dim().cmp(&other.dim()))
            .then_with(|| self.pivots.cmp(&other.pivots))
            .then_with(|| self.rows.cmp(&other.rows))
            .then_with(|| {
                (self.field.p(), self.field.modulus())
                    .cmp(&(other.field.p(), other.field.modulus()))
            })
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{:?}>", self.rows)
    }
}

/// Walks all `l`-dimensional subspaces of GF(q)^n in canonical order.
pub struct SubspaceIter {
    field: FieldSpec,
    n: usize,
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    digits: Vec<u32>,
    done: bool,
}

impl SubspaceIter {
    fn new(field: &FieldSpec, n: usize, l: usize) -> Self {
        let pivots: Vec<usize> = (0..l).collect();
        let free = free_positions(&pivots, n);
        SubspaceIter {
            field: field.clone(),
            n,
            digits: vec![0; free.len()],
            pivots,
            free,
            done: false,
        }
    }

    fn current(&self) -> Subspace {
        let mut rows = vec![vec![0u32; self.n]; self.pivots.len()];
        for (row, &pc) in rows.iter_mut().zip(&self.pivots) {
            row[pc] = 1;
        }
        for (&(r, c), &d) in self.free.iter().zip(&self.digits) {
            rows[r][c] = d;
        }
        Subspace {
            field: self.field.clone(),
            n: self.n,
            rows,
            pivots: self.pivots.clone(),
        }
    }

    fn advance(&mut self) {
        let q = self.field.order();
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < q {
                return;
            }
            *d = 0;
        }
        // next pivot pattern, lexicographic over l-subsets of 0..n
        let l = self.pivots.len();
        let Some(i) = (0..l).rev().find(|&i| self.pivots[i] < self.n - l + i) else {
            self.done = true;
            return;
        };
        self.pivots[i] += 1;
        for j in i + 1..l {
            self.pivots[j] = self.pivots[j - 1] + 1;
        }
        self.free = free_positions(&self.pivots, self.n);
        self.digits = vec![0; self.free.len()];
    }
}

fn free_positions(pivots: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (r, &pc) in pivots.iter().enumerate() {
        for c in pc + 1..n {
            if !pivots.contains(&c) {
                out.push((r, c));
            }
        }
    }
    out
}

impl Iterator for SubspaceIter {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if self.done {
            return None;
        }
        let s = self.current();
        self.advance();
        Some(s)
    }
}

pub(crate) fn check_budget(what: impl Into<String>, size: &BigUint, budget: u64) -> Result<()> {
    if *size > BigUint::from(budget) {
        return Err(Error::BudgetExceeded {
            what: what.into(),
            size: size.to_string(),
            budget,
        });
    }
    Ok(())
}

pub fn enumerate_subspaces(field: &FieldSpec, n: usize, l: usize) -> Result<SubspaceIter> {
    enumerate_subspaces_with_budget(field, n, l, DEFAULT_ENUMERATION_BUDGET)
}

pub fn enumerate_subspaces_with_budget(
    field: &FieldSpec,
    n: usize,
    l: usize,
    budget: u64,
) -> Result<SubspaceIter> {
    if l > n {
        return Err(Error::InvalidParams(format!(
            "dimension {l} exceeds ambient {n}"
        )));
    }
    let count = gaussian_binomial(n as u32, l as u32, field.order() as u64)?;
    check_budget(
        format!("Grassmannian [{n} {l}]_{}", field.order()),
        &count,
        budget,
    )?;
    Ok(SubspaceIter::new(field, n, l))
}
