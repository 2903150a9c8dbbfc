//! Exact arithmetic in GF(p^e).
//!
//! Elements are stored as their integer encoding `Σ c_i·p^i`, where `c_i` are
//! the coefficients in the polynomial basis `{1, x, …, x^(e-1)}` of
//! `GF(p)[x] / (modulus)`. The encoding doubles as the serialized form, so an
//! element of GF(q) is always an integer in `[0, q)`.
//!
//! [`FieldSpec`] is cheap to clone (reference counted) and immutable. Small
//! fields (q ≤ 256) carry full addition and multiplication tables.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;

/// Largest order for which full operation tables are precomputed.
const TABLE_LIMIT: u64 = 256;

/// Default trial-division budget for factoring `q - 1`.
pub const DEFAULT_FACTOR_BUDGET: u64 = 1 << 40;

#[derive(Clone)]
pub struct FieldSpec(Arc<Inner>);

struct Inner {
    p: u32,
    e: u32,
    q: u32,
    /// Monic, low-to-high, length `e + 1`.
    modulus: Vec<u32>,
    tables: Option<Tables>,
}

struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

/// Plain-data description of a field, as it appears in the JSON code format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u32,
    pub e: u32,
    pub modulus: Vec<u32>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors by trial division, or `None` when `n` exceeds `budget`.
pub fn prime_factors(mut n: u64, budget: u64) -> Option<Vec<u64>> {
    if n > budget {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    Some(out)
}

/// Splits a prime power `q` into `(p, e)`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = prime_factors(q, u64::MAX)?;
    if p.len() != 1 {
        return None;
    }
    let p = p[0];
    let mut e = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        e += 1;
    }
    Some((p, e))
}

// Polynomials over GF(p): low-to-high coefficient vectors, no trailing zeros.

fn poly_trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn inv_mod_p(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let mut b = a as u64 % p as u64;
    let mut k = p - 2;
    while k > 0 {
        if k & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        k >>= 1;
    }
    r as u32
}

/// Remainder of `a` modulo `b` over GF(p); `b` must be nonzero.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let mut b = b.to_vec();
    poly_trim(&mut b);
    let db = b.len() - 1;
    let lead_inv = inv_mod_p(b[db], p) as u64;
    let p64 = p as u64;
    while r.len() > db {
        let dr = r.len() - 1;
        let factor = r[dr] as u64 * lead_inv % p64;
        let shift = dr - db;
        for (i, &bc) in b.iter().enumerate() {
            let sub = factor * bc as u64 % p64;
            r[shift + i] = ((r[shift + i] as u64 + p64 - sub) % p64) as u32;
        }
        poly_trim(&mut r);
    }
    r
}

/// Monic polynomial of degree `d` whose lower coefficients are the base-`p` digits of `idx`.
fn monic_from_index(mut idx: u64, d: u32, p: u32) -> Vec<u32> {
    let mut poly = Vec::with_capacity(d as usize + 1);
    for _ in 0..d {
        poly.push((idx % p as u64) as u32);
        idx /= p as u64;
    }
    poly.push(1);
    poly
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let mut f = poly.to_vec();
    poly_trim(&mut f);
    if f.is_empty() {
        return false;
    }
    let deg = (f.len() - 1) as u32;
    if deg == 0 {
        return false;
    }
    if deg == 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d);
        for idx in 0..count {
            let g = monic_from_index(idx, d, p);
            if poly_rem(&f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    fn build(p: u32, e: u32, modulus: Vec<u32>) -> Self {
        let q = p.pow(e);
        let mut inner = Inner {
            p,
            e,
            q,
            modulus,
            tables: None,
        };
        if (q as u64) <= TABLE_LIMIT {
            let qs = q as usize;
            let mut add = vec![0; qs * qs];
            let mut mul = vec![0; qs * qs];
            let mut neg = vec![0; qs];
            let mut inv = vec![0; qs];
            for a in 0..q {
                neg[a as usize] = inner.neg_slow(a);
                for b in 0..q {
                    add[a as usize * qs + b as usize] = inner.add_slow(a, b);
                    mul[a as usize * qs + b as usize] = inner.mul_slow(a, b);
                }
            }
            for a in 1..q {
                for b in 1..q {
                    if mul[a as usize * qs + b as usize] == 1 {
                        inv[a as usize] = b;
                        break;
                    }
                }
            }
            inner.tables = Some(Tables { add, mul, neg, inv });
        }
        FieldSpec(Arc::new(inner))
    }

    /// Canonical field of order `q` (a prime power).
    pub fn from_order(q: u64) -> Result<Self> {
        let (p, e) = prime_power(q)
            .ok_or_else(|| Error::InvalidParams(format!("{q} is not a prime power")))?;
        make_field(p, e, None)
    }

    pub fn from_descriptor(d: &FieldDescriptor) -> Result<Self> {
        make_field(d.p as u64, d.e, Some(&d.modulus))
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.p(),
            e: self.e(),
            modulus: self.modulus().to_vec(),
        }
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn e(&self) -> u32 {
        self.0.e
    }

    /// Field order `q = p^e`.
    pub fn order(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.e == 1
    }

    pub fn element(&self, value: u32) -> Result<FieldElement> {
        if value >= self.order() {
            return Err(Error::ElementNotInField {
                value: value as u64,
                q: self.order() as u64,
            });
        }
        Ok(FieldElement {
            field: self.clone(),
            value,
        })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            value: 0,
        }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            value: 1,
        }
    }

    /// The polynomial `x` (for a prime field this reduces to a constant).
    pub fn generator_x(&self) -> FieldElement {
        let v = if self.e() == 1 {
            self.0.reduce(&[0, 1])
        } else {
            self.p()
        };
        FieldElement {
            field: self.clone(),
            value: v,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(move |v| FieldElement {
            field: self.clone(),
            value: v,
        })
    }

    pub fn coeffs(&self, value: u32) -> Vec<u32> {
        self.0.decode(value)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.e() as usize || coeffs.iter().any(|&c| c >= self.p()) {
            return Err(Error::Format(format!(
                "{coeffs:?} is not a coefficient vector of GF({})",
                self.order()
            )));
        }
        Ok(FieldElement {
            field: self.clone(),
            value: self.0.encode(coeffs),
        })
    }

    // Raw arithmetic on encoded values.

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        match &self.0.tables {
            Some(t) => t.add[a as usize * self.0.q as usize + b as usize],
            None => self.0.add_slow(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        match &self.0.tables {
            Some(t) => t.neg[a as usize],
            None => self.0.neg_slow(a),
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.0.tables {
            Some(t) => t.mul[a as usize * self.0.q as usize + b as usize],
            None => self.0.mul_slow(a, b),
        }
    }

    pub fn pow(&self, a: u32, mut k: u64) -> u32 {
        let mut r = 1;
        let mut b = a;
        while k > 0 {
            if k & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            k >>= 1;
        }
        r
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero");
        match &self.0.tables {
            Some(t) => t.inv[a as usize],
            None => self.pow(a, self.0.q as u64 - 2),
        }
    }

    /// Multiplicative order of a nonzero element, by direct stepping.
    pub fn multiplicative_order(&self, a: u32) -> u64 {
        assert!(a != 0, "order of zero");
        let mut x = a;
        let mut k = 1u64;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }
}

impl Inner {
    fn decode(&self, mut v: u32) -> Vec<u32> {
        let mut c = vec![0; self.e as usize];
        for slot in c.iter_mut() {
            *slot = v % self.p;
            v /= self.p;
        }
        c
    }

    fn encode(&self, coeffs: &[u32]) -> u32 {
        coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn reduce(&self, poly: &[u32]) -> u32 {
        let r = poly_rem(poly, &self.modulus, self.p);
        self.encode(&r)
    }

    fn add_slow(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let (ca, cb) = (self.decode(a), self.decode(b));
        let s: Vec<u32> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % self.p).collect();
        self.encode(&s)
    }

    fn neg_slow(&self, a: u32) -> u32 {
        let c: Vec<u32> = self
            .decode(a)
            .iter()
            .map(|&x| (self.p - x) % self.p)
            .collect();
        self.encode(&c)
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        if self.e == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        let (ca, cb) = (self.decode(a), self.decode(b));
        let p = self.p as u64;
        let mut prod = vec![0u32; 2 * self.e as usize - 1];
        for (i, &x) in ca.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p) as u32;
            }
        }
        self.reduce(&prod)
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}; {:?})", self.0.p, self.0.e, self.0.modulus)
    }
}

/// Builds GF(p^e). Without a modulus, the smallest monic irreducible of
/// degree `e` (ordered by integer encoding, i.e. reading coefficients from
/// the top degree down) is used.
pub fn make_field(p: u64, e: u32, modulus: Option<&[u32]>) -> Result<FieldSpec> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if e == 0 {
        return Err(Error::DegreeMismatch {
            expected: 0,
            got: modulus.map(|m| m.to_vec()).unwrap_or_default(),
        });
    }
    let q = (p as u128).checked_pow(e).unwrap_or(u128::MAX);
    if q > u32::MAX as u128 {
        return Err(Error::FieldTooLarge(format!("{p}^{e}")));
    }
    let p = p as u32;
    let modulus = match modulus {
        Some(m) => {
            let monic = m.len() == e as usize + 1 && m[e as usize] == 1;
            if !monic || m.iter().any(|&c| c >= p) {
                return Err(Error::DegreeMismatch {
                    expected: e,
                    got: m.to_vec(),
                });
            }
            if !is_irreducible(m, p) {
                return Err(Error::ReduciblePolynomial(m.to_vec()));
            }
            m.to_vec()
        }
        None => (0..(p as u64).pow(e))
            .map(|idx| monic_from_index(idx, e, p))
            .find(|m| is_irreducible(m, p))
            .expect("an irreducible polynomial of every degree exists"),
    };
    Ok(FieldSpec::build(p, e, modulus))
}

#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: FieldSpec,
    value: u32,
}

impl FieldElement {
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Integer encoding `Σ c_i·p^i`.
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn pow(&self, k: u64) -> Self {
        self.with(self.field.pow(self.value, k))
    }

    pub fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.with(self.field.inv(self.value)))
    }

    /// Frobenius map `a ↦ a^p`.
    pub fn frobenius(&self) -> Self {
        self.pow(self.field.p() as u64)
    }

    fn with(&self, value: u32) -> Self {
        FieldElement {
            field: self.field.clone(),
            value,
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $raw:ident) => {
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }

        impl<'a> $tr<&'a FieldElement> for &'a FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                debug_assert_eq!(self.field, rhs.field);
                self.with(self.field.$raw(self.value, rhs.value))
            }
        }
    };
}

binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);

impl Div for FieldElement {
    type Output = FieldElement;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: FieldElement) -> FieldElement {
        let inv = rhs.inv().expect("division by zero");
        self * inv
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.with(self.field.neg(self.value))
    }
}

fn checked_factors(q_minus_1: u64, supplied: Option<&[u64]>, budget: u64) -> Result<Vec<u64>> {
    match supplied {
        Some(fs) => {
            let mut prod: u128 = 1;
            for &f in fs {
                if f < 2 {
                    return Err(Error::NoFactorizationMatch(q_minus_1));
                }
                prod = prod.saturating_mul(f as u128);
            }
            if prod != q_minus_1 as u128 {
                return Err(Error::NoFactorizationMatch(q_minus_1));
            }
            let mut distinct = fs.to_vec();
            distinct.sort_unstable();
            distinct.dedup();
            Ok(distinct)
        }
        None => prime_factors(q_minus_1, budget).ok_or(Error::FactorizationNeeded(q_minus_1)),
    }
}

/// Least element of multiplicative order `q - 1`, scanning encodings upward
/// from the polynomial `x` (from 1 in a prime field).
///
/// `factorization`, when given, lists the prime factors of `q - 1` with
/// multiplicity.
pub fn find_primitive_element(
    field: &FieldSpec,
    factorization: Option<&[u64]>,
) -> Result<FieldElement> {
    find_primitive_element_with_budget(field, factorization, DEFAULT_FACTOR_BUDGET)
}

pub fn find_primitive_element_with_budget(
    field: &FieldSpec,
    factorization: Option<&[u64]>,
    budget: u64,
) -> Result<FieldElement> {
    let q1 = field.order() as u64 - 1;
    let factors = checked_factors(q1, factorization, budget)?;
    let start = if field.e() == 1 { 1 } else { field.p() };
    (start..field.order())
        .chain(1..start)
        .find(|&a| {
            a != 0 && field.pow(a, q1) == 1 && factors.iter().all(|&r| field.pow(a, q1 / r) != 1)
        })
        .map(|v| FieldElement {
            field: field.clone(),
            value: v,
        })
        .ok_or_else(|| Error::ConstructionVerificationFailed("no primitive element".into()))
}

/// GF(q^n) viewed as an n-dimensional vector space over an embedded copy of GF(q).
///
/// The embedded copy is `{0} ∪ ⟨γ^((Q-1)/(q-1))⟩` for the primitive element `γ`
/// of the big field; a root of the base modulus in that set fixes the field
/// isomorphism. The basis is `{γ^0, …, γ^(n-1)}` when independent, otherwise
/// extended greedily over powers of `γ`.
#[derive(Clone, Debug)]
pub struct SubfieldView {
    big: FieldSpec,
    base: FieldSpec,
    gamma: FieldElement,
    /// `embedding[b]` is the big-field encoding of base element `b`.
    embedding: Vec<u32>,
    basis: Vec<u32>,
    /// Inverse of the GF(p) expansion matrix; maps big-field coefficients to
    /// `(j, a)` coordinates, row index `j * e_base + a`.
    solve: Vec<Vec<u32>>,
}

impl SubfieldView {
    pub fn new(big: &FieldSpec, base: &FieldSpec) -> Result<Self> {
        Self::check_tower(big, base)?;
        let gamma = find_primitive_element(big, None)?;
        Self::with_primitive(big, base, gamma)
    }

    fn check_tower(big: &FieldSpec, base: &FieldSpec) -> Result<()> {
        if big.p() != base.p() || !big.e().is_multiple_of(base.e()) {
            return Err(Error::BaseNotSubfield {
                base: base.order() as u64,
                big: big.order() as u64,
            });
        }
        Ok(())
    }

    /// Uses the supplied primitive element `gamma` of the big field.
    pub fn with_primitive(big: &FieldSpec, base: &FieldSpec, gamma: FieldElement) -> Result<Self> {
        Self::check_tower(big, base)?;
        let (p, eb, ebig) = (big.p(), base.e() as usize, big.e() as usize);
        let n = ebig / eb;
        let big_q = big.order() as u64;
        let stride = (big_q - 1) / (base.order() as u64 - 1);
        let sub_gen = big.pow(gamma.value, stride);

        let mut subfield = vec![0u32];
        let mut x = 1u32;
        for _ in 0..base.order() - 1 {
            subfield.push(x);
            x = big.mul(x, sub_gen);
        }
        let eval = |rho: u32| {
            base.modulus()
                .iter()
                .rev()
                .fold(0u32, |acc, &c| big.add(big.mul(acc, rho), c))
        };
        let rho = *subfield
            .iter()
            .find(|&&r| eval(r) == 0)
            .ok_or(Error::BaseNotSubfield {
                base: base.order() as u64,
                big: big_q,
            })?;
        let rho_powers: Vec<u32> = (0..eb).map(|a| big.pow(rho, a as u64)).collect();
        let embedding: Vec<u32> = (0..base.order())
            .map(|b| {
                base.coeffs(b)
                    .iter()
                    .zip(&rho_powers)
                    .fold(0, |acc, (&c, &rp)| big.add(acc, big.mul(c, rp)))
            })
            .collect();

        let prime = make_field(p as u64, 1, None)?;
        let expand = |z: u32| -> Vec<Vec<u32>> {
            rho_powers
                .iter()
                .map(|&rp| big.coeffs(big.mul(rp, z)))
                .collect()
        };
        let mut basis = Vec::with_capacity(n);
        let mut rows: Vec<Vec<u32>> = Vec::with_capacity(ebig);
        let mut k = 0u64;
        while basis.len() < n {
            let z = big.pow(gamma.value, k);
            k += 1;
            let mut trial = rows.clone();
            trial.extend(expand(z));
            if linalg::rank(&prime, &trial) == trial.len() {
                rows = trial;
                basis.push(z);
            }
            if k > big_q {
                return Err(Error::ConstructionVerificationFailed(
                    "no GF(q)-basis among powers of the primitive element".into(),
                ));
            }
        }
        let solve = linalg::invert(&prime, &rows).expect("expansion matrix has full rank");
        Ok(SubfieldView {
            big: big.clone(),
            base: base.clone(),
            gamma,
            embedding,
            basis,
            solve,
        })
    }

    pub fn big(&self) -> &FieldSpec {
        &self.big
    }

    pub fn base(&self) -> &FieldSpec {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.basis.len()
    }

    pub fn primitive(&self) -> &FieldElement {
        &self.gamma
    }

    pub fn basis(&self) -> Vec<FieldElement> {
        self.basis
            .iter()
            .map(|&v| FieldElement {
                field: self.big.clone(),
                value: v,
            })
            .collect()
    }

    /// Image of a base-field element in the big field.
    pub fn embed(&self, base_value: u32) -> u32 {
        self.embedding[base_value as usize]
    }

    /// Coordinates (as base-field encodings) of a big-field encoding.
    pub fn coordinates_raw(&self, value: u32) -> Vec<u32> {
        let p = self.big.p() as u64;
        let eb = self.base.e() as usize;
        let c = self.big.coeffs(value);
        // d = c · solve
        let mut d = vec![0u64; c.len()];
        for (ci, row) in c.iter().zip(&self.solve) {
            if *ci == 0 {
                continue;
            }
            for (dj, &s) in d.iter_mut().zip(row) {
                *dj = (*dj + *ci as u64 * s as u64) % p;
            }
        }
        d.chunks(eb)
            .map(|chunk| chunk.iter().rev().fold(0u64, |acc, &x| acc * p + x) as u32)
            .collect()
    }

    pub fn coordinates(&self, element: &FieldElement) -> Result<Vec<FieldElement>> {
        if element.field != self.big {
            return Err(Error::AmbientMismatch(
                "element does not belong to the big field of this view".into(),
            ));
        }
        Ok(self
            .coordinates_raw(element.value)
            .into_iter()
            .map(|v| FieldElement {
                field: self.base.clone(),
                value: v,
            })
            .collect())
    }

    /// Inverse of [`coordinates_raw`](Self::coordinates_raw).
    pub fn from_coordinates_raw(&self, coords: &[u32]) -> u32 {
        coords.iter().zip(&self.basis).fold(0, |acc, (&c, &b)| {
            self.big.add(acc, self.big.mul(self.embed(c), b))
        })
    }
}

/// Coordinates of `element` over the subfield `base`, in the fixed basis of
/// [`SubfieldView`].
pub fn subfield_coordinates(element: &FieldElement, base: &FieldSpec) -> Result<Vec<FieldElement>> {
    SubfieldView::new(element.field(), base)?.coordinates(element)
}
