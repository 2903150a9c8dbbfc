//! Exact upper bounds on `A_q[n, 2δ, l]`.
//!
//! Every bound is evaluated with arbitrary-precision integers or rationals;
//! decimal rendering happens only in [`decimal_string`]. The individual bound
//! functions evaluate their formula exactly as written for the given `l`;
//! [`bound_report`] is the only place that also tries the dual dimension
//! `n - l`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Parameters `(n, 2δ, l)_q` of a constant dimension code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CodeParams {
    pub q: u64,
    pub n: u32,
    pub delta: u32,
    pub l: u32,
}

impl CodeParams {
    pub fn new(q: u64, n: u32, delta: u32, l: u32) -> Result<Self> {
        let p = CodeParams { q, n, delta, l };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.q < 2 {
            return Err(Error::InvalidParams(format!(
                "q = {} must be at least 2",
                self.q
            )));
        }
        if !(1 <= self.delta && self.delta <= self.l && self.l <= self.n) {
            return Err(Error::InvalidParams(format!(
                "need 1 <= delta <= l <= n, got delta={} l={} n={}",
                self.delta, self.l, self.n
            )));
        }
        Ok(())
    }

    /// Same `n`, `δ`, `q` with `l` replaced by `n - l`, when still valid.
    pub fn dual(&self) -> Option<CodeParams> {
        let l = self.n - self.l;
        (l >= self.delta).then_some(CodeParams { l, ..*self })
    }

    pub fn min_distance(&self) -> u32 {
        2 * self.delta
    }
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(n={}, 2δ={}, l={})_{}",
            self.n,
            2 * self.delta,
            self.l,
            self.q
        )
    }
}

fn qpow(q: u64, k: u32) -> BigUint {
    BigUint::from(q).pow(k)
}

/// `q^k − 1`.
fn qpow_m1(q: u64, k: u32) -> BigUint {
    qpow(q, k) - 1u32
}

/// Gaussian binomial `[n m]_q = Π_{i<m} (q^(n-i) − 1)/(q^(m-i) − 1)`.
pub fn gaussian_binomial(n: u32, m: u32, q: u64) -> Result<BigUint> {
    if m > n {
        return Err(Error::InvalidParams(format!(
            "gaussian binomial needs m <= n, got m={m} n={n}"
        )));
    }
    if q < 2 {
        return Err(Error::InvalidParams(format!(
            "gaussian binomial needs q >= 2, got {q}"
        )));
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..m {
        num *= qpow_m1(q, n - i);
        den *= qpow_m1(q, m - i);
    }
    let (quot, rem) = num.div_rem(&den);
    assert!(rem.is_zero(), "inexact gaussian binomial [{n} {m}]_{q}");
    Ok(quot)
}

fn gb(n: u32, m: u32, q: u64) -> BigUint {
    gaussian_binomial(n, m, q).expect("range checked by caller")
}

pub fn ratio(num: &BigUint, den: &BigUint) -> BigRational {
    BigRational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

pub fn floor_of(r: &BigRational) -> BigUint {
    r.floor()
        .to_integer()
        .to_biguint()
        .expect("bounds are non-negative")
}

/// `[n−δ+1  l−δ+1]_q`.
pub fn singleton_bound(p: &CodeParams) -> BigUint {
    gb(p.n - p.delta + 1, p.l - p.delta + 1, p.q)
}

/// Exact `[n  l−δ+1]_q / [l  l−δ+1]_q`, and its floor.
pub fn wxs_bound(p: &CodeParams) -> (BigUint, BigRational) {
    let t = p.l - p.delta + 1;
    let exact = ratio(&gb(p.n, t, p.q), &gb(p.l, t, p.q));
    (floor_of(&exact), exact)
}

/// Applies only when `(q^l−1)^2 > (q^n−1)(q^(l−δ)−1)`; `None` otherwise.
pub fn johnson_i_bound(p: &CodeParams) -> Option<BigUint> {
    let ql1 = qpow_m1(p.q, p.l);
    let qn1 = qpow_m1(p.q, p.n);
    let qld1 = qpow_m1(p.q, p.l - p.delta);
    let lhs = &ql1 * &ql1;
    let rhs = &qn1 * &qld1;
    if lhs <= rhs {
        return None;
    }
    let num = (qpow(p.q, p.l) - qpow(p.q, p.l - p.delta)) * qn1;
    Some(num / (lhs - rhs))
}

/// One recursion step: `⌊(q^n−1)·inner / (q^l−1)⌋`, with `inner` an upper
/// bound on `A_q[n−1, 2δ, l−1]`.
pub fn johnson_ii_step(p: &CodeParams, inner: &BigUint) -> BigUint {
    qpow_m1(p.q, p.n) * inner / qpow_m1(p.q, p.l)
}

/// The nested-floor chain, evaluated inside-out from dimension `δ` up to `l`.
pub fn johnson_ii_bound(p: &CodeParams) -> BigUint {
    let shift = p.n - p.l;
    let mut acc = qpow_m1(p.q, shift + p.delta) / qpow_m1(p.q, p.delta);
    for j in p.delta + 1..=p.l {
        let step = CodeParams {
            n: shift + j,
            l: j,
            ..*p
        };
        acc = johnson_ii_step(&step, &acc);
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Singleton,
    Wxs,
    JohnsonI,
    #[serde(rename = "johnson_ii")]
    JohnsonII,
}

impl BoundKind {
    pub fn name(self) -> &'static str {
        match self {
            BoundKind::Singleton => "singleton",
            BoundKind::Wxs => "wxs",
            BoundKind::JohnsonI => "johnson_i",
            BoundKind::JohnsonII => "johnson_ii",
        }
    }
}

/// All bounds evaluated at one orientation `l`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrientationBounds {
    pub l: u32,
    pub singleton: BigUint,
    pub wxs: BigUint,
    pub wxs_exact: BigRational,
    pub johnson_i: Option<BigUint>,
    pub johnson_ii: BigUint,
}

impl OrientationBounds {
    pub fn evaluate(p: &CodeParams) -> Self {
        let (wxs, wxs_exact) = wxs_bound(p);
        OrientationBounds {
            l: p.l,
            singleton: singleton_bound(p),
            wxs,
            wxs_exact,
            johnson_i: johnson_i_bound(p),
            johnson_ii: johnson_ii_bound(p),
        }
    }

    /// Present bounds in fixed order.
    pub fn entries(&self) -> Vec<(BoundKind, Option<&BigUint>)> {
        vec![
            (BoundKind::Singleton, Some(&self.singleton)),
            (BoundKind::Wxs, Some(&self.wxs)),
            (BoundKind::JohnsonI, self.johnson_i.as_ref()),
            (BoundKind::JohnsonII, Some(&self.johnson_ii)),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BestSource {
    pub bound: BoundKind,
    /// Dimension the winning bound was evaluated at (`l` or `n - l`).
    pub l: u32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub params: CodeParams,
    pub primal: OrientationBounds,
    /// Bounds at `n - l`, when that orientation is valid and differs from `l`.
    pub dual: Option<OrientationBounds>,
    pub best: BigUint,
    pub best_source: BestSource,
    pub dual_params_used: bool,
}

impl BoundReport {
    pub fn singleton(&self) -> &BigUint {
        &self.primal.singleton
    }

    pub fn wxs(&self) -> &BigUint {
        &self.primal.wxs
    }

    pub fn johnson_i(&self) -> Option<&BigUint> {
        self.primal.johnson_i.as_ref()
    }

    pub fn johnson_ii(&self) -> &BigUint {
        &self.primal.johnson_ii
    }

    pub fn to_json(&self) -> BoundReportJson {
        BoundReportJson::from(self)
    }
}

pub fn bound_report(params: &CodeParams) -> Result<BoundReport> {
    params.validate()?;
    let primal = OrientationBounds::evaluate(params);
    let dual = params
        .dual()
        .filter(|d| d.l != params.l)
        .map(|d| OrientationBounds::evaluate(&d));

    let mut best: Option<(BigUint, BestSource)> = None;
    for side in std::iter::once(&primal).chain(dual.as_ref()) {
        for (kind, value) in side.entries() {
            let Some(v) = value else { continue };
            if best.as_ref().is_none_or(|(b, _)| v < b) {
                best = Some((
                    v.clone(),
                    BestSource {
                        bound: kind,
                        l: side.l,
                    },
                ));
            }
        }
    }
    let (best, best_source) = best.expect("singleton is always present");
    Ok(BoundReport {
        params: *params,
        dual_params_used: dual.is_some(),
        primal,
        dual,
        best,
        best_source,
    })
}

/// Renders `r` with exactly `digits` decimals, rounding half away from zero.
pub fn decimal_string(r: &BigRational, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = (r * BigRational::from_integer(scale.clone()))
        .round()
        .to_integer();
    let neg = scaled.is_negative();
    let (int_part, frac_part) = scaled.abs().div_rem(&scale);
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!(
            "{sign}{int_part}.{:0>width$}",
            frac_part.to_string(),
            width = digits as usize
        )
    }
}

/// `B_S / B_WXS` for each `q`, as an exact rational.
pub fn singleton_wxs_ratio(p: &CodeParams) -> BigRational {
    let (_, wxs) = wxs_bound(p);
    BigRational::from_integer(BigInt::from(singleton_bound(p))) / wxs
}

pub fn bound_ratio_table(
    n: u32,
    l: u32,
    delta: u32,
    q_list: &[u64],
    precision_digits: u32,
) -> Result<Vec<String>> {
    q_list
        .iter()
        .map(|&q| {
            let p = CodeParams::new(q, n, delta, l)?;
            Ok(decimal_string(&singleton_wxs_ratio(&p), precision_digits))
        })
        .collect()
}

mod dec {
    use num_bigint::BigUint;
    use num_rational::BigRational;
    use serde::Serializer;

    pub fn big<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn opt_big<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => s.serialize_str(&v.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn rational<S: Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OrientationJson {
    pub l: u32,
    #[serde(serialize_with = "dec::big")]
    pub singleton: BigUint,
    #[serde(serialize_with = "dec::big")]
    pub wxs: BigUint,
    #[serde(serialize_with = "dec::rational")]
    pub wxs_exact: BigRational,
    #[serde(serialize_with = "dec::opt_big")]
    pub johnson_i: Option<BigUint>,
    #[serde(serialize_with = "dec::big")]
    pub johnson_ii: BigUint,
}

#[derive(Debug, Clone, Serialize)]
pub struct BestJson {
    #[serde(serialize_with = "dec::big")]
    pub value: BigUint,
    pub bound: BoundKind,
    pub l: u32,
}

/// JSON view of a [`BoundReport`]; every number is a decimal string.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReportJson {
    pub q: String,
    pub n: String,
    pub delta: String,
    pub l: String,
    pub primal: OrientationJson,
    pub dual: Option<OrientationJson>,
    pub dual_params_used: bool,
    pub best: BestJson,
}

impl From<&OrientationBounds> for OrientationJson {
    fn from(o: &OrientationBounds) -> Self {
        OrientationJson {
            l: o.l,
            singleton: o.singleton.clone(),
            wxs: o.wxs.clone(),
            wxs_exact: o.wxs_exact.clone(),
            johnson_i: o.johnson_i.clone(),
            johnson_ii: o.johnson_ii.clone(),
        }
    }
}

impl From<&BoundReport> for BoundReportJson {
    fn from(r: &BoundReport) -> Self {
        BoundReportJson {
            q: r.params.q.to_string(),
            n: r.params.n.to_string(),
            delta: r.params.delta.to_string(),
            l: r.params.l.to_string(),
            primal: (&r.primal).into(),
            dual: r.dual.as_ref().map(Into::into),
            dual_params_used: r.dual_params_used,
            best: BestJson {
                value: r.best.clone(),
                bound: r.best_source.bound,
                l: r.best_source.l,
            },
        }
    }
}
