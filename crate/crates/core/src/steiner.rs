//! Steiner structures `S[t, l, n]_q` and the cyclotomic spread construction.

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::bounds::{gaussian_binomial, ratio, wxs_bound, CodeParams};
use crate::code::ConstantDimensionCode;
use crate::error::{Error, Result};
use crate::field::{find_primitive_element, make_field, FieldSpec, SubfieldView};
use crate::format::{CodeFile, Construction};
use crate::subspace::{
    check_budget, enumerate_subspaces, vector_index, Subspace, DEFAULT_ENUMERATION_BUDGET,
};

/// A verified `S[1, l, kl]_q` together with how it was built.
#[derive(Debug, Clone)]
pub struct Spread {
    pub code: ConstantDimensionCode,
    /// Blocks `E_0, …, E_(e-1)` in coset order.
    pub blocks: Vec<Subspace>,
    pub construction: Construction,
}

impl Spread {
    pub fn to_file(&self) -> CodeFile {
        CodeFile {
            construction: Some(self.construction.clone()),
            ..CodeFile::from_code(&self.code)
        }
    }
}

fn fail(msg: String) -> Error {
    Error::ConstructionVerificationFailed(msg)
}

pub fn construct_spread(base: &FieldSpec, l: usize, k: usize) -> Result<Spread> {
    construct_spread_with_factors(base, l, k, None)
}

/// Builds the spread of GF(q)^(kl) from the cyclotomic classes
/// `α^i ⟨α^e⟩ ∪ {0}`, `e = (q^(kl) − 1)/(q^l − 1)`, and checks every
/// structural property before returning. `factors` optionally lists the
/// prime factors of `q^(kl) − 1`.
pub fn construct_spread_with_factors(
    base: &FieldSpec,
    l: usize,
    k: usize,
    factors: Option<&[u64]>,
) -> Result<Spread> {
    if l < 1 || k < 2 {
        return Err(Error::InvalidParams(format!(
            "spread construction needs l >= 1 and k >= 2, got l={l} k={k}"
        )));
    }
    let n = k * l;
    let big_e = base.e() * n as u32;
    let big = make_field(base.p() as u64, big_e, None)?;
    let alpha = find_primitive_element(&big, factors)?;
    let view = SubfieldView::with_primitive(&big, base, alpha.clone())?;

    let q = base.order() as u64;
    let big_q = big.order() as u64;
    let ql = q.pow(l as u32);
    let e = (big_q - 1) / (ql - 1);

    let mut blocks = Vec::with_capacity(e as usize);
    let mut covered = vec![0u32; big_q as usize];
    let mut e0_elements = Vec::new();
    for i in 0..e {
        let mut rows = Vec::with_capacity(ql as usize - 1);
        for j in 0..ql - 1 {
            let z = big.pow(alpha.value(), i + j * e);
            if i == 0 {
                e0_elements.push(z);
            }
            let coords = view.coordinates_raw(z);
            covered[vector_index(base.order(), &coords) as usize] += 1;
            rows.push(coords);
        }
        let block = Subspace::from_rows(base, n, &rows)?;
        if block.dim() != l {
            return Err(fail(format!(
                "block {i} has dimension {}, expected {l}",
                block.dim()
            )));
        }
        blocks.push(block);
    }

    // E_0 is the subfield GF(q^l): exactly the roots of z^(q^l) = z.
    let subfield_count = (1..big.order()).filter(|&z| big.pow(z, ql) == z).count();
    if e0_elements.len() != subfield_count || e0_elements.iter().any(|&z| big.pow(z, ql) != z) {
        return Err(fail("E_0 is not the subfield GF(q^l)".into()));
    }

    if covered[0] != 0 || covered[1..].iter().any(|&c| c != 1) {
        return Err(fail("blocks do not partition the nonzero vectors".into()));
    }
    for (i, a) in blocks.iter().enumerate() {
        for b in &blocks[i + 1..] {
            if a.intersect_dim(b)? != 0 {
                return Err(fail(format!(
                    "blocks {a:?} and {b:?} intersect nontrivially"
                )));
            }
        }
    }

    let code = ConstantDimensionCode::new(base, n, l, blocks.clone())?;
    if code.size() as u64 != e {
        return Err(fail(format!(
            "{} distinct blocks, expected {e}",
            code.size()
        )));
    }
    if code.min_distance()? != 2 * l {
        return Err(fail(format!(
            "minimum distance {}, expected {}",
            code.min_distance()?,
            2 * l
        )));
    }
    let steiner = is_steiner_structure(&code, 1)?;
    if !steiner.holds {
        return Err(fail(format!("not an S[1,{l},{n}]: {:?}", steiner.witness)));
    }

    let construction = Construction {
        kind: "cyclotomic_spread".into(),
        q,
        l: l as u32,
        k: k as u32,
        p: big.p(),
        e: big.e(),
        modulus: big.modulus().to_vec(),
        alpha: alpha.value(),
    };
    Ok(Spread {
        code,
        blocks,
        construction,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinerWitness {
    /// A `t`-subspace not covered exactly once.
    pub subspace: Subspace,
    /// How many blocks contain it (0 or at least 2).
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinerCheck {
    pub t: usize,
    pub holds: bool,
    /// First offending `t`-subspace in enumeration order.
    pub witness: Option<SteinerWitness>,
}

pub fn is_steiner_structure(code: &ConstantDimensionCode, t: usize) -> Result<SteinerCheck> {
    is_steiner_structure_with_budget(code, t, DEFAULT_ENUMERATION_BUDGET)
}

/// Checks that every `t`-dimensional subspace lies in exactly one codeword.
pub fn is_steiner_structure_with_budget(
    code: &ConstantDimensionCode,
    t: usize,
    budget: u64,
) -> Result<SteinerCheck> {
    if t < 1 || t > code.dim() {
        return Err(Error::InvalidParams(format!(
            "need 1 <= t <= l = {}, got t = {t}",
            code.dim()
        )));
    }
    let q = code.field().order() as u64;
    let count = gaussian_binomial(code.ambient_dim() as u32, t as u32, q)?;
    check_budget(
        format!("t-subspaces [{} {t}]_{q}", code.ambient_dim()),
        &count,
        budget,
    )?;
    let ts: Vec<Subspace> = enumerate_subspaces(code.field(), code.ambient_dim(), t)?.collect();
    let witness = ts
        .par_iter()
        .map(|s| {
            let c = code
                .codewords()
                .iter()
                .filter(|x| x.contains_unchecked(s))
                .count();
            (s, c)
        })
        .find_first(|&(_, c)| c != 1)
        .map(|(s, c)| SteinerWitness {
            subspace: s.clone(),
            count: c,
        });
    Ok(SteinerCheck {
        t,
        holds: witness.is_none(),
        witness,
    })
}

fn check_steiner_params(t: u32, l: u32, n: u32, q: u64) -> Result<()> {
    if !(1 <= t && t <= l && l <= n) || q < 2 {
        return Err(Error::InvalidParams(format!(
            "need 1 <= t <= l <= n and q >= 2, got t={t} l={l} n={n} q={q}"
        )));
    }
    Ok(())
}

/// `[n t]_q / [l t]_q`. A non-integer value certifies that no `S[t,l,n]_q` exists.
pub fn steiner_block_count(t: u32, l: u32, n: u32, q: u64) -> Result<BigRational> {
    check_steiner_params(t, l, n, q)?;
    Ok(ratio(
        &gaussian_binomial(n, t, q)?,
        &gaussian_binomial(l, t, q)?,
    ))
}

/// An `S[t,l,n]_q` viewed as an `(n, M, 2(l−t+1), l)_q` code.
pub fn steiner_as_code_params(t: u32, l: u32, n: u32, q: u64) -> Result<(CodeParams, BigRational)> {
    let m = steiner_block_count(t, l, n, q)?;
    Ok((CodeParams::new(q, n, l - t + 1, l)?, m))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WxsEquivalence {
    pub achieves_wxs: bool,
    pub is_steiner: bool,
}

impl WxsEquivalence {
    pub fn consistent(&self) -> bool {
        self.achieves_wxs == self.is_steiner
    }
}

/// Evaluates "size equals the WXS bound" and "is an `S[l−δ+1, l, n]_q`"
/// independently.
pub fn check_wxs_achiever_equivalence(
    code: &ConstantDimensionCode,
    delta: usize,
) -> Result<WxsEquivalence> {
    let params = CodeParams::new(
        code.field().order() as u64,
        code.ambient_dim() as u32,
        delta as u32,
        code.dim() as u32,
    )?;
    if let Some(d) = code.min_distance_opt() {
        if d < 2 * delta {
            return Err(Error::DistanceTooSmall {
                required: 2 * delta,
                actual: d,
            });
        }
    }
    let (_, exact) = wxs_bound(&params);
    let achieves_wxs = BigRational::from_integer(BigInt::from(code.size())) == exact;
    let is_steiner = is_steiner_structure(code, code.dim() - delta + 1)?.holds;
    Ok(WxsEquivalence {
        achieves_wxs,
        is_steiner,
    })
}
