//! Constant dimension codes and their binary constant-weight images.

use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::subspace::{vector_from_index, vector_index, Subspace};

/// Largest ambient space (`q^n`) for which incidence vectors are built.
pub const INCIDENCE_BUDGET: u64 = 1 << 24;

/// A set of `l`-dimensional subspaces of GF(q)^n, stored in canonical order.
#[derive(Clone)]
pub struct ConstantDimensionCode {
    field: FieldSpec,
    n: usize,
    l: usize,
    codewords: Vec<Subspace>,
    min_distance: OnceLock<Option<usize>>,
}

impl ConstantDimensionCode {
    pub fn new(field: &FieldSpec, n: usize, l: usize, subspaces: Vec<Subspace>) -> Result<Self> {
        if subspaces.is_empty() {
            return Err(Error::EmptyCode);
        }
        for s in &subspaces {
            if s.ambient_dim() != n || s.field() != field {
                return Err(Error::AmbientMismatch(format!(
                    "codeword {s:?} does not live in GF({})^{n}",
                    field.order()
                )));
            }
            if s.dim() != l {
                return Err(Error::DimensionMismatch {
                    expected: l,
                    got: s.dim(),
                });
            }
        }
        let mut codewords = subspaces;
        codewords.sort();
        codewords.dedup();
        Ok(ConstantDimensionCode {
            field: field.clone(),
            n,
            l,
            codewords,
            min_distance: OnceLock::new(),
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.l
    }

    pub fn size(&self) -> usize {
        self.codewords.len()
    }

    pub fn codewords(&self) -> &[Subspace] {
        &self.codewords
    }

    pub fn contains(&self, s: &Subspace) -> bool {
        self.codewords.binary_search(s).is_ok()
    }

    /// Minimum pairwise dimension distance; `None` for a single codeword.
    pub fn min_distance_opt(&self) -> Option<usize> {
        *self.min_distance.get_or_init(|| {
            let cw = &self.codewords;
            let d = (0..cw.len())
                .into_par_iter()
                .filter_map(|i| cw[i + 1..].iter().map(|y| cw[i].distance_fast(y)).min())
                .min();
            if let Some(d) = d {
                assert!(
                    d % 2 == 0 && d >= 2,
                    "odd or zero distance {d} in a constant dimension code"
                );
            }
            d
        })
    }

    pub fn min_distance(&self) -> Result<usize> {
        self.min_distance_opt().ok_or(Error::SingletonCode)
    }

    /// Codes of orthogonal complements: same size and distance, dimension `n - l`.
    pub fn dual_code(&self) -> ConstantDimensionCode {
        let duals = self
            .codewords
            .iter()
            .map(Subspace::orthogonal_complement)
            .collect();
        ConstantDimensionCode::new(&self.field, self.n, self.n - self.l, duals)
            .expect("complements share ambient space and dimension")
    }

    /// `(n, M, 2δ, l)_q`.
    pub fn params_string(&self) -> String {
        let d = self
            .min_distance_opt()
            .map_or_else(|| "-".to_string(), |d| d.to_string());
        format!(
            "({}, {}, {}, {})_{}",
            self.n,
            self.size(),
            d,
            self.l,
            self.field.order()
        )
    }

    fn check_incidence_budget(&self) -> Result<()> {
        let total = (self.field.order() as u128).pow(self.n as u32);
        if total > INCIDENCE_BUDGET as u128 {
            return Err(Error::BudgetExceeded {
                what: format!("ambient space GF({})^{}", self.field.order(), self.n),
                size: total.to_string(),
                budget: INCIDENCE_BUDGET,
            });
        }
        Ok(())
    }

    /// Incidence vectors over the `q^n − 1` nonzero ambient vectors, ordered by
    /// [`vector_index`].
    pub fn derived_cwc(&self) -> Result<BinaryConstantWeightCode> {
        self.check_incidence_budget()?;
        let q = self.field.order();
        let len = (q as u64).pow(self.n as u32) as usize - 1;
        let rows = self
            .codewords
            .iter()
            .map(|x| {
                let mut row = BitRow::zeros(len);
                for v in x.vectors() {
                    let idx = vector_index(q, &v) as usize;
                    if idx > 0 {
                        row.set(idx - 1);
                    }
                }
                row
            })
            .collect();
        let cwc = BinaryConstantWeightCode::from_bit_rows(len, rows)?;
        let (qq, l) = (q as u64, self.l as u32);
        let expected_d = self
            .min_distance_opt()
            .map(|d| 2 * (qq.pow(l) - qq.pow(l - d as u32 / 2)) as usize);
        self.check_cwc_params(&cwc, len, (qq.pow(l) - 1) as usize, expected_d)?;
        Ok(cwc)
    }

    /// Projective points of GF(q)^n: indices of the monic vectors, ascending.
    fn projective_points(&self) -> Vec<u64> {
        let q = self.field.order();
        let total = (q as u64).pow(self.n as u32);
        (1..total)
            .filter(|&idx| {
                let v = vector_from_index(q, self.n, idx);
                v.iter().find(|&&x| x != 0) == Some(&1)
            })
            .collect()
    }

    /// Incidence vectors over projective points.
    pub fn punctured_cwc(&self) -> Result<BinaryConstantWeightCode> {
        self.check_incidence_budget()?;
        let q = self.field.order();
        let points = self.projective_points();
        let rows = self
            .codewords
            .iter()
            .map(|x| {
                let mut row = BitRow::zeros(points.len());
                for v in x.vectors() {
                    if v.iter().find(|&&c| c != 0) == Some(&1) {
                        let pos = points
                            .binary_search(&vector_index(q, &v))
                            .expect("monic vector is a point");
                        row.set(pos);
                    }
                }
                row
            })
            .collect();
        let cwc = BinaryConstantWeightCode::from_bit_rows(points.len(), rows)?;
        let (qq, l) = (q as u64, self.l as u32);
        let expected_d = self
            .min_distance_opt()
            .map(|d| (2 * (qq.pow(l) - qq.pow(l - d as u32 / 2)) / (qq - 1)) as usize);
        self.check_cwc_params(
            &cwc,
            points.len(),
            ((qq.pow(l) - 1) / (qq - 1)) as usize,
            expected_d,
        )?;
        let derived = self.derived_cwc()?;
        if !self.is_column_replication(&derived, &cwc) {
            return Err(Error::ConstructionVerificationFailed(
                "derived code is not a (q-1)-fold replication of the punctured code".into(),
            ));
        }
        Ok(cwc)
    }

    /// For every projective point `P`, the derived columns indexed by the
    /// `q − 1` nonzero multiples of `P` all equal the punctured column of `P`.
    pub fn is_column_replication(
        &self,
        derived: &BinaryConstantWeightCode,
        punctured: &BinaryConstantWeightCode,
    ) -> bool {
        let q = self.field.order();
        let points = self.projective_points();
        if punctured.length() != points.len()
            || derived.length() + 1 != (q as usize).pow(self.n as u32)
            || derived.size() != punctured.size()
        {
            return false;
        }
        points.iter().enumerate().all(|(pos, &idx)| {
            let v = vector_from_index(q, self.n, idx);
            (1..q).all(|c| {
                let cv: Vec<u32> = v.iter().map(|&x| self.field.mul(c, x)).collect();
                let col = vector_index(q, &cv) as usize - 1;
                derived
                    .rows()
                    .iter()
                    .zip(punctured.rows())
                    .all(|(dr, pr)| dr.get(col) == pr.get(pos))
            })
        })
    }

    fn check_cwc_params(
        &self,
        cwc: &BinaryConstantWeightCode,
        len: usize,
        weight: usize,
        distance: Option<usize>,
    ) -> Result<()> {
        let got = (cwc.length(), cwc.size(), cwc.weight(), cwc.min_distance());
        let want = (len, self.size(), weight, distance);
        if got != want {
            return Err(Error::ConstructionVerificationFailed(format!(
                "binary image has (N, M, w, d) = {got:?}, expected {want:?}"
            )));
        }
        Ok(())
    }
}

impl PartialEq for ConstantDimensionCode {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.n == other.n
            && self.l == other.l
            && self.codewords == other.codewords
    }
}

impl Eq for ConstantDimensionCode {}

impl fmt::Debug for ConstantDimensionCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ConstantDimensionCode")
            .field("q", &self.field.order())
            .field("n", &self.n)
            .field("l", &self.l)
            .field("codewords", &self.codewords)
            .finish()
    }
}

pub fn new_code(
    field: &FieldSpec,
    n: usize,
    l: usize,
    subspaces: Vec<Subspace>,
) -> Result<ConstantDimensionCode> {
    ConstantDimensionCode::new(field, n, l, subspaces)
}

pub fn min_distance(code: &ConstantDimensionCode) -> Result<usize> {
    code.min_distance()
}

pub fn dual_code(code: &ConstantDimensionCode) -> ConstantDimensionCode {
    code.dual_code()
}

pub fn derived_cwc(code: &ConstantDimensionCode) -> Result<BinaryConstantWeightCode> {
    code.derived_cwc()
}

pub fn punctured_cwc(code: &ConstantDimensionCode) -> Result<BinaryConstantWeightCode> {
    code.punctured_cwc()
}

/// Fixed-length binary vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitRow {
    len: usize,
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        BitRow {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut r = BitRow::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                r.set(i);
            }
        }
        r
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Weight of the coordinatewise product.
    pub fn and_weight(&self, other: &BitRow) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn hamming(&self, other: &BitRow) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }
}

impl fmt::Display for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Binary code whose rows share one Hamming weight. Parameters are always
/// measured from the rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryConstantWeightCode {
    length: usize,
    weight: usize,
    min_distance: Option<usize>,
    rows: Vec<BitRow>,
}

impl BinaryConstantWeightCode {
    pub fn from_bit_rows(length: usize, rows: Vec<BitRow>) -> Result<Self> {
        let Some(first) = rows.first() else {
            return Err(Error::EmptyCode);
        };
        let weight = first.weight();
        for r in &rows {
            if r.len() != length {
                return Err(Error::LengthMismatch {
                    expected: length,
                    got: r.len(),
                });
            }
            if r.weight() != weight {
                return Err(Error::Format(format!(
                    "row weights differ: {} vs {weight}",
                    r.weight()
                )));
            }
        }
        let min_distance = (0..rows.len())
            .flat_map(|i| (i + 1..rows.len()).map(move |j| (i, j)))
            .map(|(i, j)| rows[i].hamming(&rows[j]))
            .min();
        Ok(BinaryConstantWeightCode {
            length,
            weight,
            min_distance,
            rows,
        })
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    /// `None` when the code has a single row.
    pub fn min_distance(&self) -> Option<usize> {
        self.min_distance
    }

    pub fn rows(&self) -> &[BitRow] {
        &self.rows
    }

    /// Header `"N M w d"` followed by one line of `0`/`1` per row. A single-row
    /// code reports `d = 0`.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} {} {} {}\n",
            self.length,
            self.size(),
            self.weight,
            self.min_distance.unwrap_or(0)
        );
        for r in &self.rows {
            out.push_str(&r.to_string());
            out.push('\n');
        }
        out
    }

    /// Parses the text format and checks the header against the rows.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Format("empty CWC file".into()))?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Format(format!("bad header {header:?}: {e}")))?;
        let [n, m, w, d] = nums[..] else {
            return Err(Error::Format(format!("header needs 4 fields: {header:?}")));
        };
        let rows = lines
            .map(|line| {
                let bits: Vec<bool> = line
                    .trim()
                    .chars()
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        other => Err(Error::Format(format!("unexpected character {other:?}"))),
                    })
                    .collect::<Result<_>>()?;
                Ok(BitRow::from_bools(&bits))
            })
            .collect::<Result<Vec<_>>>()?;
        let code = Self::from_bit_rows(n, rows)?;
        let got = (code.size(), code.weight, code.min_distance.unwrap_or(0));
        if got != (m, w, d) {
            return Err(Error::Format(format!(
                "header says M={m} w={w} d={d}, rows give M={} w={} d={}",
                got.0, got.1, got.2
            )));
        }
        Ok(code)
    }
}
