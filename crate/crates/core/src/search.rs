//! Exact `A_q[n, 2δ, l]` by maximum-clique search at desk scale.
//!
//! Vertices are the `l`-subspaces in enumeration order; two are adjacent when
//! their dimension distance is at least `2δ`. Branching follows vertex order
//! and only ever replaces the incumbent by a strictly larger clique, so the
//! first maximum clique reached is the lexicographically least one. Pruning
//! uses a greedy coloring bound; the best closed-form bound stops the search
//! early once reached.

use std::time::{Duration, Instant};

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{bound_report, gaussian_binomial, CodeParams};
use crate::code::{ConstantDimensionCode, INCIDENCE_BUDGET};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::format::CodeFile;
use crate::steiner::{construct_spread, is_steiner_structure};
use crate::subspace::{check_budget, enumerate_subspaces_with_budget, vector_index, Subspace};

pub const DEFAULT_SEARCH_BUDGET: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Also enumerate every maximum clique and test each for the Steiner property.
    pub enumerate_all_optima: bool,
    /// Largest admissible number of vertices `[n l]_q`.
    pub budget: u64,
    /// Fix the first codeword to the span of the first `l` unit vectors.
    pub symmetry_reduction: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            enumerate_all_optima: false,
            budget: DEFAULT_SEARCH_BUDGET,
            symmetry_reduction: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    pub params: CodeParams,
    pub optimum: usize,
    /// Lexicographically least maximum code.
    pub witness: ConstantDimensionCode,
    /// Set when all optima were enumerated.
    pub all_optima_steiner: Option<bool>,
    pub optima_count: Option<u64>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchResultJson {
    pub q: String,
    pub n: String,
    pub delta: String,
    pub l: String,
    pub optimum: String,
    pub all_optima_steiner: Option<bool>,
    pub optima_count: Option<String>,
    pub nodes_explored: String,
    pub elapsed_ms: String,
    pub witness: CodeFile,
}

impl SearchResult {
    pub fn to_json(&self) -> SearchResultJson {
        SearchResultJson {
            q: self.params.q.to_string(),
            n: self.params.n.to_string(),
            delta: self.params.delta.to_string(),
            l: self.params.l.to_string(),
            optimum: self.optimum.to_string(),
            all_optima_steiner: self.all_optima_steiner,
            optima_count: self.optima_count.map(|c| c.to_string()),
            nodes_explored: self.nodes_explored.to_string(),
            elapsed_ms: self.elapsed.as_millis().to_string(),
            witness: CodeFile::from_code(&self.witness),
        }
    }
}

struct Graph {
    words: usize,
    adj: Vec<Vec<u64>>,
}

impl Graph {
    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u][v / 64] >> (v % 64) & 1 == 1
    }
}

/// Compatibility graph: `dim(X ∩ Y) ≤ l − δ`, read off incidence sets since
/// `|X ∩ Y| − 1 = q^dim(X∩Y) − 1`.
fn build_graph(field: &FieldSpec, vertices: &[Subspace], params: &CodeParams) -> Graph {
    let q = field.order();
    let points = (q as usize).pow(params.n);
    let pw = points.div_ceil(64);
    let incidence: Vec<Vec<u64>> = vertices
        .par_iter()
        .map(|x| {
            let mut bits = vec![0u64; pw];
            for v in x.vectors() {
                let i = vector_index(q, &v) as usize;
                bits[i / 64] |= 1 << (i % 64);
            }
            bits[0] &= !1;
            bits
        })
        .collect();
    let max_common = (q as usize).pow(params.l - params.delta) - 1;
    let words = vertices.len().div_ceil(64);
    let adj = (0..vertices.len())
        .into_par_iter()
        .map(|u| {
            let mut row = vec![0u64; words];
            for v in 0..vertices.len() {
                if u == v {
                    continue;
                }
                let common: usize = incidence[u]
                    .iter()
                    .zip(&incidence[v])
                    .map(|(a, b)| (a & b).count_ones() as usize)
                    .sum();
                if common <= max_common {
                    row[v / 64] |= 1 << (v % 64);
                }
            }
            row
        })
        .collect();
    Graph { words, adj }
}

enum Mode {
    /// Find a maximum clique; `floor` is a size known to be attainable.
    Maximum { floor: usize, ceiling: usize },
    /// Visit every clique of exactly this size.
    AllOfSize(usize),
}

struct CliqueSearch<'g, F: FnMut(&[usize])> {
    g: &'g Graph,
    mode: Mode,
    best: Vec<usize>,
    nodes: u64,
    stop: bool,
    on_clique: F,
}

impl<F: FnMut(&[usize])> CliqueSearch<'_, F> {
    fn need(&self) -> usize {
        match self.mode {
            Mode::Maximum { floor, .. } => floor.max(self.best.len() + 1),
            Mode::AllOfSize(k) => k,
        }
    }

    fn record(&mut self, clique: &[usize]) {
        match self.mode {
            Mode::Maximum { ceiling, .. } => {
                if clique.len() > self.best.len() {
                    self.best = clique.to_vec();
                    if self.best.len() >= ceiling {
                        self.stop = true;
                    }
                }
            }
            Mode::AllOfSize(k) => {
                if clique.len() == k {
                    (self.on_clique)(clique);
                }
            }
        }
    }

    /// Number of distinct colors on each suffix `cand[i..]` under a proper coloring.
    fn suffix_color_bounds(&self, cand: &[usize]) -> Vec<usize> {
        let words = self.g.words;
        let mut uncolored = vec![0u64; words];
        for &v in cand {
            uncolored[v / 64] |= 1 << (v % 64);
        }
        let mut color = vec![0usize; cand.len()];
        let pos_of = |v: usize| cand.binary_search(&v).expect("candidate");
        let mut k = 0;
        let mut remaining = cand.len();
        while remaining > 0 {
            let mut avail = uncolored.clone();
            // take vertices from the highest index down
            while let Some(v) = highest_bit(&avail) {
                avail[v / 64] &= !(1 << (v % 64));
                uncolored[v / 64] &= !(1 << (v % 64));
                for (a, n) in avail.iter_mut().zip(&self.g.adj[v]) {
                    *a &= !n;
                }
                color[pos_of(v)] = k;
                remaining -= 1;
            }
            k += 1;
        }
        let mut seen = vec![false; k];
        let mut distinct = 0;
        let mut out = vec![0; cand.len()];
        for i in (0..cand.len()).rev() {
            if !seen[color[i]] {
                seen[color[i]] = true;
                distinct += 1;
            }
            out[i] = distinct;
        }
        out
    }

    fn is_clique(&self, cand: &[usize]) -> bool {
        let mut mask = vec![0u64; self.g.words];
        for &v in cand {
            mask[v / 64] |= 1 << (v % 64);
        }
        cand.iter().all(|&v| {
            let deg: usize = self.g.adj[v]
                .iter()
                .zip(&mask)
                .map(|(a, m)| (a & m).count_ones() as usize)
                .sum();
            deg + 1 == cand.len()
        })
    }

    fn expand(&mut self, clique: &mut Vec<usize>, cand: Vec<usize>) {
        self.nodes += 1;
        self.record(clique);
        if self.stop || cand.is_empty() || clique.len() + cand.len() < self.need() {
            return;
        }
        if self.is_clique(&cand) {
            let len = clique.len();
            clique.extend(&cand);
            self.record(clique);
            clique.truncate(len);
            return;
        }
        let bounds = self.suffix_color_bounds(&cand);
        for i in 0..cand.len() {
            if self.stop || clique.len() + bounds[i] < self.need() {
                break;
            }
            let v = cand[i];
            let next: Vec<usize> = cand[i + 1..]
                .iter()
                .copied()
                .filter(|&u| self.g.adjacent(v, u))
                .collect();
            clique.push(v);
            self.expand(clique, next);
            clique.pop();
        }
    }
}

fn highest_bit(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .rev()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + 63 - w.leading_zeros() as usize)
}

fn spread_size_if_applicable(field: &FieldSpec, p: &CodeParams) -> Option<usize> {
    let (n, l) = (p.n as usize, p.l as usize);
    if p.delta != p.l || n % l != 0 || n / l < 2 {
        return None;
    }
    construct_spread(field, l, n / l)
        .ok()
        .map(|s| s.code.size())
}

pub fn brute_force_optimum(
    params: &CodeParams,
    enumerate_all_optima: bool,
) -> Result<SearchResult> {
    brute_force_optimum_with(
        params,
        &SearchOptions {
            enumerate_all_optima,
            ..SearchOptions::default()
        },
    )
}

pub fn brute_force_optimum_with(params: &CodeParams, opts: &SearchOptions) -> Result<SearchResult> {
    params.validate()?;
    let start = Instant::now();
    let count = gaussian_binomial(params.n, params.l, params.q)?;
    check_budget(
        format!("search graph [{} {}]_{}", params.n, params.l, params.q),
        &count,
        opts.budget,
    )?;
    let field = FieldSpec::from_order(params.q)?;
    let ambient = (params.q as u128).pow(params.n);
    if ambient > INCIDENCE_BUDGET as u128 {
        return Err(Error::BudgetExceeded {
            what: format!("ambient space GF({})^{}", params.q, params.n),
            size: ambient.to_string(),
            budget: INCIDENCE_BUDGET,
        });
    }
    let vertices: Vec<Subspace> =
        enumerate_subspaces_with_budget(&field, params.n as usize, params.l as usize, opts.budget)?
            .collect();
    let graph = build_graph(&field, &vertices, params);

    let ceiling = bound_report(params)?
        .best
        .to_usize()
        .unwrap_or(usize::MAX)
        .min(vertices.len());
    let floor = spread_size_if_applicable(&field, params).unwrap_or(1);

    let mut search = CliqueSearch {
        g: &graph,
        mode: Mode::Maximum { floor, ceiling },
        best: Vec::new(),
        nodes: 0,
        stop: false,
        on_clique: |_: &[usize]| {},
    };
    let mut clique = Vec::new();
    if opts.symmetry_reduction {
        let cand = (1..vertices.len())
            .filter(|&u| graph.adjacent(0, u))
            .collect();
        clique.push(0);
        search.expand(&mut clique, cand);
    } else {
        search.expand(&mut clique, (0..vertices.len()).collect());
    }
    let best = std::mem::take(&mut search.best);
    let mut nodes = search.nodes;
    if best.len() < floor {
        return Err(Error::ConstructionVerificationFailed(format!(
            "search found {} codewords below the constructed {floor}",
            best.len()
        )));
    }
    let optimum = best.len();

    let witness = ConstantDimensionCode::new(
        &field,
        params.n as usize,
        params.l as usize,
        best.iter().map(|&i| vertices[i].clone()).collect(),
    )?;
    validate_witness(&witness, params, optimum, ceiling)?;

    let (mut all_optima_steiner, mut optima_count) = (None, None);
    if opts.enumerate_all_optima {
        let t = (params.l - params.delta + 1) as usize;
        let mut all_steiner = true;
        let mut total = 0u64;
        let mut failure = None;
        let mut all = CliqueSearch {
            g: &graph,
            mode: Mode::AllOfSize(optimum),
            best: Vec::new(),
            nodes: 0,
            stop: false,
            on_clique: |c: &[usize]| {
                total += 1;
                let code = ConstantDimensionCode::new(
                    &field,
                    params.n as usize,
                    params.l as usize,
                    c.iter().map(|&i| vertices[i].clone()).collect(),
                );
                match code.and_then(|code| is_steiner_structure(&code, t)) {
                    Ok(check) => all_steiner &= check.holds,
                    Err(e) => failure = Some(e),
                }
            },
        };
        all.expand(&mut Vec::new(), (0..vertices.len()).collect());
        nodes += all.nodes;
        if let Some(e) = failure {
            return Err(e);
        }
        all_optima_steiner = Some(all_steiner);
        optima_count = Some(total);
    }

    Ok(SearchResult {
        params: *params,
        optimum,
        witness,
        all_optima_steiner,
        optima_count,
        nodes_explored: nodes,
        elapsed: start.elapsed(),
    })
}

/// Re-checks a witness through the code module, independent of the graph.
fn validate_witness(
    code: &ConstantDimensionCode,
    params: &CodeParams,
    optimum: usize,
    ceiling: usize,
) -> Result<()> {
    if code.size() != optimum || code.dim() != params.l as usize {
        return Err(Error::ConstructionVerificationFailed(format!(
            "witness has {} codewords of dimension {}",
            code.size(),
            code.dim()
        )));
    }
    if let Some(d) = code.min_distance_opt() {
        if d < 2 * params.delta as usize {
            return Err(Error::DistanceTooSmall {
                required: 2 * params.delta as usize,
                actual: d,
            });
        }
    }
    if optimum > ceiling {
        return Err(Error::ConstructionVerificationFailed(format!(
            "optimum {optimum} exceeds the bound {ceiling}"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct DualityReport {
    pub primal: SearchResult,
    pub dual: SearchResult,
    pub optima_equal: bool,
    /// Complements of each witness form a valid optimum for the other side.
    pub witnesses_map: bool,
}

impl DualityReport {
    pub fn holds(&self) -> bool {
        self.optima_equal && self.witnesses_map
    }
}

fn maps_to(witness: &ConstantDimensionCode, target: &SearchResult) -> bool {
    let dual = witness.dual_code();
    dual.dim() == target.params.l as usize
        && dual.size() == target.optimum
        && dual
            .min_distance_opt()
            .is_none_or(|d| d >= 2 * target.params.delta as usize)
}

/// Searches both `(n, δ, l)` and `(n, δ, n − l)` and compares.
pub fn verify_duality(params: &CodeParams) -> Result<DualityReport> {
    verify_duality_with(params, &SearchOptions::default())
}

pub fn verify_duality_with(params: &CodeParams, opts: &SearchOptions) -> Result<DualityReport> {
    params.validate()?;
    let dual_params = params.dual().ok_or_else(|| {
        Error::InvalidParams(format!(
            "n - l = {} is below delta = {}",
            params.n - params.l,
            params.delta
        ))
    })?;
    let primal = brute_force_optimum_with(params, opts)?;
    let dual = brute_force_optimum_with(&dual_params, opts)?;
    let witnesses_map = maps_to(&primal.witness, &dual) && maps_to(&dual.witness, &primal);
    Ok(DualityReport {
        optima_equal: primal.optimum == dual.optimum,
        witnesses_map,
        primal,
        dual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(q: u64, n: u32, delta: u32, l: u32) -> CodeParams {
        CodeParams::new(q, n, delta, l).unwrap()
    }

    #[test]
    fn small_optima() {
        assert_eq!(
            brute_force_optimum(&p(2, 4, 2, 2), false).unwrap().optimum,
            5
        );
        assert_eq!(
            brute_force_optimum(&p(2, 4, 1, 2), false).unwrap().optimum,
            35
        );
        assert_eq!(
            brute_force_optimum(&p(2, 6, 3, 3), false).unwrap().optimum,
            9
        );
        assert_eq!(
            brute_force_optimum(&p(2, 3, 1, 3), false).unwrap().optimum,
            1
        );
    }

    #[test]
    fn budget_is_enforced() {
        let opts = SearchOptions {
            budget: 30,
            ..SearchOptions::default()
        };
        assert!(matches!(
            brute_force_optimum_with(&p(2, 4, 2, 2), &opts),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(matches!(
            brute_force_optimum(&p(2, 8, 2, 4), false),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn symmetry_reduction_agrees() {
        for params in [p(2, 4, 2, 2), p(2, 5, 2, 2), p(3, 4, 2, 2)] {
            let plain = brute_force_optimum(&params, false).unwrap();
            let reduced = brute_force_optimum_with(
                &params,
                &SearchOptions {
                    symmetry_reduction: true,
                    ..SearchOptions::default()
                },
            )
            .unwrap();
            assert_eq!(plain.optimum, reduced.optimum);
            assert_eq!(plain.witness, reduced.witness);
        }
    }

    #[test]
    fn duality_needs_valid_dual() {
        assert!(matches!(
            verify_duality(&p(2, 4, 2, 3)),
            Err(Error::InvalidParams(_))
        ));
    }

    #[test]
    fn suffix_bounds_are_monotone_and_cover_cliques() {
        let field = FieldSpec::from_order(2).unwrap();
        let params = p(2, 5, 2, 2);
        let vertices: Vec<Subspace> = enumerate_subspaces_with_budget(&field, 5, 2, 1000)
            .unwrap()
            .collect();
        let g = build_graph(&field, &vertices, &params);
        let s = CliqueSearch {
            g: &g,
            mode: Mode::AllOfSize(1),
            best: Vec::new(),
            nodes: 0,
            stop: false,
            on_clique: |_: &[usize]| {},
        };
        let cand: Vec<usize> = (0..vertices.len()).collect();
        let b = s.suffix_color_bounds(&cand);
        assert!(b.windows(2).all(|w| w[0] >= w[1]));
        assert!(b[0] >= 9);
    }
}
