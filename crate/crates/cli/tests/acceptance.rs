//! Acceptance criteria 1-9, one PASS/FAIL line each.

use std::collections::HashSet;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use cdcodes::bounds::{johnson_i_bound, johnson_ii_bound, singleton_bound, wxs_bound, CodeParams};
use cdcodes::code::ConstantDimensionCode;
use cdcodes::subspace::vector_index;
use cdcodes::{
    bound_report, brute_force_optimum, construct_spread, enumerate_subspaces, is_steiner_structure,
    verify_duality, FieldSpec, Subspace,
};

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn rat(v: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(v.clone()))
}

fn field(q: u64) -> FieldSpec {
    FieldSpec::from_order(q).unwrap()
}

fn c1() -> Outcome {
    let r = bound_report(&CodeParams::new(2, 6, 2, 3).unwrap()).map_err(|e| e.to_string())?;
    check(
        r.singleton() == &big(155),
        format!("singleton {}", r.singleton()),
    )?;
    check(
        r.wxs() == &big(93) && r.primal.wxs_exact == rat(&big(93)),
        "wxs not exactly 93",
    )?;
    check(
        r.johnson_ii() == &big(90),
        format!("johnson_ii {}", r.johnson_ii()),
    )?;
    check(r.johnson_i().is_none(), "johnson_i should not apply")?;
    Ok("B_S=155 B_WXS=93 J_II=90 J_I=n/a".into())
}

fn c2() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_cdcodes"))
        .args([
            "ratio", "--n", "100", "--l", "40", "--delta", "20", "--q-list", "2,3,4,5",
        ])
        .output()
        .map_err(|e| e.to_string())?;
    check(out.status.success(), "ratio command failed")?;
    let text = String::from_utf8_lossy(&out.stdout);
    let got: Vec<&str> = text
        .lines()
        .skip(1)
        .filter_map(|l| l.split_whitespace().nth(1))
        .collect();
    check(
        got == ["3.46", "1.79", "1.45", "1.32"],
        format!("got {got:?}"),
    )?;
    Ok(got.join(" "))
}

const SPREADS: [(u64, usize, usize); 4] = [(2, 2, 2), (2, 2, 3), (2, 3, 2), (3, 2, 2)];

fn c3() -> Outcome {
    let mut sizes = Vec::new();
    for (q, l, k) in SPREADS {
        let s = construct_spread(&field(q), l, k).map_err(|e| format!("({q},{l},{k}): {e}"))?;
        let code = &s.code;
        let want = ((q as usize).pow((k * l) as u32) - 1) / ((q as usize).pow(l as u32) - 1);
        check(
            code.size() == want,
            format!("({q},{l},{k}) has {} blocks", code.size()),
        )?;
        let words = code.codewords();
        for i in 0..words.len() {
            for j in i + 1..words.len() {
                check(
                    words[i].intersect_dim(&words[j]).unwrap() == 0,
                    "blocks meet",
                )?;
            }
        }
        let mut covered = vec![0u32; (q as usize).pow((k * l) as u32)];
        for w in words {
            for v in w.vectors() {
                covered[vector_index(q as u32, &v) as usize] += 1;
            }
        }
        check(
            covered[1..].iter().all(|&c| c == 1),
            "not a partition of nonzero vectors",
        )?;
        check(code.min_distance().unwrap() == 2 * l, "min distance")?;
        check(
            is_steiner_structure(code, 1).unwrap().holds,
            "not Steiner at t=1",
        )?;
        sizes.push(format!("({q},{l},{k})->{want}"));
    }
    Ok(sizes.join(" "))
}

fn c4() -> Outcome {
    for (q, l, k) in SPREADS {
        let m = big(construct_spread(&field(q), l, k).unwrap().code.size() as u64);
        let p = CodeParams::new(q, (k * l) as u32, l as u32, l as u32).unwrap();
        check(wxs_bound(&p).0 == m, format!("wxs at {p}"))?;
        check(
            johnson_i_bound(&p) == Some(m.clone()),
            format!("johnson_i at {p}"),
        )?;
        check(johnson_ii_bound(&p) == m, format!("johnson_ii at {p}"))?;
    }
    Ok("M = floor(WXS) = J_I = J_II on all four spreads".into())
}

fn c5() -> Outcome {
    let p = CodeParams::new(2, 4, 2, 2).unwrap();
    let r = brute_force_optimum(&p, true).map_err(|e| e.to_string())?;
    let spread = construct_spread(&field(2), 2, 2).unwrap();
    check(
        r.optimum == 5 && spread.code.size() == 5,
        format!("optimum {}", r.optimum),
    )?;
    check(
        r.all_optima_steiner == Some(true),
        "some optimum is not a spread",
    )?;
    Ok(format!(
        "optimum 5, {} optima all S[1,2,4]_2",
        r.optima_count.unwrap_or(0)
    ))
}

fn span(f: &FieldSpec, n: usize, rows: &[Vec<u32>]) -> HashSet<Vec<u32>> {
    let mut out = HashSet::from([vec![0; n]]);
    for r in rows {
        let mut next = HashSet::new();
        for v in &out {
            for c in 0..f.order() {
                next.insert(
                    v.iter()
                        .zip(r)
                        .map(|(&a, &b)| f.add(a, f.mul(c, b)))
                        .collect::<Vec<u32>>(),
                );
            }
        }
        out = next;
    }
    out
}

fn log_q(q: u32, mut size: usize) -> usize {
    let mut k = 0;
    while size > 1 {
        size /= q as usize;
        k += 1;
    }
    k
}

/// Three subspaces of one random ambient space.
fn triple() -> impl Strategy<Value = (u64, usize, Vec<Vec<Vec<u32>>>)> {
    (prop::sample::select(vec![2u64, 3, 4, 5]), 1..=4usize).prop_flat_map(|(q, n)| {
        let mat = prop::collection::vec(prop::collection::vec(0..q as u32, n), 0..=n);
        (Just(q), Just(n), prop::collection::vec(mat, 3))
    })
}

fn run_prop<S: Strategy>(
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new(Config {
        cases: 200,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&strategy, test)
        .map_err(|e| format!("{name}: {e}"))
}

fn c6() -> Outcome {
    run_prop(
        "metric, distance formulas and complements",
        triple(),
        |(q, n, mats)| {
            let f = field(q);
            let s: Vec<Subspace> = mats
                .iter()
                .map(|m| Subspace::from_rows(&f, n, m).unwrap())
                .collect();
            let d = |a: &Subspace, b: &Subspace| a.dimension_distance(b).unwrap();
            let (a, b, c) = (&s[0], &s[1], &s[2]);
            prop_assert_eq!(d(a, a), 0);
            prop_assert_eq!(d(a, b), d(b, a));
            prop_assert_eq!(d(a, b) == 0, a == b);
            prop_assert!(d(a, c) <= d(a, b) + d(b, c));
            let cap = log_q(
                f.order(),
                span(&f, n, a.rows())
                    .intersection(&span(&f, n, b.rows()))
                    .count(),
            );
            let sum = a.sum_dim(b).unwrap();
            prop_assert_eq!(a.intersect_dim(b).unwrap(), cap);
            prop_assert_eq!(sum - cap, a.dim() + b.dim() - 2 * cap);
            let (ap, bp) = (a.orthogonal_complement(), b.orthogonal_complement());
            prop_assert_eq!(d(&ap, &bp), d(a, b));
            prop_assert_eq!(&ap.orthogonal_complement(), a);
            prop_assert_eq!(
                ap.intersection(&bp).unwrap(),
                a.sum(b).unwrap().orthogonal_complement()
            );
            Ok(())
        },
    )?;
    run_prop(
        "RREF canonicality",
        (
            triple(),
            prop::collection::vec((0usize..8, 0usize..8, 1u32..5), 0..10),
        ),
        |((q, n, mats), ops)| {
            let f = field(q);
            let mut m = mats[0].clone();
            let base = Subspace::from_rows(&f, n, &m).unwrap();
            for (i, j, c) in ops {
                if m.len() < 2 {
                    break;
                }
                let (i, j, c) = (i % m.len(), j % m.len(), c % q as u32);
                if i == j {
                    if c != 0 {
                        m[i].iter_mut().for_each(|x| *x = f.mul(*x, c));
                    }
                } else {
                    let src = m[j].clone();
                    m[i].iter_mut()
                        .zip(&src)
                        .for_each(|(x, y)| *x = f.add(*x, f.mul(c, *y)));
                    m.swap(i, j);
                }
            }
            prop_assert_eq!(Subspace::from_rows(&f, n, &m).unwrap(), base);
            Ok(())
        },
    )?;
    let codes = |qs: Vec<u64>| {
        (prop::sample::select(qs), 2..=4usize)
            .prop_flat_map(|(q, n)| {
                (
                    Just(q),
                    Just(n),
                    1..n,
                    prop::collection::vec(any::<prop::sample::Index>(), 2..6),
                )
            })
            .prop_map(|(q, n, l, picks)| {
                let f = field(q);
                let all: Vec<Subspace> = enumerate_subspaces(&f, n, l).unwrap().collect();
                let words = picks
                    .iter()
                    .map(|i| all[i.index(all.len())].clone())
                    .collect();
                ConstantDimensionCode::new(&f, n, l, words).unwrap()
            })
    };
    run_prop(
        "incidence row intersections and distances",
        codes(vec![2, 3]),
        |code| {
            let cwc = code.derived_cwc().unwrap();
            let q = code.field().order() as usize;
            let l = code.dim() as u32;
            let w = code.codewords();
            for i in 0..w.len() {
                for j in i + 1..w.len() {
                    let k = w[i].intersect_dim(&w[j]).unwrap() as u32;
                    prop_assert_eq!(cwc.rows()[i].and_weight(&cwc.rows()[j]), q.pow(k) - 1);
                    prop_assert_eq!(
                        cwc.rows()[i].hamming(&cwc.rows()[j]),
                        2 * (q.pow(l) - q.pow(k))
                    );
                }
            }
            Ok(())
        },
    )?;
    run_prop("column replication at q=3", codes(vec![3]), |code| {
        let (f, n) = (code.field().clone(), code.ambient_dim());
        let derived = code.derived_cwc().unwrap();
        let punctured = code.punctured_cwc().unwrap();
        let mut pos = 0;
        for idx in 1..3u64.pow(n as u32) {
            let v: Vec<u32> = (0..n)
                .rev()
                .map(|i| (idx / 3u64.pow(i as u32) % 3) as u32)
                .collect();
            if v.iter().find(|&&x| x != 0) != Some(&1) {
                continue;
            }
            for c in 1..3 {
                let cv: Vec<u32> = v.iter().map(|&x| f.mul(c, x)).collect();
                let col = vector_index(3, &cv) as usize - 1;
                for (dr, pr) in derived.rows().iter().zip(punctured.rows()) {
                    prop_assert_eq!(dr.get(col), pr.get(pos));
                }
            }
            pos += 1;
        }
        prop_assert_eq!(pos, punctured.length());
        Ok(())
    })?;
    Ok("4 runs x 200 cases over all eight properties, zero failures".into())
}

fn sweep() -> Vec<CodeParams> {
    let mut out = Vec::new();
    for q in [2u64, 3, 4, 5] {
        for n in 2..=14u32 {
            for l in 2..n {
                for delta in 2..=l {
                    out.push(CodeParams { q, n, delta, l });
                }
            }
        }
    }
    out
}

fn c7() -> Outcome {
    let mut violations = Vec::new();
    let four = BigRational::from_integer(4.into());
    let all = sweep();
    for p in &all {
        let s = rat(&singleton_bound(p));
        let w = wxs_bound(p).1;
        let mid = &four * rat(&BigUint::from(p.q).pow((p.l - p.delta + 1) * (p.n - p.l)));
        if !(w < s && s < mid && mid < &four * &w) {
            violations.push(*p);
        }
    }
    let mut delta_one = 0;
    for q in [2u64, 3, 4, 5] {
        for n in 2..=14u32 {
            for l in 1..=n {
                let p = CodeParams { q, n, delta: 1, l };
                delta_one += 1;
                if rat(&singleton_bound(&p)) != wxs_bound(&p).1 {
                    violations.push(p);
                }
            }
        }
    }
    check(violations.is_empty(), format!("violations: {violations:?}"))?;
    Ok(format!(
        "{} chain checks, {delta_one} delta=1 equalities, 0 violations",
        all.len()
    ))
}

fn c8() -> Outcome {
    let all = sweep();
    let bad: Vec<_> = all
        .iter()
        .filter(|p| johnson_ii_bound(p) > wxs_bound(p).0)
        .collect();
    check(bad.is_empty(), format!("violations: {bad:?}"))?;
    Ok(format!("{} parameter sets, 0 violations", all.len()))
}

fn c9() -> Outcome {
    let mut parts = Vec::new();
    for (q, n, d, l) in [(2, 5, 2, 2), (2, 4, 1, 1)] {
        let r = verify_duality(&CodeParams::new(q, n, d, l).unwrap()).map_err(|e| e.to_string())?;
        check(r.optima_equal, format!("({q},{n},{d},{l}) optima differ"))?;
        check(
            r.witnesses_map,
            format!("({q},{n},{d},{l}) witnesses do not map"),
        )?;
        parts.push(format!(
            "A({n},{},{l})=A({n},{},{})={}",
            2 * d,
            2 * d,
            n - l,
            r.primal.optimum
        ));
    }
    Ok(parts.join(" "))
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome, u64);
    let criteria: [Criterion; 9] = [
        ("golden bounds (2,6,2,3)", c1, 1),
        ("ratio table n=100 l=40 delta=20", c2, 10),
        ("spread construction postconditions", c3, 30),
        ("bound tightness on spreads", c4, 30),
        ("oracle agreement (2,4,2,2)", c5, 60),
        ("property suites", c6, 600),
        ("inequality sweep", c7, 30),
        ("johnson II vs WXS", c8, 30),
        ("duality at desk scale", c9, 120),
    ];
    let mut failed = 0;
    for (i, (name, f, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let result = match result {
            Ok(msg) if took > Duration::from_secs(*limit) => {
                Err(format!("{msg}; over the {limit}s limit"))
            }
            other => other,
        };
        match result {
            Ok(msg) => println!(
                "criterion {}: PASS {name}: {msg} ({:.2}s)",
                i + 1,
                took.as_secs_f64()
            ),
            Err(msg) => {
                failed += 1;
                println!(
                    "criterion {}: FAIL {name}: {msg} ({:.2}s)",
                    i + 1,
                    took.as_secs_f64()
                );
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
