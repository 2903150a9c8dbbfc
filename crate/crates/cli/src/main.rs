use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use cdcodes::bounds::{bound_ratio_table, OrientationBounds};
use cdcodes::code::BinaryConstantWeightCode;
use cdcodes::search::{brute_force_optimum_with, SearchOptions, DEFAULT_SEARCH_BUDGET};
use cdcodes::steiner::SteinerCheck;
use cdcodes::{
    bound_report, construct_spread, is_steiner_structure, CodeFile, CodeParams, FieldSpec,
};
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "cdcodes",
    version,
    about = "Constant dimension codes: bounds, spreads, verification, search"
)]
struct Cli {
    /// Emit JSON instead of text (errors go to stderr as JSON too).
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Upper bounds on A_q[n, 2δ, l].
    Bounds {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        delta: u32,
        #[arg(long)]
        l: u32,
    },
    /// Build and verify the spread S[1, l, kl]_q.
    Spread {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report parameters of a code file.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        /// Also check the Steiner property at this t.
        #[arg(long)]
        steiner: Option<usize>,
    },
    /// Write the binary constant weight code of a code file.
    DeriveCwc {
        #[arg(long = "in")]
        input: PathBuf,
        /// Use projective points as columns.
        #[arg(long)]
        punctured: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Exact A_q[n, 2δ, l] by clique search.
    Search {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        delta: u32,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        all_optima: bool,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
        /// Fix the first codeword (optimum value only).
        #[arg(long)]
        symmetry: bool,
    },
    /// Singleton over WXS ratio for several q.
    Ratio {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        delta: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        q_list: Vec<u64>,
        #[arg(long, default_value_t = 2)]
        digits: u32,
    },
}

enum Failure {
    Usage(String),
    Io(String),
    Domain(cdcodes::Error),
}

impl From<cdcodes::Error> for Failure {
    fn from(e: cdcodes::Error) -> Self {
        Failure::Domain(e)
    }
}

impl Failure {
    fn kind(&self) -> &'static str {
        match self {
            Failure::Usage(_) => "Usage",
            Failure::Io(_) => "Io",
            Failure::Domain(e) => e.kind(),
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) | Failure::Io(m) => m.clone(),
            Failure::Domain(e) => e.to_string(),
        }
    }

    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            _ => 1,
        }
    }
}

type Out = Result<String, Failure>;

fn check_params(q: u64, n: u32, delta: u32, l: u32) -> Result<CodeParams, Failure> {
    if q < 2 {
        return Err(Failure::Usage(format!("--q must be at least 2, got {q}")));
    }
    if delta < 1 {
        return Err(Failure::Usage("--delta must be at least 1".into()));
    }
    if delta > l {
        return Err(Failure::Usage(format!("--delta {delta} exceeds --l {l}")));
    }
    if l > n {
        return Err(Failure::Usage(format!("--l {l} exceeds --n {n}")));
    }
    Ok(CodeParams { q, n, delta, l })
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

fn cmd_bounds(params: CodeParams, json: bool) -> Out {
    let report = bound_report(&params)?;
    if json {
        return Ok(to_json(&report.to_json()));
    }
    let mut s = format!(
        "params: q={} n={} delta={} l={}\n{:<12} {:>4}  {:<24} {}\n",
        params.q, params.n, params.delta, params.l, "bound", "l", "value", "best"
    );
    let sides: Vec<&OrientationBounds> = std::iter::once(&report.primal)
        .chain(report.dual.as_ref())
        .collect();
    for side in sides {
        for (kind, value) in side.entries() {
            let shown = value.map_or("n/a".to_string(), |v| v.to_string());
            let best = kind == report.best_source.bound && side.l == report.best_source.l;
            s += &format!(
                "{:<12} {:>4}  {:<24} {}\n",
                kind.name(),
                side.l,
                shown,
                if best { "*" } else { "" }
            );
        }
    }
    s += &format!(
        "best: {} ({}, l={})\n",
        report.best,
        report.best_source.bound.name(),
        report.best_source.l
    );
    Ok(s)
}

fn cmd_spread(q: u64, l: usize, k: usize, out: Option<&Path>, json: bool) -> Out {
    if l < 1 {
        return Err(Failure::Usage("--l must be at least 1".into()));
    }
    if k < 2 {
        return Err(Failure::Usage(format!("--k must be at least 2, got {k}")));
    }
    let field = FieldSpec::from_order(q)?;
    let spread = construct_spread(&field, l, k)?;
    let code = &spread.code;
    let d = code.min_distance()?;
    let file = spread.to_file();
    if let Some(path) = out {
        write(path, &file.to_json())?;
    }
    if json {
        let mut v = json!({
            "blocks": code.size().to_string(),
            "params": code.params_string(),
            "min_distance": d.to_string(),
            "steiner": {"t": "1", "holds": true},
        });
        match out {
            Some(path) => v["out"] = json!(path.display().to_string()),
            None => v["code"] = serde_json::to_value(&file).expect("serializable"),
        }
        return Ok(to_json(&v));
    }
    let mut s = format!(
        "blocks: {}\nparams: {}\nmin_distance: {d}\nsteiner: verified t=1\n",
        code.size(),
        code.params_string()
    );
    match out {
        Some(path) => s += &format!("written: {}\n", path.display()),
        None => s += &format!("{}\n", file.to_json()),
    }
    Ok(s)
}

fn witness_json(check: &SteinerCheck) -> serde_json::Value {
    match &check.witness {
        Some(w) => json!({"rows": w.subspace.rows(), "count": w.count.to_string()}),
        None => serde_json::Value::Null,
    }
}

fn cmd_verify(input: &Path, steiner: Option<usize>, json: bool) -> Out {
    let code = CodeFile::parse(&read(input)?)?.to_code()?;
    if let Some(t) = steiner {
        if t < 1 || t > code.dim() {
            return Err(Failure::Usage(format!(
                "--steiner {t} must lie in 1..={}",
                code.dim()
            )));
        }
    }
    let d = code.min_distance_opt();
    let check = steiner
        .map(|t| is_steiner_structure(&code, t))
        .transpose()?;
    let d_str = d.map_or("-".to_string(), |d| d.to_string());
    if json {
        let mut v = json!({
            "params": code.params_string(),
            "n": code.ambient_dim().to_string(),
            "size": code.size().to_string(),
            "l": code.dim().to_string(),
            "min_distance": d.map(|d| d.to_string()),
        });
        if let Some(c) = &check {
            v["steiner"] =
                json!({"t": c.t.to_string(), "holds": c.holds, "witness": witness_json(c)});
        }
        return Ok(to_json(&v));
    }
    let mut s = format!(
        "params: {}\nsize: {}\nmin_distance: {d_str}\n",
        code.params_string(),
        code.size()
    );
    if let Some(c) = &check {
        s += &format!("steiner: {} (t={})\n", c.holds, c.t);
        if let Some(w) = &c.witness {
            s += &format!(
                "witness: {} in {} blocks\n",
                to_json(&w.subspace.rows()),
                w.count
            );
        }
    }
    Ok(s)
}

fn cmd_derive_cwc(input: &Path, punctured: bool, out: &Path, json: bool) -> Out {
    let code = CodeFile::parse(&read(input)?)?.to_code()?;
    let cwc = if punctured {
        code.punctured_cwc()?
    } else {
        code.derived_cwc()?
    };
    let text = cwc.to_text();
    write(out, &text)?;
    let reparsed = BinaryConstantWeightCode::parse_text(&text)?;
    let d = reparsed.min_distance().unwrap_or(0);
    if json {
        return Ok(to_json(&json!({
            "length": reparsed.length().to_string(),
            "size": reparsed.size().to_string(),
            "weight": reparsed.weight().to_string(),
            "min_distance": d.to_string(),
            "out": out.display().to_string(),
        })));
    }
    Ok(format!(
        "{} {} {} {d}\n",
        reparsed.length(),
        reparsed.size(),
        reparsed.weight()
    ))
}

fn cmd_search(params: CodeParams, opts: SearchOptions, json: bool) -> Out {
    let result = brute_force_optimum_with(&params, &opts)?;
    let v = result.to_json();
    Ok(if json {
        to_json(&v)
    } else {
        serde_json::to_string_pretty(&v).expect("serializable") + "\n"
    })
}

fn cmd_ratio(n: u32, l: u32, delta: u32, q_list: &[u64], digits: u32, json: bool) -> Out {
    for &q in q_list {
        check_params(q, n, delta, l)?;
    }
    let ratios = bound_ratio_table(n, l, delta, q_list, digits)?;
    if json {
        let rows: Vec<_> = q_list
            .iter()
            .zip(&ratios)
            .map(|(q, r)| json!({"q": q.to_string(), "ratio": r}))
            .collect();
        return Ok(to_json(&json!({
            "n": n.to_string(),
            "l": l.to_string(),
            "delta": delta.to_string(),
            "digits": digits.to_string(),
            "ratios": rows,
        })));
    }
    let mut s = String::from("q ratio\n");
    for (q, r) in q_list.iter().zip(&ratios) {
        s += &format!("{q} {r}\n");
    }
    Ok(s)
}

fn run(cli: &Cli) -> Out {
    let json = cli.json;
    match &cli.command {
        Command::Bounds { q, n, delta, l } => cmd_bounds(check_params(*q, *n, *delta, *l)?, json),
        Command::Spread { q, l, k, out } => cmd_spread(*q, *l, *k, out.as_deref(), json),
        Command::Verify { input, steiner } => cmd_verify(input, *steiner, json),
        Command::DeriveCwc {
            input,
            punctured,
            out,
        } => cmd_derive_cwc(input, *punctured, out, json),
        Command::Search {
            q,
            n,
            delta,
            l,
            all_optima,
            budget,
            symmetry,
        } => {
            let params = check_params(*q, *n, *delta, *l)?;
            if *all_optima && *symmetry {
                return Err(Failure::Usage(
                    "--symmetry cannot be combined with --all-optima".into(),
                ));
            }
            let opts = SearchOptions {
                enumerate_all_optima: *all_optima,
                budget: *budget,
                symmetry_reduction: *symmetry,
            };
            cmd_search(params, opts, json)
        }
        Command::Ratio {
            n,
            l,
            delta,
            q_list,
            digits,
        } => cmd_ratio(*n, *l, *delta, q_list, *digits, json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            if cli.json {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            if cli.json {
                eprintln!(
                    "{}",
                    to_json(&json!({"error": {"kind": f.kind(), "message": f.message()}}))
                );
            } else {
                eprintln!("error[{}]: {}", f.kind(), f.message());
            }
            ExitCode::from(f.code())
        }
    }
}
