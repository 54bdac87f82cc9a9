//! `dowling`: compute, verify and tabulate Turán numbers of frame matroids.
//!
//! stdout carries one JSON document (or a CSV table); diagnostics go to stderr.
//! Exit codes: 0 pass, 1 claim failure, 2 budget exhausted, 3 usage.

mod table;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use dowling::constructions::{self, RECIPES};
use dowling::descriptor::MatroidDescriptor;
use dowling::extremal::{
    classify_extremal, ex_prepared, find_forbidden, verify_prepared, Cache, Certificate, Detection, Equivalence,
    ExtremalProblem, Prepared, SearchOptions, Status, DEEP_BUDGET, DEFAULT_BUDGET,
};
use dowling::theorems::{verify_theorem, TheoremOptions, THEOREM_IDS};
use dowling::patterns::has_clique_copy;
use dowling::{Error, GroupTable};
use serde_json::json;
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

const EXIT_CLAIM: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "dowling", version, about = "Certified Turán numbers for Dowling geometries and other frame matroids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute, verify or classify ex(host, forbidden).
    Ex(ExArgs),
    /// Run the checks bundled under a theorem id.
    Verify(VerifyArgs),
    /// Density table ex(Q_n(G), N) / (|G| C(n,2)) for n = 2..=n-max.
    Table(table::TableArgs),
    /// Build a named construction.
    Construct(ConstructArgs),
    /// List theorem ids, construction recipes and descriptor forms.
    Catalog,
}

/// Options shared by everything that runs the search engine.
#[derive(Args, Clone)]
struct EngineArgs {
    /// Raise the per-certificate budget to 30 minutes.
    #[arg(long)]
    deep: bool,
    /// Per-certificate budget in seconds (overrides --deep).
    #[arg(long)]
    budget: Option<u64>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    jobs: Option<usize>,
    /// Seed for randomized starts and cross-checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl EngineArgs {
    fn search(&self) -> SearchOptions {
        let mut o = SearchOptions::default();
        o.budget = Some(match (self.budget, self.deep) {
            (Some(s), _) => Duration::from_secs(s),
            (None, true) => DEEP_BUDGET,
            (None, false) => DEFAULT_BUDGET,
        });
        if let Some(j) = self.jobs {
            o.jobs = j.max(1);
        }
        o.seed = self.seed;
        o
    }
}

#[derive(Args)]
struct ExArgs {
    /// Group label for a Dowling host, e.g. Z2, Z4, Z2xZ2.
    #[arg(long, requires = "n", conflicts_with = "host")]
    group: Option<String>,
    /// Rank of the Dowling host Q_n(group).
    #[arg(long)]
    n: Option<usize>,
    /// Any host descriptor, e.g. origami:4:3 or matchstick:5:3.
    #[arg(long)]
    host: Option<MatroidDescriptor>,
    /// The excluded matroid, e.g. clique:4, line:5, dowling:3:Z2.
    #[arg(long)]
    forbid: MatroidDescriptor,
    /// auto, pattern, embedding, joint-anchored or brute.
    #[arg(long, default_value = "auto")]
    method: Detection,
    /// Check this value instead of computing it.
    #[arg(long)]
    claimed: Option<usize>,
    /// Comma-separated element names of a witness for --claimed, e.g. "b_1,1_{1,2}".
    #[arg(long, requires = "claimed")]
    witness: Option<String>,
    /// Also group the extremal sets into isomorphism classes.
    #[arg(long)]
    classify: bool,
    /// switching, gain-graph or matroid (default depends on the host).
    #[arg(long, requires = "classify")]
    equivalence: Option<String>,
    /// Directory of the certificate cache (also set by DOWLING_CACHE_DIR).
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    #[command(flatten)]
    engine: EngineArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of the ids printed by `catalog`.
    id: String,
    /// Largest Dowling rank to check (each bundle has its own default)
    #[arg(long)]
    n_max: Option<usize>,
    /// Largest rank for the matchstick and origami bundles
    #[arg(long)]
    r_max: Option<usize>,
    #[command(flatten)]
    engine: EngineArgs,
}

#[derive(Args)]
struct ConstructArgs {
    /// Recipe name, see `catalog`.
    name: String,
    /// Parameters as key=value.
    params: Vec<String>,
    /// Also check the construction is free of the matroid it is built to avoid.
    #[arg(long)]
    check: bool,
}

/// An error carrying its exit code.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        let error = e.into();
        let code = match error.downcast_ref::<Error>() {
            Some(Error::BudgetExhausted { .. }) => EXIT_BUDGET,
            Some(Error::ClaimFailed(_)) => EXIT_CLAIM,
            _ => EXIT_USAGE,
        };
        Failure { code, error }
    }
}

type Outcome = Result<u8, Failure>;

fn emit(value: &impl serde::Serialize) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    write_stdout(format!("{text}\n").as_bytes())
}

/// Writes to stdout, treating a closed pipe as success.
fn write_stdout(bytes: &[u8]) -> anyhow::Result<()> {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    match out.write_all(bytes).and_then(|_| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

/// Splits at commas outside braces and parentheses, so `1_{1,2}` and `(1,-1)_{1,2}` stay whole.
fn split_names(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '{' | '(' => depth += 1,
            '}' | ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur).trim().to_string());
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

fn status_code(status: Status) -> u8 {
    match status {
        Status::Certified => 0,
        Status::ClaimFailed => EXIT_CLAIM,
        Status::BudgetExhausted => EXIT_BUDGET,
    }
}

fn parse_equivalence(s: &str) -> anyhow::Result<Equivalence> {
    serde_json::from_value(json!(s)).with_context(|| format!("unknown equivalence `{s}`; use switching, gain-graph or matroid"))
}

fn cmd_ex(args: ExArgs) -> Outcome {
    let host = match (&args.group, args.n, args.host) {
        (Some(g), Some(n), None) => MatroidDescriptor::dowling(n, &GroupTable::from_label(g)?),
        (None, None, Some(h)) => h,
        _ => return Err(anyhow::anyhow!("give either --group with --n, or --host").into()),
    };
    let problem = ExtremalProblem::new(host, args.forbid).with_detection(args.method);
    let opts = args.engine.search();
    let start = Instant::now();
    let prep = Prepared::new(&problem)?;
    eprintln!("{problem}: {} host elements, detection {}", prep.size(), prep.method);
    let cache = Cache::from_env_or(args.cache_dir.as_deref())?;

    let cert = match args.claimed {
        Some(claimed) => {
            let witness = match &args.witness {
                Some(names) => Some(prep.parse_names(&split_names(names))?),
                None => None,
            };
            match witness {
                Some(w) => verify_prepared(&prep, claimed, w, &opts, start)?,
                None => {
                    let mut c = computed(&prep, &problem, &opts, start, cache.as_ref())?;
                    if c.is_certified() && c.value != claimed {
                        c.note = Some(format!("claimed {claimed}, computed {}", c.value));
                        c.status = Status::ClaimFailed;
                    }
                    c
                }
            }
        }
        None => computed(&prep, &problem, &opts, start, cache.as_ref())?,
    };
    eprintln!("{}: {} ({:?}, {} ms)", cert.problem, cert.value, cert.status, cert.elapsed_ms);

    if args.classify && cert.is_certified() {
        let eq = args.equivalence.as_deref().map(parse_equivalence).transpose()?;
        let classes = classify_extremal(&problem, cert.value, eq, &opts)?;
        emit(&json!({ "certificate": cert, "classes": classes }))?;
    } else {
        emit(&cert)?;
    }
    Ok(status_code(cert.status))
}

fn computed(
    prep: &Prepared,
    problem: &ExtremalProblem,
    opts: &SearchOptions,
    start: Instant,
    cache: Option<&Cache>,
) -> anyhow::Result<Certificate> {
    if let Some(cache) = cache {
        if let Some(hit) = cache.lookup(problem)? {
            eprintln!("cache hit in {}", cache.path().display());
            return Ok(hit);
        }
    }
    let cert = ex_prepared(prep, opts, start)?;
    if let (Some(cache), true) = (cache, cert.is_certified()) {
        cache.store(&cert)?;
    }
    Ok(cert)
}

fn cmd_verify(args: VerifyArgs) -> Outcome {
    let opts = TheoremOptions {
        n_max: args.n_max,
        r_max: args.r_max,
        deep: args.engine.deep,
        search: args.engine.search(),
        seed: args.engine.seed.max(1),
    };
    let report = verify_theorem(&args.id, &opts)?;
    for c in report.checks.iter().filter(|c| !c.passed) {
        eprintln!("FAIL {}: expected {}, observed {}", c.claim, c.expected, c.observed);
    }
    let passed = report.checks.iter().filter(|c| c.passed).count();
    eprintln!("{}: {passed}/{} checks passed", report.id, report.checks.len());
    emit(&json!({ "id": report.id, "passed": report.passed(), "checks": report.checks }))?;
    Ok(if report.passed() {
        0
    } else if report.budget_exhausted() {
        EXIT_BUDGET
    } else {
        EXIT_CLAIM
    })
}

fn cmd_construct(args: ConstructArgs) -> Outcome {
    let mut params = BTreeMap::new();
    for p in &args.params {
        let (k, v) = p.split_once('=').with_context(|| format!("parameter `{p}` is not key=value"))?;
        params.insert(k.to_string(), v.to_string());
    }
    let built = constructions::build(&args.name, &params)?;
    let names: Vec<String> = match (&built.graph, built.kept) {
        (Some(g), _) => g.edges().iter().map(|e| g.edge_name(e.kind)).collect(),
        (None, Some(kept)) => {
            let host = built.host.build()?;
            kept.iter().map(|e| host.element_name(e)).collect()
        }
        (None, None) => Vec::new(),
    };
    let size = built.graph.as_ref().map_or(built.kept.map_or(0, |k| k.len()), |g| g.len());
    let mut out = json!({
        "name": built.name,
        "host": built.host,
        "size": size,
        "predicted_size": built.predicted_size,
        "elements": names,
        "element_ids": built.kept.map(|k| k.to_vec()),
        "graph": built.graph.as_ref().map(|g| g.to_json()),
        "seed": built.seed,
    });
    let mut code = if size == built.predicted_size { 0 } else { EXIT_CLAIM };
    if args.check {
        if let Some(f) = &built.forbidden {
            out["forbidden"] = json!(f);
            let free = match (&built.graph, f, built.kept) {
                // hosts past the bitset limit are checked on the gain graph directly
                (Some(g), MatroidDescriptor::Clique { vertices }, None) => !has_clique_copy(g, *vertices)?,
                (_, _, Some(kept)) => {
                    let copy = find_forbidden(&built.host, f, kept)?;
                    if let Some(c) = copy {
                        let h = built.host.build()?;
                        out["copy"] = json!(c.iter().map(|e| h.element_name(e)).collect::<Vec<_>>());
                    }
                    copy.is_none()
                }
                _ => return Err(anyhow::anyhow!("{} is too large to check against {f}", built.host).into()),
            };
            out["free"] = json!(free);
            if !free {
                code = EXIT_CLAIM;
            }
        }
    }
    emit(&out)?;
    Ok(code)
}

fn cmd_catalog() -> Outcome {
    let theorems: Vec<_> = THEOREM_IDS.iter().map(|(id, what)| json!({ "id": id, "description": what })).collect();
    let recipes: Vec<_> = RECIPES.iter().map(|(name, keys)| json!({ "name": name, "parameters": keys })).collect();
    emit(&json!({
        "theorems": theorems,
        "constructions": recipes,
        "descriptors": [
            "clique:t", "line:l", "free:k", "uniform:r:n", "dowling:n:G", "matchstick:r:n",
            "origami:r:n", "graphic:v:0-1.1-2", "sum(d1,d2)"
        ],
        "methods": ["auto", "pattern", "embedding", "joint-anchored", "brute"],
        "groups": "Zk and products such as Z2xZ2",
    }))?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return ExitCode::from(if usage { EXIT_USAGE } else { 0 });
        }
    };
    let outcome = match cli.command {
        Command::Ex(a) => cmd_ex(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Table(a) => table::run(a),
        Command::Construct(a) => cmd_construct(a),
        Command::Catalog => cmd_catalog(),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
