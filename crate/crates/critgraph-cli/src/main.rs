//! critgraph command line: instance generation, solving, criticality
//! checks, circulant catalog searches, alpha budgets, verification and
//! benchmark reports.
//!
//! Exit codes: 0 success, 1 verification or general failure, 2 infeasible
//! parameters, 3 solver budget exhausted.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use critgraph::alpha::{lexmin_alpha, max_edges};
use critgraph::bench::{
    parse_external_results, run_benchmark, run_import, verify_bundle, Algo, BenchInstance,
    RunReport,
};
use critgraph::circulant::{search_critical, write_catalog_csv, RowVerdict};
use critgraph::criticality::{is_critical, CritStatus};
use critgraph::dimacs;
use critgraph::generator::{
    generate_hard, generate_structureless, generate_witzel, load_instance, EdgeTarget, GenError,
    GeneratorConfig,
};
use critgraph::greedy::greedy_solve;
use critgraph::solver::{mvc, SolveBudget, SolveStatus};

const EXIT_VERIFY: u8 = 1;
const EXIT_INFEASIBLE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "critgraph", version, about = "Critical-graph toolkit for minimum vertex cover")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct BudgetArgs {
    /// Wall-clock limit per exact solve, in seconds.
    #[arg(long, default_value_t = 60)]
    budget_secs: u64,
    /// Search-node limit per exact solve.
    #[arg(long, default_value_t = 100_000_000)]
    budget_nodes: u64,
}

impl BudgetArgs {
    fn budget(&self) -> SolveBudget {
        SolveBudget::new(self.budget_nodes, Duration::from_secs(self.budget_secs))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate hard instances with hidden optimal covers.
    Gen {
        #[arg(long)]
        n: usize,
        /// Edge count target. Exactly one of --m / --k.
        #[arg(long, conflicts_with = "k")]
        m: Option<u64>,
        /// Edge exponent: m = round(n^k).
        #[arg(long)]
        k: Option<f64>,
        /// Hidden cover size; defaults to ceil(n/2) + ceil(n/100).
        #[arg(long)]
        ell: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of bundles; bundle i uses seed + i.
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 2)]
        base_count: usize,
        /// Output path prefix (writes `<prefix>.dimacs` and `<prefix>.json`).
        #[arg(long)]
        out: PathBuf,
    },
    /// Generate baseline comparison instances.
    GenBaseline {
        #[command(subcommand)]
        kind: BaselineKind,
    },
    /// Solve an instance file exactly or greedily.
    Solve {
        #[arg(long, value_enum)]
        algo: AlgoArg,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Append the cover to this file in import format (id size v1..vk).
        #[arg(long)]
        out: Option<PathBuf>,
        /// DIMACS instance file.
        file: PathBuf,
    },
    /// Classify a connected graph as critical or reducible.
    CheckCritical {
        #[command(flatten)]
        budget: BudgetArgs,
        file: PathBuf,
    },
    /// Sweep circulant tuples and classify each by exact criticality.
    CirculantSearch {
        /// Nominal degree: 4 (offsets {1,j}) or 6 (offsets {1,i,j}).
        #[arg(long)]
        degree: u8,
        /// Vertex-count range, inclusive, e.g. 4..14.
        #[arg(long, value_parser = parse_range)]
        n: (usize, usize),
        /// Offset range, inclusive, e.g. 2..20.
        #[arg(long, value_parser = parse_range_u32, default_value = "2..20")]
        offsets: (u32, u32),
        /// Worker threads; defaults to CRITGRAPH_WORKERS, then 1.
        #[arg(long)]
        workers: Option<usize>,
        /// Per-tuple time budget in seconds.
        #[arg(long, default_value_t = 30)]
        budget_secs: u64,
        #[arg(long, default_value_t = 100_000_000)]
        budget_nodes: u64,
        /// Catalog CSV path (stdout if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the lexicographically minimal clique-budget vector for (n, c).
    Alpha {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        c: usize,
    },
    /// Verify stored instances against their sidecars.
    Verify {
        #[command(flatten)]
        budget: BudgetArgs,
        /// Instance prefixes (paths without the .dimacs/.json extension).
        prefixes: Vec<PathBuf>,
    },
    /// Run an algorithm over instances and report distances to the optimum.
    Bench {
        #[arg(long, value_enum, required_unless_present = "import")]
        algo: Option<AlgoArg>,
        /// Score an external solver's results file instead of running.
        #[arg(long)]
        import: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Report CSV path (stdout if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        prefixes: Vec<PathBuf>,
    },
}

#[derive(Subcommand)]
enum BaselineKind {
    /// Uniform edges touching a preselected vertex set (upper bound only).
    Structureless {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n_c: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Disjoint cliques joined by random edges (lower bound known).
    Witzel {
        #[arg(long)]
        cliques: usize,
        #[arg(long)]
        clique_size: usize,
        #[arg(long)]
        m: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum AlgoArg {
    Exact,
    Greedy,
}

impl AlgoArg {
    fn algo(self) -> Algo {
        match self {
            AlgoArg::Exact => Algo::Exact,
            AlgoArg::Greedy => Algo::Greedy,
        }
    }
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .ok_or_else(|| format!("expected a..b, got '{s}'"))?;
    let lo: usize = a.trim().parse().map_err(|_| format!("bad range start '{a}'"))?;
    let hi: usize = b.trim().parse().map_err(|_| format!("bad range end '{b}'"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

fn parse_range_u32(s: &str) -> Result<(u32, u32), String> {
    let (lo, hi) = parse_range(s)?;
    Ok((lo as u32, hi as u32))
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Failure {
        Failure { code, message: message.into() }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Failure {
        Failure { code: EXIT_VERIFY, message: format!("{e:#}") }
    }
}

fn gen_failure(e: GenError) -> Failure {
    let code = match &e {
        GenError::InvalidConfig(_)
        | GenError::EdgeWindow { .. }
        | GenError::CannotSeedBase(..)
        | GenError::WalkStuck { .. }
        | GenError::FillExhausted { .. }
        | GenError::PaddingTooSmall { .. }
        | GenError::AssemblyOverflow(_)
        | GenError::CoverSumMismatch(..)
        | GenError::Alpha(_) => EXIT_INFEASIBLE,
        _ => EXIT_VERIFY,
    };
    Failure::new(code, e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Gen { n, m, k, ell, seed, count, base_count, out } => {
            let edge_target = match (m, k) {
                (Some(m), None) => EdgeTarget::Count(m),
                (None, Some(k)) => EdgeTarget::Exponent(k),
                _ => return Err(Failure::new(EXIT_INFEASIBLE, "specify exactly one of --m / --k")),
            };
            for i in 0..count {
                let mut cfg = GeneratorConfig::new(n, edge_target, seed.wrapping_add(i as u64));
                cfg.ell = ell;
                cfg.base_count = base_count;
                let bundle = generate_hard(&cfg).map_err(gen_failure)?;
                let prefix = indexed_prefix(&out, i, count);
                let (dpath, jpath) = bundle.write_files(&prefix).map_err(gen_failure)?;
                println!(
                    "wrote {} and {} (n={} m={} ell={} seed={})",
                    dpath.display(),
                    jpath.display(),
                    bundle.n,
                    bundle.m,
                    bundle.ell,
                    bundle.seed
                );
            }
            Ok(())
        }
        Command::GenBaseline { kind } => match kind {
            BaselineKind::Structureless { n, m, n_c, seed, out } => {
                let bundle = generate_structureless(n, m, n_c, seed).map_err(gen_failure)?;
                let (dpath, jpath) = bundle.write_files(&out).map_err(gen_failure)?;
                println!(
                    "wrote {} and {} (n={} m={} n_c={} bound-only)",
                    dpath.display(),
                    jpath.display(),
                    bundle.n,
                    bundle.m,
                    n_c
                );
                Ok(())
            }
            BaselineKind::Witzel { cliques, clique_size, m, seed, out } => {
                let inst = generate_witzel(cliques, clique_size, m, seed).map_err(gen_failure)?;
                let (dpath, jpath) = inst.write_files(&out).map_err(gen_failure)?;
                println!(
                    "wrote {} and {} (n={} m={} cover >= {})",
                    dpath.display(),
                    jpath.display(),
                    inst.graph.n(),
                    inst.graph.m(),
                    inst.cover_lower_bound
                );
                Ok(())
            }
        },
        Command::Solve { algo, budget, out, file } => {
            let graph = dimacs::read_dimacs_file(&file)
                .with_context(|| format!("reading {}", file.display()))?;
            let id = instance_id(&file);
            let (cover, status, steps) = match algo.algo() {
                Algo::Greedy => {
                    let cover = greedy_solve(&graph);
                    let len = cover.len() as u64;
                    (cover, SolveStatus::Exact, len)
                }
                Algo::Exact => {
                    let r = mvc(&graph, &budget.budget());
                    (r.cover, r.status, r.stats.nodes)
                }
            };
            let label = match (algo.algo(), status) {
                (Algo::Greedy, _) => "greedy cover",
                (Algo::Exact, SolveStatus::Exact) => "minimum cover",
                (Algo::Exact, _) => "upper bound (budget exceeded)",
            };
            println!("{id}: {label} size {} ({} steps)", cover.len(), steps);
            if let Some(path) = out {
                let line = format!(
                    "{id} {} {}\n",
                    cover.len(),
                    cover.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")
                );
                append_to(&path, &line)?;
            }
            if status == SolveStatus::BudgetExceeded {
                return Err(Failure::new(EXIT_BUDGET, "solver budget exhausted"));
            }
            Ok(())
        }
        Command::CheckCritical { budget, file } => {
            let graph = dimacs::read_dimacs_file(&file)
                .with_context(|| format!("reading {}", file.display()))?;
            let verdict = is_critical(&graph, &budget.budget())
                .map_err(|e| Failure::new(EXIT_VERIFY, e.to_string()))?;
            let id = instance_id(&file);
            match verdict.status {
                CritStatus::Critical => {
                    println!(
                        "{id}: critical (c = {}, {} nodes)",
                        verdict.base_cover_size, verdict.stats.nodes
                    );
                    Ok(())
                }
                CritStatus::Reducible => {
                    let (u, v) = verdict.witness_edge.expect("reducible carries a witness");
                    println!(
                        "{id}: reducible (c = {}, witness edge ({}, {}), {} nodes)",
                        verdict.base_cover_size,
                        u + 1,
                        v + 1,
                        verdict.stats.nodes
                    );
                    Ok(())
                }
                CritStatus::Unknown => {
                    println!("{id}: unknown (budget exhausted)");
                    Err(Failure::new(EXIT_BUDGET, "criticality check ran out of budget"))
                }
            }
        }
        Command::CirculantSearch {
            degree,
            n,
            offsets,
            workers,
            budget_secs,
            budget_nodes,
            out,
        } => {
            let workers = workers
                .or_else(|| std::env::var("CRITGRAPH_WORKERS").ok().and_then(|v| v.parse().ok()))
                .unwrap_or(1);
            let budget = SolveBudget::new(budget_nodes, Duration::from_secs(budget_secs));
            let rows = search_critical(degree, n, offsets, &budget, workers)
                .map_err(|e| Failure::new(EXIT_INFEASIBLE, e.to_string()))?;
            let mut csv = Vec::new();
            write_catalog_csv(&rows, &mut csv).map_err(|e| anyhow!(e))?;
            match &out {
                Some(path) => fs::write(path, &csv).map_err(|e| Failure::from(anyhow!(e)))?,
                None => print!("{}", String::from_utf8_lossy(&csv)),
            }
            let critical = rows.iter().filter(|r| r.verdict == RowVerdict::Critical).count();
            let unknown = rows.iter().filter(|r| r.verdict == RowVerdict::Unknown).count();
            let skipped = rows.iter().filter(|r| r.verdict == RowVerdict::Skipped).count();
            eprintln!(
                "classified {} tuples: {} critical, {} unknown, {} skipped (offsets >= n)",
                rows.len(),
                critical,
                unknown,
                skipped
            );
            if let Some(path) = out {
                eprintln!("catalog written to {}", path.display());
            }
            if unknown > 0 {
                return Err(Failure::new(EXIT_BUDGET, format!("{unknown} tuples hit the budget")));
            }
            Ok(())
        }
        Command::Alpha { n, c } => {
            let v = lexmin_alpha(n, c).map_err(|e| Failure::new(EXIT_INFEASIBLE, e.to_string()))?;
            println!("lexmin alpha for (n = {n}, c = {c}): {v}");
            println!("edge lower bound: {}", v.edge_lower_bound());
            match max_edges(n, c) {
                Ok(upper) => println!("max edges: {upper}"),
                Err(_) => println!("max edges: undefined"),
            }
            Ok(())
        }
        Command::Verify { budget, prefixes } => {
            if prefixes.is_empty() {
                return Err(Failure::new(EXIT_VERIFY, "no instance prefixes given"));
            }
            let mut all_ok = true;
            for prefix in &prefixes {
                let (graph, sidecar) =
                    load_instance(prefix).map_err(|e| Failure::new(EXIT_VERIFY, e.to_string()))?;
                let report = verify_bundle(&graph, &sidecar, &budget.budget());
                let id = instance_id(prefix);
                for check in &report.checks {
                    println!(
                        "{id}: {} {} ({})",
                        if check.passed { "PASS" } else { "FAIL" },
                        check.name,
                        check.detail
                    );
                    all_ok &= check.passed;
                }
            }
            if all_ok {
                Ok(())
            } else {
                Err(Failure::new(EXIT_VERIFY, "verification failed"))
            }
        }
        Command::Bench { algo, import, budget, out, prefixes } => {
            if prefixes.is_empty() {
                return Err(Failure::new(EXIT_VERIFY, "no instance prefixes given"));
            }
            let mut instances = Vec::new();
            for prefix in &prefixes {
                let (graph, sidecar) =
                    load_instance(prefix).map_err(|e| Failure::new(EXIT_VERIFY, e.to_string()))?;
                instances.push(BenchInstance::from_sidecar(instance_id(prefix), graph, &sidecar));
            }
            let report: RunReport = match import {
                Some(path) => {
                    let text = fs::read_to_string(&path)
                        .with_context(|| format!("reading {}", path.display()))?;
                    let results = parse_external_results(&text)
                        .map_err(|e| Failure::new(EXIT_VERIFY, e.to_string()))?;
                    run_import(&instances, &results)
                        .map_err(|e| Failure::new(EXIT_VERIFY, e.to_string()))?
                }
                None => {
                    let algo = algo.expect("clap enforces algo without import").algo();
                    run_benchmark(&instances, algo, &budget.budget())
                }
            };
            let csv = report.to_csv_string();
            match &out {
                Some(path) => fs::write(path, &csv).map_err(|e| Failure::from(anyhow!(e)))?,
                None => print!("{csv}"),
            }
            eprintln!(
                "{} rows: {} optimal, avg distance {:.2}, max distance {}",
                report.rows.len(),
                report.count_optimal(),
                report.avg_distance(),
                report.max_distance()
            );
            Ok(())
        }
    }
}

fn indexed_prefix(out: &Path, index: usize, count: usize) -> PathBuf {
    if count == 1 {
        out.to_path_buf()
    } else {
        let stem = out.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        out.with_file_name(format!("{stem}-{index:03}"))
    }
}

fn instance_id(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "instance".into())
}

fn append_to(path: &Path, line: &str) -> Result<()> {
    use std::io::Write;
    let mut f = fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .with_context(|| format!("opening {}", path.display()))?;
    f.write_all(line.as_bytes()).context("appending cover line")?;
    Ok(())
}
