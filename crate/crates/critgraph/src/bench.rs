//! Instance verification, benchmark runs and table-shaped reporting: one
//! row per instance with the distance above the known optimum (or bound),
//! plus aggregates recomputable from the rows.

use std::fmt;
use std::time::Instant;

use thiserror::Error;

use crate::generator::Sidecar;
use crate::graph::Graph;
use crate::greedy::greedy_solve;
use crate::solver::{is_cover, mvc, SolveBudget, SolveStatus};

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("unknown algorithm id '{0}' (expected 'exact' or 'greedy')")]
    UnknownAlgorithm(String),
    #[error("instance '{0}': imported cover is not a vertex cover")]
    InvalidImportedCover(String),
    #[error("import line {0}: malformed (expected 'id size v1 v2 ... vk')")]
    MalformedImport(usize),
    #[error("import references unknown instance '{0}'")]
    UnknownInstance(String),
    #[error("csv parse error on line {0}")]
    MalformedCsv(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algo {
    Exact,
    Greedy,
}

impl Algo {
    pub fn parse(s: &str) -> Result<Algo, BenchError> {
        match s {
            "exact" => Ok(Algo::Exact),
            "greedy" => Ok(Algo::Greedy),
            other => Err(BenchError::UnknownAlgorithm(other.to_string())),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Algo::Exact => "exact",
            Algo::Greedy => "greedy",
        }
    }
}

/// What the reference value in a row means.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OptFlag {
    /// Distance measured against a proven optimum and equal to it.
    Yes,
    /// Distance measured against a proven optimum, above it.
    No,
    /// Distance measured against a bound only.
    BoundRelative,
    Unknown,
}

impl fmt::Display for OptFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            OptFlag::Yes => "yes",
            OptFlag::No => "no",
            OptFlag::BoundRelative => "bound",
            OptFlag::Unknown => "",
        };
        f.write_str(s)
    }
}

impl OptFlag {
    fn parse(s: &str) -> Option<OptFlag> {
        match s {
            "yes" => Some(OptFlag::Yes),
            "no" => Some(OptFlag::No),
            "bound" => Some(OptFlag::BoundRelative),
            "" => Some(OptFlag::Unknown),
            _ => None,
        }
    }
}

/// An instance ready to benchmark: graph plus the reference value from its
/// sidecar (a proven optimum, or an upper bound for structureless ones).
#[derive(Debug, Clone)]
pub struct BenchInstance {
    pub id: String,
    pub graph: Graph,
    pub reference: Option<usize>,
    pub reference_is_optimal: bool,
}

impl BenchInstance {
    pub fn from_sidecar(id: String, graph: Graph, sidecar: &Sidecar) -> BenchInstance {
        let reference =
            sidecar.cover.as_ref().map(|c| c.len()).or(sidecar.params.cover_lower_bound);
        BenchInstance { id, graph, reference, reference_is_optimal: sidecar.cover_is_optimal }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunRow {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub reference: Option<usize>,
    pub algo: String,
    pub cover_size: usize,
    pub distance: Option<i64>,
    pub optimal: OptFlag,
    pub steps: u64,
    pub time_ms: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunReport {
    pub rows: Vec<RunRow>,
}

impl RunReport {
    pub fn count_optimal(&self) -> usize {
        self.rows.iter().filter(|r| r.optimal == OptFlag::Yes).count()
    }

    pub fn avg_distance(&self) -> f64 {
        let ds: Vec<i64> = self.rows.iter().filter_map(|r| r.distance).collect();
        if ds.is_empty() {
            return 0.0;
        }
        ds.iter().sum::<i64>() as f64 / ds.len() as f64
    }

    pub fn max_distance(&self) -> i64 {
        self.rows.iter().filter_map(|r| r.distance).max().unwrap_or(0)
    }

    pub fn to_csv_string(&self) -> String {
        let mut out =
            String::from("instance,n,m,ell,algo,cover_size,distance,optimal,steps,time_ms\n");
        for r in &self.rows {
            let ell = r.reference.map(|x| x.to_string()).unwrap_or_default();
            let distance = r.distance.map(|x| x.to_string()).unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{}\n",
                r.instance,
                r.n,
                r.m,
                ell,
                r.algo,
                r.cover_size,
                distance,
                r.optimal,
                r.steps,
                r.time_ms
            ));
        }
        out
    }

    pub fn from_csv_str(text: &str) -> Result<RunReport, BenchError> {
        let mut rows = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            if idx == 0 || line.is_empty() {
                continue;
            }
            let lineno = idx + 1;
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 10 {
                return Err(BenchError::MalformedCsv(lineno));
            }
            let parse_usize =
                |s: &str| s.parse::<usize>().map_err(|_| BenchError::MalformedCsv(lineno));
            let parse_u64 =
                |s: &str| s.parse::<u64>().map_err(|_| BenchError::MalformedCsv(lineno));
            rows.push(RunRow {
                instance: fields[0].to_string(),
                n: parse_usize(fields[1])?,
                m: parse_usize(fields[2])?,
                reference: if fields[3].is_empty() { None } else { Some(parse_usize(fields[3])?) },
                algo: fields[4].to_string(),
                cover_size: parse_usize(fields[5])?,
                distance: if fields[6].is_empty() {
                    None
                } else {
                    Some(fields[6].parse::<i64>().map_err(|_| BenchError::MalformedCsv(lineno))?)
                },
                optimal: OptFlag::parse(fields[7]).ok_or(BenchError::MalformedCsv(lineno))?,
                steps: parse_u64(fields[8])?,
                time_ms: parse_u64(fields[9])?,
            });
        }
        Ok(RunReport { rows })
    }
}

fn score_row(
    inst: &BenchInstance,
    algo_name: &str,
    cover_size: usize,
    exact_result: bool,
    steps: u64,
    time_ms: u64,
) -> RunRow {
    let (distance, optimal) = match inst.reference {
        Some(reference) => {
            let d = cover_size as i64 - reference as i64;
            if inst.reference_is_optimal {
                (Some(d), if d == 0 { OptFlag::Yes } else { OptFlag::No })
            } else {
                (Some(d), OptFlag::BoundRelative)
            }
        }
        None => (None, if exact_result { OptFlag::Yes } else { OptFlag::Unknown }),
    };
    RunRow {
        instance: inst.id.clone(),
        n: inst.graph.n(),
        m: inst.graph.m(),
        reference: inst.reference,
        algo: algo_name.to_string(),
        cover_size,
        distance,
        optimal,
        steps,
        time_ms,
    }
}

/// Runs `algo` on every instance, in input order. Steps are greedy picks or
/// branch-and-bound nodes (not comparable to external solvers' step
/// counts; the column is labeled by algorithm).
pub fn run_benchmark(instances: &[BenchInstance], algo: Algo, budget: &SolveBudget) -> RunReport {
    let mut rows = Vec::with_capacity(instances.len());
    for inst in instances {
        let start = Instant::now();
        let row = match algo {
            Algo::Greedy => {
                let cover = greedy_solve(&inst.graph);
                let time_ms = start.elapsed().as_millis() as u64;
                score_row(inst, "greedy", cover.len(), false, cover.len() as u64, time_ms)
            }
            Algo::Exact => {
                let solved = mvc(&inst.graph, budget);
                let time_ms = start.elapsed().as_millis() as u64;
                let mut row = score_row(
                    inst,
                    "exact",
                    solved.size,
                    solved.status == SolveStatus::Exact,
                    solved.stats.nodes,
                    time_ms,
                );
                if solved.status != SolveStatus::Exact {
                    row.optimal = OptFlag::Unknown;
                    row.distance = None;
                }
                row
            }
        };
        rows.push(row);
    }
    RunReport { rows }
}

/// External solver results: one line per instance, `id size v1 v2 ... vk`
/// with 1-based vertex ids.
pub fn parse_external_results(text: &str) -> Result<Vec<(String, Vec<u32>)>, BenchError> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let lineno = idx + 1;
        let mut it = line.split_ascii_whitespace();
        let id = it.next().ok_or(BenchError::MalformedImport(lineno))?.to_string();
        let size: usize =
            it.next().and_then(|s| s.parse().ok()).ok_or(BenchError::MalformedImport(lineno))?;
        let cover: Vec<u32> = it
            .map(|s| {
                s.parse::<u32>()
                    .ok()
                    .and_then(|v| v.checked_sub(1))
                    .ok_or(BenchError::MalformedImport(lineno))
            })
            .collect::<Result<_, _>>()?;
        if cover.len() != size {
            return Err(BenchError::MalformedImport(lineno));
        }
        out.push((id, cover));
    }
    Ok(out)
}

/// Scores imported covers against the instances' references. Rejects covers
/// that do not cover their graph.
pub fn run_import(
    instances: &[BenchInstance],
    results: &[(String, Vec<u32>)],
) -> Result<RunReport, BenchError> {
    let mut rows = Vec::new();
    for (id, cover) in results {
        let inst = instances
            .iter()
            .find(|i| &i.id == id)
            .ok_or_else(|| BenchError::UnknownInstance(id.clone()))?;
        if !is_cover(&inst.graph, cover) {
            return Err(BenchError::InvalidImportedCover(id.clone()));
        }
        rows.push(score_row(inst, "import", cover.len(), false, 0, 0));
    }
    Ok(RunReport { rows })
}

#[derive(Debug, Clone)]
pub struct VerifyCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    pub checks: Vec<VerifyCheck>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: &'static str, passed: bool, detail: impl Into<String>) {
        self.checks.push(VerifyCheck { name, passed, detail: detail.into() });
    }
}

/// Checks a stored instance against its sidecar: declared sizes, cover
/// validity, independence of the non-cover side, and (when the exact solver
/// can afford it) minimality of hidden covers / validity of bounds.
pub fn verify_bundle(graph: &Graph, sidecar: &Sidecar, budget: &SolveBudget) -> VerifyReport {
    let mut report = VerifyReport::default();
    report.push(
        "declared-sizes",
        sidecar.params.n == graph.n() && sidecar.params.m == graph.m() as u64,
        format!(
            "file has n={} m={}, sidecar declares n={} m={}",
            graph.n(),
            graph.m(),
            sidecar.params.n,
            sidecar.params.m
        ),
    );

    let cover0: Option<Vec<u32>> =
        sidecar.cover.as_ref().map(|c| c.iter().map(|&v| v.saturating_sub(1)).collect());
    match &cover0 {
        None => {
            if let Some(bound) = sidecar.params.cover_lower_bound {
                let solved = mvc(graph, budget);
                match solved.status {
                    SolveStatus::Exact => report.push(
                        "lower-bound-holds",
                        solved.size >= bound,
                        format!("exact c = {} vs bound {}", solved.size, bound),
                    ),
                    _ => report.push("lower-bound-holds", true, "skipped (solver budget)"),
                }
            }
        }
        Some(cover) => {
            if let Some(ell) = sidecar.params.ell {
                report.push(
                    "cover-size",
                    cover.len() == ell,
                    format!("cover has {} vertices, declared ell = {}", cover.len(), ell),
                );
            }
            let mut in_cover = vec![false; graph.n()];
            for &v in cover {
                if (v as usize) < graph.n() {
                    in_cover[v as usize] = true;
                }
            }
            let uncovered: Vec<(u32, u32)> = graph
                .edges()
                .iter()
                .copied()
                .filter(|&(u, v)| !in_cover[u as usize] && !in_cover[v as usize])
                .collect();
            report.push(
                "cover-valid",
                uncovered.is_empty(),
                match uncovered.first() {
                    None => "every edge touches the cover".to_string(),
                    Some(&(u, v)) => format!("uncovered edge ({}, {})", u + 1, v + 1),
                },
            );
            report.push(
                "independent-side",
                uncovered.is_empty(),
                match uncovered.first() {
                    None => "no edge joins two non-cover vertices".to_string(),
                    Some(&(u, v)) => {
                        format!("independence violation: edge ({}, {})", u + 1, v + 1)
                    }
                },
            );
            let solved = mvc(graph, budget);
            if solved.status != SolveStatus::Exact {
                report.push("minimality", true, "skipped (solver budget)");
            } else if sidecar.cover_is_optimal {
                report.push(
                    "minimality",
                    solved.size == cover.len(),
                    format!("exact c = {} vs hidden {}", solved.size, cover.len()),
                );
            } else {
                report.push(
                    "upper-bound-holds",
                    solved.size <= cover.len(),
                    format!("exact c = {} vs bound {}", solved.size, cover.len()),
                );
            }
        }
    }
    report
}
