//! Circulant graphs: vertex i is adjacent to (i ± j) mod n for every offset
//! j in the offset set L. The consecutive-offset family C_{n,d} (L = 1..=d)
//! has a closed-form minimum cover size and criticality condition; the
//! degree-4 and degree-6 catalog searches classify the two-offset and
//! three-offset families against the exact criticality check.

use std::fmt;
use std::io::{self, Write};

use rayon::prelude::*;
use thiserror::Error;

use crate::criticality::{is_critical, CritStatus, CriticalityError};
use crate::graph::Graph;
use crate::solver::SolveBudget;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CirculantError {
    #[error("offset {0} is congruent to 0 mod {1} (self-loop)")]
    SelfLoopOffset(u32, usize),
    #[error("vertex count must be at least 2, got {0}")]
    TooFewVertices(usize),
    #[error("offset set must be nonempty")]
    EmptyOffsets,
    #[error("require n > d_h, got n = {0}, d_h = {1}")]
    DegreeTooLarge(usize, usize),
    #[error("search degree must be 4 or 6, got {0}")]
    InvalidDegree(u8),
    #[error("range is empty")]
    EmptyRange,
    #[error(transparent)]
    Criticality(#[from] CriticalityError),
}

/// (n, offset set L) description of a circulant graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculantSpec {
    pub n: usize,
    pub offsets: Vec<u32>,
}

impl CirculantSpec {
    pub fn new(n: usize, offsets: impl IntoIterator<Item = u32>) -> Result<Self, CirculantError> {
        if n < 2 {
            return Err(CirculantError::TooFewVertices(n));
        }
        let mut offsets: Vec<u32> = offsets.into_iter().collect();
        if offsets.is_empty() {
            return Err(CirculantError::EmptyOffsets);
        }
        offsets.sort_unstable();
        offsets.dedup();
        for &j in &offsets {
            if (j as usize).is_multiple_of(n) {
                return Err(CirculantError::SelfLoopOffset(j, n));
            }
        }
        Ok(CirculantSpec { n, offsets })
    }
}

/// Realizes the description. Offsets wrap modulo n; j and n - j produce the same
/// edges, and collapsing offsets merely lower the realized degree.
pub fn build_circulant(spec: &CirculantSpec) -> Graph {
    let n = spec.n;
    let mut edges = Vec::with_capacity(n * spec.offsets.len());
    for i in 0..n as u32 {
        for &j in &spec.offsets {
            let t = ((i as usize + j as usize) % n) as u32;
            edges.push((i.min(t), i.max(t)));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_sorted_edges(n, edges)
}

/// C_{n,d}: the circulant with consecutive offsets 1..=d.
pub fn cnd_graph(n: usize, d_h: usize) -> Result<Graph, CirculantError> {
    if d_h == 0 {
        return Err(CirculantError::EmptyOffsets);
    }
    let spec = CirculantSpec::new(n, 1..=d_h as u32)?;
    Ok(build_circulant(&spec))
}

/// Closed-form minimum cover size of C_{n,d}: n - ceil((n - d) / (d + 1)).
pub fn cnd_mvc_size(n: usize, d_h: usize) -> Result<usize, CirculantError> {
    if n <= d_h {
        return Err(CirculantError::DegreeTooLarge(n, d_h));
    }
    Ok(n - (n - d_h).div_ceil(d_h + 1))
}

/// Closed-form criticality of C_{n,d}: critical iff the graph is a clique
/// (n <= 2d + 1) or n - d is a multiple of d + 1.
pub fn cnd_is_critical(n: usize, d_h: usize) -> bool {
    n <= 2 * d_h + 1 || (n - d_h).is_multiple_of(d_h + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowVerdict {
    Critical,
    Reducible,
    /// Per-tuple budget exhausted before a verdict.
    Unknown,
    /// Tuple contains an offset >= n; the realized graph duplicates a
    /// smaller-offset tuple, so it is excluded from classification and
    /// flagged instead.
    Skipped,
}

impl fmt::Display for RowVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RowVerdict::Critical => "critical",
            RowVerdict::Reducible => "reducible",
            RowVerdict::Unknown => "unknown",
            RowVerdict::Skipped => "skipped",
        };
        f.write_str(s)
    }
}

/// One classified cell of the search grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchRow {
    pub n: usize,
    /// Full offset set including the implicit 1.
    pub offsets: Vec<u32>,
    pub verdict: RowVerdict,
    pub cover_size: Option<usize>,
    pub edge_count: usize,
    pub nodes: u64,
}

/// Enumerates the catalog grid for nominal degree 4 (L = {1, j}) or 6
/// (L = {1, i, j}, i < j) and classifies every tuple with the exact
/// criticality check. Rows come back in (n, offsets) order regardless of the
/// worker count, and repeated runs are bit-identical.
pub fn search_critical(
    degree: u8,
    n_range: (usize, usize),
    offset_range: (u32, u32),
    per_tuple_budget: &SolveBudget,
    workers: usize,
) -> Result<Vec<SearchRow>, CirculantError> {
    let (n_lo, n_hi) = n_range;
    let (off_lo, off_hi) = offset_range;
    if n_lo > n_hi || off_lo > off_hi {
        return Err(CirculantError::EmptyRange);
    }
    let mut jobs: Vec<(usize, Vec<u32>)> = Vec::new();
    match degree {
        4 => {
            for n in n_lo..=n_hi {
                for j in off_lo.max(2)..=off_hi {
                    jobs.push((n, vec![1, j]));
                }
            }
        }
        6 => {
            for n in n_lo..=n_hi {
                for i in off_lo.max(2)..=off_hi {
                    for j in (i + 1)..=off_hi {
                        jobs.push((n, vec![1, i, j]));
                    }
                }
            }
        }
        other => return Err(CirculantError::InvalidDegree(other)),
    }

    let classify = |&(n, ref offsets): &(usize, Vec<u32>)| -> SearchRow {
        if offsets.iter().any(|&j| j as usize >= n) {
            return SearchRow {
                n,
                offsets: offsets.clone(),
                verdict: RowVerdict::Skipped,
                cover_size: None,
                edge_count: 0,
                nodes: 0,
            };
        }
        let spec = CirculantSpec::new(n, offsets.iter().copied()).expect("validated offsets");
        let g = build_circulant(&spec);
        debug_assert!(g.is_connected(), "offset 1 keeps circulants connected");
        match is_critical(&g, per_tuple_budget) {
            Ok(v) => SearchRow {
                n,
                offsets: offsets.clone(),
                verdict: match v.status {
                    CritStatus::Critical => RowVerdict::Critical,
                    CritStatus::Reducible => RowVerdict::Reducible,
                    CritStatus::Unknown => RowVerdict::Unknown,
                },
                cover_size: Some(v.base_cover_size),
                edge_count: g.m(),
                nodes: v.stats.nodes,
            },
            Err(_) => SearchRow {
                n,
                offsets: offsets.clone(),
                verdict: RowVerdict::Unknown,
                cover_size: None,
                edge_count: g.m(),
                nodes: 0,
            },
        }
    };

    let mut rows: Vec<SearchRow> = if workers <= 1 {
        jobs.iter().map(classify).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("thread pool construction");
        pool.install(|| jobs.par_iter().map(classify).collect())
    };
    rows.sort_by(|a, b| (a.n, &a.offsets).cmp(&(b.n, &b.offsets)));
    Ok(rows)
}

/// Critical tuples per n, with the implicit offset 1 dropped — the shape of
/// the reference degree-6 catalog.
pub fn critical_tuples(rows: &[SearchRow]) -> Vec<(usize, Vec<Vec<u32>>)> {
    let mut out: Vec<(usize, Vec<Vec<u32>>)> = Vec::new();
    for row in rows {
        if row.verdict != RowVerdict::Critical {
            continue;
        }
        let tuple: Vec<u32> = row.offsets.iter().copied().filter(|&j| j != 1).collect();
        match out.last_mut() {
            Some((n, tuples)) if *n == row.n => tuples.push(tuple),
            _ => out.push((row.n, vec![tuple])),
        }
    }
    out
}

/// Catalog CSV. Node counts are deterministic; wall-clock is deliberately
/// excluded so repeated runs (and any worker count) produce identical bytes.
pub fn write_catalog_csv<W: Write>(rows: &[SearchRow], mut w: W) -> io::Result<()> {
    writeln!(w, "n,offsets,verdict,cover,m,nodes")?;
    for row in rows {
        let offsets = row.offsets.iter().map(|j| j.to_string()).collect::<Vec<_>>().join("+");
        let cover = row.cover_size.map(|c| c.to_string()).unwrap_or_default();
        writeln!(
            w,
            "{},{},{},{},{},{}",
            row.n, offsets, row.verdict, cover, row.edge_count, row.nodes
        )?;
    }
    Ok(())
}
