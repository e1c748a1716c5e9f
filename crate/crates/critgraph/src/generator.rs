//! Randomized benchmark generation with hidden, provably optimal covers.
//!
//! The hard-instance pipeline samples critical base graphs by random
//! chain/parallel extension walks from K3 (budgeted by the alpha vector so
//! the global vertex/cover/edge targets stay reachable), assembles their
//! disjoint union, pads with isolated vertices, fills edges that always
//! touch the hidden cover, and finally permutes the vertex order. Every
//! stage preserves the planted cover's optimality.
//!
//! Two comparison generators ship alongside: a structureless sampler whose
//! planted set is only an upper bound, and a Witzel-style clique generator
//! with a known lower bound.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::alpha::{lexmin_alpha, max_edges, AlphaError, AlphaVector};
use crate::dimacs;
use crate::extensions::{ExtendError, TrackedGraph};
use crate::graph::Graph;
use crate::rng::{derive_seed, random_permutation, sample_distinct, seeded_rng};
use crate::solver::is_cover;

#[derive(Debug, Error)]
pub enum GenError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("edge target {m} outside feasible window [{lower}, {upper}] for n = {n}, ell = {ell}")]
    EdgeWindow { m: u64, lower: u64, upper: u64, n: usize, ell: usize },
    #[error("budget cannot accommodate a K3 base (n_rem = {0}, c_rem = {1})")]
    CannotSeedBase(usize, usize),
    #[error("extension walk exhausted the budget at cover {reached} of {target}")]
    WalkStuck { reached: usize, target: usize },
    #[error("assembly violates its caps: {0}")]
    AssemblyOverflow(String),
    #[error("cover sizes sum to {0}, expected {1}")]
    CoverSumMismatch(usize, usize),
    #[error("padding target {target} below current vertex count {have}")]
    PaddingTooSmall { target: usize, have: usize },
    #[error("edge fill needs {need} edges but only {available} cover-incident pairs remain")]
    FillExhausted { need: u64, available: u64 },
    #[error(transparent)]
    Alpha(#[from] AlphaError),
    #[error(transparent)]
    Extend(#[from] ExtendError),
    #[error("io error: {0}")]
    Io(#[from] io::Error),
    #[error("sidecar error: {0}")]
    Sidecar(#[from] serde_json::Error),
    #[error("instance file error: {0}")]
    Dimacs(#[from] dimacs::DimacsError),
}

/// Remaining global budget during base sampling: the alpha vector over
/// (vertices, cover slots) still to spend, plus edge accounting against the
/// final edge target.
#[derive(Debug, Clone)]
pub struct GenBudget {
    pub alpha: AlphaVector,
    pub edges_committed: u64,
    pub edge_cap: u64,
}

impl GenBudget {
    pub fn new(n: usize, ell: usize, edge_cap: u64) -> Result<GenBudget, GenError> {
        Ok(GenBudget { alpha: lexmin_alpha(n, ell)?, edges_committed: 0, edge_cap })
    }

    fn fits(&self, next: &AlphaVector, step_edges: u64) -> bool {
        self.edges_committed + step_edges + next.edge_lower_bound() <= self.edge_cap
    }

    /// Consumes a fresh K3 base (3 vertices, 2 cover slots, 3 edges).
    fn consume_k3(&mut self) -> Result<(), GenError> {
        let (n, c) = (self.alpha.n_rem(), self.alpha.c_rem());
        if n < 3 || c < 2 {
            return Err(GenError::CannotSeedBase(n, c));
        }
        let next = lexmin_alpha(n - 3, c - 2).map_err(|_| GenError::CannotSeedBase(n, c))?;
        if !self.fits(&next, 3) {
            return Err(GenError::CannotSeedBase(n, c));
        }
        self.alpha = next;
        self.edges_committed += 3;
        Ok(())
    }
}

/// Edge target: a fixed count or an exponent giving m = round(n^k).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EdgeTarget {
    Count(u64),
    Exponent(f64),
}

impl EdgeTarget {
    pub fn resolve(&self, n: usize) -> u64 {
        match *self {
            EdgeTarget::Count(m) => m,
            EdgeTarget::Exponent(k) => (n as f64).powf(k).round() as u64,
        }
    }

    pub fn exponent(&self) -> Option<f64> {
        match *self {
            EdgeTarget::Exponent(k) => Some(k),
            EdgeTarget::Count(_) => None,
        }
    }
}

/// Hidden cover size used when none is requested: a little above n/2.
pub fn default_cover_size(n: usize) -> usize {
    n.div_ceil(2) + n.div_ceil(100)
}

#[derive(Debug, Clone)]
pub struct GeneratorConfig {
    pub n: usize,
    pub edge_target: EdgeTarget,
    /// Hidden cover size; defaults to [`default_cover_size`].
    pub ell: Option<usize>,
    pub seed: u64,
    pub base_count: usize,
    /// Once a base's cover is within `stop_window` of its target, each
    /// further step stops the walk with this probability.
    pub stop_probability: f64,
    pub stop_window: usize,
}

impl GeneratorConfig {
    pub fn new(n: usize, edge_target: EdgeTarget, seed: u64) -> GeneratorConfig {
        GeneratorConfig {
            n,
            edge_target,
            ell: None,
            seed,
            base_count: 2,
            stop_probability: 0.1,
            stop_window: 3,
        }
    }
}

/// Generated instance plus everything needed to audit and replay it.
#[derive(Debug, Clone)]
pub struct InstanceBundle {
    pub graph: Graph,
    /// Post-permutation vertex ids, sorted; a minimum cover for hard
    /// instances, an upper-bound certificate for structureless ones.
    pub hidden_cover: Vec<u32>,
    pub ell: usize,
    pub n: usize,
    pub m: u64,
    pub seed: u64,
    pub generator: String,
    pub k_exponent: Option<f64>,
    pub n_c: Option<usize>,
    pub base_traces: Vec<String>,
    pub permutation: Vec<u32>,
    pub permutation_seed: u64,
    pub cover_is_optimal: bool,
}

/// JSON sidecar stored next to the DIMACS file; contains the hidden
/// solution, so instances can be shared solver-blind by withholding it.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Sidecar {
    pub format_version: u32,
    pub generator: String,
    pub params: SidecarParams,
    /// Sorted, 1-based to match the DIMACS ids.
    pub cover: Option<Vec<u32>>,
    pub cover_is_optimal: bool,
    pub permutation_seed: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SidecarParams {
    pub n: usize,
    pub m: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ell: Option<usize>,
    pub seed: u64,
    pub bases: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n_c: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cliques: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub clique_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cover_lower_bound: Option<usize>,
}

impl InstanceBundle {
    pub fn sidecar(&self) -> Sidecar {
        Sidecar {
            format_version: 1,
            generator: self.generator.clone(),
            params: SidecarParams {
                n: self.n,
                m: self.m,
                k: self.k_exponent,
                ell: Some(self.ell),
                seed: self.seed,
                bases: self.base_traces.clone(),
                n_c: self.n_c,
                cliques: None,
                clique_size: None,
                cover_lower_bound: None,
            },
            cover: Some(self.hidden_cover.iter().map(|&v| v + 1).collect()),
            cover_is_optimal: self.cover_is_optimal,
            permutation_seed: self.permutation_seed,
        }
    }

    pub fn dimacs_string(&self) -> String {
        dimacs::to_dimacs_string(&self.graph)
    }

    pub fn sidecar_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.sidecar()).expect("sidecar serializes");
        s.push('\n');
        s
    }

    /// Writes `<prefix>.dimacs` and `<prefix>.json`; returns both paths.
    pub fn write_files(&self, prefix: &Path) -> Result<(PathBuf, PathBuf), GenError> {
        let dimacs_path = prefix.with_extension("dimacs");
        let json_path = prefix.with_extension("json");
        fs::write(&dimacs_path, self.dimacs_string())?;
        fs::write(&json_path, self.sidecar_string())?;
        Ok((dimacs_path, json_path))
    }
}

/// Loads `<prefix>.dimacs` + `<prefix>.json` back.
pub fn load_instance(prefix: &Path) -> Result<(Graph, Sidecar), GenError> {
    let graph = dimacs::read_dimacs_file(prefix.with_extension("dimacs"))?;
    let text = fs::read_to_string(prefix.with_extension("json"))?;
    let sidecar: Sidecar = serde_json::from_str(&text)?;
    Ok((graph, sidecar))
}

/// Vertex-disjoint assembly of base graphs relabeled into one id space:
/// `cover` is the union of the base covers, `edges` the union of their
/// edges; the remaining vertices form the independent side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GTriple {
    pub n: usize,
    pub cover: Vec<u32>,
    pub edges: Vec<(u32, u32)>,
}

impl GTriple {
    pub fn v_side(&self) -> Vec<u32> {
        let mut in_cover = vec![false; self.n];
        for &v in &self.cover {
            in_cover[v as usize] = true;
        }
        (0..self.n as u32).filter(|&v| !in_cover[v as usize]).collect()
    }

    pub fn to_graph(&self) -> Graph {
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        Graph::from_sorted_edges(self.n, edges)
    }
}

/// Walk phase ids for per-phase RNG streams.
const PHASE_FILL: u64 = 0xF117;
const PHASE_PERMUTE: u64 = 0x9E12;
const MAX_ATTEMPTS: u64 = 64;

fn phase_tag(attempt: u64, phase: u64) -> u64 {
    (attempt << 20) ^ phase
}

/// One random chain-or-parallel step. Returns false if nothing feasible.
fn extension_step(
    tg: &mut TrackedGraph,
    budget: &mut GenBudget,
    rng: &mut ChaCha8Rng,
) -> Result<bool, GenError> {
    let par_next = budget.alpha.after_parallel().ok();
    let chain_next = budget.alpha.after_chain().ok();

    let par_sites: Vec<u32> = match &par_next {
        Some(next) => (0..tg.graph().n() as u32)
            .filter(|&v| budget.fits(next, tg.graph().degree(v) as u64 + 1))
            .collect(),
        None => Vec::new(),
    };
    let chain_ok = match &chain_next {
        Some(next) => tg.graph().m() > 0 && budget.fits(next, 2),
        None => false,
    };

    let mut kinds: Vec<u8> = Vec::with_capacity(2);
    if !par_sites.is_empty() {
        kinds.push(0);
    }
    if chain_ok {
        kinds.push(1);
    }
    if kinds.is_empty() {
        return Ok(false);
    }
    let kind = kinds[rng.random_range(0..kinds.len())];
    if kind == 0 {
        let v = par_sites[rng.random_range(0..par_sites.len())];
        let cost = tg.graph().degree(v) as u64 + 1;
        *tg = tg.parallel_extend(v)?;
        budget.alpha = par_next.expect("checked");
        budget.edges_committed += cost;
    } else {
        let e = tg.graph().edges()[rng.random_range(0..tg.graph().m())];
        *tg = tg.chain_extend(e)?;
        budget.alpha = chain_next.expect("checked");
        budget.edges_committed += 2;
    }
    Ok(true)
}

/// Samples one critical base graph from the chain/parallel closure of K3.
/// Starts at K3 (cover 2) and applies uniformly chosen feasible extensions
/// at uniformly chosen sites, consulting the alpha budget before each step.
/// Stops at `target_cover`, or earlier once the cover is within the stop
/// window and the geometric stop fires.
pub fn sample_base_graph(
    rng: &mut ChaCha8Rng,
    target_cover: usize,
    budget: &mut GenBudget,
) -> Result<TrackedGraph, GenError> {
    sample_base(rng, target_cover, budget, Some((0.1, 3)))
}

fn sample_base(
    rng: &mut ChaCha8Rng,
    target_cover: usize,
    budget: &mut GenBudget,
    stop_rule: Option<(f64, usize)>,
) -> Result<TrackedGraph, GenError> {
    if target_cover < 2 {
        return Err(GenError::InvalidConfig(format!(
            "base cover target must be >= 2, got {target_cover}"
        )));
    }
    budget.consume_k3()?;
    let mut tg = TrackedGraph::k3();
    while tg.cover_size() < target_cover {
        if !extension_step(&mut tg, budget, rng)? {
            return Err(GenError::WalkStuck { reached: tg.cover_size(), target: target_cover });
        }
        if tg.cover_size() >= target_cover {
            break;
        }
        if let Some((p_stop, window)) = stop_rule {
            if tg.cover_size() >= 2.max(target_cover.saturating_sub(window))
                && rng.random::<f64>() < p_stop
            {
                break;
            }
        }
    }
    Ok(tg)
}

/// Disjoint union of the bases with covers accumulated; validates the
/// cover/vertex/edge caps the alpha machinery is meant to guarantee.
pub fn assemble_g1(
    bases: &[TrackedGraph],
    ell: usize,
    m_cap: u64,
    n_cap: usize,
) -> Result<GTriple, GenError> {
    let cover_sum: usize = bases.iter().map(|b| b.cover_size()).sum();
    if cover_sum != ell {
        return Err(GenError::CoverSumMismatch(cover_sum, ell));
    }
    let n_sum: usize = bases.iter().map(|b| b.graph().n()).sum();
    if n_sum > n_cap {
        return Err(GenError::AssemblyOverflow(format!("{n_sum} vertices > cap {n_cap}")));
    }
    let m_sum: usize = bases.iter().map(|b| b.graph().m()).sum();
    if m_sum as u64 > m_cap {
        return Err(GenError::AssemblyOverflow(format!("{m_sum} edges > cap {m_cap}")));
    }
    let mut cover = Vec::with_capacity(cover_sum);
    let mut edges = Vec::with_capacity(m_sum);
    let mut offset = 0u32;
    for base in bases {
        cover.extend(base.cover().iter().map(|&v| v + offset));
        edges.extend(base.graph().edges().iter().map(|&(a, b)| (a + offset, b + offset)));
        offset += base.graph().n() as u32;
    }
    cover.sort_unstable();
    edges.sort_unstable();
    Ok(GTriple { n: n_sum, cover, edges })
}

/// Pads the independent side with isolated fresh vertices up to n total.
pub fn pad_vertices_g2(triple: &GTriple, n: usize) -> Result<GTriple, GenError> {
    if n < triple.n {
        return Err(GenError::PaddingTooSmall { target: n, have: triple.n });
    }
    Ok(GTriple { n, cover: triple.cover.clone(), edges: triple.edges.clone() })
}

/// Fills to exactly m edges with pairs drawn uniformly without replacement
/// from the missing cover-incident pairs; the planted cover keeps covering
/// every edge.
pub fn fill_edges_g3(triple: &GTriple, m: u64, rng: &mut ChaCha8Rng) -> Result<GTriple, GenError> {
    let have = triple.edges.len() as u64;
    if have > m {
        return Err(GenError::AssemblyOverflow(format!("{have} edges already exceed target {m}")));
    }
    let need = m - have;
    let mut sorted_existing = triple.edges.clone();
    sorted_existing.sort_unstable();
    let mut in_cover = vec![false; triple.n];
    for &v in &triple.cover {
        in_cover[v as usize] = true;
    }
    let mut pool: Vec<(u32, u32)> = Vec::new();
    for a in 0..triple.n as u32 {
        for b in (a + 1)..triple.n as u32 {
            if (in_cover[a as usize] || in_cover[b as usize])
                && sorted_existing.binary_search(&(a, b)).is_err()
            {
                pool.push((a, b));
            }
        }
    }
    if need > pool.len() as u64 {
        return Err(GenError::FillExhausted { need, available: pool.len() as u64 });
    }
    let chosen = sample_distinct(&mut pool, need as usize, rng);
    let mut edges = sorted_existing;
    edges.extend(chosen);
    edges.sort_unstable();
    Ok(GTriple { n: triple.n, cover: triple.cover.clone(), edges })
}

/// The full hard-instance pipeline. Identical config and seed reproduce an
/// identical bundle, byte for byte.
pub fn generate_hard(cfg: &GeneratorConfig) -> Result<InstanceBundle, GenError> {
    let n = cfg.n;
    let ell = cfg.ell.unwrap_or_else(|| default_cover_size(n));
    if cfg.base_count == 0 {
        return Err(GenError::InvalidConfig("base_count must be >= 1".into()));
    }
    if ell >= n {
        return Err(GenError::InvalidConfig(format!("ell = {ell} must be < n = {n}")));
    }
    if ell < 2 * cfg.base_count {
        return Err(GenError::InvalidConfig(format!(
            "ell = {ell} cannot host {} K3 bases (need >= {})",
            cfg.base_count,
            2 * cfg.base_count
        )));
    }
    if !(0.0..1.0).contains(&cfg.stop_probability) {
        return Err(GenError::InvalidConfig("stop probability must be in [0, 1)".into()));
    }
    let m = cfg.edge_target.resolve(n);
    let lower = lexmin_alpha(n, ell)?.edge_lower_bound();
    let upper = max_edges(n, ell)?;
    if m < lower || m > upper {
        return Err(GenError::EdgeWindow { m, lower, upper, n, ell });
    }

    let mut last_err = None;
    for attempt in 0..MAX_ATTEMPTS {
        match try_generate(cfg, n, ell, m, attempt) {
            Ok(bundle) => return Ok(bundle),
            Err(e @ (GenError::WalkStuck { .. } | GenError::CannotSeedBase(..))) => {
                last_err = Some(e);
            }
            Err(other) => return Err(other),
        }
    }
    Err(last_err.expect("at least one attempt ran"))
}

fn try_generate(
    cfg: &GeneratorConfig,
    n: usize,
    ell: usize,
    m: u64,
    attempt: u64,
) -> Result<InstanceBundle, GenError> {
    let mut budget = GenBudget::new(n, ell, m)?;
    let per_base = ell.div_ceil(cfg.base_count);
    let mut bases: Vec<TrackedGraph> = Vec::new();
    let mut committed = 0usize;
    for i in 0..cfg.base_count {
        let remaining = ell - committed;
        let after = cfg.base_count - i - 1;
        let mut rng = seeded_rng(derive_seed(cfg.seed, phase_tag(attempt, i as u64)));
        let base = if after == 0 {
            sample_base(&mut rng, remaining, &mut budget, None)?
        } else {
            let target = per_base.min(remaining - 2 * after).max(2);
            sample_base(
                &mut rng,
                target,
                &mut budget,
                Some((cfg.stop_probability, cfg.stop_window)),
            )?
        };
        committed += base.cover_size();
        bases.push(base);
    }

    let assembled = assemble_g1(&bases, ell, m, n)?;
    let padded = pad_vertices_g2(&assembled, n)?;
    let mut fill_rng = seeded_rng(derive_seed(cfg.seed, phase_tag(attempt, PHASE_FILL)));
    let filled = fill_edges_g3(&padded, m, &mut fill_rng)?;

    let permutation_seed = derive_seed(cfg.seed, phase_tag(attempt, PHASE_PERMUTE));
    let mut perm_rng = seeded_rng(permutation_seed);
    let perm = random_permutation(n, &mut perm_rng);
    let graph = filled.to_graph().apply_permutation(&perm).expect("valid permutation");
    let mut hidden_cover: Vec<u32> = filled.cover.iter().map(|&v| perm[v as usize]).collect();
    hidden_cover.sort_unstable();
    debug_assert!(is_cover(&graph, &hidden_cover));

    Ok(InstanceBundle {
        graph,
        hidden_cover,
        ell,
        n,
        m,
        seed: cfg.seed,
        generator: "hard".into(),
        k_exponent: cfg.edge_target.exponent(),
        n_c: None,
        base_traces: bases.iter().map(|b| b.trace_log()).collect(),
        permutation: perm,
        permutation_seed,
        cover_is_optimal: true,
    })
}

/// Structureless comparison generator: m edges drawn uniformly from the
/// pairs touching a preselected set of n_c vertices. The planted set is a
/// cover by construction but only an UPPER bound on the optimum, and the
/// bundle says so.
pub fn generate_structureless(
    n: usize,
    m: u64,
    n_c: usize,
    seed: u64,
) -> Result<InstanceBundle, GenError> {
    if n_c == 0 || n_c > n {
        return Err(GenError::InvalidConfig(format!("n_c = {n_c} must be in 1..={n}")));
    }
    let pool_size = (n_c * (n_c - 1) / 2) as u64 + (n_c * (n - n_c)) as u64;
    if m > pool_size {
        return Err(GenError::FillExhausted { need: m, available: pool_size });
    }
    let mut pool: Vec<(u32, u32)> = Vec::with_capacity(pool_size as usize);
    for a in 0..n as u32 {
        for b in (a + 1)..n as u32 {
            if (a as usize) < n_c || (b as usize) < n_c {
                pool.push((a, b));
            }
        }
    }
    let mut fill_rng = seeded_rng(derive_seed(seed, phase_tag(0, PHASE_FILL)));
    let mut edges = sample_distinct(&mut pool, m as usize, &mut fill_rng);
    edges.sort_unstable();

    let permutation_seed = derive_seed(seed, phase_tag(0, PHASE_PERMUTE));
    let mut perm_rng = seeded_rng(permutation_seed);
    let perm = random_permutation(n, &mut perm_rng);
    let graph = Graph::from_sorted_edges(n, edges).apply_permutation(&perm).expect("bijection");
    let mut hidden_cover: Vec<u32> = (0..n_c as u32).map(|v| perm[v as usize]).collect();
    hidden_cover.sort_unstable();
    debug_assert!(is_cover(&graph, &hidden_cover));

    Ok(InstanceBundle {
        graph,
        hidden_cover,
        ell: n_c,
        n,
        m,
        seed,
        generator: "structureless".into(),
        k_exponent: None,
        n_c: Some(n_c),
        base_traces: Vec::new(),
        permutation: perm,
        permutation_seed,
        cover_is_optimal: false,
    })
}

/// Witzel-style comparison instance: disjoint cliques plus random
/// inter-clique edges. No cover certificate exists, but every clique forces
/// size - 1 cover vertices, giving a known lower bound.
#[derive(Debug, Clone)]
pub struct WitzelInstance {
    pub graph: Graph,
    pub cover_lower_bound: usize,
    pub num_cliques: usize,
    pub clique_size: usize,
    pub m: u64,
    pub seed: u64,
    pub permutation: Vec<u32>,
    pub permutation_seed: u64,
}

impl WitzelInstance {
    pub fn sidecar(&self) -> Sidecar {
        Sidecar {
            format_version: 1,
            generator: "witzel".into(),
            params: SidecarParams {
                n: self.graph.n(),
                m: self.m,
                k: None,
                ell: None,
                seed: self.seed,
                bases: Vec::new(),
                n_c: None,
                cliques: Some(self.num_cliques),
                clique_size: Some(self.clique_size),
                cover_lower_bound: Some(self.cover_lower_bound),
            },
            cover: None,
            cover_is_optimal: false,
            permutation_seed: self.permutation_seed,
        }
    }

    pub fn write_files(&self, prefix: &Path) -> Result<(PathBuf, PathBuf), GenError> {
        let dimacs_path = prefix.with_extension("dimacs");
        let json_path = prefix.with_extension("json");
        fs::write(&dimacs_path, dimacs::to_dimacs_string(&self.graph))?;
        let mut s = serde_json::to_string_pretty(&self.sidecar())?;
        s.push('\n');
        fs::write(&json_path, s)?;
        Ok((dimacs_path, json_path))
    }
}

pub fn generate_witzel(
    num_cliques: usize,
    clique_size: usize,
    m_target: u64,
    seed: u64,
) -> Result<WitzelInstance, GenError> {
    if num_cliques == 0 || clique_size == 0 {
        return Err(GenError::InvalidConfig("need at least one nonempty clique".into()));
    }
    let n = num_cliques * clique_size;
    let intra = (num_cliques * (clique_size * (clique_size - 1) / 2)) as u64;
    if m_target < intra {
        return Err(GenError::InvalidConfig(format!(
            "m = {m_target} below the {intra} clique edges"
        )));
    }
    let total_pairs = (n * (n - 1) / 2) as u64;
    let inter_pool = total_pairs - intra;
    let need = m_target - intra;
    if need > inter_pool {
        return Err(GenError::FillExhausted { need, available: inter_pool });
    }

    let block = |v: u32| v as usize / clique_size;
    let mut edges: Vec<(u32, u32)> = Vec::with_capacity(m_target as usize);
    let mut pool: Vec<(u32, u32)> = Vec::with_capacity(inter_pool as usize);
    for a in 0..n as u32 {
        for b in (a + 1)..n as u32 {
            if block(a) == block(b) {
                edges.push((a, b));
            } else {
                pool.push((a, b));
            }
        }
    }
    let mut fill_rng = seeded_rng(derive_seed(seed, phase_tag(0, PHASE_FILL)));
    edges.extend(sample_distinct(&mut pool, need as usize, &mut fill_rng));
    edges.sort_unstable();

    let permutation_seed = derive_seed(seed, phase_tag(0, PHASE_PERMUTE));
    let mut perm_rng = seeded_rng(permutation_seed);
    let perm = random_permutation(n, &mut perm_rng);
    let graph = Graph::from_sorted_edges(n, edges).apply_permutation(&perm).expect("bijection");

    Ok(WitzelInstance {
        graph,
        cover_lower_bound: num_cliques * (clique_size - 1),
        num_cliques,
        clique_size,
        m: m_target,
        seed,
        permutation: perm,
        permutation_seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{mvc, SolveBudget, SolveStatus};

    #[test]
    fn assemble_one_k3() {
        let t = assemble_g1(&[TrackedGraph::k3()], 2, 10, 10).unwrap();
        assert_eq!(t.cover.len(), 2);
        assert_eq!(t.v_side().len(), 1);
        assert_eq!(t.edges.len(), 3);
    }

    #[test]
    fn assemble_two_k3s() {
        let bases = [TrackedGraph::k3(), TrackedGraph::k3()];
        let t = assemble_g1(&bases, 4, 10, 10).unwrap();
        assert_eq!((t.n, t.cover.len(), t.edges.len()), (6, 4, 6));
        assert!(!t.to_graph().is_connected());
    }

    #[test]
    fn assemble_validates_cover_sum() {
        let bases = [TrackedGraph::k3()];
        assert!(matches!(
            assemble_g1(&bases, 3, 10, 10).unwrap_err(),
            GenError::CoverSumMismatch(2, 3)
        ));
    }

    #[test]
    fn pad_appends_isolated_vertices() {
        let t = assemble_g1(&[TrackedGraph::k3()], 2, 10, 8).unwrap();
        let padded = pad_vertices_g2(&t, 8).unwrap();
        assert_eq!(padded.n, 8);
        assert_eq!(padded.v_side().len(), 6);
        assert_eq!(padded.edges, t.edges);
        assert_eq!(pad_vertices_g2(&t, 3).unwrap().n, 3);
        assert!(pad_vertices_g2(&t, 2).is_err());
    }

    #[test]
    fn fill_preserves_cover_and_hits_target() {
        let bases = [TrackedGraph::k3(), TrackedGraph::k3()];
        let t = assemble_g1(&bases, 4, 20, 8).unwrap();
        let padded = pad_vertices_g2(&t, 8).unwrap();
        let mut rng = seeded_rng(7);
        let filled = fill_edges_g3(&padded, 10, &mut rng).unwrap();
        assert_eq!(filled.edges.len(), 10);
        let g = filled.to_graph();
        assert!(is_cover(&g, &filled.cover));
        // Unchanged when the target equals the current count.
        let mut rng2 = seeded_rng(8);
        let same = fill_edges_g3(&filled, 10, &mut rng2).unwrap();
        assert_eq!(same, filled);
    }

    #[test]
    fn fill_rejects_overfull_targets() {
        let t = assemble_g1(&[TrackedGraph::k3()], 2, 10, 3).unwrap();
        let mut rng = seeded_rng(1);
        // Cover-incident pairs on K3: all 3 already present.
        assert!(matches!(
            fill_edges_g3(&t, 4, &mut rng).unwrap_err(),
            GenError::FillExhausted { .. }
        ));
    }

    #[test]
    fn base_with_target_two_is_k3() {
        let mut budget = GenBudget::new(10, 5, 50).unwrap();
        let mut rng = seeded_rng(1);
        let base = sample_base_graph(&mut rng, 2, &mut budget).unwrap();
        assert_eq!(base.graph(), &Graph::complete(3));
        assert_eq!(base.cover_size(), 2);
    }

    #[test]
    fn tight_edge_budget_forces_chains() {
        // Cap the edges so a parallel step (>= 3 new edges) never fits but a
        // chain (2) does: the only reachable cover-3 base is the 5-cycle.
        let mut budget = GenBudget::new(5, 3, 5).unwrap();
        let mut rng = seeded_rng(2);
        let base = sample_base(&mut rng, 3, &mut budget, None).unwrap();
        let g = base.graph();
        assert_eq!((g.n(), g.m(), g.max_degree()), (5, 5, 2));
        assert!(g.is_connected());
        assert_eq!(base.cover_size(), 3);
    }

    #[test]
    fn sampled_bases_are_exactly_covered() {
        for seed in 0..30u64 {
            let mut budget = GenBudget::new(40, 20, 400).unwrap();
            let mut rng = seeded_rng(seed);
            let base = sample_base(&mut rng, 6, &mut budget, None).unwrap();
            assert_eq!(base.cover_size(), 6);
            assert!(is_cover(base.graph(), base.cover()));
            let solved = mvc(base.graph(), &SolveBudget::default());
            assert_eq!(solved.status, SolveStatus::Exact);
            assert_eq!(solved.size, 6, "seed {seed}");
        }
    }

    #[test]
    fn generate_hard_roundtrip_and_determinism() {
        let cfg = GeneratorConfig::new(24, EdgeTarget::Count(70), 1234);
        let a = generate_hard(&cfg).unwrap();
        let b = generate_hard(&cfg).unwrap();
        assert_eq!(a.dimacs_string(), b.dimacs_string());
        assert_eq!(a.sidecar_string(), b.sidecar_string());
        assert_eq!(a.graph.n(), 24);
        assert_eq!(a.graph.m(), 70);
        assert_eq!(a.hidden_cover.len(), a.ell);
        assert!(is_cover(&a.graph, &a.hidden_cover));
        // No edge joins two non-cover vertices.
        let mut in_cover = vec![false; a.n];
        for &v in &a.hidden_cover {
            in_cover[v as usize] = true;
        }
        for &(u, v) in a.graph.edges() {
            assert!(in_cover[u as usize] || in_cover[v as usize]);
        }
    }

    #[test]
    fn generate_hard_exactness_small() {
        for seed in 0..5u64 {
            let mut cfg = GeneratorConfig::new(18, EdgeTarget::Count(45), seed);
            cfg.ell = Some(10);
            let bundle = generate_hard(&cfg).unwrap();
            let solved = mvc(&bundle.graph, &SolveBudget::default());
            assert_eq!(solved.status, SolveStatus::Exact);
            assert_eq!(solved.size, bundle.ell, "seed {seed}");
        }
    }

    #[test]
    fn generate_hard_rejects_infeasible_window() {
        let cfg = GeneratorConfig::new(10, EdgeTarget::Count(100), 1);
        match generate_hard(&cfg).unwrap_err() {
            GenError::EdgeWindow { lower, upper, .. } => {
                assert!(lower <= upper);
                assert!(100 > upper);
            }
            other => panic!("expected window error, got {other}"),
        }
    }

    #[test]
    fn bases_replay_from_traces() {
        let cfg = GeneratorConfig::new(30, EdgeTarget::Count(90), 99);
        let bundle = generate_hard(&cfg).unwrap();
        assert_eq!(bundle.base_traces.len(), 2);
        let mut total_cover = 0;
        for trace in &bundle.base_traces {
            let tg = crate::extensions::replay_trace(TrackedGraph::k3(), trace).unwrap();
            total_cover += tg.cover_size();
        }
        assert_eq!(total_cover, bundle.ell);
    }

    #[test]
    fn structureless_edges_touch_the_planted_set() {
        let bundle = generate_structureless(20, 40, 12, 5).unwrap();
        assert_eq!(bundle.graph.m(), 40);
        assert_eq!(bundle.hidden_cover.len(), 12);
        assert!(!bundle.cover_is_optimal);
        assert!(is_cover(&bundle.graph, &bundle.hidden_cover));
        let solved = mvc(&bundle.graph, &SolveBudget::default());
        assert!(solved.size <= 12);
        // Determinism.
        let again = generate_structureless(20, 40, 12, 5).unwrap();
        assert_eq!(bundle.dimacs_string(), again.dimacs_string());
    }

    #[test]
    fn structureless_rejects_oversized_m() {
        assert!(matches!(
            generate_structureless(6, 100, 3, 1).unwrap_err(),
            GenError::FillExhausted { .. }
        ));
    }

    #[test]
    fn witzel_structure() {
        let inst = generate_witzel(2, 3, 7, 11).unwrap();
        assert_eq!(inst.graph.n(), 6);
        assert_eq!(inst.graph.m(), 7);
        assert_eq!(inst.cover_lower_bound, 4);
        let solved = mvc(&inst.graph, &SolveBudget::default());
        assert!(solved.size >= inst.cover_lower_bound);

        assert!(generate_witzel(2, 3, 5, 1).is_err());
        assert!(generate_witzel(2, 3, 16, 1).is_err());
    }

    #[test]
    fn config_sweep_never_panics() {
        // Infeasible corners must come back as errors, not panics, and
        // every success must satisfy the bundle contract.
        for n in [4usize, 6, 9, 14] {
            for ell in 1..n + 1 {
                for m in [0u64, 3, 10, 30, 80, 200] {
                    let mut cfg = GeneratorConfig::new(n, EdgeTarget::Count(m), 11);
                    cfg.ell = Some(ell);
                    if let Ok(b) = generate_hard(&cfg) {
                        assert_eq!(b.graph.m() as u64, m);
                        assert_eq!(b.hidden_cover.len(), ell);
                        assert!(is_cover(&b.graph, &b.hidden_cover));
                    }
                }
            }
        }
    }

    #[test]
    fn sidecar_roundtrip() {
        let cfg = GeneratorConfig::new(16, EdgeTarget::Count(40), 3);
        let bundle = generate_hard(&cfg).unwrap();
        let text = bundle.sidecar_string();
        let parsed: Sidecar = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed, bundle.sidecar());
        assert_eq!(parsed.cover.unwrap().len(), bundle.ell);
    }
}
