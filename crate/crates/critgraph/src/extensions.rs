//! Criticality-preserving graph extensions with O(1) maintained covers.
//!
//! A `TrackedGraph` carries a known minimum cover and a criticality claim
//! through parallel, chain and split extensions; each step appends one new
//! cover vertex and one trace record. The inverse shrink operations and the
//! cover-size-only pasting merge work on plain graphs.

use std::fmt::Write as _;

use thiserror::Error;

use crate::criticality::{is_critical, CritStatus};
use crate::graph::{Graph, GraphError};
use crate::solver::{is_cover, mvc, SolveBudget, SolveStatus};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExtendError {
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(u32, usize),
    #[error("edge ({0}, {1}) not present")]
    EdgeAbsent(u32, u32),
    #[error("extension requires at least 3 vertices")]
    GraphTooSmall,
    #[error("split site must have degree >= 2")]
    DegreeTooSmall,
    #[error("F must be a nonempty proper subset of the site's neighborhood")]
    InvalidNeighborSubset,
    #[error("vertices {0} and {1} are not neighbor-equivalent")]
    NotNeighborEquivalent(u32, u32),
    #[error("shrink requires two adjacent degree-2 vertices")]
    DegreeMismatch,
    #[error("outer neighbors coincide (would create a self-loop)")]
    IdenticalOuterNeighbors,
    #[error("pasting assignment must map every neighbor of w exactly once")]
    IncompleteAssignment,
    #[error("pasting assignment must use both endpoints of the distinguished edge")]
    EndpointUnused,
    #[error("supplied cover does not cover the graph")]
    InvalidCover,
    #[error("seed graph is not critical (status {0:?})")]
    SeedNotCritical(CritStatus),
    #[error("solver budget exhausted")]
    BudgetExceeded,
    #[error("malformed trace line {0}: {1}")]
    MalformedTrace(usize, String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One applied extension, with enough detail to replay it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtensionStep {
    Parallel { site: u32, new_vertex: u32 },
    Chain { edge: (u32, u32), new_vertices: (u32, u32) },
    Split { site: u32, moved: Vec<u32>, new_vertices: (u32, u32) },
}

impl ExtensionStep {
    fn to_line(&self) -> String {
        let mut s = String::new();
        match self {
            ExtensionStep::Parallel { site, new_vertex } => {
                write!(s, "parallel v={site} new={new_vertex}").unwrap();
            }
            ExtensionStep::Chain { edge, new_vertices } => {
                write!(
                    s,
                    "chain e={}-{} new={},{}",
                    edge.0, edge.1, new_vertices.0, new_vertices.1
                )
                .unwrap();
            }
            ExtensionStep::Split { site, moved, new_vertices } => {
                let f: Vec<String> = moved.iter().map(|v| v.to_string()).collect();
                write!(
                    s,
                    "split u={} f={} new={},{}",
                    site,
                    f.join(","),
                    new_vertices.0,
                    new_vertices.1
                )
                .unwrap();
            }
        }
        s
    }
}

/// Graph plus a maintained minimum cover, a criticality provenance flag and
/// the extension trace that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrackedGraph {
    graph: Graph,
    cover: Vec<u32>,
    critical: bool,
    trace: Vec<ExtensionStep>,
}

impl TrackedGraph {
    /// Single vertex; empty cover.
    pub fn k1() -> TrackedGraph {
        TrackedGraph { graph: Graph::empty(1), cover: vec![], critical: true, trace: vec![] }
    }

    /// Single edge; cover {0}.
    pub fn k2() -> TrackedGraph {
        TrackedGraph {
            graph: Graph::new(2, [(0, 1)]).unwrap(),
            cover: vec![0],
            critical: true,
            trace: vec![],
        }
    }

    /// Triangle; cover {0, 1}. The standard root for generation walks.
    pub fn k3() -> TrackedGraph {
        TrackedGraph { graph: Graph::complete(3), cover: vec![0, 1], critical: true, trace: vec![] }
    }

    /// Roots a trace at an arbitrary graph after verifying criticality and
    /// solving for an exact cover.
    pub fn from_verified(graph: Graph, budget: &SolveBudget) -> Result<TrackedGraph, ExtendError> {
        let verdict = is_critical(&graph, budget).map_err(|_| ExtendError::BudgetExceeded)?;
        match verdict.status {
            CritStatus::Critical => {}
            other => return Err(ExtendError::SeedNotCritical(other)),
        }
        let solved = mvc(&graph, budget);
        if solved.status != SolveStatus::Exact {
            return Err(ExtendError::BudgetExceeded);
        }
        Ok(TrackedGraph { graph, cover: solved.cover, critical: true, trace: vec![] })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn cover(&self) -> &[u32] {
        &self.cover
    }

    pub fn cover_size(&self) -> usize {
        self.cover.len()
    }

    pub fn critical(&self) -> bool {
        self.critical
    }

    pub fn trace(&self) -> &[ExtensionStep] {
        &self.trace
    }

    pub fn contains_in_cover(&self, v: u32) -> bool {
        self.cover.binary_search(&v).is_ok()
    }

    /// Adds a fresh vertex adjacent to v and all of N(v); the new vertex
    /// joins the cover. Preserves criticality and the number of
    /// neighbor-equivalence classes.
    pub fn parallel_extend(&self, v: u32) -> Result<TrackedGraph, ExtendError> {
        let n = self.graph.n();
        if v as usize >= n {
            return Err(ExtendError::VertexOutOfRange(v, n));
        }
        let new = n as u32;
        let mut edges = self.graph.edges().to_vec();
        edges.push((v, new));
        for &w in self.graph.neighbors(v) {
            edges.push((w, new));
        }
        let graph = Graph::new(n + 1, edges)?;
        let mut cover = self.cover.clone();
        cover.push(new);
        let mut trace = self.trace.clone();
        trace.push(ExtensionStep::Parallel { site: v, new_vertex: new });
        Ok(TrackedGraph { graph, cover, critical: self.critical, trace })
    }

    /// Replaces edge {u, v} by a path u-x-y-v through two fresh vertices.
    /// Cover gains y if u (the smaller endpoint) is covered, else x.
    pub fn chain_extend(&self, e: (u32, u32)) -> Result<TrackedGraph, ExtendError> {
        let (u, v) = (e.0.min(e.1), e.0.max(e.1));
        if self.graph.n() < 3 {
            return Err(ExtendError::GraphTooSmall);
        }
        if !self.graph.has_edge(u, v) {
            return Err(ExtendError::EdgeAbsent(e.0, e.1));
        }
        let x = self.graph.n() as u32;
        let y = x + 1;
        let mut edges: Vec<(u32, u32)> =
            self.graph.edges().iter().copied().filter(|&ed| ed != (u, v)).collect();
        edges.extend([(u, x), (x, y), (y, v)]);
        let graph = Graph::new(self.graph.n() + 2, edges)?;
        let mut cover = self.cover.clone();
        cover.push(if self.contains_in_cover(u) { y } else { x });
        cover.sort_unstable();
        let mut trace = self.trace.clone();
        trace.push(ExtensionStep::Chain { edge: (u, v), new_vertices: (x, y) });
        Ok(TrackedGraph { graph, cover, critical: self.critical, trace })
    }

    /// Splits vertex u: reroutes the neighbor subset F through fresh w while
    /// u keeps a fresh bridge vertex v. F must be a nonempty proper subset
    /// of N(u); with |F| = 1 this is exactly the chain extension.
    pub fn split_vertex(&self, u: u32, f: &[u32]) -> Result<TrackedGraph, ExtendError> {
        let n = self.graph.n();
        if n < 3 {
            return Err(ExtendError::GraphTooSmall);
        }
        if u as usize >= n {
            return Err(ExtendError::VertexOutOfRange(u, n));
        }
        if self.graph.degree(u) < 2 {
            return Err(ExtendError::DegreeTooSmall);
        }
        let mut moved: Vec<u32> = f.to_vec();
        moved.sort_unstable();
        moved.dedup();
        if moved.is_empty()
            || moved.len() >= self.graph.degree(u)
            || !moved.iter().all(|&x| self.graph.has_edge(u, x))
        {
            return Err(ExtendError::InvalidNeighborSubset);
        }
        let v_new = n as u32;
        let w_new = v_new + 1;
        let mut edges: Vec<(u32, u32)> = self
            .graph
            .edges()
            .iter()
            .copied()
            .filter(|&(a, b)| {
                !(a == u && moved.binary_search(&b).is_ok())
                    && !(b == u && moved.binary_search(&a).is_ok())
            })
            .collect();
        edges.push((u, v_new));
        edges.push((v_new, w_new));
        for &x in &moved {
            edges.push((x, w_new));
        }
        let graph = Graph::new(n + 2, edges)?;
        let mut cover = self.cover.clone();
        cover.push(if self.contains_in_cover(u) { w_new } else { v_new });
        cover.sort_unstable();
        let mut trace = self.trace.clone();
        trace.push(ExtensionStep::Split {
            site: u,
            moved: moved.clone(),
            new_vertices: (v_new, w_new),
        });
        Ok(TrackedGraph { graph, cover, critical: self.critical, trace })
    }

    /// Serializes the trace, one step per line; replayable bit-exactly with
    /// [`replay_trace`].
    pub fn trace_log(&self) -> String {
        let mut out = String::new();
        for step in &self.trace {
            out.push_str(&step.to_line());
            out.push('\n');
        }
        out
    }
}

/// Re-applies a serialized trace on top of a seed.
pub fn replay_trace(seed: TrackedGraph, log: &str) -> Result<TrackedGraph, ExtendError> {
    let mut tg = seed;
    for (idx, line) in log.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| ExtendError::MalformedTrace(idx + 1, msg.to_string());
        let mut parts = line.split_ascii_whitespace();
        let kind = parts.next().ok_or_else(|| err("empty line"))?;
        let fields: Vec<&str> = parts.collect();
        let field = |key: &str| -> Result<&str, ExtendError> {
            fields
                .iter()
                .find_map(|f| f.strip_prefix(key))
                .ok_or_else(|| err(&format!("missing {key}")))
        };
        match kind {
            "parallel" => {
                let v: u32 = field("v=")?.parse().map_err(|_| err("bad vertex"))?;
                tg = tg.parallel_extend(v)?;
            }
            "chain" => {
                let e = field("e=")?;
                let (a, b) = e.split_once('-').ok_or_else(|| err("bad edge"))?;
                let a: u32 = a.parse().map_err(|_| err("bad edge"))?;
                let b: u32 = b.parse().map_err(|_| err("bad edge"))?;
                tg = tg.chain_extend((a, b))?;
            }
            "split" => {
                let u: u32 = field("u=")?.parse().map_err(|_| err("bad vertex"))?;
                let f: Vec<u32> = field("f=")?
                    .split(',')
                    .map(|x| x.parse().map_err(|_| err("bad subset")))
                    .collect::<Result<_, _>>()?;
                tg = tg.split_vertex(u, &f)?;
            }
            other => return Err(err(&format!("unknown step kind '{other}'"))),
        }
    }
    Ok(tg)
}

/// Merges g2 into tg1's graph through a distinguished edge e of g1 and a
/// removed hub w of g2: every neighbor of w is rewired to one endpoint of e
/// (both endpoints used at least once), then w and e are dropped. Only the
/// cover SIZE survives — c = c1 + c2 - 1 — because the merge does not
/// preserve a concrete optimal cover.
pub fn paste(
    tg1: &TrackedGraph,
    e: (u32, u32),
    g2: &Graph,
    w: u32,
    assignment: &[(u32, u32)],
    budget: &SolveBudget,
) -> Result<(Graph, usize), ExtendError> {
    let g1 = tg1.graph();
    let (u, v) = (e.0.min(e.1), e.0.max(e.1));
    if !g1.has_edge(u, v) {
        return Err(ExtendError::EdgeAbsent(e.0, e.1));
    }
    if w as usize >= g2.n() {
        return Err(ExtendError::VertexOutOfRange(w, g2.n()));
    }
    if g2.degree(w) < 2 {
        return Err(ExtendError::DegreeTooSmall);
    }
    let hub_neighbors = g2.neighbors(w);
    let mut seen = vec![false; g2.n()];
    let mut used_u = false;
    let mut used_v = false;
    for &(x, target) in assignment {
        if !g2.has_edge(w, x) || seen[x as usize] {
            return Err(ExtendError::IncompleteAssignment);
        }
        seen[x as usize] = true;
        match target {
            t if t == u => used_u = true,
            t if t == v => used_v = true,
            _ => return Err(ExtendError::IncompleteAssignment),
        }
    }
    if assignment.len() != hub_neighbors.len() {
        return Err(ExtendError::IncompleteAssignment);
    }
    if !used_u || !used_v {
        return Err(ExtendError::EndpointUnused);
    }

    let n1 = g1.n();
    let map2 = |z: u32| -> u32 {
        if z < w {
            n1 as u32 + z
        } else {
            n1 as u32 + z - 1
        }
    };
    let mut edges: Vec<(u32, u32)> =
        g1.edges().iter().copied().filter(|&ed| ed != (u, v)).collect();
    for &(a, b) in g2.edges() {
        if a != w && b != w {
            let (ma, mb) = (map2(a), map2(b));
            edges.push((ma.min(mb), ma.max(mb)));
        }
    }
    for &(x, target) in assignment {
        let mx = map2(x);
        edges.push((target.min(mx), target.max(mx)));
    }
    let graph = Graph::new(n1 + g2.n() - 1, edges)?;

    let solved = mvc(g2, budget);
    if solved.status != SolveStatus::Exact {
        return Err(ExtendError::BudgetExceeded);
    }
    let cover_size = tg1.cover_size() + solved.size - 1;
    Ok((graph, cover_size))
}

/// Removes a vertex u that is neighbor-equivalent to its neighbor v (the
/// inverse of a parallel extension). The cover size drops by exactly one;
/// criticality is preserved when the input is critical. If a minimum cover
/// is supplied, the corresponding shrunk cover is returned, relabeled.
pub fn shrink_parallel(
    g: &Graph,
    u: u32,
    v: u32,
    known_cover: Option<&[u32]>,
) -> Result<(Graph, Option<Vec<u32>>), ExtendError> {
    if !g.neighbor_equivalent(u, v) {
        return Err(ExtendError::NotNeighborEquivalent(u, v));
    }
    if let Some(cover) = known_cover {
        if !is_cover(g, cover) {
            return Err(ExtendError::InvalidCover);
        }
    }
    let (shrunk, map) = remove_vertices(g, &[u]);
    let new_cover = known_cover.map(|cover| {
        // A cover containing u shrinks by dropping u; otherwise the whole
        // neighborhood of u is covered and v is the redundant member.
        let drop = if cover.contains(&u) { u } else { v };
        let mut mapped: Vec<u32> = cover
            .iter()
            .copied()
            .filter(|&z| z != drop)
            .map(|z| map[z as usize].expect("only u was removed"))
            .collect();
        mapped.sort_unstable();
        mapped.dedup();
        mapped
    });
    Ok((shrunk, new_cover))
}

/// Contracts a chain: removes two adjacent degree-2 vertices x, y and joins
/// their outer neighbors directly. The cover size drops by exactly one on
/// any input; criticality is preserved when the input is critical.
pub fn shrink_chain(g: &Graph, x: u32, y: u32) -> Result<Graph, ExtendError> {
    if !g.has_edge(x, y) {
        return Err(ExtendError::EdgeAbsent(x, y));
    }
    if g.degree(x) != 2 || g.degree(y) != 2 {
        return Err(ExtendError::DegreeMismatch);
    }
    let u = *g.neighbors(x).iter().find(|&&z| z != y).expect("degree 2");
    let v = *g.neighbors(y).iter().find(|&&z| z != x).expect("degree 2");
    if u == v {
        return Err(ExtendError::IdenticalOuterNeighbors);
    }
    let (mut shrunk, map) = remove_vertices(g, &[x.min(y), x.max(y)]);
    let mu = map[u as usize].expect("outer neighbor survives");
    let mv = map[v as usize].expect("outer neighbor survives");
    if !shrunk.has_edge(mu, mv) {
        shrunk = shrunk.add_edge(mu, mv)?;
    }
    Ok(shrunk)
}

/// Removes the given (sorted) vertices, compacting the id space
/// order-preservingly. Returns the new graph and the old-to-new map.
fn remove_vertices(g: &Graph, removed: &[u32]) -> (Graph, Vec<Option<u32>>) {
    debug_assert!(removed.windows(2).all(|w| w[0] < w[1]));
    let mut map: Vec<Option<u32>> = Vec::with_capacity(g.n());
    let mut next = 0u32;
    for z in 0..g.n() as u32 {
        if removed.binary_search(&z).is_ok() {
            map.push(None);
        } else {
            map.push(Some(next));
            next += 1;
        }
    }
    let edges: Vec<(u32, u32)> = g
        .edges()
        .iter()
        .filter_map(|&(a, b)| match (map[a as usize], map[b as usize]) {
            (Some(ma), Some(mb)) => Some((ma.min(mb), ma.max(mb))),
            _ => None,
        })
        .collect();
    (Graph::new(g.n() - removed.len(), edges).expect("valid by construction"), map)
}
