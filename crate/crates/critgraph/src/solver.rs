//! Exact minimum-vertex-cover solving by branch and bound, with optional
//! forced-in/forced-out vertex constraints and a decision variant with an
//! upper-bound cutoff.
//!
//! Branching rule: pick a maximum-degree vertex v (lowest index on ties) and
//! branch "v in cover" vs "N(v) in cover". Degree-0/1 vertices are reduced
//! eagerly. Pruning uses the larger of a greedy maximal-matching bound and a
//! greedy clique-cover bound. All tie-breaking is deterministic, so results
//! are reproducible and, when status is exact, independent of the budget.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("forced_in and forced_out overlap at vertex {0}")]
    OverlappingConstraints(u32),
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(u32, usize),
}

/// Search-effort limits. Budget exhaustion is reported via
/// [`SolveStatus::BudgetExceeded`], never as an error.
#[derive(Debug, Clone, Copy)]
pub struct SolveBudget {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl Default for SolveBudget {
    fn default() -> Self {
        SolveBudget { max_nodes: 100_000_000, max_time: Duration::from_secs(60) }
    }
}

impl SolveBudget {
    pub fn new(max_nodes: u64, max_time: Duration) -> Self {
        assert!(max_nodes > 0, "node budget must be positive");
        assert!(!max_time.is_zero(), "time budget must be positive");
        SolveBudget { max_nodes, max_time }
    }

    pub fn seconds(secs: u64) -> Self {
        SolveBudget { max_time: Duration::from_secs(secs), ..Default::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    Exact,
    BudgetExceeded,
    Infeasible,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub status: SolveStatus,
    pub size: usize,
    pub cover: Vec<u32>,
    pub stats: SolveStats,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    /// A cover of size <= the requested cutoff, as found.
    CoverFound(Vec<u32>),
    /// Proof that no cover within the cutoff exists.
    NoneWithin,
    BudgetExceeded,
}

#[derive(Debug, Clone)]
pub struct DecisionResult {
    pub decision: Decision,
    pub stats: SolveStats,
}

/// True iff every edge of `g` has at least one endpoint in `s`.
pub fn is_cover(g: &Graph, s: &[u32]) -> bool {
    let mut marked = vec![false; g.n()];
    for &v in s {
        if (v as usize) < g.n() {
            marked[v as usize] = true;
        }
    }
    g.edges().iter().all(|&(u, v)| marked[u as usize] || marked[v as usize])
}

/// Exact minimum vertex cover of `g` within `budget`.
pub fn mvc(g: &Graph, budget: &SolveBudget) -> SolveResult {
    mvc_constrained(g, &[], &[], budget).expect("empty constraints cannot conflict")
}

/// Minimum cover among covers containing all of `forced_in` and none of
/// `forced_out`. Status is `Infeasible` iff `forced_out` contains both
/// endpoints of some edge.
pub fn mvc_constrained(
    g: &Graph,
    forced_in: &[u32],
    forced_out: &[u32],
    budget: &SolveBudget,
) -> Result<SolveResult, SolveError> {
    let mut searcher = Searcher::new(g, budget);
    for &v in forced_in.iter().chain(forced_out) {
        if v as usize >= g.n() {
            return Err(SolveError::VertexOutOfRange(v, g.n()));
        }
    }
    let mut out_mask = vec![false; g.n()];
    for &v in forced_out {
        out_mask[v as usize] = true;
    }
    for &v in forced_in {
        if out_mask[v as usize] {
            return Err(SolveError::OverlappingConstraints(v));
        }
    }
    // Excluding v forces its whole neighborhood into the cover; two adjacent
    // excluded vertices leave an uncoverable edge.
    for &v in forced_out {
        for &u in g.neighbors(v) {
            if out_mask[u as usize] {
                return Ok(SolveResult {
                    status: SolveStatus::Infeasible,
                    size: 0,
                    cover: Vec::new(),
                    stats: searcher.stats(),
                });
            }
        }
    }
    for &v in forced_out {
        let neighbors: Vec<u32> = g.neighbors(v).to_vec();
        for u in neighbors {
            if searcher.alive[u as usize] {
                searcher.take(u);
            }
        }
        if searcher.alive[v as usize] {
            debug_assert_eq!(searcher.deg[v as usize], 0);
            searcher.drop_isolated(v);
        }
    }
    for &v in forced_in {
        if searcher.alive[v as usize] {
            searcher.take(v);
        }
    }
    Ok(searcher.optimize())
}

/// Decision variant: find any cover of size at most `k`, or prove none
/// exists. Used by criticality checks, which only need
/// "is mvc(G - e) <= c - 1?".
pub fn cover_at_most(g: &Graph, k: usize, budget: &SolveBudget) -> DecisionResult {
    let mut searcher = Searcher::new(g, budget);
    searcher.stop_at = Some(k);
    searcher.limit = k + 1;
    searcher.search();
    let stats = searcher.stats();
    let decision = match searcher.best.take() {
        Some((size, cover)) => {
            debug_assert!(size <= k);
            Decision::CoverFound(cover)
        }
        None if searcher.budget_hit => Decision::BudgetExceeded,
        None => Decision::NoneWithin,
    };
    DecisionResult { decision, stats }
}

enum TrailOp {
    Took(u32),
    Dropped(u32),
}

struct Searcher<'g> {
    g: &'g Graph,
    alive: Vec<bool>,
    in_cover: Vec<bool>,
    deg: Vec<u32>,
    cover_count: usize,
    live_edges: usize,
    trail: Vec<TrailOp>,
    /// Best complete cover found so far (size, members).
    best: Option<(usize, Vec<u32>)>,
    /// Explore only covers strictly smaller than this.
    limit: usize,
    stop_at: Option<usize>,
    stopped: bool,
    nodes: u64,
    max_nodes: u64,
    deadline: Instant,
    started: Instant,
    budget_hit: bool,
    match_stamp: Vec<u64>,
    clique_stamp: Vec<u64>,
    stamp: u64,
    clique_scratch: Vec<u32>,
}

impl<'g> Searcher<'g> {
    fn new(g: &'g Graph, budget: &SolveBudget) -> Searcher<'g> {
        let n = g.n();
        let started = Instant::now();
        Searcher {
            g,
            alive: vec![true; n],
            in_cover: vec![false; n],
            deg: (0..n as u32).map(|v| g.degree(v) as u32).collect(),
            cover_count: 0,
            live_edges: g.m(),
            trail: Vec::new(),
            best: None,
            limit: n + 1,
            stop_at: None,
            stopped: false,
            nodes: 0,
            max_nodes: budget.max_nodes,
            deadline: started + budget.max_time,
            started,
            budget_hit: false,
            match_stamp: vec![0; n],
            clique_stamp: vec![0; n],
            stamp: 0,
            clique_scratch: Vec::new(),
        }
    }

    fn stats(&self) -> SolveStats {
        SolveStats { nodes: self.nodes, elapsed: self.started.elapsed() }
    }

    fn take(&mut self, v: u32) {
        debug_assert!(self.alive[v as usize]);
        for &u in self.g.neighbors(v) {
            if self.alive[u as usize] {
                self.deg[u as usize] -= 1;
                self.live_edges -= 1;
            }
        }
        self.alive[v as usize] = false;
        self.in_cover[v as usize] = true;
        self.cover_count += 1;
        self.trail.push(TrailOp::Took(v));
    }

    fn drop_isolated(&mut self, v: u32) {
        debug_assert!(self.alive[v as usize]);
        debug_assert_eq!(self.deg[v as usize], 0);
        self.alive[v as usize] = false;
        self.trail.push(TrailOp::Dropped(v));
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().unwrap() {
                TrailOp::Took(v) => {
                    // LIFO unwinding guarantees the live set here matches the
                    // one seen when v was taken, so the same neighbors get
                    // their degrees restored.
                    self.alive[v as usize] = true;
                    self.in_cover[v as usize] = false;
                    self.cover_count -= 1;
                    for &u in self.g.neighbors(v) {
                        if self.alive[u as usize] {
                            self.deg[u as usize] += 1;
                            self.live_edges += 1;
                        }
                    }
                }
                TrailOp::Dropped(v) => {
                    self.alive[v as usize] = true;
                }
            }
        }
    }

    /// Eagerly removes degree-0 vertices and resolves degree-1 vertices by
    /// taking their unique neighbor.
    fn reduce(&mut self) {
        let n = self.g.n();
        let mut v = 0usize;
        while v < n {
            if self.alive[v] && self.deg[v] == 0 {
                self.drop_isolated(v as u32);
                v += 1;
                continue;
            }
            if self.alive[v] && self.deg[v] == 1 {
                let u = *self
                    .g
                    .neighbors(v as u32)
                    .iter()
                    .find(|&&u| self.alive[u as usize])
                    .expect("degree-1 vertex has a live neighbor");
                self.take(u);
                v = 0;
                continue;
            }
            v += 1;
        }
    }

    fn lower_bound(&mut self) -> usize {
        self.stamp += 1;
        let stamp = self.stamp;
        let mut matching = 0usize;
        for &(u, v) in self.g.edges() {
            if self.alive[u as usize]
                && self.alive[v as usize]
                && self.match_stamp[u as usize] != stamp
                && self.match_stamp[v as usize] != stamp
            {
                self.match_stamp[u as usize] = stamp;
                self.match_stamp[v as usize] = stamp;
                matching += 1;
            }
        }
        let mut clique_cover = 0usize;
        for v in 0..self.g.n() as u32 {
            if !self.alive[v as usize] || self.clique_stamp[v as usize] == stamp {
                continue;
            }
            self.clique_stamp[v as usize] = stamp;
            self.clique_scratch.clear();
            self.clique_scratch.push(v);
            for &u in self.g.neighbors(v) {
                if self.alive[u as usize]
                    && self.clique_stamp[u as usize] != stamp
                    && self.clique_scratch.iter().all(|&c| self.g.has_edge(u, c))
                {
                    self.clique_stamp[u as usize] = stamp;
                    self.clique_scratch.push(u);
                }
            }
            clique_cover += self.clique_scratch.len() - 1;
        }
        matching.max(clique_cover)
    }

    fn pick_branch_vertex(&self) -> u32 {
        let mut best = u32::MAX;
        let mut best_deg = 0u32;
        for v in 0..self.g.n() as u32 {
            if self.alive[v as usize] && self.deg[v as usize] > best_deg {
                best_deg = self.deg[v as usize];
                best = v;
            }
        }
        debug_assert_ne!(best, u32::MAX);
        best
    }

    fn over_budget(&mut self) -> bool {
        if self.budget_hit {
            return true;
        }
        if self.nodes >= self.max_nodes {
            self.budget_hit = true;
            return true;
        }
        if self.nodes.is_multiple_of(1024) && Instant::now() >= self.deadline {
            self.budget_hit = true;
            return true;
        }
        false
    }

    fn record_if_better(&mut self) {
        if self.cover_count < self.limit {
            self.limit = self.cover_count;
            let cover: Vec<u32> =
                (0..self.g.n() as u32).filter(|&v| self.in_cover[v as usize]).collect();
            self.best = Some((self.cover_count, cover));
            if let Some(k) = self.stop_at {
                if self.cover_count <= k {
                    self.stopped = true;
                }
            }
        }
    }

    fn search(&mut self) {
        if self.stopped || self.over_budget() {
            return;
        }
        self.nodes += 1;
        let mark = self.trail.len();
        self.reduce();
        if self.live_edges == 0 {
            self.record_if_better();
            self.undo_to(mark);
            return;
        }
        if self.cover_count + self.lower_bound() >= self.limit {
            self.undo_to(mark);
            return;
        }
        let v = self.pick_branch_vertex();
        let inner = self.trail.len();

        self.take(v);
        self.search();
        self.undo_to(inner);

        if !self.stopped && !self.over_budget() {
            let neighbors: Vec<u32> =
                self.g.neighbors(v).iter().copied().filter(|&u| self.alive[u as usize]).collect();
            if self.cover_count + neighbors.len() < self.limit {
                for u in neighbors {
                    self.take(u);
                }
                self.drop_isolated(v);
                self.search();
                self.undo_to(inner);
            }
        }
        self.undo_to(mark);
    }

    /// Greedy max-degree cover of the live residual combined with vertices
    /// already forced into the cover; a valid upper bound used as the
    /// starting incumbent.
    fn greedy_incumbent(&self) -> Vec<u32> {
        let mut deg = self.deg.clone();
        let mut alive = self.alive.clone();
        let mut cover: Vec<u32> =
            (0..self.g.n() as u32).filter(|&v| self.in_cover[v as usize]).collect();
        let mut remaining = self.live_edges;
        while remaining > 0 {
            let mut best = u32::MAX;
            let mut best_deg = 0u32;
            for v in 0..self.g.n() as u32 {
                if alive[v as usize] && deg[v as usize] > best_deg {
                    best_deg = deg[v as usize];
                    best = v;
                }
            }
            let v = best;
            for &u in self.g.neighbors(v) {
                if alive[u as usize] {
                    deg[u as usize] -= 1;
                    remaining -= 1;
                }
            }
            alive[v as usize] = false;
            cover.push(v);
        }
        cover.sort_unstable();
        cover
    }

    fn optimize(&mut self) -> SolveResult {
        let incumbent = self.greedy_incumbent();
        self.limit = incumbent.len();
        self.best = Some((incumbent.len(), incumbent));
        self.search();
        let (size, mut cover) = self.best.take().expect("incumbent always present");
        cover.sort_unstable();
        let status = if self.budget_hit { SolveStatus::BudgetExceeded } else { SolveStatus::Exact };
        SolveResult { status, size, cover, stats: self.stats() }
    }
}
