//! Simple undirected graphs on dense integer vertex ids, with the structural
//! queries the rest of the toolkit is built on: connectivity, articulation
//! vertices and neighbor-equivalence classes.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::rng::random_permutation;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(u32, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("edge ({0}, {1}) not present")]
    EdgeAbsent(u32, u32),
    #[error("edge ({0}, {1}) already present")]
    EdgePresent(u32, u32),
    #[error("permutation is not a bijection on 0..{0}")]
    InvalidPermutation(usize),
}

/// Immutable simple undirected graph. Vertices are `0..n`; edges are stored
/// as sorted `(u, v)` pairs with `u < v` and mirrored into per-vertex sorted
/// neighbor lists. All mutating operations return new values, so graphs can
/// be shared freely across threads.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    adj: Vec<Vec<u32>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.edges.len(), self.edges)
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one; self-loops and out-of-range endpoints
    /// are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Graph, GraphError> {
        let mut normalized = Vec::new();
        for (a, b) in edges {
            if a as usize >= n {
                return Err(GraphError::VertexOutOfRange(a, n));
            }
            if b as usize >= n {
                return Err(GraphError::VertexOutOfRange(b, n));
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        normalized.dedup();
        Ok(Graph::from_sorted_edges(n, normalized))
    }

    /// Internal constructor: `edges` must already be normalized (u < v,
    /// sorted, deduplicated, endpoints in range).
    pub(crate) fn from_sorted_edges(n: usize, edges: Vec<(u32, u32)>) -> Graph {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|&(u, v)| u < v && (v as usize) < n));
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_sorted_edges(n, Vec::new())
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n as u32 {
            for v in (u + 1)..n as u32 {
                edges.push((u, v));
            }
        }
        Graph::from_sorted_edges(n, edges)
    }

    /// Cycle C_n (n >= 3).
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<(u32, u32)> = (0..n as u32 - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, n as u32 - 1));
        edges.sort_unstable();
        Graph::from_sorted_edges(n, edges)
    }

    /// Path on n vertices (0-1-2-...-(n-1)).
    pub fn path(n: usize) -> Graph {
        let edges: Vec<(u32, u32)> = (0..n.saturating_sub(1) as u32).map(|i| (i, i + 1)).collect();
        Graph::from_sorted_edges(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        if u as usize >= self.n || v as usize >= self.n {
            return false;
        }
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// New graph with edge `e` removed; vertex count unchanged.
    pub fn delete_edge(&self, e: (u32, u32)) -> Result<Graph, GraphError> {
        let key = (e.0.min(e.1), e.0.max(e.1));
        match self.edges.binary_search(&key) {
            Ok(pos) => {
                let mut edges = self.edges.clone();
                edges.remove(pos);
                Ok(Graph::from_sorted_edges(self.n, edges))
            }
            Err(_) => Err(GraphError::EdgeAbsent(e.0, e.1)),
        }
    }

    /// New graph with edge `{u, v}` added.
    pub fn add_edge(&self, u: u32, v: u32) -> Result<Graph, GraphError> {
        if u as usize >= self.n {
            return Err(GraphError::VertexOutOfRange(u, self.n));
        }
        if v as usize >= self.n {
            return Err(GraphError::VertexOutOfRange(v, self.n));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let key = (u.min(v), u.max(v));
        match self.edges.binary_search(&key) {
            Ok(_) => Err(GraphError::EdgePresent(u, v)),
            Err(pos) => {
                let mut edges = self.edges.clone();
                edges.insert(pos, key);
                Ok(Graph::from_sorted_edges(self.n, edges))
            }
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Articulation vertices via one iterative depth-first traversal
    /// (low-link). Works on disconnected graphs too. Returned sorted.
    pub fn articulation_vertices(&self) -> Vec<u32> {
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![usize::MAX; n];
        let mut is_art = vec![false; n];
        let mut timer = 0usize;

        // Explicit stack frames: (vertex, parent, next neighbor index).
        let mut stack: Vec<(u32, Option<u32>, usize)> = Vec::new();
        for root in 0..n as u32 {
            if disc[root as usize] != usize::MAX {
                continue;
            }
            let mut root_children = 0usize;
            disc[root as usize] = timer;
            low[root as usize] = timer;
            timer += 1;
            stack.push((root, None, 0));
            while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
                if *idx < self.adj[v as usize].len() {
                    let w = self.adj[v as usize][*idx];
                    *idx += 1;
                    if disc[w as usize] == usize::MAX {
                        disc[w as usize] = timer;
                        low[w as usize] = timer;
                        timer += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, Some(v), 0));
                    } else if Some(w) != parent {
                        low[v as usize] = low[v as usize].min(disc[w as usize]);
                    }
                } else {
                    stack.pop();
                    if let Some(&mut (p, _, _)) = stack.last_mut() {
                        low[p as usize] = low[p as usize].min(low[v as usize]);
                        if p != root && low[v as usize] >= disc[p as usize] {
                            is_art[p as usize] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                is_art[root as usize] = true;
            }
        }
        (0..n as u32).filter(|&v| is_art[v as usize]).collect()
    }

    /// Neighbor-equivalence classes: adjacent u, v belong together iff
    /// N(u)\{v} = N(v)\{u}; the relation is transitive across shared
    /// members, so a union-find over adjacent equivalent pairs closes it.
    /// Classes are sorted internally and ordered by smallest member.
    pub fn equivalence_classes(&self) -> Vec<Vec<u32>> {
        let mut parent: Vec<u32> = (0..self.n as u32).collect();
        fn find(parent: &mut [u32], x: u32) -> u32 {
            let mut root = x;
            while parent[root as usize] != root {
                root = parent[root as usize];
            }
            let mut cur = x;
            while parent[cur as usize] != root {
                let next = parent[cur as usize];
                parent[cur as usize] = root;
                cur = next;
            }
            root
        }
        for &(u, v) in &self.edges {
            if self.neighbor_equivalent(u, v) {
                let ru = find(&mut parent, u);
                let rv = find(&mut parent, v);
                if ru != rv {
                    parent[ru.max(rv) as usize] = ru.min(rv);
                }
            }
        }
        let mut classes: Vec<Vec<u32>> = vec![Vec::new(); self.n];
        for v in 0..self.n as u32 {
            let r = find(&mut parent, v);
            classes[r as usize].push(v);
        }
        classes.retain(|c| !c.is_empty());
        classes
    }

    /// True iff `{u, v}` is an edge and N(u)\{v} = N(v)\{u}.
    pub fn neighbor_equivalent(&self, u: u32, v: u32) -> bool {
        if !self.has_edge(u, v) {
            return false;
        }
        let nu = self.neighbors(u);
        let nv = self.neighbors(v);
        if nu.len() != nv.len() {
            return false;
        }
        let mut iu = nu.iter().filter(|&&x| x != v);
        let mut iv = nv.iter().filter(|&&x| x != u);
        loop {
            match (iu.next(), iv.next()) {
                (None, None) => return true,
                (Some(a), Some(b)) if a == b => continue,
                _ => return false,
            }
        }
    }

    pub fn analyze(&self) -> StructureReport {
        StructureReport {
            connected: self.is_connected(),
            articulation_vertices: self.articulation_vertices(),
            equivalence_classes: self.equivalence_classes(),
        }
    }

    /// Relabels vertices by a uniformly random permutation derived from
    /// `seed`. Returns the new graph and the permutation (`perm[old] = new`)
    /// so hidden covers can be mapped along.
    pub fn permute(&self, seed: u64) -> (Graph, Vec<u32>) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let perm = random_permutation(self.n, &mut rng);
        let permuted = self.apply_permutation(&perm).expect("generated permutation is a bijection");
        (permuted, perm)
    }

    /// Relabels vertices: `perm[old] = new`. `perm` must be a bijection on
    /// `0..n`.
    pub fn apply_permutation(&self, perm: &[u32]) -> Result<Graph, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::InvalidPermutation(self.n));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p as usize >= self.n || seen[p as usize] {
                return Err(GraphError::InvalidPermutation(self.n));
            }
            seen[p as usize] = true;
        }
        let mut edges: Vec<(u32, u32)> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u as usize], perm[v as usize]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        Ok(Graph::from_sorted_edges(self.n, edges))
    }
}

/// Result of [`Graph::analyze`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub connected: bool,
    pub articulation_vertices: Vec<u32>,
    pub equivalence_classes: Vec<Vec<u32>>,
}

impl StructureReport {
    /// Multiset of class sizes, sorted ascending. Invariant under vertex
    /// relabeling.
    pub fn class_size_multiset(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.equivalence_classes.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    }
}
