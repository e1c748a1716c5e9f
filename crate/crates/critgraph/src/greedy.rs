//! Naive greedy baseline: repeatedly add a maximum-degree vertex of the
//! residual graph to the cover (lowest index on ties) and delete its edges.

use crate::graph::Graph;

pub fn greedy_solve(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n as u32).map(|v| g.degree(v)).collect();
    let mut remaining = g.m();
    let mut cover = Vec::new();
    while remaining > 0 {
        let mut best = u32::MAX;
        let mut best_deg = 0usize;
        for v in 0..n as u32 {
            if alive[v as usize] && deg[v as usize] > best_deg {
                best_deg = deg[v as usize];
                best = v;
            }
        }
        let v = best;
        for &u in g.neighbors(v) {
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
