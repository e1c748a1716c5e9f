//! Shared helpers for integration tests.

use critgraph::graph::Graph;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random simple graph on n vertices with roughly `extra` edges beyond a
/// random spanning tree, guaranteed connected.
pub fn random_connected_graph(n: usize, extra: usize, rng: &mut ChaCha8Rng) -> Graph {
    assert!(n >= 1);
    let mut edges = Vec::new();
    let order = critgraph::rng::random_permutation(n, rng);
    for i in 1..n {
        let j = rng.random_range(0..i);
        edges.push((order[i], order[j]));
    }
    for _ in 0..extra {
        let a = rng.random_range(0..n as u32);
        let b = rng.random_range(0..n as u32);
        if a != b {
            edges.push((a, b));
        }
    }
    Graph::new(n, edges).expect("valid random graph")
}

/// Random simple graph, possibly disconnected.
#[allow(dead_code)]
pub fn random_graph(n: usize, m_attempts: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for _ in 0..m_attempts {
        let a = rng.random_range(0..n as u32);
        let b = rng.random_range(0..n as u32);
        if a != b {
            edges.push((a, b));
        }
    }
    Graph::new(n, edges).expect("valid random graph")
}
