//! Brute-force reference implementations used as independent test oracles.
//! Everything here enumerates exhaustively and shares no code with the
//! branch-and-bound solver or the closed-form formulas it checks.

use critgraph::graph::Graph;

const MAX_BRUTE_N: usize = 26;

fn edge_masks(g: &Graph) -> Vec<u64> {
    assert!(g.n() <= MAX_BRUTE_N, "brute force capped at {MAX_BRUTE_N} vertices");
    g.edges().iter().map(|&(u, v)| (1u64 << u) | (1u64 << v)).collect()
}

fn covers(masks: &[u64], subset: u64) -> bool {
    masks.iter().all(|&m| m & subset != 0)
}

/// Minimum vertex cover size by enumerating all 2^n subsets.
pub fn brute_mvc(g: &Graph) -> usize {
    brute_mvc_cover(g).0
}

/// Minimum vertex cover size plus the first certificate found.
pub fn brute_mvc_cover(g: &Graph) -> (usize, Vec<u32>) {
    let masks = edge_masks(g);
    let mut best = u32::MAX;
    let mut best_subset = 0u64;
    for subset in 0..(1u64 << g.n()) {
        let size = subset.count_ones();
        if size < best && covers(&masks, subset) {
            best = size;
            best_subset = subset;
            if best == 0 {
                break;
            }
        }
    }
    let cover = (0..g.n() as u32).filter(|&v| best_subset & (1 << v) != 0).collect();
    (best as usize, cover)
}

/// Minimum cover size among covers containing `forced_in` and avoiding
/// `forced_out`; `None` when no such cover exists.
pub fn brute_mvc_constrained(g: &Graph, forced_in: &[u32], forced_out: &[u32]) -> Option<usize> {
    let masks = edge_masks(g);
    let in_mask: u64 = forced_in.iter().fold(0, |acc, &v| acc | (1u64 << v));
    let out_mask: u64 = forced_out.iter().fold(0, |acc, &v| acc | (1u64 << v));
    let mut best: Option<u32> = None;
    for subset in 0..(1u64 << g.n()) {
        if subset & in_mask != in_mask || subset & out_mask != 0 {
            continue;
        }
        if covers(&masks, subset) {
            let size = subset.count_ones();
            if best.is_none_or(|b| size < b) {
                best = Some(size);
            }
        }
    }
    best.map(|b| b as usize)
}

/// Maximum independent set size by subset enumeration.
pub fn brute_mis(g: &Graph) -> usize {
    let masks = edge_masks(g);
    let mut best = 0;
    for subset in 0..(1u64 << g.n()) {
        if masks.iter().all(|&m| (m & subset) != m) {
            best = best.max(subset.count_ones());
        }
    }
    best as usize
}

/// All minimum covers, as sorted vertex lists.
pub fn brute_min_covers(g: &Graph) -> Vec<Vec<u32>> {
    let masks = edge_masks(g);
    let c = brute_mvc(g) as u32;
    let mut out = Vec::new();
    for subset in 0..(1u64 << g.n()) {
        if subset.count_ones() == c && covers(&masks, subset) {
            out.push((0..g.n() as u32).filter(|&v| subset & (1 << v) != 0).collect());
        }
    }
    out
}

/// Definition-level criticality: every single-edge deletion lowers the
/// brute-force minimum cover size. Requires a connected input.
pub fn brute_is_critical(g: &Graph) -> bool {
    assert!(g.is_connected(), "criticality is defined for connected graphs");
    let c = brute_mvc(g);
    g.edges().iter().all(|&e| brute_mvc(&g.delete_edge(e).expect("edge from list")) < c)
}

/// Some minimum cover contains both endpoints of every edge.
pub fn brute_double_cover(g: &Graph) -> bool {
    let covers = brute_min_covers(g);
    g.edges().iter().all(|&(u, v)| covers.iter().any(|c| c.contains(&u) && c.contains(&v)))
}

/// Lexicographic minimum over all clique-multiplicity vectors realizing
/// (n, c), by enumerating the partitions of n into exactly n - c parts.
/// Vectors are compared on (alpha_n, ..., alpha_1), smaller first differing
/// entry wins. Returns the nonzero (size, count) entries, ascending.
pub fn brute_lexmin_alpha(n: usize, c: usize) -> Option<Vec<(usize, usize)>> {
    if n == 0 && c == 0 {
        return Some(Vec::new());
    }
    if n <= c {
        return None;
    }
    let parts = n - c;
    let mut best: Option<Vec<usize>> = None;
    let mut current = Vec::new();
    partitions(n, parts, n, &mut current, &mut |candidate| {
        let smaller = match &best {
            None => true,
            Some(b) => alpha_lex_less(candidate, b, n),
        };
        if smaller {
            best = Some(candidate.to_vec());
        }
    });
    best.map(|parts| {
        let mut alpha = vec![0usize; n + 1];
        for p in parts {
            alpha[p] += 1;
        }
        (1..=n).filter(|&i| alpha[i] > 0).map(|i| (i, alpha[i])).collect()
    })
}

/// Minimum edge total over ALL realizations in CoV(n, c), not just the
/// lexicographic minimum; cross-checks the edge-lower-bound claim.
pub fn brute_min_edges_over_cov(n: usize, c: usize) -> Option<u64> {
    if n == 0 && c == 0 {
        return Some(0);
    }
    if n <= c {
        return None;
    }
    let parts = n - c;
    let mut best: Option<u64> = None;
    let mut current = Vec::new();
    partitions(n, parts, n, &mut current, &mut |candidate| {
        let total: u64 = candidate.iter().map(|&p| (p * (p - 1) / 2) as u64).sum();
        if best.is_none_or(|b| total < b) {
            best = Some(total);
        }
    });
    best
}

/// Enumerates partitions of `remaining` into exactly `parts_left`
/// non-increasing parts, each at most `max_part`.
fn partitions(
    remaining: usize,
    parts_left: usize,
    max_part: usize,
    current: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if parts_left == 0 {
        if remaining == 0 {
            visit(current);
        }
        return;
    }
    if remaining < parts_left {
        return;
    }
    let lo = remaining.div_ceil(parts_left).max(1);
    let hi = max_part.min(remaining - (parts_left - 1));
    for p in lo..=hi {
        current.push(p);
        partitions(remaining - p, parts_left - 1, p, current, visit);
        current.pop();
    }
}

/// True iff partition `a` maps to a lexicographically smaller alpha vector
/// than partition `b` under the (alpha_n, ..., alpha_1) ordering.
fn alpha_lex_less(a: &[usize], b: &[usize], n: usize) -> bool {
    let mut alpha_a = vec![0usize; n + 1];
    let mut alpha_b = vec![0usize; n + 1];
    for &p in a {
        alpha_a[p] += 1;
    }
    for &p in b {
        alpha_b[p] += 1;
    }
    for i in (1..=n).rev() {
        if alpha_a[i] != alpha_b[i] {
            return alpha_a[i] < alpha_b[i];
        }
    }
    false
}
