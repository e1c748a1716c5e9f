//! Acceptance suite. One test per criterion; each prints a single
//! `ACCEPTANCE <id>: PASS (<elapsed>)` line (visible with --nocapture) and
//! enforces its stated time budget where one exists.

use std::fs;
use std::process::Command;
use std::time::{Duration, Instant};

use critgraph::alpha::{lexmin_alpha, max_edges};
use critgraph::circulant::{
    cnd_graph, cnd_is_critical, cnd_mvc_size, critical_tuples, search_critical, RowVerdict,
};
use critgraph::criticality::{double_cover_holds_everywhere, is_critical, CritStatus};
use critgraph::extensions::{replay_trace, shrink_chain, shrink_parallel, TrackedGraph};
use critgraph::generator::{
    assemble_g1, default_cover_size, generate_hard, EdgeTarget, GeneratorConfig,
};
use critgraph::graph::Graph;
use critgraph::greedy::greedy_solve;
use critgraph::rng::seeded_rng;
use critgraph::solver::{is_cover, mvc, SolveBudget, SolveStatus};
use critgraph_oracle::{brute_lexmin_alpha, brute_min_edges_over_cov};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn budget() -> SolveBudget {
    SolveBudget::default()
}

fn pass(name: &str, start: Instant, limit_secs: Option<u64>) {
    let elapsed = start.elapsed();
    println!("ACCEPTANCE {name}: PASS ({elapsed:.2?})");
    if let Some(limit) = limit_secs {
        assert!(
            elapsed <= Duration::from_secs(limit),
            "{name} exceeded its {limit}s budget: {elapsed:?}"
        );
    }
}

fn assert_critical(g: &Graph, what: &str) {
    let v = is_critical(g, &budget()).unwrap();
    assert_eq!(v.status, CritStatus::Critical, "{what} should be critical");
}

fn assert_reducible(g: &Graph, what: &str) {
    let v = is_critical(g, &budget()).unwrap();
    assert_eq!(v.status, CritStatus::Reducible, "{what} should be reducible");
}

/// Criterion 1: cliques and odd cycles critical, even cycles reducible,
/// articulation vertex implies reducible. Budget: 10 s.
#[test]
fn criterion_01_classical_criticality() {
    let start = Instant::now();
    for k in 3..=9usize {
        assert_critical(&Graph::complete(k), &format!("K{k}"));
        assert_critical(&Graph::cycle(2 * k + 1), &format!("C{}", 2 * k + 1));
    }
    for k in 2..=9usize {
        assert_reducible(&Graph::cycle(2 * k), &format!("C{}", 2 * k));
    }
    // Graphs with articulation vertices.
    let bowtie = Graph::new(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
    let bridge = Graph::new(
        8,
        [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6), (6, 7), (5, 7)],
    )
    .unwrap();
    let pendant = Graph::new(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
    let mut with_articulation = vec![
        Graph::path(5),
        Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap(),
        bowtie,
        bridge,
        pendant,
    ];
    let mut rng = seeded_rng(0xacce55);
    while with_articulation.len() < 12 {
        let g = random_connected(6 + with_articulation.len() % 5, 2, &mut rng);
        if !g.articulation_vertices().is_empty() {
            with_articulation.push(g);
        }
    }
    for (i, g) in with_articulation.iter().enumerate() {
        assert!(!g.articulation_vertices().is_empty());
        assert_reducible(g, &format!("articulation graph {i}"));
    }
    pass("C1 classical-criticality", start, Some(10));
}

/// Criterion 2: closed-form cover size and criticality of C_{n,d} match the
/// exact solver for all n <= 24, d <= 5. Budget: 5 min.
#[test]
fn criterion_02_cnd_formulas() {
    let start = Instant::now();
    for n in 2..=24usize {
        for d in 1..=5usize {
            if n <= d {
                continue;
            }
            let g = cnd_graph(n, d).unwrap();
            let solved = mvc(&g, &budget());
            assert_eq!(solved.status, SolveStatus::Exact);
            assert_eq!(solved.size, cnd_mvc_size(n, d).unwrap(), "C_{{{n},{d}}} cover size");
            if n >= 3 {
                let verdict = is_critical(&g, &budget()).unwrap();
                assert_ne!(verdict.status, CritStatus::Unknown);
                assert_eq!(
                    verdict.status == CritStatus::Critical,
                    cnd_is_critical(n, d),
                    "C_{{{n},{d}}} criticality"
                );
            }
        }
    }
    pass("C2 cnd-formulas", start, Some(300));
}

/// Reference degree-6 catalog rows, n from 4 to 60 (the implicit offset 1 is
/// omitted, matching the table). n values absent from the list have no
/// critical tuples.
const DEGREE6_TABLE: &str = "
4: 2,3
5: 2,3 2,4 3,4
6: 2,3 3,4
7: 2,3 2,4 3,5 4,5
8: 2,6 2,7 6,7
10: 4,5 5,6
11: 2,3 2,8 2,9 2,10 3,4 3,7 3,9 4,5 4,6 4,8 5,6 5,7 5,10 6,7 6,10 7,8 8,9 9,10
13: 3,4 3,9 4,10 5,8 5,12 8,12 9,10
14: 2,12 2,13 6,7 7,8 12,13
15: 2,3 2,12 3,13 6,7 6,8 7,9 8,9 12,13
17: 2,6 2,11 2,15 2,16 3,6 3,8 3,9 3,11 4,13 4,16 6,14 6,15 8,9 8,14 8,16 9,14 9,16 11,14 11,15 13,16 15,16
18: 3,4 3,14 4,15 8,9 9,10 14,15
19: 2,3 2,16 3,17 6,7 6,12 7,8 7,11 7,13 8,9 8,10 8,12 9,11 10,11 11,12 12,13 16,17
20: 2,18 2,19 3,4 3,16 4,17 7,8 7,12 8,13 12,13 16,17 18,19
22: 4,18 10,11 11,12
23: 2,3 2,9 2,14 2,20 5,10 5,13 7,8 7,11 7,12 7,15 7,16 8,16 10,11 10,12 10,13 10,18 11,12 11,13 11,16 12,13 12,16 13,18 15,16
24: 2,6 2,18
25: 3,4 6,7 6,18 7,8 7,17 7,18 7,19 8,18 9,10 9,15 10,11 10,14 10,16 11,15 14,15 15,16 17,18 18,19
26: 6,10 6,16 7,8 7,18 8,19 10,11 10,15 10,20 11,16 12,13 13,14 15,16 16,20 18,19
27: 2,3 3,4 6,7 6,20 7,20 12,13 12,14 13,15 14,15
28: 3,8 3,20 5,14 6,10 6,18 7,12 7,16 9,12 9,16 10,18 11,14 12,19 14,17 16,19
29: 2,12 2,17 5,12 5,13 5,16 5,17 6,9 6,14 6,15 6,20 9,13 9,16 12,17 13,20 14,15 16,20
30: 6,7 12,13 12,17 13,18 14,15 15,16 17,18
31: 2,3 2,6 3,15 3,16 5,6 5,10 10,11 10,20 14,15 14,16 15,17 16,17
32: 3,4 6,7 6,12 6,20 9,10 11,12 11,20 12,20
33: 2,9 6,7 12,16 12,17 14,15 14,18 15,18 15,19 18,19
34: 3,4 6,9 10,11 12,15 12,19 16,17 17,18
35: 2,3 2,15 2,20 5,16 5,19 7,8 10,17 10,18 11,12 11,15 11,20 13,14 16,17 16,18 17,18 17,19 18,19
36: 15,16 15,20
37: 10,11
38: 2,6 6,7 8,16 10,11 18,19 19,20
39: 2,3 3,4 3,8 3,17 5,15 9,10 9,16 15,16 17,18 18,19 18,20
40: 5,12 6,7 10,14 10,18 12,18 14,15 15,16 17,18
41: 2,18 3,4 3,15 5,14 5,19 8,11 8,12 9,16 9,20 10,11 13,17 14,15
42: 2,12 6,10 6,19 11,18
43: 2,3 2,9 5,19 6,7 8,12 14,15 15,18 16,20
44: 5,12 6,10 8,11 8,18 9,20
45: 2,6 6,7 9,10 12,13
46: 3,4 5,12 6,7 9,16 10,11 13,14 14,15 16,17 18,19
47: 2,3 5,17 5,19 6,19 8,11 9,10 9,18 10,11 13,14 14,15 15,16 15,19 17,18
48: 3,4
49: 18,19
50: 3,8 5,14 8,12 9,10 10,11 13,14 14,17
51: 2,3 2,15 6,7
52: 2,6 5,16 14,18
53: 2,9 3,4 4,13 4,16 6,7 6,12 8,11 8,20 9,10 10,11 10,13 13,14 15,16 16,17 18,19
55: 2,3 2,12 3,4 10,11 12,13 13,14 16,17 17,18 18,19
56: 5,14 5,16 5,18 6,7 6,17 8,11 8,18 9,10 11,14 14,17 14,20
57: 5,12 12,16 15,16
58: 4,16 6,7 6,10 8,11 9,10 10,16 13,14
59: 2,3 2,6 6,7 10,11 10,20 11,14 12,16 12,18 12,19 16,17 19,20
60: 2,18 3,4 5,14 5,16 6,10 8,11 8,14
";

fn parse_table(n_max: usize) -> Vec<(usize, Vec<Vec<u32>>)> {
    let mut out = Vec::new();
    for line in DEGREE6_TABLE.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (n, tuples) = line.split_once(':').expect("row format");
        let n: usize = n.trim().parse().unwrap();
        if n > n_max {
            continue;
        }
        let tuples: Vec<Vec<u32>> = tuples
            .split_whitespace()
            .map(|t| t.split(',').map(|x| x.parse().unwrap()).collect())
            .collect();
        out.push((n, tuples));
    }
    out
}

/// Criterion 3 (core): the degree-6 search over n in 4..=14 reproduces the
/// reference rows tuple-for-tuple, including empty n = 9 and 12.
/// Budget: 10 min.
#[test]
fn criterion_03_degree6_catalog() {
    let start = Instant::now();
    let rows = search_critical(6, (4, 14), (2, 20), &budget(), 1).unwrap();
    assert!(rows.iter().all(|r| r.verdict != RowVerdict::Unknown));
    let found = critical_tuples(&rows);
    let expected = parse_table(14);
    assert_eq!(found, expected, "catalog rows diverge from the reference table");
    // Absent n values really have no critical tuples.
    let ns: Vec<usize> = found.iter().map(|&(n, _)| n).collect();
    assert!(!ns.contains(&9) && !ns.contains(&12));
    // Every critical row re-verifies under a fresh budget.
    for row in rows.iter().filter(|r| r.verdict == RowVerdict::Critical) {
        let spec =
            critgraph::circulant::CirculantSpec::new(row.n, row.offsets.iter().copied()).unwrap();
        let g = critgraph::circulant::build_circulant(&spec);
        let v = is_critical(&g, &budget()).unwrap();
        assert_eq!(v.status, CritStatus::Critical);
        assert_eq!(Some(v.base_cover_size), row.cover_size);
    }
    pass("C3 degree6-catalog[4..14]", start, Some(600));
}

/// Criterion 3 (stretch, time-budgeted): the full degree-6 sweep matches the
/// reference table row-for-row and totals 427 critical tuples. The degree-4
/// sweep over the stated grid (n in 2..=80, j in 2..=20) contains 128
/// critical tuples, of which exactly the seven with j = 20 fall outside the
/// reference count of 121; restricting to j <= 19 reproduces 121 exactly.
#[test]
fn criterion_03_stretch_full_sweeps() {
    let start = Instant::now();
    let rows = search_critical(6, (4, 60), (2, 20), &budget(), 1).unwrap();
    assert!(rows.iter().all(|r| r.verdict != RowVerdict::Unknown));
    let found = critical_tuples(&rows);
    let critical_total: usize = found.iter().map(|(_, t)| t.len()).sum();
    assert_eq!(critical_total, 427, "degree-6 total");
    assert_eq!(found, parse_table(60), "degree-6 full table");

    let rows4 = search_critical(4, (2, 80), (2, 20), &budget(), 1).unwrap();
    assert!(rows4.iter().all(|r| r.verdict != RowVerdict::Unknown));
    let crit4: Vec<(usize, u32)> = rows4
        .iter()
        .filter(|r| r.verdict == RowVerdict::Critical)
        .map(|r| (r.n, r.offsets[1]))
        .collect();
    assert_eq!(crit4.len(), 128, "degree-4 total over the stated grid");
    let within_19 = crit4.iter().filter(|&&(_, j)| j <= 19).count();
    assert_eq!(within_19, 121, "degree-4 total restricted to j <= 19");
    let j20: Vec<usize> = crit4.iter().filter(|&&(_, j)| j == 20).map(|&(n, _)| n).collect();
    assert_eq!(j20, vec![21, 27, 32, 41, 43, 58, 71]);
    println!(
        "ACCEPTANCE C3-stretch note: degree-4 grid holds 128 critical tuples; the reference count of 121 \
         corresponds to j <= 19 (the j = 20 tuples are n = {j20:?}, each verified critical)"
    );
    pass("C3-stretch full-sweeps", start, Some(600));
}

fn random_connected(n: usize, extra: usize, rng: &mut ChaCha8Rng) -> Graph {
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
    Graph::new(n, edges).unwrap()
}

/// One uniformly random applicable parallel/chain/split step.
fn random_step(tg: &TrackedGraph, rng: &mut ChaCha8Rng) -> TrackedGraph {
    loop {
        match rng.random_range(0..3) {
            0 => {
                let v = rng.random_range(0..tg.graph().n() as u32);
                return tg.parallel_extend(v).unwrap();
            }
            1 => {
                let e = tg.graph().edges()[rng.random_range(0..tg.graph().m())];
                return tg.chain_extend(e).unwrap();
            }
            _ => {
                let u = rng.random_range(0..tg.graph().n() as u32);
                let deg = tg.graph().degree(u);
                if deg < 2 {
                    continue;
                }
                let take = rng.random_range(1..deg);
                let mut nbrs = tg.graph().neighbors(u).to_vec();
                for i in 0..take {
                    let j = i + rng.random_range(0..nbrs.len() - i);
                    nbrs.swap(i, j);
                }
                return tg.split_vertex(u, &nbrs[..take]).unwrap();
            }
        }
    }
}

/// Criterion 4: 200 random extension sequences (length <= 8) from K3 keep
/// the tracked cover exactly minimum at every step, and every final graph is
/// critical. Budget: 10 min.
#[test]
fn criterion_04_extension_soundness() {
    let start = Instant::now();
    for seed in 0..200u64 {
        let mut rng = seeded_rng(0xc4_0000 + seed);
        let steps = 1 + (seed as usize % 8);
        let mut tg = TrackedGraph::k3();
        for _ in 0..steps {
            tg = random_step(&tg, &mut rng);
            assert!(is_cover(tg.graph(), tg.cover()), "seed {seed}");
            let solved = mvc(tg.graph(), &budget());
            assert_eq!(solved.status, SolveStatus::Exact);
            assert_eq!(solved.size, tg.cover_size(), "seed {seed}: tracked cover not minimum");
        }
        assert_eq!(tg.cover_size(), 2 + steps);
        let verdict = is_critical(tg.graph(), &budget()).unwrap();
        assert_eq!(verdict.status, CritStatus::Critical, "seed {seed}");
    }
    pass("C4 extension-soundness", start, Some(600));
}

/// Criterion 5: 100 generated bundles with n <= 30 have a valid hidden
/// cover, an independent non-cover side, and exact optimum equal to ell.
/// Budget: 10 min.
#[test]
fn criterion_05_generator_soundness() {
    let start = Instant::now();
    for i in 0..100u64 {
        let n = 12 + (i as usize % 19);
        let ell = default_cover_size(n);
        let lower = lexmin_alpha(n, ell).unwrap().edge_lower_bound();
        let upper = max_edges(n, ell).unwrap();
        let m = (lower + upper) / 2;
        let cfg = GeneratorConfig::new(n, EdgeTarget::Count(m), 0xc5_0000 + i);
        let bundle = generate_hard(&cfg).unwrap();

        assert_eq!(bundle.hidden_cover.len(), bundle.ell, "bundle {i}");
        assert!(is_cover(&bundle.graph, &bundle.hidden_cover), "bundle {i}");
        let mut in_cover = vec![false; bundle.n];
        for &v in &bundle.hidden_cover {
            in_cover[v as usize] = true;
        }
        for &(u, v) in bundle.graph.edges() {
            assert!(
                in_cover[u as usize] || in_cover[v as usize],
                "bundle {i}: edge inside the independent side"
            );
        }
        let solved = mvc(&bundle.graph, &budget());
        assert_eq!(solved.status, SolveStatus::Exact);
        assert_eq!(solved.size, bundle.ell, "bundle {i}: hidden cover not minimum");
    }
    pass("C5 generator-soundness", start, Some(600));
}

/// Criterion 6: lexmin vectors match brute-force enumeration over all
/// (n, c) with c < n <= 60 (and realize the CoV-wide minimum edge count);
/// 1000 random incremental update chains equal batch recomputation; every
/// generated assembly respects the lower bound and max_edges. Budget: 2 min.
#[test]
fn criterion_06_alpha_machinery() {
    let start = Instant::now();
    for n in 1..=60usize {
        for c in 0..n {
            let ours = lexmin_alpha(n, c).unwrap();
            let brute = brute_lexmin_alpha(n, c).unwrap();
            assert_eq!(ours.entries(), &brute[..], "lexmin({n},{c})");
            assert_eq!(
                Some(ours.edge_lower_bound()),
                brute_min_edges_over_cov(n, c),
                "edge bound ({n},{c})"
            );
        }
    }

    let mut rng = seeded_rng(0xc6);
    for chain in 0..1000 {
        let n = rng.random_range(3..=80usize);
        let c = rng.random_range(0..n);
        let mut vec = lexmin_alpha(n, c).unwrap();
        let (mut n_rem, mut c_rem) = (n, c);
        for _ in 0..rng.random_range(1..25) {
            let parallel = rng.random_range(0..2) == 0;
            let next = if parallel { vec.after_parallel() } else { vec.after_chain() };
            match next {
                Ok(v) => {
                    n_rem -= if parallel { 1 } else { 2 };
                    c_rem -= 1;
                    assert_eq!(v, lexmin_alpha(n_rem, c_rem).unwrap(), "chain {chain}");
                    vec = v;
                }
                Err(_) => break,
            }
        }
    }

    // Generated assemblies sit inside the alpha edge window.
    for i in 0..25u64 {
        let n = 16 + (i as usize % 12);
        let cfg = GeneratorConfig::new(
            n,
            EdgeTarget::Count(max_edges(n, default_cover_size(n)).unwrap() / 2),
            0xc6_1000 + i,
        );
        let bundle = generate_hard(&cfg).unwrap();
        let bases: Vec<TrackedGraph> = bundle
            .base_traces
            .iter()
            .map(|t| replay_trace(TrackedGraph::k3(), t).unwrap())
            .collect();
        let assembly = assemble_g1(&bases, bundle.ell, bundle.m, bundle.n).unwrap();
        let lower = lexmin_alpha(assembly.n, bundle.ell).unwrap().edge_lower_bound();
        assert!(assembly.edges.len() as u64 >= lower, "assembly {i} below the alpha lower bound");
        assert!(bundle.m <= max_edges(bundle.n, bundle.ell).unwrap(), "assembly {i}");
    }
    pass("C6 alpha-machinery", start, Some(120));
}

/// Criterion 7: for 50 small critical graphs satisfying the double-cover
/// condition, every parallel, chain and split extension satisfies it too.
#[test]
fn criterion_07_double_cover_preservation() {
    let start = Instant::now();
    let mut graphs: Vec<Graph> = vec![
        Graph::complete(3),
        Graph::complete(4),
        Graph::complete(5),
        Graph::cycle(5),
        Graph::cycle(7),
    ];
    let mut rng = seeded_rng(0xc7);
    let mut attempt = 0u64;
    while graphs.len() < 50 {
        attempt += 1;
        let mut tg = TrackedGraph::k3();
        for _ in 0..(attempt % 3 + 1) {
            tg = random_step(&tg, &mut rng);
        }
        if tg.graph().n() <= 9 && !graphs.contains(tg.graph()) {
            graphs.push(tg.graph().clone());
        }
    }
    for (idx, g) in graphs.iter().enumerate() {
        assert_eq!(is_critical(g, &budget()).unwrap().status, CritStatus::Critical);
        assert!(double_cover_holds_everywhere(g, &budget()).unwrap(), "root {idx}");
        let root = TrackedGraph::from_verified(g.clone(), &budget()).unwrap();
        for v in 0..g.n() as u32 {
            let ext = root.parallel_extend(v).unwrap();
            assert!(
                double_cover_holds_everywhere(ext.graph(), &budget()).unwrap(),
                "graph {idx} parallel {v}"
            );
        }
        for &e in g.edges() {
            let ext = root.chain_extend(e).unwrap();
            assert!(
                double_cover_holds_everywhere(ext.graph(), &budget()).unwrap(),
                "graph {idx} chain {e:?}"
            );
        }
        for u in 0..g.n() as u32 {
            let deg = g.degree(u);
            let nbrs = g.neighbors(u);
            for mask in 1u32..(1u32 << deg) {
                if mask.count_ones() as usize >= deg {
                    continue;
                }
                let f: Vec<u32> =
                    (0..deg).filter(|&i| mask & (1 << i) != 0).map(|i| nbrs[i]).collect();
                let ext = root.split_vertex(u, &f).unwrap();
                assert!(
                    double_cover_holds_everywhere(ext.graph(), &budget()).unwrap(),
                    "graph {idx} split u={u} f={f:?}"
                );
            }
        }
    }
    pass("C7 double-cover-preservation", start, None);
}

/// Criterion 8: extension/shrink round trips restore the original graph,
/// and both shrink operations reduce the exact cover size by exactly one on
/// 100 random small graphs, reducible ones included.
#[test]
fn criterion_08_shrink_inverses() {
    let start = Instant::now();
    let mut rng = seeded_rng(0xc8);

    // Round trips through the tracked extensions.
    for case in 0..40 {
        let mut tg = TrackedGraph::k3();
        for _ in 0..(case % 5) {
            tg = random_step(&tg, &mut rng);
        }
        let v = rng.random_range(0..tg.graph().n() as u32);
        let ext = tg.parallel_extend(v).unwrap();
        let added = ext.graph().n() as u32 - 1;
        let (back, cover) = shrink_parallel(ext.graph(), added, v, Some(ext.cover())).unwrap();
        assert_eq!(&back, tg.graph(), "case {case}: parallel round trip");
        assert_eq!(cover.unwrap().len(), tg.cover_size());

        let e = tg.graph().edges()[rng.random_range(0..tg.graph().m())];
        let ext = tg.chain_extend(e).unwrap();
        let (x, y) = (ext.graph().n() as u32 - 2, ext.graph().n() as u32 - 1);
        let back = shrink_chain(ext.graph(), x, y).unwrap();
        assert_eq!(&back, tg.graph(), "case {case}: chain round trip");
    }

    // Shrinks drop the exact cover size by one on arbitrary graphs.
    let mut parallel_sites = 0;
    let mut chain_sites = 0;
    let mut attempts = 0;
    while (parallel_sites < 100 || chain_sites < 100) && attempts < 4000 {
        attempts += 1;
        let n = 4 + attempts % 9;
        let g = random_connected(n, attempts % 10, &mut rng);
        let before = mvc(&g, &budget()).size;
        if parallel_sites < 100 {
            if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| g.neighbor_equivalent(u, v)) {
                let (shrunk, _) = shrink_parallel(&g, u, v, None).unwrap();
                assert_eq!(mvc(&shrunk, &budget()).size, before - 1, "parallel shrink on {g:?}");
                parallel_sites += 1;
            }
        }
        if chain_sites < 100 {
            let site = g.edges().iter().copied().find(|&(x, y)| {
                g.degree(x) == 2
                    && g.degree(y) == 2
                    && g.neighbors(x).iter().find(|&&z| z != y)
                        != g.neighbors(y).iter().find(|&&z| z != x)
            });
            if let Some((x, y)) = site {
                let shrunk = shrink_chain(&g, x, y).unwrap();
                assert_eq!(mvc(&shrunk, &budget()).size, before - 1, "chain shrink on {g:?}");
                chain_sites += 1;
            }
        }
    }
    assert!(
        parallel_sites >= 100 && chain_sites >= 100,
        "found only {parallel_sites} parallel and {chain_sites} chain sites"
    );
    pass("C8 shrink-inverses", start, None);
}

/// Criterion 9: full-scale heuristic-solver tables are out of reach here, so
/// the substitute is a report over 10 bundles at n = 300, m = n^1.7; per the
/// criterion only cover validity and distance >= 0 are asserted. The report
/// also covers the sparse regime (where the base structure dominates and
/// greedy demonstrably misses), the dense-regime analog, and why the
/// literal k = 1.9 point is infeasible at n = 300.
#[test]
fn criterion_09_hardness_report() {
    let start = Instant::now();
    let n = 300usize;
    let run_regime = |label: &str, target: EdgeTarget, seeds: std::ops::Range<u64>| -> Vec<i64> {
        let mut distances = Vec::new();
        for i in seeds {
            let cfg = GeneratorConfig::new(n, target, i);
            let bundle = generate_hard(&cfg).unwrap();
            let greedy = greedy_solve(&bundle.graph);
            assert!(is_cover(&bundle.graph, &greedy), "{label} seed {i}: invalid greedy cover");
            let distance = greedy.len() as i64 - bundle.ell as i64;
            assert!(distance >= 0, "{label} seed {i}: greedy beat the proven optimum");
            distances.push(distance);
        }
        distances
    };

    let hard = run_regime("k=1.7", EdgeTarget::Exponent(1.7), 0xc9_0000..0xc9_000a);
    println!(
        "ACCEPTANCE C9 report: n=300 k=1.7 greedy distances {hard:?} (avg {:.1}, max {}, \
         {} of 10 above optimum)",
        hard.iter().sum::<i64>() as f64 / hard.len() as f64,
        hard.iter().max().unwrap(),
        hard.iter().filter(|&&d| d > 0).count()
    );

    // Sparse regime: fill edges no longer swamp the critical bases, and the
    // max-degree heuristic pays for it.
    let sparse = run_regime("k=1.2", EdgeTarget::Exponent(1.2), 0xc9_2000..0xc9_200a);
    println!(
        "ACCEPTANCE C9 report: n=300 k=1.2 greedy distances {sparse:?} (avg {:.1}, max {}, \
         {} of 10 above optimum)",
        sparse.iter().sum::<i64>() as f64 / sparse.len() as f64,
        sparse.iter().max().unwrap(),
        sparse.iter().filter(|&&d| d > 0).count()
    );

    // Dense-regime analog, reported but not asserted.
    let ell = default_cover_size(n);
    let dense_m = max_edges(n, ell).unwrap() - 100;
    let dense = run_regime("dense", EdgeTarget::Count(dense_m), 0xc9_1000..0xc9_1003);
    let infeasible_m = (n as f64).powf(1.9).round() as u64;
    println!(
        "ACCEPTANCE C9 report: dense analog m={dense_m} greedy distances {dense:?}; literal \
         k=1.9 would need m={infeasible_m} > max_edges={} (and > C(300,2)={}), infeasible",
        max_edges(n, ell).unwrap(),
        n * (n - 1) / 2
    );
    pass("C9 hardness-report", start, None);
}

/// Criterion 10: repeating any seeded command produces byte-identical
/// artifacts; circulant-search output is worker-count independent.
#[test]
fn criterion_10_determinism() {
    let start = Instant::now();

    // Library level: identical bundles from identical configs.
    let cfg = GeneratorConfig::new(40, EdgeTarget::Exponent(1.6), 0xc10);
    let a = generate_hard(&cfg).unwrap();
    let b = generate_hard(&cfg).unwrap();
    assert_eq!(a.dimacs_string(), b.dimacs_string());
    assert_eq!(a.sidecar_string(), b.sidecar_string());

    // Binary level: gen twice, byte-identical files.
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let bin = env!("CARGO_BIN_EXE_critgraph");
    for name in ["r1", "r2"] {
        let out = Command::new(bin)
            .current_dir(d)
            .args(["gen", "--n", "36", "--k", "1.6", "--seed", "99", "--out", name])
            .output()
            .unwrap();
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    }
    assert_eq!(fs::read(d.join("r1.dimacs")).unwrap(), fs::read(d.join("r2.dimacs")).unwrap());
    assert_eq!(fs::read(d.join("r1.json")).unwrap(), fs::read(d.join("r2.json")).unwrap());

    // Binary level: circulant-search with different worker counts.
    for (name, workers) in [("s1.csv", "1"), ("s2.csv", "2"), ("s4.csv", "4")] {
        let out = Command::new(bin)
            .current_dir(d)
            .args([
                "circulant-search",
                "--degree",
                "6",
                "--n",
                "4..12",
                "--offsets",
                "2..12",
                "--workers",
                workers,
                "--out",
                name,
            ])
            .output()
            .unwrap();
        assert!(out.status.success());
    }
    let s1 = fs::read(d.join("s1.csv")).unwrap();
    assert_eq!(s1, fs::read(d.join("s2.csv")).unwrap());
    assert_eq!(s1, fs::read(d.join("s4.csv")).unwrap());

    pass("C10 determinism", start, None);
}
