//! Shared instance generators for the property and acceptance suites.
//! Everything is seeded or exhaustive, so every run sees the same corpus.

#![allow(dead_code)]

use forcing_core::graph::{WeightedDigraph, WeightedMultigraph};
use forcing_core::matroid::{explicit_matroid, MatroidRef};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random digraph with terminals 1 -> n; resamples until t is reachable.
pub fn random_st_digraph(
    rng: &mut ChaCha8Rng,
    max_n: usize,
    weights: &[i64],
) -> WeightedDigraph {
    loop {
        let n = rng.gen_range(2..=max_n);
        let p = rng.gen_range(0.2..0.7);
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in 1..=n {
                if u != v && rng.gen_bool(p) {
                    let w = weights[rng.gen_range(0..weights.len())];
                    edges.push((u, v, w));
                }
            }
        }
        let g = WeightedDigraph::new(n, edges).unwrap().with_terminals(1, n).unwrap();
        if forcing_core::build_sp_dag(&g).is_ok() {
            return g;
        }
    }
}

/// Every labeled digraph on `n` vertices (no self-loops), unit weights,
/// terminals 1 -> n. Includes graphs where t is unreachable.
pub fn all_digraphs(n: usize) -> Vec<WeightedDigraph> {
    let slots: Vec<(usize, usize)> =
        (1..=n).flat_map(|u| (1..=n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
    let mut out = Vec::with_capacity(1 << slots.len());
    for mask in 0u64..1 << slots.len() {
        let edges: Vec<(usize, usize, i64)> = slots
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &(u, v))| (u, v, 1))
            .collect();
        out.push(
            WeightedDigraph::new(n, edges).unwrap().with_terminals(1, n.max(1)).unwrap(),
        );
    }
    out
}

/// Random connected multigraph (parallel edges and self-loops allowed).
pub fn random_connected_multigraph(
    rng: &mut ChaCha8Rng,
    max_n: usize,
    max_m: usize,
    weights: &[i64],
) -> WeightedMultigraph {
    loop {
        let n = rng.gen_range(1..=max_n);
        let lo = n.saturating_sub(1).max(1);
        if lo > max_m {
            continue;
        }
        let m = rng.gen_range(lo..=max_m);
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let u = rng.gen_range(1..=n);
            let v = rng.gen_range(1..=n);
            let w = weights[rng.gen_range(0..weights.len())];
            edges.push((u, v, w));
        }
        let g = WeightedMultigraph::new(n, edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

/// Every labeled simple graph on `n` vertices, unit weights.
pub fn all_simple_graphs(n: usize) -> Vec<WeightedMultigraph> {
    let slots: Vec<(usize, usize)> =
        (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
    let mut out = Vec::with_capacity(1 << slots.len());
    for mask in 0u64..1 << slots.len() {
        let edges: Vec<(usize, usize, i64)> = slots
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &(u, v))| (u, v, 1))
            .collect();
        out.push(WeightedMultigraph::new(n, edges).unwrap());
    }
    out
}

/// Every connected multigraph structure on exactly `n` labeled vertices with
/// at most `max_m` edges (self-loops and parallels included), unit weights.
pub fn all_connected_multigraphs(n: usize, max_m: usize) -> Vec<WeightedMultigraph> {
    let slots: Vec<(usize, usize)> =
        (1..=n).flat_map(|u| (u..=n).map(move |v| (u, v))).collect();
    let mut out = Vec::new();
    // Multisets of slots of size <= max_m, as non-decreasing index tuples.
    fn rec(
        slots: &[(usize, usize)],
        n: usize,
        start: usize,
        left: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<WeightedMultigraph>,
    ) {
        let edges: Vec<(usize, usize, i64)> =
            current.iter().map(|&i| (slots[i].0, slots[i].1, 1)).collect();
        let g = WeightedMultigraph::new(n, edges).unwrap();
        if g.is_connected() {
            out.push(g);
        }
        if left == 0 {
            return;
        }
        for i in start..slots.len() {
            current.push(i);
            rec(slots, n, i, left - 1, current, out);
            current.pop();
        }
    }
    rec(&slots, n, 0, max_m, &mut Vec::new(), &mut out);
    out
}

/// All vertex covers of size <= k, ascending by size then lexicographic.
pub fn vertex_covers_up_to(g: &WeightedMultigraph, k: usize) -> Vec<Vec<usize>> {
    let mut covers = Vec::new();
    for mask in 0u64..1 << g.n {
        let cover: Vec<usize> = (1..=g.n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
        if cover.len() > k {
            continue;
        }
        let covered = g
            .edges
            .iter()
            .all(|e| cover.binary_search(&e.u).is_ok() || cover.binary_search(&e.v).is_ok());
        if covered {
            covers.push(cover);
        }
    }
    covers.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    covers
}

/// Explicit matroid fixtures (ground <= 9), exercised by the matroid and
/// acceptance suites. All are validated by the loader's exchange check.
pub fn explicit_fixtures() -> Vec<(String, MatroidRef)> {
    let mut out: Vec<(String, MatroidRef)> = Vec::new();
    let mut add = |name: &str, ground: usize, bases: Vec<Vec<usize>>| {
        let m = explicit_matroid(ground, bases)
            .unwrap_or_else(|e| panic!("fixture {name} must be a matroid: {e}"));
        out.push((name.to_string(), m));
    };

    // Uniform matroids as explicit basis lists.
    for n in 2..=6usize {
        for r in 1..n {
            let bases: Vec<Vec<usize>> = combinations(n, r);
            add(&format!("explicit-U({n},{r})"), n, bases);
        }
    }
    // Graphic matroids of small graphs, listed extensionally.
    add("triangle", 3, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
    add("square", 4, vec![vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]]);
    // Triangle plus a pendant edge (edge 4 is a coloop).
    add(
        "triangle+pendant",
        4,
        vec![vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]],
    );
    // Rank 1 with a free element and loops.
    add("free+loops", 4, vec![vec![1]]);
    // Two parallel classes: {1,2} x {3,4}.
    add("two-parallel-classes", 4, vec![vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4]]);
    // The Fano plane: rank 3 on 7 points, bases = all triples except lines.
    let lines = [
        [1, 2, 3],
        [1, 4, 5],
        [1, 6, 7],
        [2, 4, 6],
        [2, 5, 7],
        [3, 4, 7],
        [3, 5, 6],
    ];
    let fano: Vec<Vec<usize>> = combinations(7, 3)
        .into_iter()
        .filter(|b| !lines.iter().any(|l| l.to_vec() == *b))
        .collect();
    add("fano", 7, fano);
    // Direct sum of a triangle and U(2,1) (elements 4, 5 parallel).
    add(
        "triangle+parallel-pair",
        5,
        vec![
            vec![1, 2, 4],
            vec![1, 2, 5],
            vec![1, 3, 4],
            vec![1, 3, 5],
            vec![2, 3, 4],
            vec![2, 3, 5],
        ],
    );
    out
}

fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (1..=n).combinations(r).collect()
}

/// All shortest s-t paths of a digraph by exhaustive simple-path search,
/// independent of the DAG machinery. Edge-id sequences, sorted.
pub fn brute_shortest_st_paths(g: &WeightedDigraph) -> Vec<Vec<usize>> {
    let (s, t) = g.terminals().unwrap();
    let mut adj = vec![Vec::new(); g.n + 1];
    for (i, e) in g.edges.iter().enumerate() {
        adj[e.tail].push((e.head, e.weight, i + 1));
    }
    brute_shortest(&adj, g.n, s, t)
}

/// Undirected counterpart of [`brute_shortest_st_paths`].
pub fn brute_shortest_st_paths_undirected(g: &WeightedMultigraph) -> Vec<Vec<usize>> {
    let (s, t) = g.terminals().unwrap();
    let mut adj = vec![Vec::new(); g.n + 1];
    for (i, e) in g.edges.iter().enumerate() {
        adj[e.u].push((e.v, e.weight, i + 1));
        adj[e.v].push((e.u, e.weight, i + 1));
    }
    brute_shortest(&adj, g.n, s, t)
}

fn brute_shortest(
    adj: &[Vec<(usize, i64, usize)>],
    n: usize,
    s: usize,
    t: usize,
) -> Vec<Vec<usize>> {
    fn dfs(
        adj: &[Vec<(usize, i64, usize)>],
        v: usize,
        t: usize,
        weight: i64,
        visited: &mut Vec<bool>,
        stack: &mut Vec<usize>,
        found: &mut Vec<(i64, Vec<usize>)>,
    ) {
        if v == t {
            found.push((weight, stack.clone()));
            return;
        }
        for &(to, w, id) in &adj[v] {
            if visited[to] {
                continue;
            }
            visited[to] = true;
            stack.push(id);
            dfs(adj, to, t, weight + w, visited, stack, found);
            stack.pop();
            visited[to] = false;
        }
    }
    let mut visited = vec![false; n + 1];
    visited[s] = true;
    let mut found = Vec::new();
    dfs(adj, s, t, 0, &mut visited, &mut Vec::new(), &mut found);
    let best = match found.iter().map(|(w, _)| *w).min() {
        Some(b) => b,
        None => return Vec::new(),
    };
    let mut paths: Vec<Vec<usize>> =
        found.into_iter().filter(|(w, _)| *w == best).map(|(_, p)| p).collect();
    paths.sort();
    paths
}

/// Exact minimum hitting set size by ascending subset search over the union.
pub fn min_hitting_set_size(families: &[Vec<usize>]) -> usize {
    use itertools::Itertools;
    if families.is_empty() {
        return 0;
    }
    let mut universe: Vec<usize> = families.iter().flatten().copied().collect();
    universe.sort_unstable();
    universe.dedup();
    for k in 0..=universe.len() {
        for candidate in universe.iter().copied().combinations(k) {
            if families.iter().all(|f| f.iter().any(|e| candidate.contains(e))) {
                return k;
            }
        }
    }
    unreachable!("the full universe hits everything");
}
