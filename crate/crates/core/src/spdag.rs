//! Shortest-path DAG construction and path counting.
//!
//! For a positively weighted graph with terminals s, t: compute the distance
//! labeling from s, keep exactly the edges with `d_s(head) = d_s(tail) + w`,
//! and drop every vertex that is not on an s-t path. The s-t paths of the
//! result are exactly the shortest s-t paths of the input, and the result is
//! acyclic, so the forcing problems reduce to path problems on a DAG.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::exec;
use crate::graph::{EdgeId, VertexId, WeightedDigraph, WeightedMultigraph};

/// Distances from a source vertex; `None` encodes unreachable.
#[derive(Debug, Clone)]
pub struct DistanceLabeling {
    pub source: VertexId,
    pub dist: Vec<Option<i64>>,
}

impl DistanceLabeling {
    pub fn get(&self, v: VertexId) -> Option<i64> {
        self.dist.get(v).copied().flatten()
    }
}

fn dijkstra(n: usize, adj: &[Vec<(VertexId, i64)>], source: VertexId) -> Result<DistanceLabeling> {
    if source == 0 || source > n {
        return Err(Error::VertexOutOfRange(source, n));
    }
    let mut dist: Vec<Option<i64>> = vec![None; n + 1];
    let mut heap = BinaryHeap::new();
    dist[source] = Some(0);
    heap.push(Reverse((0i64, source)));
    while let Some(Reverse((d, v))) = heap.pop() {
        if dist[v] != Some(d) {
            continue;
        }
        for &(to, w) in &adj[v] {
            let nd = d + w;
            if dist[to].is_none_or(|cur| nd < cur) {
                dist[to] = Some(nd);
                heap.push(Reverse((nd, to)));
            }
        }
    }
    Ok(DistanceLabeling { source, dist })
}

/// Exact shortest distances from `source` in a directed graph with weights >= 1.
pub fn distance_labels(g: &WeightedDigraph, source: VertexId) -> Result<DistanceLabeling> {
    check_positive_digraph(g)?;
    let mut adj = vec![Vec::new(); g.n + 1];
    for e in &g.edges {
        adj[e.tail].push((e.head, e.weight));
    }
    dijkstra(g.n, &adj, source)
}

/// Undirected counterpart of [`distance_labels`].
pub fn distance_labels_undirected(
    g: &WeightedMultigraph,
    source: VertexId,
) -> Result<DistanceLabeling> {
    check_positive_multigraph(g)?;
    let mut adj = vec![Vec::new(); g.n + 1];
    for e in &g.edges {
        adj[e.u].push((e.v, e.weight));
        adj[e.v].push((e.u, e.weight));
    }
    dijkstra(g.n, &adj, source)
}

fn check_positive_digraph(g: &WeightedDigraph) -> Result<()> {
    for (i, e) in g.edges.iter().enumerate() {
        if e.weight <= 0 {
            return Err(Error::NonpositiveWeight { edge: i + 1, weight: e.weight });
        }
    }
    Ok(())
}

fn check_positive_multigraph(g: &WeightedMultigraph) -> Result<()> {
    for (i, e) in g.edges.iter().enumerate() {
        if e.weight <= 0 {
            return Err(Error::NonpositiveWeight { edge: i + 1, weight: e.weight });
        }
    }
    Ok(())
}

/// A surviving edge of the pruned DAG; `id` is the original input edge id.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DagEdge {
    pub id: EdgeId,
    pub tail: VertexId,
    pub head: VertexId,
    pub weight: i64,
}

/// The pruned shortest-path DAG of (G, w, s, t). Vertex and edge ids are the
/// original graph's ids; pruned items are simply absent.
#[derive(Debug, Clone)]
pub struct SpDag {
    n: usize,
    s: VertexId,
    t: VertexId,
    edges: Vec<DagEdge>,
    id_to_idx: Vec<Option<usize>>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    alive: Vec<bool>,
    dist: Vec<Option<i64>>,
    topo: Vec<VertexId>,
    topo_pos: Vec<usize>,
    original_m: usize,
}

/// Builds the shortest-path DAG of a directed instance. Fails when `t` is
/// unreachable from `s` (the forcing problems are vacuous then).
pub fn build_sp_dag(g: &WeightedDigraph) -> Result<SpDag> {
    let (s, t) = g.terminals()?;
    let labels = distance_labels(g, s)?;
    let directed = g
        .edges
        .iter()
        .enumerate()
        .map(|(i, e)| (i + 1, e.tail, e.head, e.weight))
        .collect::<Vec<_>>();
    SpDag::assemble(g.n, g.m(), s, t, labels, &directed)
}

/// Builds the shortest-path DAG of an undirected instance by orienting each
/// tight edge in the direction of increasing distance from `s`.
pub fn build_sp_dag_undirected(g: &WeightedMultigraph) -> Result<SpDag> {
    let (s, t) = g.terminals()?;
    let labels = distance_labels_undirected(g, s)?;
    let mut directed = Vec::with_capacity(g.m());
    for (i, e) in g.edges.iter().enumerate() {
        let (du, dv) = (labels.get(e.u), labels.get(e.v));
        match (du, dv) {
            (Some(du), Some(dv)) if du + e.weight == dv => {
                directed.push((i + 1, e.u, e.v, e.weight));
            }
            (Some(du), Some(dv)) if dv + e.weight == du => {
                directed.push((i + 1, e.v, e.u, e.weight));
            }
            _ => {}
        }
    }
    SpDag::assemble(g.n, g.m(), s, t, labels, &directed)
}

impl SpDag {
    fn assemble(
        n: usize,
        original_m: usize,
        s: VertexId,
        t: VertexId,
        labels: DistanceLabeling,
        candidates: &[(EdgeId, VertexId, VertexId, i64)],
    ) -> Result<Self> {
        if labels.get(t).is_none() {
            return Err(Error::TargetUnreachable(t));
        }
        // Tight edges only; everything else is on no shortest path from s.
        let tight: Vec<_> = candidates
            .iter()
            .copied()
            .filter(|&(_, u, v, w)| match (labels.get(u), labels.get(v)) {
                (Some(du), Some(dv)) => du + w == dv,
                _ => false,
            })
            .collect();

        let mut fwd_adj = vec![Vec::new(); n + 1];
        let mut rev_adj = vec![Vec::new(); n + 1];
        for &(_, u, v, _) in &tight {
            fwd_adj[u].push(v);
            rev_adj[v].push(u);
        }
        let reach = |adj: &[Vec<VertexId>], from: VertexId| {
            let mut seen = vec![false; n + 1];
            let mut stack = vec![from];
            seen[from] = true;
            while let Some(v) = stack.pop() {
                for &to in &adj[v] {
                    if !seen[to] {
                        seen[to] = true;
                        stack.push(to);
                    }
                }
            }
            seen
        };
        let from_s = reach(&fwd_adj, s);
        let to_t = reach(&rev_adj, t);
        let alive: Vec<bool> = (0..=n).map(|v| v >= 1 && from_s[v] && to_t[v]).collect();

        let edges: Vec<DagEdge> = tight
            .into_iter()
            .filter(|&(_, u, v, _)| alive[u] && alive[v])
            .map(|(id, tail, head, weight)| DagEdge { id, tail, head, weight })
            .collect();

        let mut id_to_idx = vec![None; original_m + 1];
        let mut out = vec![Vec::new(); n + 1];
        let mut inn = vec![Vec::new(); n + 1];
        for (idx, e) in edges.iter().enumerate() {
            id_to_idx[e.id] = Some(idx);
            out[e.tail].push(idx);
            inn[e.head].push(idx);
        }

        // Weights are positive, so distance strictly increases along every
        // kept edge: sorting by (distance, id) is a topological order.
        let mut topo: Vec<VertexId> = (1..=n).filter(|&v| alive[v]).collect();
        topo.sort_unstable_by_key(|&v| (labels.get(v).unwrap(), v));
        let mut topo_pos = vec![usize::MAX; n + 1];
        for (i, &v) in topo.iter().enumerate() {
            topo_pos[v] = i;
        }

        Ok(Self {
            n,
            s,
            t,
            edges,
            id_to_idx,
            out,
            inn,
            alive,
            dist: labels.dist,
            topo,
            topo_pos,
            original_m,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> VertexId {
        self.s
    }

    pub fn t(&self) -> VertexId {
        self.t
    }

    pub fn original_m(&self) -> usize {
        self.original_m
    }

    pub fn is_alive(&self, v: VertexId) -> bool {
        v <= self.n && self.alive[v]
    }

    pub fn edges(&self) -> &[DagEdge] {
        &self.edges
    }

    pub fn edge_by_id(&self, id: EdgeId) -> Option<&DagEdge> {
        self.id_to_idx.get(id).copied().flatten().map(|i| &self.edges[i])
    }

    pub fn out_edges(&self, v: VertexId) -> impl Iterator<Item = &DagEdge> {
        self.out[v].iter().map(move |&i| &self.edges[i])
    }

    pub fn in_edges(&self, v: VertexId) -> impl Iterator<Item = &DagEdge> {
        self.inn[v].iter().map(move |&i| &self.edges[i])
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out[v].len()
    }

    /// Surviving vertices in topological order.
    pub fn topo(&self) -> &[VertexId] {
        &self.topo
    }

    /// Distance from s in the original graph (`None` if unreachable).
    pub fn dist(&self, v: VertexId) -> Option<i64> {
        self.dist.get(v).copied().flatten()
    }

    /// Length of every s-t path of the DAG.
    pub fn st_distance(&self) -> i64 {
        self.dist(self.t).expect("t is reachable by construction")
    }

    /// Number of distinct u-v paths, saturated at `cap`. Parallel edges give
    /// distinct paths; the empty path makes `count(v, v) = 1`.
    pub fn count_paths_capped(&self, u: VertexId, v: VertexId, cap: u64) -> u64 {
        self.count_paths_capped_without(u, v, cap, |_| false)
    }

    /// Path counting with selected original edge ids removed.
    pub fn count_paths_capped_without<F>(&self, u: VertexId, v: VertexId, cap: u64, removed: F) -> u64
    where
        F: Fn(EdgeId) -> bool,
    {
        if !self.is_alive(u) || !self.is_alive(v) {
            return 0;
        }
        if u == v {
            return 1.min(cap);
        }
        let start = self.topo_pos[u];
        let end = self.topo_pos[v];
        if start > end {
            return 0;
        }
        let mut count = vec![0u64; self.n + 1];
        count[u] = 1;
        for &x in &self.topo[start..end] {
            if count[x] == 0 {
                continue;
            }
            for &ei in &self.out[x] {
                let e = &self.edges[ei];
                if removed(e.id) || self.topo_pos[e.head] > end {
                    continue;
                }
                count[e.head] = (count[e.head] + count[x]).min(cap);
            }
        }
        count[v]
    }

    /// Path counts from every vertex to `target`, saturated at `cap`,
    /// with selected original edge ids removed.
    fn counts_to_target<F>(&self, target: VertexId, cap: u64, removed: &F) -> Vec<u64>
    where
        F: Fn(EdgeId) -> bool,
    {
        let mut count = vec![0u64; self.n + 1];
        if !self.is_alive(target) {
            return count;
        }
        count[target] = 1;
        let end = self.topo_pos[target];
        for &x in self.topo[..end].iter().rev() {
            for &ei in &self.out[x] {
                let e = &self.edges[ei];
                if removed(e.id) {
                    continue;
                }
                count[x] = (count[x] + count[e.head]).min(cap);
            }
        }
        count
    }

    /// The unique u-v path, as original edge ids. Caller must know the path
    /// is unique (`count_paths_capped(u, v, 2) == 1`).
    pub(crate) fn unique_path_between(&self, u: VertexId, v: VertexId) -> Vec<EdgeId> {
        self.unique_path_between_without(u, v, &|_| false)
    }

    pub(crate) fn unique_path_between_without<F>(&self, u: VertexId, v: VertexId, removed: &F) -> Vec<EdgeId>
    where
        F: Fn(EdgeId) -> bool,
    {
        let to_v = self.counts_to_target(v, 2, removed);
        debug_assert_eq!(to_v[u], 1, "path from {u} to {v} is not unique");
        let mut path = Vec::new();
        let mut cur = u;
        while cur != v {
            let ei = self.out[cur]
                .iter()
                .copied()
                .find(|&i| {
                    let e = &self.edges[i];
                    !removed(e.id) && to_v[e.head] > 0
                })
                .expect("unique path walk hit a dead end");
            path.push(self.edges[ei].id);
            cur = self.edges[ei].head;
        }
        path
    }

    /// When exactly one s-t path avoids `removed`, returns it.
    pub(crate) fn sole_st_path_without<F>(&self, removed: &F) -> Option<Vec<EdgeId>>
    where
        F: Fn(EdgeId) -> bool,
    {
        if self.count_paths_capped_without(self.s, self.t, 2, removed) != 1 {
            return None;
        }
        Some(self.unique_path_between_without(self.s, self.t, removed))
    }

    /// Checks that `edge_ids` is an s-t path of this DAG and returns its
    /// vertex sequence (s first, t last).
    pub fn validate_st_path(&self, edge_ids: &[EdgeId]) -> Result<Vec<VertexId>> {
        let mut vertices = vec![self.s];
        let mut cur = self.s;
        for &id in edge_ids {
            let e = self
                .edge_by_id(id)
                .ok_or_else(|| Error::NotAPath(format!("edge {id} is not in the DAG")))?;
            if e.tail != cur {
                return Err(Error::NotAPath(format!(
                    "edge {id} starts at {} but the path is at {cur}",
                    e.tail
                )));
            }
            cur = e.head;
            vertices.push(cur);
        }
        if cur != self.t {
            return Err(Error::NotAPath(format!("path ends at {cur}, not at t={}", self.t)));
        }
        Ok(vertices)
    }

    /// All s-t paths in lexicographic edge-id order, or `None` once more than
    /// `max` paths exist.
    pub fn st_paths_bounded(&self, max: usize) -> Option<Vec<Vec<EdgeId>>> {
        if self.count_paths_capped(self.s, self.t, max as u64 + 1) > max as u64 {
            return None;
        }
        let mut paths = Vec::new();
        let mut stack: Vec<EdgeId> = Vec::new();
        self.dfs_paths(self.s, &mut stack, &mut paths);
        Some(paths)
    }

    fn dfs_paths(&self, v: VertexId, stack: &mut Vec<EdgeId>, paths: &mut Vec<Vec<EdgeId>>) {
        if v == self.t {
            paths.push(stack.clone());
            return;
        }
        // Out-edge indices are ascending by original id, so paths come out in
        // lexicographic order.
        for &ei in &self.out[v] {
            let e = &self.edges[ei];
            stack.push(e.id);
            self.dfs_paths(e.head, stack, paths);
            stack.pop();
        }
    }

    /// Unique-reachability classes for every ordered vertex pair, by capped
    /// path counting from each source in topological order (O(nm) total).
    pub fn unique_reach(&self) -> UniqueReachMatrix {
        let n = self.n;
        let rows = exec::map_indexed(self.topo.len(), |i| {
            let u = self.topo[i];
            let mut row = vec![0u8; n + 1];
            let mut count = vec![0u64; n + 1];
            count[u] = 1;
            for &x in &self.topo[i..] {
                if count[x] == 0 {
                    continue;
                }
                for &ei in &self.out[x] {
                    let e = &self.edges[ei];
                    count[e.head] = (count[e.head] + count[x]).min(2);
                }
            }
            for v in 1..=n {
                row[v] = count[v].min(2) as u8;
            }
            (u, row)
        });
        let mut class = vec![0u8; (n + 1) * (n + 1)];
        for (u, row) in rows {
            class[u * (n + 1)..(u + 1) * (n + 1)].copy_from_slice(&row);
        }
        UniqueReachMatrix { n, class }
    }
}

/// Path-count class for an ordered vertex pair of an [`SpDag`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathClass {
    Zero,
    One,
    Many,
}

/// Saturated path counts for all ordered vertex pairs of an [`SpDag`].
#[derive(Debug, Clone)]
pub struct UniqueReachMatrix {
    n: usize,
    class: Vec<u8>,
}

impl UniqueReachMatrix {
    pub fn class(&self, u: VertexId, v: VertexId) -> PathClass {
        match self.class[u * (self.n + 1) + v] {
            0 => PathClass::Zero,
            1 => PathClass::One,
            _ => PathClass::Many,
        }
    }

    /// `u => v`: exactly one path from u to v.
    pub fn one(&self, u: VertexId, v: VertexId) -> bool {
        self.class[u * (self.n + 1) + v] == 1
    }
}
