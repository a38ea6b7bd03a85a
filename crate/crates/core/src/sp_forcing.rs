//! Minimum forcing sets for shortest s-t paths.
//!
//! A set S of edges forces a path P when P is the only s-t path of the DAG
//! containing all of S. Writing S's edges in path order with heads `s_i` and
//! tails `t_i` (and `s_0 = s`, `t_{k+1} = t`), S forces P exactly when every
//! gap satisfies `s_i => t_{i+1}`, i.e. each segment between consecutive set
//! edges is the unique path between its endpoints. That characterization
//! drives a dynamic program over the DAG:
//!
//! `OPT[e] = 1 + min { OPT[w] : w => tail(e) }` for each edge e, with
//! `OPT[v] = min` over incoming edges and `OPT[s] = 0`; the answer is
//! `min { OPT[v] : v => t }`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, VertexId};
use crate::spdag::{SpDag, UniqueReachMatrix};

/// A forcing or anti-forcing set together with the unique solution it
/// certifies. `witness` is an edge-id sequence in path order for path
/// problems; `set` is ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcingResult {
    pub set: Vec<EdgeId>,
    pub witness: Vec<EdgeId>,
    pub size: usize,
}

impl ForcingResult {
    fn new(mut set: Vec<EdgeId>, witness: Vec<EdgeId>) -> Self {
        set.sort_unstable();
        Self { size: set.len(), set, witness }
    }
}

/// The finished dynamic-programming table. Entries absent from a map are
/// +infinity: no forcing set ends there (only vertices swallowed by the
/// source contraction have that value).
#[derive(Debug, Clone)]
pub struct ForcingDpTable {
    pub opt_edge: BTreeMap<EdgeId, usize>,
    pub opt_vertex: BTreeMap<VertexId, usize>,
    /// Incoming edge attaining `opt_vertex`.
    pub pred_edge: BTreeMap<VertexId, EdgeId>,
    /// Vertex attaining the minimum in `opt_edge`.
    pub pred_vertex: BTreeMap<EdgeId, VertexId>,
    /// Effective source after contracting sole outgoing edges of s.
    pub source: VertexId,
    /// Contracted prefix (edges on every s-t path), in path order.
    pub prefix: Vec<EdgeId>,
}

/// Lemma-style checker: does `set` (a subset of P's edges) force P?
pub fn is_forcing_set_for_path(d: &SpDag, path: &[EdgeId], set: &[EdgeId]) -> Result<bool> {
    let reach = d.unique_reach();
    is_forcing_set_for_path_with(d, &reach, path, set)
}

/// [`is_forcing_set_for_path`] with a precomputed reachability matrix.
pub fn is_forcing_set_for_path_with(
    d: &SpDag,
    reach: &UniqueReachMatrix,
    path: &[EdgeId],
    set: &[EdgeId],
) -> Result<bool> {
    d.validate_st_path(path)?;
    let positions: Vec<usize> = {
        let mut pos = Vec::with_capacity(set.len());
        for &id in set {
            match path.iter().position(|&p| p == id) {
                Some(i) => pos.push(i),
                None => return Err(Error::SetNotOnPath),
            }
        }
        pos.sort_unstable();
        pos.dedup();
        if pos.len() != set.len() {
            return Err(Error::SetNotOnPath);
        }
        pos
    };
    // Check every segment between consecutive set edges (and the two ends).
    let mut from = d.s();
    for &i in &positions {
        let e = d.edge_by_id(path[i]).expect("validated above");
        if !reach.one(from, e.tail) {
            return Ok(false);
        }
        from = e.head;
    }
    Ok(reach.one(from, d.t()))
}

struct Dp {
    opt_vertex: Vec<Option<usize>>,
    opt_edge: Vec<Option<usize>>,
    pred_edge: Vec<Option<usize>>,
    pred_vertex: Vec<Option<VertexId>>,
    source: VertexId,
    prefix: Vec<EdgeId>,
}

/// Follows sole outgoing edges from s; those edges lie on every s-t path, so
/// they can be contracted without changing the minimum forcing set.
fn contract_source(d: &SpDag) -> (VertexId, Vec<EdgeId>) {
    let mut source = d.s();
    let mut prefix = Vec::new();
    while source != d.t() && d.out_degree(source) == 1 {
        let e = d.out_edges(source).next().expect("degree checked");
        prefix.push(e.id);
        source = e.head;
    }
    (source, prefix)
}

fn run_dp(d: &SpDag, reach: &UniqueReachMatrix) -> Dp {
    let (source, prefix) = contract_source(d);
    let n = d.n();
    let m_edges = d.edges().len();
    let mut dp = Dp {
        opt_vertex: vec![None; n + 1],
        opt_edge: vec![None; m_edges],
        pred_edge: vec![None; n + 1],
        pred_vertex: vec![None; m_edges],
        source,
        prefix,
    };
    if source == d.t() {
        dp.opt_vertex[source] = Some(0);
        return dp;
    }
    let start = d.topo().iter().position(|&v| v == source).expect("source is alive");
    let active: Vec<VertexId> = d.topo()[start..].to_vec();
    let edge_index: BTreeMap<EdgeId, usize> =
        d.edges().iter().enumerate().map(|(i, e)| (e.id, i)).collect();
    // Ascending vertex ids, for the argmin tie-break.
    let mut active_by_id = active.clone();
    active_by_id.sort_unstable();

    dp.opt_vertex[source] = Some(0);
    for &u in &active {
        if u != source {
            // In-edge lists are ascending by edge id; first minimum wins.
            let mut best: Option<(usize, usize)> = None;
            for e in d.in_edges(u) {
                let idx = edge_index[&e.id];
                if let Some(val) = dp.opt_edge[idx] {
                    if best.is_none_or(|(b, _)| val < b) {
                        best = Some((val, idx));
                    }
                }
            }
            if let Some((val, idx)) = best {
                dp.opt_vertex[u] = Some(val);
                dp.pred_edge[u] = Some(idx);
            }
        }
        // Smallest vertex id attaining min { OPT[w] : w => u }.
        let mut best_w: Option<(usize, VertexId)> = None;
        for &w in &active_by_id {
            if let Some(val) = dp.opt_vertex[w] {
                if reach.one(w, u) && best_w.is_none_or(|(b, _)| val < b) {
                    best_w = Some((val, w));
                }
            }
        }
        if let Some((val, w)) = best_w {
            for e in d.out_edges(u) {
                let idx = edge_index[&e.id];
                dp.opt_edge[idx] = Some(val + 1);
                dp.pred_vertex[idx] = Some(w);
            }
        }
    }
    dp
}

/// Picks `argmin { OPT[v] : v => t }` (smallest vertex id on ties) and walks
/// predecessor links back to the contracted source.
fn extract(d: &SpDag, reach: &UniqueReachMatrix, dp: &Dp) -> ForcingResult {
    if dp.source == d.t() {
        return ForcingResult::new(Vec::new(), dp.prefix.clone());
    }
    let mut best: Option<(usize, VertexId)> = None;
    for v in 1..=d.n() {
        if !d.is_alive(v) || !reach.one(v, d.t()) {
            continue;
        }
        if let Some(val) = dp.opt_vertex[v] {
            if best.is_none_or(|(b, _)| val < b) {
                best = Some((val, v));
            }
        }
    }
    let (_, v_star) = best.expect("t itself always qualifies");

    let mut set_rev: Vec<usize> = Vec::new();
    let mut v = v_star;
    while v != dp.source {
        let edge_idx = dp.pred_edge[v].expect("finite entries have predecessors");
        set_rev.push(edge_idx);
        v = dp.pred_vertex[edge_idx].expect("finite entries have predecessors");
    }

    // Witness: contracted prefix, then unique segments stitched around the
    // chosen set edges, then the unique tail segment to t.
    let mut witness = dp.prefix.clone();
    let mut cur = dp.source;
    for &edge_idx in set_rev.iter().rev() {
        let e = d.edges()[edge_idx];
        witness.extend(d.unique_path_between(cur, e.tail));
        witness.push(e.id);
        cur = e.head;
    }
    witness.extend(d.unique_path_between(cur, d.t()));

    let set: Vec<EdgeId> = set_rev.iter().map(|&i| d.edges()[i].id).collect();
    ForcingResult::new(set, witness)
}

/// Minimum forcing set over all shortest s-t paths, with its witness path.
pub fn min_forcing_set(d: &SpDag) -> ForcingResult {
    let reach = d.unique_reach();
    let dp = run_dp(d, &reach);
    extract(d, &reach, &dp)
}

/// The finished DP table for inspection (entries cover the DAG after source
/// contraction; absent entries are +infinity).
pub fn forcing_dp_table(d: &SpDag) -> ForcingDpTable {
    let reach = d.unique_reach();
    let dp = run_dp(d, &reach);
    let mut table = ForcingDpTable {
        opt_edge: BTreeMap::new(),
        opt_vertex: BTreeMap::new(),
        pred_edge: BTreeMap::new(),
        pred_vertex: BTreeMap::new(),
        source: dp.source,
        prefix: dp.prefix.clone(),
    };
    for (idx, e) in d.edges().iter().enumerate() {
        if let Some(val) = dp.opt_edge[idx] {
            table.opt_edge.insert(e.id, val);
        }
        if let Some(w) = dp.pred_vertex[idx] {
            table.pred_vertex.insert(e.id, w);
        }
    }
    for v in 1..=d.n() {
        if let Some(val) = dp.opt_vertex[v] {
            table.opt_vertex.insert(v, val);
        }
        if let Some(idx) = dp.pred_edge[v] {
            table.pred_edge.insert(v, d.edges()[idx].id);
        }
    }
    table
}

/// Minimum forcing set for a specific s-t path P: the same recurrence
/// evaluated only on P's edges and vertices (the set must lie on P).
pub fn min_forcing_set_for_path(d: &SpDag, path: &[EdgeId]) -> Result<ForcingResult> {
    let vertices = d.validate_st_path(path)?;
    if path.is_empty() {
        return Ok(ForcingResult::new(Vec::new(), Vec::new()));
    }
    let reach = d.unique_reach();
    let len = path.len();
    // opt[j]: minimum forcing set for the prefix ending at vertices[j] whose
    // last element is path[j-1]; opt[0] = 0 is the empty set at s.
    let mut opt: Vec<Option<usize>> = vec![None; len + 1];
    let mut pred: Vec<usize> = vec![0; len + 1];
    opt[0] = Some(0);
    // Positions sorted by vertex id, for deterministic argmin tie-breaks.
    let mut by_id: Vec<usize> = (0..=len).collect();
    by_id.sort_unstable_by_key(|&j| vertices[j]);
    for j in 1..=len {
        let tail = vertices[j - 1];
        let mut best: Option<(usize, usize)> = None;
        for &i in &by_id {
            if i >= j {
                continue;
            }
            if let Some(val) = opt[i] {
                if reach.one(vertices[i], tail) && best.is_none_or(|(b, _)| val < b) {
                    best = Some((val, i));
                }
            }
        }
        if let Some((val, i)) = best {
            opt[j] = Some(val + 1);
            pred[j] = i;
        }
    }
    let mut best: Option<(usize, usize)> = None;
    for &j in &by_id {
        if let Some(val) = opt[j] {
            if reach.one(vertices[j], d.t()) && best.is_none_or(|(b, _)| val < b) {
                best = Some((val, j));
            }
        }
    }
    let (_, mut j) = best.expect("j = len always qualifies");
    let mut set = Vec::new();
    while j > 0 {
        set.push(path[j - 1]);
        j = pred[j];
    }
    Ok(ForcingResult::new(set, path.to_vec()))
}
