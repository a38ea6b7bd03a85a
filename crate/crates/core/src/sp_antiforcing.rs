//! Anti-forcing sets for shortest s-t paths.
//!
//! For a *given* path P this is polynomial: S is an anti-forcing set for P
//! exactly when S is a multiway cut for V(P) in H = D - E(P), because any
//! second surviving path must leave and re-enter P, and such a detour is a
//! terminal-to-terminal path in H. The multiway cut is solved by splitting
//! every terminal into an in/out pair with no internal arc, wiring a
//! super-source to the out sides and the in sides to a super-sink with
//! infinite capacity, giving original edges capacity one, and taking a
//! minimum cut.
//!
//! The general problem (minimize over all witness paths) is NP-hard, so the
//! exact solver enumerates candidate witness paths when their number is
//! modest and otherwise branches on the edges of a surviving path, using the
//! per-path cut as the bound at every node.

use crate::error::{Error, Result};
use crate::exec;
use crate::graph::{EdgeId, VertexId};
use crate::maxflow::{max_flow_min_cut, FlowNetwork};
use crate::sp_forcing::ForcingResult;
use crate::spdag::SpDag;

/// Checks whether exactly one s-t path avoids `set`; returns that witness
/// path when so. Edge ids outside the DAG are ignored.
pub fn is_antiforcing_set(d: &SpDag, set: &[EdgeId]) -> (bool, Option<Vec<EdgeId>>) {
    let removed = removal_mask(d, set);
    let removed = |id: EdgeId| removed[id];
    match d.sole_st_path_without(&removed) {
        Some(path) => (true, Some(path)),
        None => (false, None),
    }
}

fn removal_mask(d: &SpDag, set: &[EdgeId]) -> Vec<bool> {
    let mut mask = vec![false; d.original_m() + 1];
    for &id in set {
        if id < mask.len() {
            mask[id] = true;
        }
    }
    mask
}

/// The DAG minus a path's edges, with the path's vertices as terminals.
#[derive(Debug, Clone)]
pub struct MultiwayCutInstance<'a> {
    dag: &'a SpDag,
    path_edges: Vec<bool>,
    /// V(P) in path order, which is topological order along P.
    pub terminals: Vec<VertexId>,
}

pub fn multiway_cut_instance<'a>(d: &'a SpDag, path: &[EdgeId]) -> Result<MultiwayCutInstance<'a>> {
    let terminals = d.validate_st_path(path)?;
    Ok(MultiwayCutInstance { dag: d, path_edges: removal_mask(d, path), terminals })
}

/// Minimum edge set hitting every directed path between distinct terminals.
pub fn solve_multiway_cut_dag(inst: &MultiwayCutInstance) -> Result<Vec<EdgeId>> {
    if inst.terminals.len() <= 1 {
        return Ok(Vec::new());
    }
    let excluded = |id: EdgeId| inst.path_edges[id];
    let (_, cut) = terminal_cut_flow(inst.dag, &excluded, &inst.terminals, &|_| false)?;
    Ok(cut)
}

/// Terminal-splitting reduction to a single s*-t* min cut. `excluded` edges
/// are absent from H; `uncuttable` edges get infinite capacity (the cut must
/// avoid them), which surfaces as [`Error::InfiniteCapacityPath`] when no
/// such cut exists.
fn terminal_cut_flow<F, G>(
    d: &SpDag,
    excluded: &F,
    terminals: &[VertexId],
    uncuttable: &G,
) -> Result<(u64, Vec<EdgeId>)>
where
    F: Fn(EdgeId) -> bool,
    G: Fn(EdgeId) -> bool,
{
    let n = d.n();
    let mut is_terminal = vec![false; n + 1];
    for &v in terminals {
        is_terminal[v] = true;
    }
    // Node layout: 0 = source, 1 = sink, then per alive vertex either one
    // node or an (in, out) pair for terminals.
    let mut node_in = vec![usize::MAX; n + 1];
    let mut node_out = vec![usize::MAX; n + 1];
    let mut next = 2;
    for v in 1..=n {
        if !d.is_alive(v) {
            continue;
        }
        node_in[v] = next;
        next += 1;
        if is_terminal[v] {
            node_out[v] = next;
            next += 1;
        } else {
            node_out[v] = node_in[v];
        }
    }
    let mut net = FlowNetwork::new(next);
    for e in d.edges() {
        if excluded(e.id) {
            continue;
        }
        if uncuttable(e.id) {
            net.add_infinite(node_out[e.tail], node_in[e.head]);
        } else {
            net.add_unit(node_out[e.tail], node_in[e.head], e.id);
        }
    }
    for &v in terminals {
        net.add_infinite(0, node_out[v]);
        net.add_infinite(node_in[v], 1);
    }
    max_flow_min_cut(net, 0, 1)
}

/// Minimum anti-forcing set whose witness is the given path.
pub fn min_antiforcing_set_for_path(d: &SpDag, path: &[EdgeId]) -> Result<ForcingResult> {
    let inst = multiway_cut_instance(d, path)?;
    let set = solve_multiway_cut_dag(&inst)?;
    Ok(ForcingResult { size: set.len(), set, witness: path.to_vec() })
}

/// Resource limits for the exact solver.
#[derive(Debug, Clone)]
pub struct ExactLimits {
    /// Enumerate candidate witness paths when fewer than this many exist.
    pub path_limit: usize,
    /// Hard cap on branch-and-bound nodes.
    pub node_limit: u64,
}

impl Default for ExactLimits {
    fn default() -> Self {
        Self { path_limit: 10_000, node_limit: 1_000_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactOutcome {
    Found(ForcingResult),
    /// No anti-forcing set of size <= budget exists.
    ExceedsBudget { budget: usize },
}

/// True minimum anti-forcing set over all shortest paths. Enumerates witness
/// paths (solving each per-path instance independently) when the path count
/// is below `limits.path_limit`, otherwise branch-and-bound. Deterministic
/// for fixed input in either mode.
pub fn min_antiforcing_set_exact(
    d: &SpDag,
    budget: Option<usize>,
    limits: &ExactLimits,
) -> Result<ExactOutcome> {
    let result = match d.st_paths_bounded(limits.path_limit.saturating_sub(1)) {
        Some(paths) => exact_by_paths(d, &paths)?,
        None => exact_by_branching(d, budget, limits)?,
    };
    match result {
        Some(r) => match budget {
            Some(b) if r.size > b => Ok(ExactOutcome::ExceedsBudget { budget: b }),
            _ => Ok(ExactOutcome::Found(r)),
        },
        None => Ok(ExactOutcome::ExceedsBudget {
            budget: budget.expect("search without budget always finds the optimum"),
        }),
    }
}

fn exact_by_paths(d: &SpDag, paths: &[Vec<EdgeId>]) -> Result<Option<ForcingResult>> {
    if paths.is_empty() {
        return Err(Error::NotAPath("no s-t path exists".into()));
    }
    let sizes = exec::map_indexed(paths.len(), |i| {
        let inst = multiway_cut_instance(d, &paths[i]).expect("enumerated paths are valid");
        solve_multiway_cut_dag(&inst).map(|cut| (cut.len(), i))
    });
    let mut best: Option<(usize, usize)> = None;
    for s in sizes {
        let (size, i) = s?;
        if best.is_none_or(|b| (size, i) < b) {
            best = Some((size, i));
        }
    }
    let (_, i) = best.expect("nonempty path list");
    Ok(Some(min_antiforcing_set_for_path(d, &paths[i])?))
}

struct Branching<'a> {
    d: &'a SpDag,
    deleted: Vec<bool>,
    kept: Vec<bool>,
    deleted_ids: Vec<EdgeId>,
    incumbent: usize,
    best: Option<ForcingResult>,
    nodes: u64,
    node_limit: u64,
}

impl Branching<'_> {
    fn recurse(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return Err(Error::ResourceLimit(format!(
                "exact anti-forcing search exceeded {} branch nodes",
                self.node_limit
            )));
        }
        if self.deleted_ids.len() >= self.incumbent {
            return Ok(());
        }
        let d = self.d;
        let surviving =
            d.count_paths_capped_without(d.s(), d.t(), 2, |id| self.deleted[id]);
        if surviving == 0 {
            return Ok(());
        }
        let path = first_path_without(d, &self.deleted).expect("counted above");
        let terminals = d.validate_st_path(&path).expect("constructed path");

        // Candidate: keep this path as the witness and cut around it.
        let path_mask = removal_mask(d, &path);
        let excluded = |id: EdgeId| self.deleted[id] || path_mask[id];
        match terminal_cut_flow(d, &excluded, &terminals, &|id| self.kept[id]) {
            Ok((_, cut)) => {
                let size = self.deleted_ids.len() + cut.len();
                if size < self.incumbent {
                    self.incumbent = size;
                    let mut set = self.deleted_ids.clone();
                    set.extend(cut);
                    set.sort_unstable();
                    self.best = Some(ForcingResult { size, set, witness: path.clone() });
                }
            }
            Err(Error::InfiniteCapacityPath) => {} // no cut avoids the kept edges
            Err(e) => return Err(e),
        }

        // Otherwise the solution hits this path somewhere; branch on which
        // edge, keeping the earlier ones untouchable to avoid overlap.
        let mut newly_kept = Vec::new();
        for &id in &path {
            if self.kept[id] {
                continue;
            }
            self.deleted[id] = true;
            self.deleted_ids.push(id);
            self.recurse()?;
            self.deleted_ids.pop();
            self.deleted[id] = false;
            self.kept[id] = true;
            newly_kept.push(id);
        }
        for id in newly_kept {
            self.kept[id] = false;
        }
        Ok(())
    }
}

fn exact_by_branching(
    d: &SpDag,
    budget: Option<usize>,
    limits: &ExactLimits,
) -> Result<Option<ForcingResult>> {
    let mut bb = Branching {
        d,
        deleted: vec![false; d.original_m() + 1],
        kept: vec![false; d.original_m() + 1],
        deleted_ids: Vec::new(),
        incumbent: budget.map_or(usize::MAX, |b| b + 1),
        best: None,
        nodes: 0,
        node_limit: limits.node_limit,
    };
    bb.recurse()?;
    Ok(bb.best)
}

fn first_path_without(d: &SpDag, deleted: &[bool]) -> Option<Vec<EdgeId>> {
    fn dfs(d: &SpDag, v: VertexId, deleted: &[bool], stack: &mut Vec<EdgeId>) -> bool {
        if v == d.t() {
            return true;
        }
        for e in d.out_edges(v) {
            if deleted[e.id] {
                continue;
            }
            stack.push(e.id);
            if dfs(d, e.head, deleted, stack) {
                return true;
            }
            stack.pop();
        }
        false
    }
    let mut stack = Vec::new();
    dfs(d, d.s(), deleted, &mut stack).then_some(stack)
}
