//! Minimum spanning tree specializations of the weight-class sweep, running
//! in O(m log n) with union-find instead of matroid oracle calls.
//!
//! Per weight class of the contracted graph: a maximal forest `F_min` joins
//! the tree; the anti-forcing set gains the remaining non-self-loop class
//! edges; the forcing set gains the `F_min` edges that are not bridges of the
//! class subgraph. Contraction is a vertex-relabeling union-find, keeping
//! parallel edges and self-loops.

use crate::basis_forcing::{BasisForcingResult, WeightClassRecord, WeightClassTrace};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, UnionFind, WeightedMultigraph};

/// Edges whose removal increases the number of connected components.
/// Parallel edges and self-loops are never bridges.
pub fn bridges(g: &WeightedMultigraph) -> Vec<EdgeId> {
    let edges: Vec<(usize, usize, EdgeId)> =
        g.edges.iter().enumerate().map(|(i, e)| (e.u, e.v, i + 1)).collect();
    bridges_of_edge_list(&edges)
}

/// Bridge finding on a bare edge list (endpoints may be sparse labels, e.g.
/// union-find roots). Iterative low-link; the tree edge is skipped by edge
/// identity, so parallel edges correctly cancel each other.
fn bridges_of_edge_list(edges: &[(usize, usize, EdgeId)]) -> Vec<EdgeId> {
    // Relabel the touched vertices densely.
    let mut local = std::collections::HashMap::new();
    let mut local_of = |v: usize, next: &mut usize| -> usize {
        *local.entry(v).or_insert_with(|| {
            let id = *next;
            *next += 1;
            id
        })
    };
    let mut next = 0usize;
    let mut compact = Vec::with_capacity(edges.len());
    for &(u, v, id) in edges {
        let lu = local_of(u, &mut next);
        let lv = local_of(v, &mut next);
        compact.push((lu, lv, id));
    }
    let n = next;

    let mut adj = vec![Vec::new(); n];
    for (i, &(u, v, _)) in compact.iter().enumerate() {
        if u == v {
            continue;
        }
        adj[u].push((v, i));
        adj[v].push((u, i));
    }
    let mut disc = vec![0usize; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    let mut out = Vec::new();
    // Frames: (vertex, edge index used to enter, next adjacency position).
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for start in 0..n {
        if disc[start] != 0 {
            continue;
        }
        timer += 1;
        disc[start] = timer;
        low[start] = timer;
        stack.push((start, usize::MAX, 0));
        while let Some(frame) = stack.last_mut() {
            let (v, pe, pos) = (frame.0, frame.1, frame.2);
            if pos < adj[v].len() {
                frame.2 += 1;
                let (to, ei) = adj[v][pos];
                if ei == pe {
                    continue;
                }
                if disc[to] != 0 {
                    low[v] = low[v].min(disc[to]);
                } else {
                    timer += 1;
                    disc[to] = timer;
                    low[to] = timer;
                    stack.push((to, ei, 0));
                }
            } else {
                stack.pop();
                if let Some(parent_frame) = stack.last() {
                    let parent = parent_frame.0;
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > disc[parent] {
                        out.push(compact[pe].2);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

enum Goal {
    Forcing,
    AntiForcing,
}

fn sweep(
    g: &WeightedMultigraph,
    goal: Goal,
    pinned_tree: Option<&[EdgeId]>,
) -> Result<BasisForcingResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let pinned: Option<Vec<bool>> = pinned_tree.map(|tree| {
        let mut mask = vec![false; g.m() + 1];
        for &id in tree {
            mask[id] = true;
        }
        mask
    });

    // Weight classes in strictly increasing order, ids ascending inside.
    let mut order: Vec<EdgeId> = (1..=g.m()).collect();
    order.sort_by_key(|&id| (g.edges[id - 1].weight, id));

    let mut uf = UnionFind::new(g.n + 1);
    let mut set = Vec::new();
    let mut tree = Vec::new();
    let mut trace = WeightClassTrace::default();

    let mut i = 0;
    while i < order.len() {
        let weight = g.edges[order[i] - 1].weight;
        let mut j = i;
        while j < order.len() && g.edges[order[j] - 1].weight == weight {
            j += 1;
        }
        let class = &order[i..j];
        i = j;

        // Snapshot endpoints in the contracted graph before any in-class
        // unions; edges with equal roots here are self-loops of the class.
        let mapped: Vec<(usize, usize, EdgeId)> =
            class.iter().map(|&id| {
                let e = &g.edges[id - 1];
                (uf.find(e.u), uf.find(e.v), id)
            }).collect();
        let loops: Vec<EdgeId> =
            mapped.iter().filter(|&&(u, v, _)| u == v).map(|&(_, _, id)| id).collect();

        let class_bridges = match goal {
            Goal::Forcing => bridges_of_edge_list(&mapped),
            Goal::AntiForcing => Vec::new(),
        };

        let mut forest = Vec::new();
        let mut rest = Vec::new();
        for &(u, v, id) in &mapped {
            let take = match &pinned {
                Some(mask) => mask[id],
                None => u != v && !uf.same(u, v),
            };
            if take {
                if !uf.union(u, v) {
                    return Err(Error::NotABasis(format!(
                        "pinned tree edge {id} closes a cycle"
                    )));
                }
                forest.push(id);
            } else if u != v {
                rest.push(id);
            }
        }
        if pinned.is_some() {
            // A minimum-weight tree meets every class in a maximal forest.
            for &(_, _, id) in &mapped {
                let e = &g.edges[id - 1];
                if !uf.same(e.u, e.v) {
                    return Err(Error::NotABasis(format!(
                        "pinned tree does not span weight class {weight} (edge {id} left open)"
                    )));
                }
            }
        }

        let added: Vec<EdgeId> = match goal {
            Goal::AntiForcing => rest.clone(),
            Goal::Forcing => {
                forest.iter().copied().filter(|id| class_bridges.binary_search(id).is_err()).collect()
            }
        };
        set.extend(&added);
        tree.extend(&forest);
        trace.rounds.push(WeightClassRecord {
            weight,
            elements: class.to_vec(),
            basis: forest,
            loops,
            added,
        });
    }

    set.sort_unstable();
    tree.sort_unstable();
    Ok(BasisForcingResult { set, basis: tree, trace })
}

fn validate_tree(g: &WeightedMultigraph, tree: &[EdgeId]) -> Result<Vec<EdgeId>> {
    let mut sorted = tree.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != tree.len() {
        return Err(Error::NotABasis("repeated edge".into()));
    }
    for &id in &sorted {
        g.edge(id)?;
    }
    if g.n > 0 && sorted.len() != g.n - 1 {
        return Err(Error::NotABasis(format!(
            "spanning tree needs {} edges, got {}",
            g.n - 1,
            sorted.len()
        )));
    }
    let mut uf = UnionFind::new(g.n + 1);
    for &id in &sorted {
        let e = &g.edges[id - 1];
        if !uf.union(e.u, e.v) {
            return Err(Error::NotABasis(format!("edge {id} closes a cycle")));
        }
    }
    let got: i64 = sorted.iter().map(|&id| g.edges[id - 1].weight).sum();
    let optimum = minimum_spanning_tree_weight(g)?;
    if got != optimum {
        return Err(Error::NotMinimumWeight { got, optimum });
    }
    Ok(sorted)
}

fn minimum_spanning_tree_weight(g: &WeightedMultigraph) -> Result<i64> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut order: Vec<EdgeId> = (1..=g.m()).collect();
    order.sort_by_key(|&id| (g.edges[id - 1].weight, id));
    let mut uf = UnionFind::new(g.n + 1);
    let mut total = 0;
    for id in order {
        let e = &g.edges[id - 1];
        if uf.union(e.u, e.v) {
            total += e.weight;
        }
    }
    Ok(total)
}

/// Minimum anti-forcing set for the minimum spanning trees of a connected
/// multigraph, with the certified tree and the sweep trace.
pub fn mst_antiforcing(g: &WeightedMultigraph) -> Result<BasisForcingResult> {
    sweep(g, Goal::AntiForcing, None)
}

/// Minimum forcing set for the minimum spanning trees of a connected
/// multigraph.
pub fn mst_forcing(g: &WeightedMultigraph) -> Result<BasisForcingResult> {
    sweep(g, Goal::Forcing, None)
}

/// Minimum anti-forcing set for one given minimum spanning tree.
pub fn mst_antiforcing_for_tree(g: &WeightedMultigraph, tree: &[EdgeId]) -> Result<BasisForcingResult> {
    let tree = validate_tree(g, tree)?;
    sweep(g, Goal::AntiForcing, Some(&tree))
}

/// Minimum forcing set for one given minimum spanning tree.
pub fn mst_forcing_for_tree(g: &WeightedMultigraph, tree: &[EdgeId]) -> Result<BasisForcingResult> {
    let tree = validate_tree(g, tree)?;
    sweep(g, Goal::Forcing, Some(&tree))
}
