//! Edmonds-Karp max flow on networks whose arcs are either unit capacity or
//! effectively infinite. Infinite capacity is encoded as `#unit arcs + 1`,
//! strictly larger than any possible cut, so no special arithmetic is needed.

use crate::error::{Error, Result};
use crate::graph::EdgeId;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    unit: bool,
    /// Original edge id carried by unit arcs; reported in the cut.
    tag: Option<EdgeId>,
}

/// A flow network under construction. Arcs are added in forward/backward
/// pairs; capacities are materialized when the flow is run.
#[derive(Debug, Clone, Default)]
pub struct FlowNetwork {
    arcs: Vec<Arc>,
    adj: Vec<Vec<usize>>,
    unit_arcs: usize,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        Self { arcs: Vec::new(), adj: vec![Vec::new(); nodes], unit_arcs: 0 }
    }

    fn push_arc(&mut self, from: usize, to: usize, unit: bool, tag: Option<EdgeId>) {
        self.adj[from].push(self.arcs.len());
        self.arcs.push(Arc { to, unit, tag });
        self.adj[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, unit: false, tag: None });
    }

    pub fn add_unit(&mut self, from: usize, to: usize, tag: EdgeId) {
        self.unit_arcs += 1;
        self.push_arc(from, to, true, Some(tag));
    }

    pub fn add_infinite(&mut self, from: usize, to: usize) {
        self.push_arc(from, to, false, None);
    }
}

/// Runs max flow and returns `(flow value, minimum cut)` where the cut is the
/// sorted list of tags of unit arcs crossing the source side. Fails when an
/// augmenting path consists solely of infinite arcs, which signals a
/// malformed reduction.
pub fn max_flow_min_cut(net: FlowNetwork, source: usize, sink: usize) -> Result<(u64, Vec<EdgeId>)> {
    let inf: u64 = net.unit_arcs as u64 + 1;
    // Residual capacity per arc; backward halves start at 0.
    let mut residual: Vec<u64> = net
        .arcs
        .iter()
        .enumerate()
        .map(|(i, a)| {
            if i % 2 == 1 {
                0
            } else if a.unit {
                1
            } else {
                inf
            }
        })
        .collect();

    let n = net.adj.len();
    let mut flow = 0u64;
    let mut pred: Vec<Option<usize>> = vec![None; n];
    loop {
        pred.fill(None);
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(source);
        'bfs: while let Some(v) = queue.pop_front() {
            for &ai in &net.adj[v] {
                let to = net.arcs[ai].to;
                if residual[ai] > 0 && pred[to].is_none() && to != source {
                    pred[to] = Some(ai);
                    if to == sink {
                        break 'bfs;
                    }
                    queue.push_back(to);
                }
            }
        }
        if pred[sink].is_none() {
            break;
        }
        let mut bottleneck = u64::MAX;
        let mut v = sink;
        while v != source {
            let ai = pred[v].expect("path reconstructed from BFS");
            bottleneck = bottleneck.min(residual[ai]);
            v = net.arcs[ai ^ 1].to;
        }
        if bottleneck >= inf {
            return Err(Error::InfiniteCapacityPath);
        }
        let mut v = sink;
        while v != source {
            let ai = pred[v].expect("path reconstructed from BFS");
            residual[ai] -= bottleneck;
            residual[ai ^ 1] += bottleneck;
            v = net.arcs[ai ^ 1].to;
        }
        flow += bottleneck;
    }

    // Source side of the residual graph; saturated unit arcs leaving it form
    // the minimum cut.
    let mut reach = vec![false; n];
    reach[source] = true;
    let mut stack = vec![source];
    while let Some(v) = stack.pop() {
        for &ai in &net.adj[v] {
            let to = net.arcs[ai].to;
            if residual[ai] > 0 && !reach[to] {
                reach[to] = true;
                stack.push(to);
            }
        }
    }
    let mut cut = Vec::new();
    for (i, a) in net.arcs.iter().enumerate() {
        if i % 2 == 0 && reach[net.arcs[i ^ 1].to] && !reach[a.to] {
            match a.tag {
                Some(tag) => cut.push(tag),
                None => return Err(Error::InfiniteCapacityPath),
            }
        }
    }
    cut.sort_unstable();
    debug_assert_eq!(flow, cut.len() as u64);
    Ok((flow, cut))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let mut net = FlowNetwork::new(2);
        net.add_unit(0, 1, 7);
        let (flow, cut) = max_flow_min_cut(net, 0, 1).unwrap();
        assert_eq!(flow, 1);
        assert_eq!(cut, vec![7]);
    }

    #[test]
    fn two_disjoint_paths() {
        let mut net = FlowNetwork::new(4);
        net.add_unit(0, 1, 1);
        net.add_unit(1, 3, 2);
        net.add_unit(0, 2, 3);
        net.add_unit(2, 3, 4);
        let (flow, cut) = max_flow_min_cut(net, 0, 3).unwrap();
        assert_eq!(flow, 2);
        assert_eq!(cut.len(), 2);
    }

    #[test]
    fn diamond_of_unit_edges() {
        // 0 -> {1,2} -> 3 plus a cross edge 1 -> 2.
        let mut net = FlowNetwork::new(4);
        net.add_unit(0, 1, 1);
        net.add_unit(0, 2, 2);
        net.add_unit(1, 2, 3);
        net.add_unit(1, 3, 4);
        net.add_unit(2, 3, 5);
        let (flow, _) = max_flow_min_cut(net, 0, 3).unwrap();
        assert_eq!(flow, 2);
    }

    #[test]
    fn infinite_arcs_never_cut() {
        let mut net = FlowNetwork::new(3);
        net.add_infinite(0, 1);
        net.add_unit(1, 2, 9);
        let (flow, cut) = max_flow_min_cut(net, 0, 2).unwrap();
        assert_eq!(flow, 1);
        assert_eq!(cut, vec![9]);
    }

    #[test]
    fn all_infinite_path_is_an_error() {
        let mut net = FlowNetwork::new(3);
        net.add_infinite(0, 1);
        net.add_infinite(1, 2);
        net.add_unit(0, 2, 1);
        assert!(matches!(max_flow_min_cut(net, 0, 2), Err(Error::InfiniteCapacityPath)));
    }
}
