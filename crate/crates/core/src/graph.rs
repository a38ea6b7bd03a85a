//! Edge-indexed graph representations. Edges carry stable 1-based ids in
//! input order so parallel edges stay individually addressable in solutions.

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// Largest weight magnitude the file format accepts.
pub const MAX_WEIGHT: i64 = 1_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiEdge {
    pub tail: VertexId,
    pub head: VertexId,
    pub weight: i64,
}

/// Directed graph with integer weights and optional s-t terminals.
/// Vertices are `1..=n`; edge ids are `1..=m` in input order.
#[derive(Debug, Clone)]
pub struct WeightedDigraph {
    pub n: usize,
    pub edges: Vec<DiEdge>,
    pub s: Option<VertexId>,
    pub t: Option<VertexId>,
}

impl WeightedDigraph {
    pub fn new(n: usize, edges: Vec<(VertexId, VertexId, i64)>) -> Result<Self> {
        let edges = edges
            .into_iter()
            .map(|(tail, head, weight)| {
                check_vertex(tail, n)?;
                check_vertex(head, n)?;
                Ok(DiEdge { tail, head, weight })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n, edges, s: None, t: None })
    }

    pub fn with_terminals(mut self, s: VertexId, t: VertexId) -> Result<Self> {
        check_vertex(s, self.n)?;
        check_vertex(t, self.n)?;
        self.s = Some(s);
        self.t = Some(t);
        Ok(self)
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edge by 1-based id.
    pub fn edge(&self, id: EdgeId) -> Result<&DiEdge> {
        if id == 0 || id > self.edges.len() {
            return Err(Error::EdgeOutOfRange(id, self.edges.len()));
        }
        Ok(&self.edges[id - 1])
    }

    pub fn terminals(&self) -> Result<(VertexId, VertexId)> {
        match (self.s, self.t) {
            (Some(s), Some(t)) => Ok((s, t)),
            _ => Err(Error::MissingTerminals),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnEdge {
    pub u: VertexId,
    pub v: VertexId,
    pub weight: i64,
}

/// Undirected multigraph; self-loops and parallel edges permitted, weights
/// may be negative (minimum spanning tree inputs).
#[derive(Debug, Clone)]
pub struct WeightedMultigraph {
    pub n: usize,
    pub edges: Vec<UnEdge>,
    pub s: Option<VertexId>,
    pub t: Option<VertexId>,
}

impl WeightedMultigraph {
    pub fn new(n: usize, edges: Vec<(VertexId, VertexId, i64)>) -> Result<Self> {
        let edges = edges
            .into_iter()
            .map(|(u, v, weight)| {
                check_vertex(u, n)?;
                check_vertex(v, n)?;
                Ok(UnEdge { u, v, weight })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n, edges, s: None, t: None })
    }

    pub fn with_terminals(mut self, s: VertexId, t: VertexId) -> Result<Self> {
        check_vertex(s, self.n)?;
        check_vertex(t, self.n)?;
        self.s = Some(s);
        self.t = Some(t);
        Ok(self)
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, id: EdgeId) -> Result<&UnEdge> {
        if id == 0 || id > self.edges.len() {
            return Err(Error::EdgeOutOfRange(id, self.edges.len()));
        }
        Ok(&self.edges[id - 1])
    }

    pub fn terminals(&self) -> Result<(VertexId, VertexId)> {
        match (self.s, self.t) {
            (Some(s), Some(t)) => Ok((s, t)),
            _ => Err(Error::MissingTerminals),
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut dsu = UnionFind::new(self.n + 1);
        for e in &self.edges {
            dsu.union(e.u, e.v);
        }
        let root = dsu.find(1);
        (2..=self.n).all(|v| dsu.find(v) == root)
    }

    /// True when the graph has no self-loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        for e in &self.edges {
            if e.u == e.v {
                return false;
            }
            let key = (e.u.min(e.v), e.u.max(e.v));
            if !seen.insert(key) {
                return false;
            }
        }
        true
    }
}

fn check_vertex(v: VertexId, n: usize) -> Result<()> {
    if v == 0 || v > n {
        return Err(Error::VertexOutOfRange(v, n));
    }
    Ok(())
}

/// Union-find with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `x` and `y` were already in the same set.
    pub fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        let (big, small) = if self.size[rx] >= self.size[ry] { (rx, ry) } else { (ry, rx) };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        true
    }

    pub fn same(&mut self, x: usize, y: usize) -> bool {
        self.find(x) == self.find(y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_ids_are_input_order() {
        let g = WeightedMultigraph::new(2, vec![(1, 2, 1), (1, 2, 1)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.edge(1).unwrap().u, 1);
        assert_eq!(g.edge(2).unwrap().v, 2);
        assert!(g.edge(3).is_err());
    }

    #[test]
    fn endpoint_out_of_range_rejected() {
        assert!(WeightedDigraph::new(2, vec![(1, 3, 1)]).is_err());
        assert!(WeightedDigraph::new(2, vec![(0, 1, 1)]).is_err());
    }

    #[test]
    fn connectivity() {
        let g = WeightedMultigraph::new(3, vec![(1, 2, 1)]).unwrap();
        assert!(!g.is_connected());
        let g = WeightedMultigraph::new(3, vec![(1, 2, 1), (2, 3, 1)]).unwrap();
        assert!(g.is_connected());
    }

    #[test]
    fn simplicity() {
        assert!(WeightedMultigraph::new(3, vec![(1, 2, 1), (2, 3, 1)]).unwrap().is_simple());
        assert!(!WeightedMultigraph::new(2, vec![(1, 2, 1), (2, 1, 1)]).unwrap().is_simple());
        assert!(!WeightedMultigraph::new(2, vec![(1, 1, 1)]).unwrap().is_simple());
    }

    #[test]
    fn union_find_basics() {
        let mut uf = UnionFind::new(5);
        assert!(uf.union(1, 2));
        assert!(!uf.union(2, 1));
        assert!(uf.same(1, 2));
        assert!(!uf.same(1, 3));
    }
}
