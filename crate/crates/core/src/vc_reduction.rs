//! Hardness gadget: reduces Vertex Cover to anti-forcing for shortest s-t
//! paths, with both solution-mapping directions.
//!
//! Every input vertex v_i becomes a gadget with a spine route (t x y s)_i of
//! weight 4 and four alternative routes (t a c^j b s)_i of weight 4; gadgets
//! are chained between the terminals by unit spine edges. Shortcut "thick"
//! edges (N + 2 parallel copies each, too many for any budget-N set to
//! destroy) connect s to each w_i, each z_i to t, and y_i to x_j for every
//! input edge {v_i, v_j}. Weights are tuned so every edge lies on a shortest
//! s-t path of length 5n + 1.
//!
//! A vertex cover of size <= k maps to an anti-forcing set of size
//! <= N = 3n + k (four gadget edges when v_i is covered, three otherwise),
//! and conversely the unique witness path of any size-<=N anti-forcing set
//! reads back a cover: the gadgets it traverses on the a-side.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, VertexId, WeightedMultigraph};
use crate::spdag::build_sp_dag_undirected;

/// Per-gadget edge ids, named after their endpoints.
#[derive(Debug, Clone, Copy)]
pub struct GadgetEdges {
    pub tx: EdgeId,
    pub xy: EdgeId,
    pub ys: EdgeId,
    pub ta: EdgeId,
    pub wx: EdgeId,
    pub yz: EdgeId,
    pub bs: EdgeId,
    pub ac: [EdgeId; 4],
    pub cb: [EdgeId; 4],
}

/// Vertex roles inside a gadget, in vertex-id layout order.
pub const GADGET_ROLES: [&str; 12] =
    ["t", "x", "y", "s", "a", "w", "z", "b", "c1", "c2", "c3", "c4"];

#[derive(Debug, Clone)]
pub struct VcReductionInstance {
    /// The gadget multigraph, terminals set to s and t.
    pub graph: WeightedMultigraph,
    /// Original vertex count.
    pub n: usize,
    /// Cover budget.
    pub k: usize,
    /// The anti-forcing budget N = 3n + k; thick edges have N + 2 copies.
    pub big_n: usize,
    /// Edges of the original graph, for cover checking.
    pub source_edges: Vec<(VertexId, VertexId)>,
    /// Spine edge ids: `spine[i]` joins s_i to t_{i+1} (s_0 = s, t_{n+1} = t).
    pub spine: Vec<EdgeId>,
    pub gadgets: Vec<GadgetEdges>,
    /// All thick groups, each of size N + 2.
    pub thick_groups: Vec<Vec<EdgeId>>,
}

impl VcReductionInstance {
    /// Gadget vertex id for role index 0..11 of gadget i (1-based).
    pub fn gadget_vertex(&self, i: usize, role: usize) -> VertexId {
        2 + 12 * (i - 1) + role + 1
    }

    /// `(gadget index, role name)` for a vertex; gadget 0 is global s/t.
    pub fn vertex_role(&self, v: VertexId) -> (usize, &'static str) {
        match v {
            1 => (0, "s"),
            2 => (0, "t"),
            _ => {
                let off = v - 3;
                (off / 12 + 1, GADGET_ROLES[off % 12])
            }
        }
    }

    /// Human-readable role per edge id, aligned with construction order.
    pub fn edge_roles(&self) -> Vec<(EdgeId, String)> {
        let mut roles = Vec::with_capacity(self.graph.m());
        for (i, &id) in self.spine.iter().enumerate() {
            roles.push((id, format!("spine({i})")));
        }
        for (i, g) in self.gadgets.iter().enumerate() {
            let i = i + 1;
            roles.push((g.tx, format!("tx({i})")));
            roles.push((g.xy, format!("xy({i})")));
            roles.push((g.ys, format!("ys({i})")));
            roles.push((g.ta, format!("ta({i})")));
            roles.push((g.wx, format!("wx({i})")));
            roles.push((g.yz, format!("yz({i})")));
            roles.push((g.bs, format!("bs({i})")));
            for j in 0..4 {
                roles.push((g.ac[j], format!("ac{}({i})", j + 1)));
                roles.push((g.cb[j], format!("cb{}({i})", j + 1)));
            }
        }
        for group in &self.thick_groups {
            for &id in group {
                let e = &self.graph.edges[id - 1];
                let (gu, ru) = self.vertex_role(e.u);
                let (gv, rv) = self.vertex_role(e.v);
                roles.push((id, format!("thick: {ru}({gu})-{rv}({gv})")));
            }
        }
        roles.sort_unstable();
        roles
    }
}

/// Builds the reduction instance for `(G, k)`.
pub fn vc_to_antiforcing_instance(g: &WeightedMultigraph, k: usize) -> Result<VcReductionInstance> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let n = g.n;
    if k > n {
        return Err(Error::CoverBudgetOutOfRange { k, n });
    }
    let big_n = 3 * n + k;
    let multiplicity = big_n + 2;

    let vertex_count = 2 + 12 * n;
    let role = |i: usize, r: usize| 2 + 12 * (i - 1) + r + 1;
    let (vt, vx, vy, vs, va, vw, vz, vb) = (0, 1, 2, 3, 4, 5, 6, 7);
    let vc = |j: usize| 8 + j; // c^{j+1}

    let mut edges: Vec<(VertexId, VertexId, i64)> = Vec::new();
    let mut spine = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let from = if i == 0 { 1 } else { role(i, vs) };
        let to = if i == n { 2 } else { role(i + 1, vt) };
        edges.push((from, to, 1));
        spine.push(edges.len());
    }
    let mut gadgets = Vec::with_capacity(n);
    for i in 1..=n {
        let push = |a: usize, b: usize, w: i64, edges: &mut Vec<(usize, usize, i64)>| {
            edges.push((a, b, w));
            edges.len()
        };
        let tx = push(role(i, vt), role(i, vx), 1, &mut edges);
        let xy = push(role(i, vx), role(i, vy), 2, &mut edges);
        let ys = push(role(i, vy), role(i, vs), 1, &mut edges);
        let ta = push(role(i, vt), role(i, va), 1, &mut edges);
        let wx = push(role(i, vw), role(i, vx), 1, &mut edges);
        let yz = push(role(i, vy), role(i, vz), 1, &mut edges);
        let bs = push(role(i, vb), role(i, vs), 1, &mut edges);
        let mut ac = [0; 4];
        let mut cb = [0; 4];
        for j in 0..4 {
            ac[j] = push(role(i, va), role(i, vc(j)), 1, &mut edges);
            cb[j] = push(role(i, vc(j)), role(i, vb), 1, &mut edges);
        }
        gadgets.push(GadgetEdges { tx, xy, ys, ta, wx, yz, bs, ac, cb });
    }
    let mut thick_groups = Vec::new();
    let mut push_thick = |a: VertexId, b: VertexId, w: i64, edges: &mut Vec<(usize, usize, i64)>| {
        let mut group = Vec::with_capacity(multiplicity);
        for _ in 0..multiplicity {
            edges.push((a, b, w));
            group.push(edges.len());
        }
        thick_groups.push(group);
    };
    for i in 1..=n {
        push_thick(1, role(i, vw), 5 * (i as i64 - 1) + 1, &mut edges);
    }
    for i in 1..=n {
        push_thick(role(i, vz), 2, 5 * (n as i64 - i as i64) + 1, &mut edges);
    }
    let mut source_edges = Vec::with_capacity(g.m());
    for e in &g.edges {
        let (i, j) = (e.u.min(e.v), e.u.max(e.v));
        source_edges.push((i, j));
        push_thick(role(i, vy), role(j, vx), 5 * (j as i64 - i as i64 - 1) + 3, &mut edges);
    }

    let graph = WeightedMultigraph::new(vertex_count, edges)?.with_terminals(1, 2)?;
    Ok(VcReductionInstance { graph, n, k, big_n, source_edges, spine, gadgets, thick_groups })
}

fn check_cover(inst: &VcReductionInstance, cover: &[VertexId]) -> Result<Vec<bool>> {
    let mut in_cover = vec![false; inst.n + 1];
    for &v in cover {
        if v == 0 || v > inst.n {
            return Err(Error::VertexOutOfRange(v, inst.n));
        }
        in_cover[v] = true;
    }
    for &(u, v) in &inst.source_edges {
        if !in_cover[u] && !in_cover[v] {
            return Err(Error::NotAVertexCover(cover.len(), u, v));
        }
    }
    Ok(in_cover)
}

/// Maps a vertex cover of size <= k to an anti-forcing set F with
/// `|F| = 4|cover| + 3(n - |cover|) <= N`.
pub fn vc_to_antiforcing_set(inst: &VcReductionInstance, cover: &[VertexId]) -> Result<Vec<EdgeId>> {
    let in_cover = check_cover(inst, cover)?;
    let size = in_cover.iter().filter(|&&b| b).count();
    if size > inst.k {
        return Err(Error::CoverTooLarge { size, k: inst.k });
    }
    let mut f = Vec::new();
    for (g, covered) in inst.gadgets.iter().zip(in_cover.iter().skip(1)) {
        if *covered {
            f.extend([g.xy, g.ac[1], g.ac[2], g.ac[3]]);
        } else {
            f.extend([g.ta, g.wx, g.yz]);
        }
    }
    f.sort_unstable();
    Ok(f)
}

/// Reads a vertex cover of size <= k back from an anti-forcing set of size
/// <= N: the vertices whose gadgets the unique witness path traverses on the
/// a-side.
pub fn antiforcing_to_vc(inst: &VcReductionInstance, f: &[EdgeId]) -> Result<Vec<VertexId>> {
    let dag = build_sp_dag_undirected(&inst.graph)?;
    antiforcing_to_vc_with(inst, &dag, f)
}

/// [`antiforcing_to_vc`] against a prebuilt shortest-path DAG of the gadget.
pub fn antiforcing_to_vc_with(
    inst: &VcReductionInstance,
    dag: &crate::spdag::SpDag,
    f: &[EdgeId],
) -> Result<Vec<VertexId>> {
    if f.len() > inst.big_n {
        return Err(Error::AntiForcingTooLarge { size: f.len(), bound: inst.big_n });
    }
    let (ok, witness) = crate::sp_antiforcing::is_antiforcing_set(dag, f);
    if !ok {
        let survivors = dag.count_paths_capped_without(dag.s(), dag.t(), 2, |id| f.contains(&id));
        return Err(Error::NotAntiForcing(survivors as usize));
    }
    let witness = witness.expect("witness accompanies a positive answer");
    let mut cover = Vec::new();
    let mut cur = dag.s();
    for id in witness {
        let e = dag.edge_by_id(id).expect("witness edges are in the DAG");
        cur = if e.tail == cur { e.head } else { e.tail };
        let (i, role) = inst.vertex_role(cur);
        if role == "a" {
            cover.push(i);
        }
    }
    cover.sort_unstable();
    cover.dedup();
    let size = cover.len();
    if size > inst.k {
        return Err(Error::CoverTooLarge { size, k: inst.k });
    }
    check_cover(inst, &cover)?;
    Ok(cover)
}

/// A positively weighted multigraph rewritten as a simple unit-weight graph:
/// each weight-q edge becomes a fresh path of 2q unit edges (the factor 2
/// separates parallel edges). Anti-forcing sizes are preserved; any one
/// chain edge stands in for its original edge.
#[derive(Debug, Clone)]
pub struct SimpleUnweighted {
    pub graph: WeightedMultigraph,
    /// `expansion[id]` lists the chain edge ids replacing original edge id.
    pub expansion: Vec<Vec<EdgeId>>,
}

pub fn to_simple_unweighted(g: &WeightedMultigraph) -> Result<SimpleUnweighted> {
    let mut next_vertex = g.n;
    let mut edges: Vec<(VertexId, VertexId, i64)> = Vec::new();
    let mut expansion = vec![Vec::new(); g.m() + 1];
    for (idx, e) in g.edges.iter().enumerate() {
        if e.weight <= 0 {
            return Err(Error::NonpositiveWeight { edge: idx + 1, weight: e.weight });
        }
        let hops = 2 * e.weight as usize;
        let mut prev = e.u;
        for step in 0..hops {
            let to = if step + 1 == hops {
                e.v
            } else {
                next_vertex += 1;
                next_vertex
            };
            edges.push((prev, to, 1));
            expansion[idx + 1].push(edges.len());
            prev = to;
        }
    }
    let mut graph = WeightedMultigraph::new(next_vertex, edges)?;
    if let (Some(s), Some(t)) = (g.s, g.t) {
        graph = graph.with_terminals(s, t)?;
    }
    Ok(SimpleUnweighted { graph, expansion })
}
