//! Matroids as independence oracles: concrete constructions (graphic,
//! uniform, explicit-basis-list), duals, restrictions and contractions, plus
//! circuits, loops and exhaustive axiom checking for small ground sets.
//!
//! Element ids are 1-based and stable, mirroring edge ids when the matroid is
//! graphic, so results name original graph edges. Query sets are ascending
//! id slices.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{UnionFind, WeightedMultigraph};

pub type ElementId = usize;
pub type MatroidRef = Arc<dyn Matroid>;

pub trait Matroid: Send + Sync {
    /// The surviving ground set, ascending. For base constructions this is
    /// `1..=n`; minors shrink it without renumbering.
    fn ground(&self) -> &[ElementId];

    /// Whether `set` (ascending ids, a subset of the ground set) is
    /// independent.
    fn is_independent(&self, set: &[ElementId]) -> bool;

    /// Construction tag, e.g. `contraction-of(dual-of(graphic))`.
    fn provenance(&self) -> String;

    /// Total underlying base-oracle queries so far (wrappers forward to the
    /// construction they wrap).
    fn calls(&self) -> u64;
}

fn full_ground(n: usize) -> Vec<ElementId> {
    (1..=n).collect()
}

fn is_sorted_set(set: &[ElementId]) -> bool {
    set.windows(2).all(|w| w[0] < w[1])
}

struct GraphicMatroid {
    vertex_count: usize,
    endpoints: Vec<(usize, usize)>,
    ground: Vec<ElementId>,
    counter: AtomicU64,
}

impl Matroid for GraphicMatroid {
    fn ground(&self) -> &[ElementId] {
        &self.ground
    }

    fn is_independent(&self, set: &[ElementId]) -> bool {
        debug_assert!(is_sorted_set(set));
        self.counter.fetch_add(1, Ordering::Relaxed);
        let mut dsu = UnionFind::new(self.vertex_count + 1);
        set.iter().all(|&e| {
            let (u, v) = self.endpoints[e - 1];
            dsu.union(u, v)
        })
    }

    fn provenance(&self) -> String {
        "graphic".into()
    }

    fn calls(&self) -> u64 {
        self.counter.load(Ordering::Relaxed)
    }
}

/// Independence = the edge set is a forest. Self-loops are loops of the
/// matroid; disconnected graphs are fine (bases are maximal forests).
pub fn graphic_matroid(g: &WeightedMultigraph) -> MatroidRef {
    Arc::new(GraphicMatroid {
        vertex_count: g.n,
        endpoints: g.edges.iter().map(|e| (e.u, e.v)).collect(),
        ground: full_ground(g.m()),
        counter: AtomicU64::new(0),
    })
}

struct UniformMatroid {
    rank: usize,
    ground: Vec<ElementId>,
    counter: AtomicU64,
}

impl Matroid for UniformMatroid {
    fn ground(&self) -> &[ElementId] {
        &self.ground
    }

    fn is_independent(&self, set: &[ElementId]) -> bool {
        self.counter.fetch_add(1, Ordering::Relaxed);
        set.len() <= self.rank
    }

    fn provenance(&self) -> String {
        "uniform".into()
    }

    fn calls(&self) -> u64 {
        self.counter.load(Ordering::Relaxed)
    }
}

/// U(n, r): independence = cardinality at most r.
pub fn uniform_matroid(n: usize, r: usize) -> Result<MatroidRef> {
    if r > n {
        return Err(Error::RankOutOfRange { rank: r, ground: n });
    }
    Ok(Arc::new(UniformMatroid { rank: r, ground: full_ground(n), counter: AtomicU64::new(0) }))
}

struct ExplicitMatroid {
    bases: Vec<Vec<ElementId>>,
    ground: Vec<ElementId>,
    counter: AtomicU64,
}

impl Matroid for ExplicitMatroid {
    fn ground(&self) -> &[ElementId] {
        &self.ground
    }

    fn is_independent(&self, set: &[ElementId]) -> bool {
        debug_assert!(is_sorted_set(set));
        self.counter.fetch_add(1, Ordering::Relaxed);
        self.bases.iter().any(|b| is_subset(set, b))
    }

    fn provenance(&self) -> String {
        "explicit".into()
    }

    fn calls(&self) -> u64 {
        self.counter.load(Ordering::Relaxed)
    }
}

fn is_subset(small: &[ElementId], big: &[ElementId]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.by_ref().any(|y| y == x))
}

/// Matroid given extensionally by its bases. The basis-exchange property is
/// verified exhaustively at load and violations are rejected loudly: a
/// silent non-matroid would invalidate every downstream guarantee.
pub fn explicit_matroid(ground_size: usize, bases: Vec<Vec<ElementId>>) -> Result<MatroidRef> {
    if bases.is_empty() {
        return Err(Error::AxiomViolation("no bases listed".into()));
    }
    let mut bases: Vec<Vec<ElementId>> = bases
        .into_iter()
        .map(|mut b| {
            b.sort_unstable();
            b.dedup();
            b
        })
        .collect();
    bases.sort();
    bases.dedup();
    for b in &bases {
        for &e in b {
            if e == 0 || e > ground_size {
                return Err(Error::ElementOutOfRange(e, ground_size));
            }
        }
        if b.len() != bases[0].len() {
            return Err(Error::AxiomViolation(format!(
                "bases of unequal cardinality: {:?} vs {:?}",
                bases[0], b
            )));
        }
    }
    for b1 in &bases {
        for b2 in &bases {
            for &x in b1.iter().filter(|x| !b2.contains(x)) {
                let found = b2.iter().filter(|y| !b1.contains(y)).any(|&y| {
                    let mut candidate: Vec<ElementId> =
                        b1.iter().copied().filter(|&e| e != x).chain([y]).collect();
                    candidate.sort_unstable();
                    bases.binary_search(&candidate).is_ok()
                });
                if !found {
                    return Err(Error::AxiomViolation(format!(
                        "basis exchange fails for {b1:?}, {b2:?} at element {x}"
                    )));
                }
            }
        }
    }
    Ok(Arc::new(ExplicitMatroid { bases, ground: full_ground(ground_size), counter: AtomicU64::new(0) }))
}

struct DualMatroid {
    inner: MatroidRef,
    inner_rank: usize,
    ground: Vec<ElementId>,
}

impl Matroid for DualMatroid {
    fn ground(&self) -> &[ElementId] {
        &self.ground
    }

    fn is_independent(&self, set: &[ElementId]) -> bool {
        // X is independent in M* iff some basis of M avoids X, i.e. the
        // greedy completion inside ground \ X reaches rank(M).
        let complement: Vec<ElementId> =
            self.ground.iter().copied().filter(|e| !set.contains(e)).collect();
        greedy_basis(self.inner.as_ref(), &complement).len() == self.inner_rank
    }

    fn provenance(&self) -> String {
        format!("dual-of({})", self.inner.provenance())
    }

    fn calls(&self) -> u64 {
        self.inner.calls()
    }
}

/// The dual matroid: bases are complements of bases.
pub fn dual(m: MatroidRef) -> MatroidRef {
    let inner_rank = rank(m.as_ref());
    let ground = m.ground().to_vec();
    Arc::new(DualMatroid { inner: m, inner_rank, ground })
}

struct RestrictionMatroid {
    inner: MatroidRef,
    ground: Vec<ElementId>,
}

impl Matroid for RestrictionMatroid {
    fn ground(&self) -> &[ElementId] {
        &self.ground
    }

    fn is_independent(&self, set: &[ElementId]) -> bool {
        self.inner.is_independent(set)
    }

    fn provenance(&self) -> String {
        format!("restriction-of({})", self.inner.provenance())
    }

    fn calls(&self) -> u64 {
        self.inner.calls()
    }
}

fn sorted_subset_of_ground(m: &dyn Matroid, x: &[ElementId]) -> Result<Vec<ElementId>> {
    let mut x = x.to_vec();
    x.sort_unstable();
    x.dedup();
    let ground = m.ground();
    for &e in &x {
        if ground.binary_search(&e).is_err() {
            return Err(Error::ElementOutOfRange(e, ground.last().copied().unwrap_or(0)));
        }
    }
    Ok(x)
}

/// M | X: ground set X, independence unchanged.
pub fn restrict(m: MatroidRef, x: &[ElementId]) -> Result<MatroidRef> {
    let ground = sorted_subset_of_ground(m.as_ref(), x)?;
    Ok(Arc::new(RestrictionMatroid { inner: m, ground }))
}

struct ContractionMatroid {
    inner: MatroidRef,
    fixed_basis: Vec<ElementId>,
    ground: Vec<ElementId>,
}

impl Matroid for ContractionMatroid {
    fn ground(&self) -> &[ElementId] {
        &self.ground
    }

    fn is_independent(&self, set: &[ElementId]) -> bool {
        let mut merged = Vec::with_capacity(self.fixed_basis.len() + set.len());
        let (mut i, mut j) = (0, 0);
        while i < self.fixed_basis.len() || j < set.len() {
            match (self.fixed_basis.get(i), set.get(j)) {
                (Some(&a), Some(&b)) if a < b => {
                    merged.push(a);
                    i += 1;
                }
                (Some(_), Some(&b)) => {
                    merged.push(b);
                    j += 1;
                }
                (Some(&a), None) => {
                    merged.push(a);
                    i += 1;
                }
                (None, Some(&b)) => {
                    merged.push(b);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        self.inner.is_independent(&merged)
    }

    fn provenance(&self) -> String {
        format!("contraction-of({})", self.inner.provenance())
    }

    fn calls(&self) -> u64 {
        self.inner.calls()
    }
}

/// M / X: fixes one greedy basis of M|X and answers
/// `is_independent(B_X ∪ I)`. Any basis of M|X yields the same matroid; the
/// cached choice makes queries single-call and deterministic.
pub fn contract(m: MatroidRef, x: &[ElementId]) -> Result<MatroidRef> {
    let x = sorted_subset_of_ground(m.as_ref(), x)?;
    let basis = greedy_basis(m.as_ref(), &x);
    contract_with_basis(m, &x, &basis)
}

/// [`contract`] with a caller-chosen basis of M|X.
pub fn contract_with_basis(
    m: MatroidRef,
    x: &[ElementId],
    basis_of_mx: &[ElementId],
) -> Result<MatroidRef> {
    let x = sorted_subset_of_ground(m.as_ref(), x)?;
    let mut fixed = basis_of_mx.to_vec();
    fixed.sort_unstable();
    for &e in &fixed {
        if x.binary_search(&e).is_err() {
            return Err(Error::NotABasis(format!("element {e} of the fixed basis is not in X")));
        }
    }
    if !m.is_independent(&fixed) {
        return Err(Error::NotABasis("fixed set is dependent".into()));
    }
    let ground: Vec<ElementId> =
        m.ground().iter().copied().filter(|e| x.binary_search(e).is_err()).collect();
    Ok(Arc::new(ContractionMatroid { inner: m, fixed_basis: fixed, ground }))
}

/// Scans `order`, keeping each element that preserves independence. When
/// `order` covers the ground set the result is a basis; in general it is a
/// basis of the restriction to `order`.
pub fn greedy_basis(m: &dyn Matroid, order: &[ElementId]) -> Vec<ElementId> {
    let mut chosen: Vec<ElementId> = Vec::new();
    for &e in order {
        let pos = chosen.partition_point(|&x| x < e);
        chosen.insert(pos, e);
        if !m.is_independent(&chosen) {
            chosen.remove(pos);
        }
    }
    chosen
}

pub fn rank(m: &dyn Matroid) -> usize {
    greedy_basis(m, m.ground()).len()
}

pub fn is_loop(m: &dyn Matroid, e: ElementId) -> bool {
    !m.is_independent(&[e])
}

/// The unique circuit inside `basis ∪ {e}`: `{e}` together with every basis
/// element whose removal restores a basis.
pub fn fundamental_circuit(
    m: &dyn Matroid,
    basis: &[ElementId],
    e: ElementId,
) -> Result<Vec<ElementId>> {
    let basis = {
        let mut b = basis.to_vec();
        b.sort_unstable();
        b
    };
    if basis.binary_search(&e).is_ok() {
        return Err(Error::NotABasis(format!("element {e} already belongs to the basis")));
    }
    if m.ground().binary_search(&e).is_err() {
        return Err(Error::ElementOutOfRange(e, m.ground().last().copied().unwrap_or(0)));
    }
    if !m.is_independent(&basis) || basis.len() != rank(m) {
        return Err(Error::NotABasis("the given set is not a basis".into()));
    }
    let mut extended = basis.clone();
    let pos = extended.partition_point(|&x| x < e);
    extended.insert(pos, e);
    let mut circuit = vec![e];
    for &f in &basis {
        let without: Vec<ElementId> = extended.iter().copied().filter(|&x| x != f).collect();
        if m.is_independent(&without) {
            circuit.push(f);
        }
    }
    circuit.sort_unstable();
    Ok(circuit)
}

/// All circuits (minimal dependent sets), for small ground sets.
pub fn circuits(m: &dyn Matroid) -> Vec<Vec<ElementId>> {
    let ground = m.ground();
    assert!(ground.len() <= 20, "circuit enumeration is exponential");
    let indep = independence_table(m);
    let mut out = Vec::new();
    for mask in 1u32..1 << ground.len() {
        if indep[mask as usize] {
            continue;
        }
        let minimal = (0..ground.len())
            .filter(|&i| mask >> i & 1 == 1)
            .all(|i| indep[(mask ^ (1 << i)) as usize]);
        if minimal {
            out.push(mask_to_set(ground, mask));
        }
    }
    out
}

fn independence_table(m: &dyn Matroid) -> Vec<bool> {
    let ground = m.ground();
    (0u32..1 << ground.len())
        .map(|mask| m.is_independent(&mask_to_set(ground, mask)))
        .collect()
}

fn mask_to_set(ground: &[ElementId], mask: u32) -> Vec<ElementId> {
    (0..ground.len()).filter(|&i| mask >> i & 1 == 1).map(|i| ground[i]).collect()
}

/// Exhaustively checks the three matroid axioms (nonemptiness, downward
/// closure, exchange). Exponential; intended for ground sets up to ~9.
pub fn check_matroid_axioms(m: &dyn Matroid) -> Result<()> {
    let ground = m.ground();
    let g = ground.len();
    if g > 20 {
        return Err(Error::ResourceLimit(format!("axiom check on ground of size {g}")));
    }
    let indep = independence_table(m);
    if !indep[0] {
        return Err(Error::AxiomViolation("the empty set is dependent".into()));
    }
    for mask in 0..indep.len() as u32 {
        if !indep[mask as usize] {
            continue;
        }
        for i in 0..g {
            if mask >> i & 1 == 1 && !indep[(mask ^ (1 << i)) as usize] {
                return Err(Error::AxiomViolation(format!(
                    "downward closure fails: {:?} is independent, removing {} is not",
                    mask_to_set(ground, mask),
                    ground[i]
                )));
            }
        }
    }
    for x in 0..indep.len() as u32 {
        if !indep[x as usize] {
            continue;
        }
        for y in 0..indep.len() as u32 {
            if !indep[y as usize] || y.count_ones() <= x.count_ones() {
                continue;
            }
            let candidates = y & !x;
            let extends = (0..g)
                .any(|i| candidates >> i & 1 == 1 && indep[(x | (1 << i)) as usize]);
            if !extends {
                return Err(Error::AxiomViolation(format!(
                    "exchange fails for {:?} and {:?}",
                    mask_to_set(ground, x),
                    mask_to_set(ground, y)
                )));
            }
        }
    }
    Ok(())
}
