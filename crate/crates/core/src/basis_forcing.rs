//! Forcing and anti-forcing sets for minimum-weight matroid bases.
//!
//! The anti-forcing algorithm is a bulk Kruskal sweep: process weight classes
//! in increasing order; within the class of current minimum weight take a
//! basis `B_min` of the restriction, add everything else in the class (except
//! loops) to the anti-forcing set, and contract the class away. The
//! accumulated `B_min`s form a minimum-weight basis, and the collected set is
//! a minimum anti-forcing set for it.
//!
//! Forcing reduces to anti-forcing through duality: S forces the minimum
//! basis of (M, w) iff S anti-forces the maximum basis of (M*, w), which is
//! the minimum basis of (M*, -w). Pinning the class bases to `B* ∩ E_min`
//! yields the per-basis variants.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::{
    contract_with_basis, dual, greedy_basis, is_loop, rank, restrict, ElementId, Matroid,
    MatroidRef,
};

/// Weights indexed by element id (1-based).
#[derive(Debug, Clone)]
pub struct ElementWeights(Vec<i64>);

impl ElementWeights {
    /// `table[e]` is the weight of element e; `table[0]` is ignored.
    pub fn from_table(table: Vec<i64>) -> Self {
        Self(table)
    }

    pub fn get(&self, e: ElementId) -> i64 {
        self.0[e]
    }

    pub fn negated(&self) -> Self {
        Self(self.0.iter().map(|&w| -w).collect())
    }

    pub fn total(&self, set: &[ElementId]) -> i64 {
        set.iter().map(|&e| self.get(e)).sum()
    }
}

/// One round of the weight-class sweep.
#[derive(Debug, Clone, Serialize)]
pub struct WeightClassRecord {
    pub weight: i64,
    pub elements: Vec<ElementId>,
    pub basis: Vec<ElementId>,
    pub loops: Vec<ElementId>,
    pub added: Vec<ElementId>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct WeightClassTrace {
    pub rounds: Vec<WeightClassRecord>,
}

/// An (anti-)forcing set for minimum-weight bases with its certified basis.
#[derive(Debug, Clone)]
pub struct BasisForcingResult {
    pub set: Vec<ElementId>,
    pub basis: Vec<ElementId>,
    pub trace: WeightClassTrace,
}

impl BasisForcingResult {
    pub fn size(&self) -> usize {
        self.set.len()
    }
}

fn weight_classes(ground: &[ElementId], w: &ElementWeights) -> Vec<(i64, Vec<ElementId>)> {
    let mut classes = std::collections::BTreeMap::<i64, Vec<ElementId>>::new();
    for &e in ground {
        classes.entry(w.get(e)).or_default().push(e);
    }
    classes.into_iter().collect()
}

/// The weight-class sweep. `pinned`, when given, fixes each round's class
/// basis to `pinned ∩ E_min` instead of the ascending-id greedy choice.
fn antiforcing_sweep(
    m: MatroidRef,
    w: &ElementWeights,
    pinned: Option<&[ElementId]>,
) -> Result<BasisForcingResult> {
    let mut set: Vec<ElementId> = Vec::new();
    let mut basis: Vec<ElementId> = Vec::new();
    let mut trace = WeightClassTrace::default();
    let mut current = m;
    for (weight, elements) in weight_classes(current.ground(), w) {
        let class_matroid = restrict(current.clone(), &elements)?;
        let class_basis = match pinned {
            None => greedy_basis(class_matroid.as_ref(), &elements),
            Some(b_star) => {
                let chosen: Vec<ElementId> =
                    elements.iter().copied().filter(|e| b_star.contains(e)).collect();
                // B* ∩ E_min must be a basis of the class restriction; for a
                // genuine minimum-weight basis it always is.
                if !class_matroid.is_independent(&chosen)
                    || greedy_basis(class_matroid.as_ref(), &elements).len() != chosen.len()
                {
                    return Err(Error::NotABasis(format!(
                        "pinned basis does not span weight class {weight}"
                    )));
                }
                chosen
            }
        };
        let loops: Vec<ElementId> = elements
            .iter()
            .copied()
            .filter(|&e| is_loop(class_matroid.as_ref(), e))
            .collect();
        let added: Vec<ElementId> = elements
            .iter()
            .copied()
            .filter(|e| !class_basis.contains(e) && !loops.contains(e))
            .collect();
        set.extend(&added);
        basis.extend(&class_basis);
        trace.rounds.push(WeightClassRecord {
            weight,
            elements: elements.clone(),
            basis: class_basis.clone(),
            loops,
            added,
        });
        current = contract_with_basis(current, &elements, &class_basis)?;
    }
    set.sort_unstable();
    basis.sort_unstable();
    Ok(BasisForcingResult { set, basis, trace })
}

/// Minimum anti-forcing set for the minimum-weight bases of (M, w). The
/// returned basis is the unique minimum-weight basis disjoint from the set.
pub fn min_antiforcing_min_bases(m: MatroidRef, w: &ElementWeights) -> Result<BasisForcingResult> {
    antiforcing_sweep(m, w, None)
}

/// Minimum forcing set for the minimum-weight bases of (M, w), via the dual:
/// the anti-forcing sweep runs on (M*, -w) and the witness basis is the
/// complement of the dual basis.
pub fn min_forcing_min_bases(m: MatroidRef, w: &ElementWeights) -> Result<BasisForcingResult> {
    let ground = m.ground().to_vec();
    let dual_result = antiforcing_sweep(dual(m), &w.negated(), None)?;
    Ok(complement_basis(dual_result, &ground))
}

fn complement_basis(mut r: BasisForcingResult, ground: &[ElementId]) -> BasisForcingResult {
    r.basis = ground.iter().copied().filter(|e| r.basis.binary_search(e).is_err()).collect();
    r
}

fn validate_min_weight_basis(m: &dyn Matroid, w: &ElementWeights, b: &[ElementId]) -> Result<Vec<ElementId>> {
    let mut sorted = b.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != b.len() {
        return Err(Error::NotABasis("repeated element".into()));
    }
    for &e in &sorted {
        if m.ground().binary_search(&e).is_err() {
            return Err(Error::ElementOutOfRange(e, m.ground().last().copied().unwrap_or(0)));
        }
    }
    if !m.is_independent(&sorted) || sorted.len() != rank(m) {
        return Err(Error::NotABasis("the given set is not a basis".into()));
    }
    // Greedy by (weight, id) builds some minimum-weight basis; equal weight
    // certifies optimality.
    let mut order = m.ground().to_vec();
    order.sort_by_key(|&e| (w.get(e), e));
    let optimum = w.total(&greedy_basis(m, &order));
    let got = w.total(&sorted);
    if got != optimum {
        return Err(Error::NotMinimumWeight { got, optimum });
    }
    Ok(sorted)
}

/// Minimum anti-forcing set specifically for the given minimum-weight basis.
pub fn antiforcing_for_basis(
    m: MatroidRef,
    w: &ElementWeights,
    basis: &[ElementId],
) -> Result<BasisForcingResult> {
    let basis = validate_min_weight_basis(m.as_ref(), w, basis)?;
    antiforcing_sweep(m, w, Some(&basis))
}

/// Minimum forcing set specifically for the given minimum-weight basis:
/// anti-forcing in the dual with the complement basis pinned.
pub fn forcing_for_basis(
    m: MatroidRef,
    w: &ElementWeights,
    basis: &[ElementId],
) -> Result<BasisForcingResult> {
    let basis = validate_min_weight_basis(m.as_ref(), w, basis)?;
    let ground = m.ground().to_vec();
    let complement: Vec<ElementId> =
        ground.iter().copied().filter(|e| basis.binary_search(e).is_err()).collect();
    let dual_result = antiforcing_sweep(dual(m), &w.negated(), Some(&complement))?;
    Ok(complement_basis(dual_result, &ground))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::WeightedMultigraph;
    use crate::matroid::graphic_matroid;

    fn triangle() -> MatroidRef {
        graphic_matroid(&WeightedMultigraph::new(3, vec![(1, 2, 1), (2, 3, 1), (1, 3, 1)]).unwrap())
    }

    fn unit_weights(n: usize) -> ElementWeights {
        ElementWeights::from_table(vec![1; n + 1])
    }

    #[test]
    fn triangle_antiforcing() {
        let r = min_antiforcing_min_bases(triangle(), &unit_weights(3)).unwrap();
        assert_eq!(r.set, vec![3]);
        assert_eq!(r.basis, vec![1, 2]);
    }

    #[test]
    fn parallel_pair_antiforcing() {
        let m = graphic_matroid(&WeightedMultigraph::new(2, vec![(1, 2, 1), (1, 2, 1)]).unwrap());
        let r = min_antiforcing_min_bases(m, &unit_weights(2)).unwrap();
        assert_eq!(r.set, vec![2]);
        assert_eq!(r.basis, vec![1]);
    }

    #[test]
    fn unique_mst_needs_nothing() {
        let w = ElementWeights::from_table(vec![0, 1, 1, 2]);
        let r = min_antiforcing_min_bases(triangle(), &w).unwrap();
        assert!(r.set.is_empty());
        assert_eq!(r.basis, vec![1, 2]);
        let f = min_forcing_min_bases(triangle(), &w).unwrap();
        assert!(f.set.is_empty());
        assert_eq!(f.basis, vec![1, 2]);
    }

    #[test]
    fn triangle_forcing_needs_both_edges() {
        let r = min_forcing_min_bases(triangle(), &unit_weights(3)).unwrap();
        assert_eq!(r.set.len(), 2);
        assert!(r.set.iter().all(|e| r.basis.contains(e)));
    }

    #[test]
    fn parallel_pair_forcing() {
        let m = graphic_matroid(&WeightedMultigraph::new(2, vec![(1, 2, 1), (1, 2, 1)]).unwrap());
        let r = min_forcing_min_bases(m, &unit_weights(2)).unwrap();
        assert_eq!(r.set.len(), 1);
        assert_eq!(r.basis, r.set);
    }

    #[test]
    fn per_basis_variants() {
        let w = unit_weights(3);
        let r = antiforcing_for_basis(triangle(), &w, &[1, 3]).unwrap();
        assert_eq!(r.set, vec![2]);
        assert_eq!(r.basis, vec![1, 3]);

        let f = forcing_for_basis(triangle(), &w, &[1, 2]).unwrap();
        assert_eq!(f.set, vec![1, 2]);
        assert_eq!(f.basis, vec![1, 2]);

        let w_unique = ElementWeights::from_table(vec![0, 1, 1, 2]);
        let r = antiforcing_for_basis(triangle(), &w_unique, &[1, 2]).unwrap();
        assert!(r.set.is_empty());
        let f = forcing_for_basis(triangle(), &w_unique, &[1, 2]).unwrap();
        assert!(f.set.is_empty());
    }

    #[test]
    fn per_basis_rejects_bad_inputs() {
        let w = unit_weights(3);
        assert!(antiforcing_for_basis(triangle(), &w, &[1, 2, 3]).is_err());
        assert!(antiforcing_for_basis(triangle(), &w, &[1]).is_err());
        let w_unique = ElementWeights::from_table(vec![0, 1, 1, 2]);
        // {2, 3} is a spanning tree but not of minimum weight.
        assert!(matches!(
            antiforcing_for_basis(triangle(), &w_unique, &[2, 3]),
            Err(Error::NotMinimumWeight { .. })
        ));
    }

    #[test]
    fn trace_records_the_sweep() {
        let w = ElementWeights::from_table(vec![0, 1, 1, 2]);
        let r = min_antiforcing_min_bases(triangle(), &w).unwrap();
        assert_eq!(r.trace.rounds.len(), 2);
        assert_eq!(r.trace.rounds[0].weight, 1);
        assert_eq!(r.trace.rounds[0].elements, vec![1, 2]);
        assert_eq!(r.trace.rounds[1].weight, 2);
        // Edge 3 closes a cycle with the contracted class: it is a loop now.
        assert_eq!(r.trace.rounds[1].loops, vec![3]);
    }

    #[test]
    fn all_loop_class_leaves_result_unchanged() {
        // A self-loop of strictly minimal weight forms its own class.
        let g = WeightedMultigraph::new(2, vec![(1, 1, -5), (1, 2, 1), (1, 2, 1)]).unwrap();
        let m = graphic_matroid(&g);
        let w = ElementWeights::from_table(vec![0, -5, 1, 1]);
        let r = min_antiforcing_min_bases(m, &w).unwrap();
        assert_eq!(r.set, vec![3]);
        assert_eq!(r.basis, vec![2]);
        assert_eq!(r.trace.rounds[0].loops, vec![1]);
        assert!(r.trace.rounds[0].basis.is_empty());
    }
}
