//! Brute-force ground truth for small instances: exhaustive enumeration of
//! paths and bases, and minimum (anti-)forcing sets found by direct subset
//! search against the definitions. Everything here is independent of the
//! polynomial algorithms it validates; budgets make blowups explicit errors
//! instead of silent truncation.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::matroid::{rank, ElementId, Matroid};
use crate::spdag::SpDag;

#[derive(Debug, Clone)]
pub struct EnumerationBudget {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub max_ground: usize,
    pub max_solutions: usize,
    /// Abort threshold on elementary subset checks.
    pub work_limit: u64,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        Self {
            max_vertices: 7,
            max_edges: 64,
            max_ground: 10,
            max_solutions: 10_000,
            work_limit: 200_000_000,
        }
    }
}

impl EnumerationBudget {
    /// A budget for instances beyond desk scale, still bounded.
    pub fn relaxed() -> Self {
        Self {
            max_vertices: 10_000,
            max_edges: 1_000_000,
            max_ground: 24,
            max_solutions: 100_000,
            work_limit: 2_000_000_000,
        }
    }
}

fn exceeded(what: &str, got: usize, max: usize) -> Error {
    Error::ResourceLimit(format!("{what} {got} exceeds enumeration budget {max}"))
}

/// All s-t paths of the DAG as edge-id sequences, lexicographic by edge ids.
pub fn enumerate_st_paths(d: &SpDag, budget: &EnumerationBudget) -> Result<Vec<Vec<usize>>> {
    let alive = (1..=d.n()).filter(|&v| d.is_alive(v)).count();
    if alive > budget.max_vertices {
        return Err(exceeded("vertex count", alive, budget.max_vertices));
    }
    if d.edges().len() > budget.max_edges {
        return Err(exceeded("edge count", d.edges().len(), budget.max_edges));
    }
    d.st_paths_bounded(budget.max_solutions)
        .ok_or_else(|| exceeded("path count", budget.max_solutions + 1, budget.max_solutions))
}

/// All bases, by scanning every subset of the rank cardinality.
pub fn enumerate_bases(m: &dyn Matroid, budget: &EnumerationBudget) -> Result<Vec<Vec<ElementId>>> {
    let ground = m.ground();
    if ground.len() > budget.max_ground {
        return Err(exceeded("ground-set size", ground.len(), budget.max_ground));
    }
    let r = rank(m);
    let bases: Vec<Vec<ElementId>> = ground
        .iter()
        .copied()
        .combinations(r)
        .filter(|c| m.is_independent(c))
        .collect();
    if bases.len() > budget.max_solutions {
        return Err(exceeded("basis count", bases.len(), budget.max_solutions));
    }
    Ok(bases)
}

/// A brute-force optimum: the set, its size, and the solution it certifies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteOptimum {
    pub size: usize,
    pub set: Vec<usize>,
    pub witness: Vec<usize>,
    pub witness_index: usize,
}

fn sorted_sets(solutions: &[Vec<usize>]) -> Vec<Vec<usize>> {
    solutions
        .iter()
        .map(|s| {
            let mut s = s.clone();
            s.sort_unstable();
            s
        })
        .collect()
}

fn contains_all(big: &[usize], small: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.by_ref().any(|y| y == x))
}

fn disjoint(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

/// Minimum forcing set for the solution family: the smallest S contained in
/// exactly one solution. Sizes ascend; within a size the lexicographically
/// least set wins.
pub fn brute_min_forcing(solutions: &[Vec<usize>], budget: &EnumerationBudget) -> Result<BruteOptimum> {
    forcing_search(solutions, None, budget)
}

/// [`brute_min_forcing`] restricted to subsets of `solutions[witness]`.
pub fn brute_min_forcing_for(
    solutions: &[Vec<usize>],
    witness: usize,
    budget: &EnumerationBudget,
) -> Result<BruteOptimum> {
    forcing_search(solutions, Some(witness), budget)
}

fn forcing_search(
    solutions: &[Vec<usize>],
    witness: Option<usize>,
    budget: &EnumerationBudget,
) -> Result<BruteOptimum> {
    if solutions.is_empty() {
        return Err(Error::NoSolutions);
    }
    let sets = sorted_sets(solutions);
    let max_k = sets.iter().map(Vec::len).max().unwrap_or(0);
    let mut work = 0u64;
    for k in 0..=max_k {
        let mut best: Option<(Vec<usize>, usize)> = None;
        for (xi, x) in sets.iter().enumerate() {
            if witness.is_some_and(|w| w != xi) || x.len() < k {
                continue;
            }
            for candidate in x.iter().copied().combinations(k) {
                work += sets.len() as u64;
                if work > budget.work_limit {
                    return Err(Error::ResourceLimit("forcing subset search too large".into()));
                }
                if best.as_ref().is_some_and(|(b, _)| *b <= candidate) {
                    continue;
                }
                let containers = sets.iter().filter(|x2| contains_all(x2, &candidate)).count();
                let unique = match witness {
                    None => containers == 1,
                    // For a pinned witness the unique container must be it.
                    Some(_) => containers == 1 && contains_all(x, &candidate),
                };
                if unique {
                    best = Some((candidate, xi));
                }
            }
        }
        if let Some((set, xi)) = best {
            return Ok(BruteOptimum {
                size: set.len(),
                set,
                witness: solutions[xi].clone(),
                witness_index: xi,
            });
        }
    }
    Err(Error::NoSolutions)
}

/// Minimum anti-forcing set: the smallest S disjoint from exactly one
/// solution (subsets of `universe` minus the candidate witness).
pub fn brute_min_antiforcing(
    solutions: &[Vec<usize>],
    universe: &[usize],
    budget: &EnumerationBudget,
) -> Result<BruteOptimum> {
    antiforcing_search(solutions, universe, None, budget)
}

/// [`brute_min_antiforcing`] restricted to sets whose certified solution is
/// `solutions[witness]`.
pub fn brute_min_antiforcing_for(
    solutions: &[Vec<usize>],
    universe: &[usize],
    witness: usize,
    budget: &EnumerationBudget,
) -> Result<BruteOptimum> {
    antiforcing_search(solutions, universe, Some(witness), budget)
}

fn antiforcing_search(
    solutions: &[Vec<usize>],
    universe: &[usize],
    witness: Option<usize>,
    budget: &EnumerationBudget,
) -> Result<BruteOptimum> {
    if solutions.is_empty() {
        return Err(Error::NoSolutions);
    }
    let sets = sorted_sets(solutions);
    let mut universe = universe.to_vec();
    universe.sort_unstable();
    universe.dedup();
    let max_k = universe.len();
    let mut work = 0u64;
    for k in 0..=max_k {
        let mut best: Option<(Vec<usize>, usize)> = None;
        for (xi, x) in sets.iter().enumerate() {
            if witness.is_some_and(|w| w != xi) {
                continue;
            }
            let pool: Vec<usize> = universe.iter().copied().filter(|e| !x.contains(e)).collect();
            if pool.len() < k {
                continue;
            }
            for candidate in pool.iter().copied().combinations(k) {
                work += sets.len() as u64;
                if work > budget.work_limit {
                    return Err(Error::ResourceLimit("anti-forcing subset search too large".into()));
                }
                if best.as_ref().is_some_and(|(b, _)| *b <= candidate) {
                    continue;
                }
                let avoiders = sets.iter().filter(|x2| disjoint(x2, &candidate)).count();
                if avoiders == 1 {
                    best = Some((candidate, xi));
                }
            }
        }
        if let Some((set, xi)) = best {
            return Ok(BruteOptimum {
                size: set.len(),
                set,
                witness: solutions[xi].clone(),
                witness_index: xi,
            });
        }
    }
    Err(Error::NoSolutions)
}
