//! Minimum forcing and anti-forcing sets for shortest s-t paths in weighted
//! digraphs and for minimum-weight bases of matroids (minimum spanning trees
//! as the key special case), with brute-force oracles for validation.
//!
//! A *forcing set* pins down a unique optimal solution by inclusion: it is a
//! subset of one solution contained in no other. An *anti-forcing set* pins a
//! solution down by exclusion: it is disjoint from exactly one solution.

pub mod basis_forcing;
pub mod error;
mod exec;
pub mod format;
pub mod graph;
pub mod matroid;
pub mod maxflow;
pub mod mst;
pub mod oracle;
pub mod sp_antiforcing;
pub mod sp_forcing;
pub mod spdag;
pub mod vc_reduction;

pub use basis_forcing::{
    antiforcing_for_basis, forcing_for_basis, min_antiforcing_min_bases, min_forcing_min_bases,
    BasisForcingResult, ElementWeights, WeightClassTrace,
};
pub use error::{Error, Result};
pub use graph::{EdgeId, VertexId, WeightedDigraph, WeightedMultigraph};
pub use matroid::{
    contract, dual, explicit_matroid, graphic_matroid, restrict, uniform_matroid, Matroid,
    MatroidRef,
};
pub use mst::{bridges, mst_antiforcing, mst_forcing};
pub use sp_antiforcing::{
    is_antiforcing_set, min_antiforcing_set_exact, min_antiforcing_set_for_path, ExactLimits,
    ExactOutcome,
};
pub use sp_forcing::{
    is_forcing_set_for_path, min_forcing_set, min_forcing_set_for_path, ForcingResult,
};
pub use spdag::{build_sp_dag, build_sp_dag_undirected, distance_labels, PathClass, SpDag};
