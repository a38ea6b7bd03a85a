use thiserror::Error;

/// Crate-wide error type. Variants map onto the CLI exit-code contract:
/// everything except [`Error::ResourceLimit`] is an input error.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex {0} out of range 1..={1}")]
    VertexOutOfRange(usize, usize),

    #[error("edge {0} out of range 1..={1}")]
    EdgeOutOfRange(usize, usize),

    #[error("element {0} out of range for ground set of size {1}")]
    ElementOutOfRange(usize, usize),

    #[error("shortest-path input requires strictly positive weights, got {weight} on edge {edge}")]
    NonpositiveWeight { edge: usize, weight: i64 },

    #[error("weight magnitude {0} exceeds the format limit 10^9")]
    WeightTooLarge(i64),

    #[error("path problem requires a terminal line `t <s> <t>`")]
    MissingTerminals,

    #[error("terminal {0} is unreachable from the source")]
    TargetUnreachable(usize),

    #[error("graph is disconnected; no spanning tree exists")]
    Disconnected,

    #[error("edge sequence is not an s-t path of the DAG: {0}")]
    NotAPath(String),

    #[error("set is not a subset of the path's edges")]
    SetNotOnPath,

    #[error("not a basis: {0}")]
    NotABasis(String),

    #[error("basis is not of minimum weight ({got} > optimum {optimum})")]
    NotMinimumWeight { got: i64, optimum: i64 },

    #[error("not a matroid: {0}")]
    AxiomViolation(String),

    #[error("rank {rank} out of range 0..={ground}")]
    RankOutOfRange { rank: usize, ground: usize },

    #[error("cover budget k={k} out of range 0..={n}")]
    CoverBudgetOutOfRange { k: usize, n: usize },

    #[error("input graph must be simple (no self-loops or parallel edges)")]
    NotSimple,

    #[error("cover of size {size} exceeds the budget k={k}")]
    CoverTooLarge { size: usize, k: usize },

    #[error("set of size {0} is not a vertex cover: edge {{{1}, {2}}} uncovered")]
    NotAVertexCover(usize, usize, usize),

    #[error("set is not an anti-forcing set: {0} solutions avoid it")]
    NotAntiForcing(usize),

    #[error("anti-forcing set of size {size} exceeds the reduction bound N={bound}")]
    AntiForcingTooLarge { size: usize, bound: usize },

    #[error("augmenting path with infinite capacity; malformed cut reduction")]
    InfiniteCapacityPath,

    #[error("solution family is empty")]
    NoSolutions,

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
}

pub type Result<T> = std::result::Result<T, Error>;
