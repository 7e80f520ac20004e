use thiserror::Error;

use crate::graph::Partition;

/// Errors raised by the library. Variants that "signal a bug" are reported when a
/// guarantee that the underlying theorem provides did not hold at runtime.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("partition covers {partition} vertices but the graph has {graph}")]
    PartitionMismatch { partition: usize, graph: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("operation requires a simple graph (parallel edges present)")]
    MultigraphUnsupported,
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("source and sink coincide")]
    SameVertex,
    #[error("graph too small: {0}")]
    TooSmall(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("digraph is not strong")]
    NotStrong,
    #[error("digraph is not semicomplete")]
    NotSemicomplete,
    #[error("digraph is not a tournament")]
    NotTournament,
    #[error("start sequence is not a cycle of the digraph")]
    BadStartCycle,
    #[error("exceptional digraph {0}")]
    Exceptional(String),
    #[error("search budget exhausted after {steps} steps")]
    BudgetExhausted { steps: u64 },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("no {k} edge-disjoint spanning trees: {crossing} crossing edges over {} parts", witness.part_count())]
    NoPacking {
        k: usize,
        witness: Partition,
        crossing: usize,
    },
    #[error("arc-connectivity {actual} is below the required {required}")]
    TooWeak { required: usize, actual: usize },
    #[error("no vertex with in- and out-degree {0}")]
    NotFound(usize),
    #[error("vertex {vertex} is unbalanced: in-degree {in_degree}, out-degree {out_degree}")]
    Unbalanced {
        vertex: usize,
        in_degree: usize,
        out_degree: usize,
    },
    #[error("no admissible pairing of the arcs at vertex {0}")]
    NoPairing(usize),
    #[error("bad k: {0}")]
    BadK(String),
    #[error("unknown gallery name {0:?}")]
    UnknownName(String),
    #[error("bad n: {0}")]
    BadN(String),
    #[error("building block rejected: {0}")]
    BuildingBlockRejected(String),
    #[error("host graph is not a {0}T-graph")]
    HostNotKT(usize),
    #[error("instance too large for exhaustive search: {0}")]
    TooLarge(String),
    #[error("no violating vertex found for the given partition")]
    NoViolation,
    #[error("shift index {q} outside 1..{k}")]
    BadShift { q: usize, k: usize },
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("weight matrix invalid: {0}")]
    InvalidMatrix(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
