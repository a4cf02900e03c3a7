use thiserror::Error;

use crate::graph::Edge;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex count {0} outside supported range 1..=64")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge {0} is not present in the graph")]
    MissingEdge(Edge),
    #[error("deleting every vertex leaves an empty graph")]
    EmptyResult,
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("subdivision count {count} at branch {index} is odd")]
    OddSubdivisionCount { index: usize, count: usize },
    #[error("edge {0} does not cross the bipartition")]
    NonBipartiteEdge(Edge),
    #[error("invalid stability parameters n={n}, k={k}, l={l}: need n > k > l >= 0")]
    StabilityParameters { n: usize, k: usize, l: usize },
    #[error("vertex set is not independent")]
    NotIndependent,
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// A construction the proofs guarantee has failed. Always a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error("enumeration range {0}")]
    Range(String),
    #[error("atlas line {line}: {reason}")]
    Atlas { line: usize, reason: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
