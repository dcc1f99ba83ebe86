use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("invalid path order k = {k}: {reason}")]
    InvalidK { k: usize, reason: &'static str },
    #[error("instance too large: n = {n} exceeds the cap {cap} for {what}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },
    #[error("input graph is not a forest")]
    NotAForest,
    #[error("input graph is not chordal")]
    NotChordal,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("feasible-pair constraint violated: {0}")]
    PairConstraint(String),
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("malformed decomposition: {0}")]
    MalformedDecomposition(String),
    #[error("internal invariant broken: {0}")]
    Internal(String),
}
