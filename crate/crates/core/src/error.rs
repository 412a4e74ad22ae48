use crate::eulerian::EulerClassification;

/// Errors produced by graph construction, parsing, and the Eulerian
/// classification / counting operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An edge names an endpoint outside the dense vertex range `0..n`.
    #[error("edge ({tail}, {head}) is out of range for a graph on {n} vertices")]
    EndpointOutOfRange { tail: usize, head: usize, n: usize },

    /// Malformed text-format input.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The graph has no edges, so Eulerian classification is undefined.
    #[error("trivial graph: no edges to classify")]
    TrivialGraph,

    /// An operation required a circuit-Eulerian graph.
    #[error("graph is not circuit-Eulerian ({0})")]
    NotCircuitEulerian(EulerClassification),

    /// An operation required a path-Eulerian graph.
    #[error("graph is not path-Eulerian ({0})")]
    NotPathEulerian(EulerClassification),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An edge-id sequence does not form the trail shape an operation expects.
    #[error("malformed trail: {0}")]
    MalformedTrail(String),

    /// The graph exceeds the exhaustive-enumeration guard.
    #[error("graph has {m} edges, above the enumeration limit {limit}; use the determinant-based counter")]
    TooLarge { m: usize, limit: usize },

    /// The enumeration and determinant counting routes disagreed. This is a
    /// bug in one of them, never a property of the input.
    #[error("counting methods disagree: enumeration found {enumerated}, determinant route found {best}")]
    CountMismatch { enumerated: String, best: String },

    /// Exhaustive search over the candidate space is only feasible for tiny n.
    #[error("exhaustive search is supported only for n <= 3 (requested n = {0})")]
    ExhaustiveTooLarge(usize),
}
