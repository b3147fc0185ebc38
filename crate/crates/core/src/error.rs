use thiserror::Error;

/// Errors raised by graph and algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graphs are limited to {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("edge {{{0}, {1}}} is not in the graph")]
    MissingEdge(usize, usize),

    #[error("malformed partition: {0}")]
    MalformedPartition(String),

    #[error("partition of {got} elements applied to a graph on {expected} vertices")]
    PartitionSizeMismatch { expected: usize, got: usize },

    #[error("graph must be connected")]
    NotConnected,

    #[error("graph must have at least {0} vertices")]
    TooSmall(usize),

    #[error("partition is not admissible for the graph")]
    NotAdmissible,

    #[error("partitions are not comparable in the refinement order")]
    NotComparable,

    #[error("character is not invertible: its value on the single vertex is zero")]
    NotInvertible,

    #[error("word is not packed: {0:?}")]
    NotPacked(Vec<usize>),

    #[error("{0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
