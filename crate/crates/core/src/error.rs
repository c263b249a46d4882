use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={n}")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("invalid edge ({u}, {v}): {reason}")]
    InvalidEdge {
        u: usize,
        v: usize,
        reason: &'static str,
    },

    #[error("edge ({u}, {v}) has weight {weight}; weights must be at least 1")]
    BadWeight { u: usize, v: usize, weight: u64 },

    /// Some pair of vertices has no connecting path, so the Wiener index is undefined.
    #[error("graph is disconnected; the Wiener index is undefined")]
    DisconnectedGraph,

    #[error("cactus input is not connected")]
    NotConnected,

    /// A biconnected block has more edges than vertices.
    #[error("not a cactus: block on {vertices} vertices has {edges} edges (contains vertices {sample:?})")]
    NotCactus {
        vertices: usize,
        edges: usize,
        sample: Vec<usize>,
    },

    #[error("integer overflow while accumulating distances")]
    Overflow,

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("distance rows do not cover every source 1..={n} exactly once")]
    IncompleteRows { n: usize },

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("generation failed: {0}")]
    GenerationFailed(String),

    #[error("cannot convert a {from} document to {to}")]
    UnsupportedConversion { from: String, to: String },
}

impl Error {
    pub(crate) fn invalid(reason: impl Into<String>) -> Self {
        Error::InvalidRepresentation(reason.into())
    }
}
