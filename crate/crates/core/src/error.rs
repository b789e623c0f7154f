use crate::VertexId;
use thiserror::Error;

/// Everything that can go wrong across graph construction, probing, interval
/// bookkeeping, and edge-list I/O.
///
/// `DuplicateProbe`, `SelfProbe`, and `NotPresent` signal caller bugs (the
/// probing algorithms are built so they can never happen), not recoverable
/// conditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {v} out of range 1..={n}")]
    OutOfRange { v: VertexId, n: u32 },

    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(VertexId, VertexId),

    #[error("pair ({0}, {1}) probed twice")]
    DuplicateProbe(VertexId, VertexId),

    #[error("self-probe at vertex {0}")]
    SelfProbe(VertexId),

    #[error("destination {0} not in interval set")]
    NotPresent(VertexId),

    #[error("no destinations remain")]
    Exhausted,

    #[error("k={k} outside 1..={n}")]
    InvalidK { k: u32, n: u32 },

    #[error("line {line}: expected two integer labels, got {content:?}")]
    MalformedLine { line: usize, content: String },

    #[error("edge list contains no edges")]
    EmptyInput,

    #[error("degree sequence not realizable as a simple graph")]
    Ungraphable,

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
