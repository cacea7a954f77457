use thiserror::Error;

use crate::graphcore::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("edge ({src}, {dst}) has weight {weight}; input weights must be at least 1")]
    InvalidWeight {
        src: VertexId,
        dst: VertexId,
        weight: u64,
    },
    #[error("n * W * n overflows 64-bit distances (n = {n}, W = {max_weight})")]
    DistanceOverflow { n: usize, max_weight: u64 },
    #[error("epsilon must lie in (0, 1], got {0}")]
    InvalidEpsilon(f64),
    #[error("tree with {0} vertices is too small to split (need at least 7)")]
    TreeTooSmall(usize),
    #[error("vertex {0} is not on the source-centroid path")]
    NotOnPath(VertexId),
    #[error("the source vertex cannot fail")]
    SourceFault,
    #[error("unknown distance provider `{0}` (expected `exact` or `fast`)")]
    UnknownProvider(String),
    #[error("dyadic prefix cover needs 1 <= b <= p, got b = {b}, p = {p}")]
    InvalidPrefix { b: usize, p: usize },
    #[error("not an oracle file (bad magic)")]
    BadMagic,
    #[error("unsupported oracle format version {0}")]
    UnsupportedVersion(u16),
    #[error("oracle stream truncated")]
    Truncated,
    #[error("corrupt oracle stream: {0}")]
    Corrupt(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("declared {declared} arcs but found {found}")]
    ArcCountMismatch { declared: usize, found: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
