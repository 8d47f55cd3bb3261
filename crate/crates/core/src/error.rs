use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("edge {0:?} repeats a vertex")]
    DegenerateEdge([usize; 3]),
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("input of order {n} exceeds the supported cap of {cap}")]
    SizeLimitExceeded { n: usize, cap: usize },
    #[error("need at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("operation needs two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("classes lie in different parts")]
    CrossPartClasses,
    #[error("source and target class coincide")]
    SameClass,
    #[error("class id {0} does not exist")]
    UnknownClass(usize),
    #[error("graph is not locally symmetrized: {0}")]
    NotLocallySymmetrized(String),
    #[error("malformed path: {0}")]
    MalformedPath(String),
    #[error("partition covers {got} vertices but the graph has {expected}")]
    PartitionMismatch { expected: usize, got: usize },
    #[error("invalid part label {0} (expected 1, 2 or 3)")]
    InvalidPart(usize),
    #[error("unknown edge family {0:?}")]
    UnknownFamily(String),
    #[error("pair {0:?} does not lie inside one part")]
    EdgeNotInternal([usize; 2]),
    #[error("pair {0:?} does not cross two parts")]
    EdgeNotCrossing([usize; 2]),
    #[error("pair {0:?} is not in the shadow")]
    EdgeNotInShadow([usize; 2]),
    #[error("pair {pair:?} does not match the requested phase {phase}")]
    EdgePhaseMismatch { pair: [usize; 2], phase: u8 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
