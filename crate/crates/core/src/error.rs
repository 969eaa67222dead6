use thiserror::Error;

/// Errors produced by graph construction, the metric engine, the solvers and
/// the prediction checks.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex index {index} out of range for a graph of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("invalid order for {what}: {detail}")]
    InvalidOrder { what: &'static str, detail: String },

    #[error("family has {got} graphs but the base graph has {expected} vertices")]
    FamilySizeMismatch { expected: usize, got: usize },

    #[error("gadget parameter k must be odd and at least 3, got {0}")]
    InvalidK(usize),

    #[error("input graph must be connected")]
    DisconnectedInput,

    #[error("radius {radius} exceeds the allowed maximum {max}")]
    RadiusOutOfRange { radius: usize, max: usize },

    #[error("vertex set is empty")]
    EmptyVertexSet,

    #[error("the given set is not a ({k},{t})-metric generator (pair {x},{y} fails)")]
    NotAGenerator {
        k: usize,
        t: usize,
        x: usize,
        y: usize,
    },

    #[error("the given set is not a ({k},{t})-metric basis: {reason}")]
    NotABasis { k: usize, t: usize, reason: String },

    #[error("a distinguishing set needs two different vertices, got {0} twice")]
    EqualVertices(usize),

    #[error("the query needs a graph of order at least 2")]
    TooSmall,

    #[error("truncation level must be a positive integer")]
    InvalidTruncation,

    #[error("the multiplicity k must be at least 1")]
    ZeroMultiplicity,

    #[error("brute force is limited to {limit} vertices, graph has {order}")]
    OracleLimitExceeded { order: usize, limit: usize },

    #[error("inputs do not satisfy the preconditions: {0}")]
    InapplicableInputs(String),

    #[error("vertex set universe {got} does not match graph order {expected}")]
    UniverseMismatch { expected: usize, got: usize },

    #[error("({u},{v}) is not a free pair of the family")]
    NotAFreePair { u: usize, v: usize },

    #[error("invalid labels: {0}")]
    InvalidLabels(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: duplicate edge ({u},{v})")]
    DuplicateEdge { line: usize, u: usize, v: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
