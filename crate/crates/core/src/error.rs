use thiserror::Error;

use crate::path::Marker;

/// Errors raised by the library.
///
/// Check failures (a structure equation that does not hold, a higraph axiom
/// that is violated) are reported through dedicated report types, not here.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid vertex name {0:?}")]
    InvalidVertexName(String),
    #[error("vertex {0} is declared twice")]
    DuplicateVertex(String),
    #[error("REFERENCE: vertex {0} is not declared")]
    UndeclaredVertex(String),
    #[error("edge {0} is listed twice")]
    DuplicateEdge(String),
    #[error("{0} vertices exceed the supported maximum of 64")]
    TooManyVertices(usize),
    #[error("NOT_ADJACENT: edges do not meet in exactly one vertex")]
    NotAdjacent,
    #[error("NOT_BALANCED: the vertex assignment fails on edge {0}")]
    NotBalanced(String),
    #[error("UNKNOWN_CATALOG: {0}")]
    UnknownCatalog(String),
    #[error("a path needs at least one node")]
    EmptyPath,
    #[error("arrows do not form a directed tree on the nodes")]
    NotATree,
    #[error("EMPTY_INTERSECTION: arrow {0} joins edges without a shared vertex")]
    EmptyIntersection(usize),
    #[error("AMBIGUOUS_INTERSECTION: edges meet in more than one vertex")]
    AmbiguousIntersection,
    #[error("DUPLICATE_BREAK: arrows {0} and {1} share an endpoint and a break vertex")]
    DuplicateBreak(usize, usize),
    #[error("NOT_COMPOSABLE: target and source do not meet")]
    NotComposable,
    #[error("ENDS_MISMATCH: replacement has different source or target")]
    EndsMismatch,
    #[error("subtree is empty or disconnected")]
    BadSubtree,
    #[error("marker {0} does not exist on the path")]
    NoSuchMarker(Marker),
    #[error("EDGE_NOT_IN_BIGRAPH: {0}")]
    EdgeNotInBigraph(String),
    #[error("NOT_TREE_LIKE: some edge has more than one outgoing end")]
    NotTreeLike,
    #[error("INVALID_MARKER: no gluing move applies at {0}")]
    InvalidMarker(Marker),
    #[error("X_IN_CONTRACTED_ARROWS: {0} is contracted by the first move")]
    InContractedArrows(Marker),
    #[error("NOT_COMPLETELY_VALID: entry ({row}, {col}) is undefined or invalid")]
    NotCompletelyValid { row: usize, col: usize },
    #[error("SHAPE: every edge must have one source and one target vertex")]
    Shape,
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
