use thiserror::Error;

use crate::graph::Vertex;

/// Errors raised while building or querying a [`Graph`](crate::Graph).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("graph is disconnected: no path between {u} and {v}")]
    Disconnected { u: Vertex, v: Vertex },
    #[error("more than {cap} geodesics between {u} and {v}")]
    GeodesicOverflow { u: Vertex, v: Vertex, cap: usize },
    #[error("graph on {n} vertices exceeds the limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("graph is not a tree")]
    NotATree,
}

/// graph6 decoding failures. Offsets are byte positions in the input line.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("invalid byte {byte:#04x} at offset {offset}")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("truncated input at offset {offset}: expected {expected} bytes")]
    Truncated { offset: usize, expected: usize },
    #[error("unexpected trailing data at offset {offset}")]
    TrailingData { offset: usize },
    #[error("non-zero padding bits in byte at offset {offset}")]
    NonZeroPadding { offset: usize },
    #[error("graph6 graphs must have at least one vertex")]
    NoVertices,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Family spec parsing and validation failures.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unknown family `{0}`")]
    Unknown(String),
    #[error("malformed family spec `{0}`: expected name:params")]
    Malformed(String),
    #[error("family `{family}`: {constraint}")]
    Parameter { family: String, constraint: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Reasons a proposed certificate is rejected.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateError {
    #[error("the vertex set is empty")]
    EmptySet,
    #[error("vertex {0} appears twice in the set")]
    DuplicateVertex(Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("path endpoints {a},{b} are not a pair of the set")]
    ForeignPair { a: Vertex, b: Vertex },
    #[error("pair {a},{b} has more than one path")]
    DuplicatePair { a: Vertex, b: Vertex },
    #[error("pair {a},{b} has no path")]
    MissingPair { a: Vertex, b: Vertex },
    #[error("path for pair {a},{b} is not a geodesic")]
    NotAGeodesic { a: Vertex, b: Vertex },
    #[error("vertices not covered: {0:?}")]
    Uncovered(Vec<Vertex>),
}

/// Solver failures. Budget exhaustion is not an error; it is reported as an
/// indeterminate outcome.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Certificate(#[from] CertificateError),
    #[error("a strong geodetic set needs at least {min} vertices here, got {got}")]
    SetTooSmall { min: usize, got: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
}

/// Failures of the theorem constructions.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("construction failed verification: {0}")]
    Verification(#[from] CertificateError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solve(SolveError),
    #[error("solver budget exhausted while checking hypotheses")]
    Budget,
}

impl From<SolveError> for ConstructionError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::Certificate(c) => ConstructionError::Verification(c),
            SolveError::Graph(g) => ConstructionError::Graph(g),
            other => ConstructionError::Solve(other),
        }
    }
}
