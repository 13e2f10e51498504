use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("uniformity must be at least 2, got {0}")]
    BadUniformity(usize),
    #[error("edge of wrong size: expected {expected} vertices, got {got}")]
    EdgeSize { expected: usize, got: usize },
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {0:?}")]
    DuplicateEdge(Vec<usize>),
    #[error("repeated vertex inside edge {0:?}")]
    RepeatedVertex(Vec<usize>),
    #[error("blow-up multiplicity must be positive (vertex {0})")]
    ZeroMultiplicity(usize),
    #[error("uniformity mismatch: {0} vs {1}")]
    UniformityMismatch(usize, usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("alpha must be at least 1, got {0}")]
    InvalidAlpha(f64),
    #[error("solver failure: {0}")]
    SolverFailure(String),
    #[error("coloring covers {got} vertices, graph has {expected}")]
    PartialColoring { expected: usize, got: usize },
    #[error("color {color} out of range for pattern with {l} colors")]
    ColorOutOfRange { color: usize, l: usize },
    #[error("graph is not colorable by the given pattern")]
    NotColorable,
    #[error("class {0} is empty")]
    EmptyClass(usize),
    #[error("search budget of {0} nodes exhausted")]
    SearchBudget(u64),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
