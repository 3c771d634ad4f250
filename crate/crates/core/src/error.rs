use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph order must be at least 1")]
    EmptyGraph,
    #[error("graph order {order} exceeds the cap of {cap}")]
    OrderTooLarge { order: usize, cap: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("graph is disconnected; distances are undefined")]
    Disconnected,
    #[error("invalid vertex partition: {0}")]
    InvalidPartition(String),
    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("matrix is not symmetric (deviation {deviation:e} exceeds {tolerance:e})")]
    NotSymmetric { deviation: f64, tolerance: f64 },
    #[error("matrix entry ({row}, {col}) = {value} is negative")]
    NegativeEntry { row: usize, col: usize, value: f64 },
    #[error("{method} did not converge within {iterations} iterations")]
    NoConvergence { method: &'static str, iterations: usize },
    #[error("power iteration gives {power} but the characteristic polynomial gives {polynomial}")]
    PerronMismatch { power: f64, polynomial: f64 },
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("polynomial has no real root")]
    NoRealRoot,
    #[error("integer overflow while assembling polynomial coefficients")]
    Overflow,
    #[error("exhaustive scan over {size} vertices exceeds the cap of {cap}; use the matching algorithms instead")]
    ScanCapExceeded { size: usize, cap: usize },
    #[error("no connected sample after {attempts} attempts; edge probability is too small")]
    AttemptsExhausted { attempts: usize },
    #[error("config error: {0}")]
    Config(String),
}
