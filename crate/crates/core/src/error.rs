use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a tree: {0}")]
    NotATree(String),

    #[error("vertex {vertex} is outside 1..={n}")]
    BadVertex { vertex: usize, n: usize },

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("edge ({0}, {1}) is not in the tree")]
    EdgeNotInTree(usize, usize),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("invalid degree sequence: {0}")]
    InvalidDegreeSequence(String),

    #[error("composition parts sum to {got}, expected {expected}")]
    CompositionSumMismatch { expected: usize, got: usize },

    #[error("result is not integral: {0}")]
    NonIntegralResult(String),

    #[error("{what} = {requested} exceeds the enumeration cap of {cap}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
