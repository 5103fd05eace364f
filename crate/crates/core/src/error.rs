use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("graph is not a tree")]
    NotATree,
    #[error("{what}: {value} exceeds the supported bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        bound: usize,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid caterpillar sequence {0:?}: {1}")]
    InvalidSequence(Vec<usize>, &'static str),
    #[error("size {size} out of range {min}..={max}")]
    SizeOutOfRange { size: usize, min: usize, max: usize },
    #[error("malformed leaf function: {0}")]
    MalformedLeafFunction(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
