use thiserror::Error;

use crate::graph::MAX_ORDER;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {0} exceeds the supported maximum of {MAX_ORDER}")]
    TooLarge(usize),
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("adjacency is not symmetric between {0} and {1}")]
    Asymmetric(usize, usize),
    #[error("not a permutation")]
    InvalidPermutation,
}

/// Failure to read a graph from text. Offsets are byte offsets into the
/// input line (graph6) or 1-based token positions (edge lists).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("graph6 order byte at offset {offset} encodes n = {n}, above {MAX_ORDER}")]
    OrderTooLarge { offset: usize, n: usize },
    #[error("graph6 data has {found} bytes after the order byte, expected {expected} (offset {offset})")]
    BadLength {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("graph6 padding bits are not zero in the byte at offset {offset}")]
    NonZeroPadding { offset: usize },
    #[error("token {token} ({text:?}) is not a non-negative integer")]
    BadToken { token: usize, text: String },
    #[error("edge list ends in the middle of an edge")]
    DanglingEndpoint,
    #[error("vertex label {label} at token {token} is outside 1..={n}")]
    LabelOutOfRange { token: usize, label: usize, n: usize },
    #[error("self-loop on vertex {label} at token {token}")]
    SelfLoop { token: usize, label: usize },
    #[error("edge list declares n = {0}, above {MAX_ORDER}")]
    DeclaredOrderTooLarge(usize),
}
