use thiserror::Error;

/// Errors produced by graph construction, parsing, and walk evolution.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("graph order {n} outside the supported graph6 range (max {max})")]
    Graph6Range { n: usize, max: usize },

    #[error("edge list parse error at line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("invalid edge ({u}, {v}) for a simple graph on {n} vertices: {reason}")]
    InvalidEdge {
        u: u32,
        v: u32,
        n: usize,
        reason: &'static str,
    },

    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("permutation of length {got} applied to {expected} vertices")]
    PermutationLength { expected: usize, got: usize },

    #[error("not a permutation: value {value} {reason}")]
    NotAPermutation { value: u32, reason: &'static str },

    #[error("graph has no edges; the walk state space is empty")]
    Edgeless,

    #[error("coin is not unitary on blocks of size {degree}")]
    NonUnitaryCoin { degree: usize },

    #[error("phase mask sized for {expected_nodes} nodes / {expected_slots} slots, got {got_nodes} / {got_slots}")]
    MaskSize {
        expected_nodes: usize,
        expected_slots: usize,
        got_nodes: usize,
        got_slots: usize,
    },

    #[error("trace lengths differ: {a} vs {b}")]
    TraceLength { a: usize, b: usize },

    #[error("probability {value} outside [0, 1]")]
    ProbabilityRange { value: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
