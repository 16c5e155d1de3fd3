use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("{which} factor is disconnected")]
    DisconnectedFactor { which: Factor },
    #[error("vertex {index} out of range for a graph on {order} vertices")]
    VertexOutOfRange { index: usize, order: usize },
    #[error("vertex set over {found} vertices used with a graph on {expected} vertices")]
    UniverseMismatch { expected: usize, found: usize },
    #[error("distance matrix of order {found} used with a graph on {expected} vertices")]
    MatrixMismatch { expected: usize, found: usize },
    #[error("operation needs at least 2 vertices, graph has {0}")]
    Degenerate(usize),
    #[error("vertex set is empty")]
    EmptySet,
    #[error("graph has {order} vertices, above the brute-force cap of {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("vertex count {0} outside the supported range {1}..={2}")]
    OrderOutOfRange(usize, usize, usize),
    #[error("edge probability {0} is not in [0, 1]")]
    InvalidProbability(f64),
    #[error("generator spec is not in random mode")]
    NotRandomMode,
}

/// Which side of a product a factor sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    First,
    Second,
}

impl core::fmt::Display for Factor {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Factor::First => "first",
            Factor::Second => "second",
        })
    }
}
