use thiserror::Error;

pub type Result<T, E = XosError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum XosError {
    #[error("ground set size {0} outside [1, 63]")]
    GroundSize(usize),

    #[error("subset {bits:#x} has members outside a ground set of size {n}")]
    SubsetOutOfRange { bits: u64, n: usize },

    #[error("arithmetic overflow while evaluating a set function")]
    Overflow,

    #[error("representation must have at least one component")]
    EmptyRepresentation,

    #[error("component {row} has {len} weights, expected {n}")]
    RaggedWeights { row: usize, len: usize, n: usize },

    #[error("component index {index} out of range for width {width}")]
    ComponentIndex { index: usize, width: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("brute force over n = {n} elements exceeds the cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("malformed instance: {0}")]
    Instance(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl XosError {
    pub(crate) fn params(msg: impl Into<String>) -> Self {
        XosError::InvalidParams(msg.into())
    }
}
