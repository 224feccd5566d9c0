use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid bookmark: {0}")]
    InvalidBookmark(String),
    #[error("history `{key}` is not time-ordered at entry {index}")]
    UnorderedHistory { key: String, index: usize },
    #[error("index {index} out of range 1..={len}")]
    OutOfRange { index: usize, len: usize },
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unknown color")]
    UnknownColor,
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),
    #[error("insufficient data: need at least {needed}, got {got}")]
    InsufficientData { needed: usize, got: usize },
    #[error("value {0} outside [0, 1]")]
    Domain(f64),
}
