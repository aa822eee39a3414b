use thiserror::Error;

/// Errors raised by the metric, oracle, generator and experiment layers.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("labeling must contain at least one sample")]
    EmptyInput,
    #[error("labeling length mismatch: left={left}, right={right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("marginal count at index {index} must be positive")]
    InvalidMarginal { index: usize },
    #[error("contingency table is inconsistent: {0}")]
    InvalidTable(String),
    #[error("n={n} exceeds the enumeration bound {bound}")]
    TooLarge { n: usize, bound: usize },
    #[error("block size {s} must lie in [1, {n}]")]
    InvalidSize { n: usize, s: usize },
    #[error("cluster count {k} must lie in [1, {n}]")]
    InvalidK { n: usize, k: usize },
    #[error("rank correlation is undefined for constant input")]
    DegenerateInput,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
