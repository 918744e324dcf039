use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a partition: {0:?}")]
    InvalidPartition(Vec<usize>),
    #[error("shape mismatch: {left} vs {right}")]
    ShapeMismatch { left: String, right: String },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("index {index} outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("row of length {row} does not fit an alphabet of size {n}")]
    RowTooLong { row: usize, n: usize },
    #[error("k = {k} outside 1..={n}")]
    KOutOfRange { k: usize, n: usize },
    #[error("degree of the zero element is undefined")]
    ZeroElement,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown suite: {0}")]
    UnknownSuite(String),
    #[error("oracle produced a non-proper residue")]
    NonProperResidue,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
