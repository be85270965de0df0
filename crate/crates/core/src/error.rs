use thiserror::Error;

use crate::partition::{Cell, Partition};

#[derive(Debug, Error)]
pub enum Error {
    #[error("k must be at least 1")]
    ZeroK,

    #[error("partition {partition} is not {k}-bounded")]
    NotKBounded { partition: Partition, k: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("cell ({}, {}) lies outside the outer shape", .0.row, .0.col)]
    CellOutsideShape(Cell),

    #[error("{partition} is not a member of L^{k}({m},{n})")]
    NotMember {
        partition: Partition,
        m: usize,
        n: usize,
        k: usize,
    },

    #[error("partition of degree {degree} exceeds top rank {top_rank}")]
    DegreeOverflow { degree: usize, top_rank: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("{0} is not prime")]
    NotPrime(usize),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("unsupported export: {0}")]
    UnsupportedFormat(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}
