use thiserror::Error;

use crate::partitions::Partition;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not a partition: {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("({inner}) is not contained in ({outer})")]
    NotContained { outer: Partition, inner: Partition },
    #[error("({partition}) is not in the ({p},{q})-hook")]
    NotInHook { partition: Partition, p: usize, q: usize },
    #[error("({partition}) has more than {max} rows")]
    TooManyRows { partition: Partition, max: usize },
    #[error("invalid dimensions: {0}")]
    Dimensions(String),
    #[error("index out of range: {0}")]
    Index(String),
    #[error("invalid tableau: {0}")]
    Tableau(String),
    #[error("leading monomial of the zero polynomial")]
    ZeroPolynomial,
    #[error("not homogeneous: {first} and {second} have different weights")]
    NotHomogeneous { first: String, second: String },
    #[error("column does not fit any admissible pattern: {0}")]
    ColumnPattern(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
