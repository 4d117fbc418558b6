use thiserror::Error;

use crate::partitions::Cell;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("cell {cell} lies outside {shape}")]
    CellOutside { cell: Cell, shape: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("not symmetric: {0}")]
    NotSymmetric(String),

    /// The input does not lie in the span of the Q-functions.
    #[error("not in the Q-function ring: {0}")]
    NotInGamma(String),

    /// Two routes that must agree did not. Always a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
