use thiserror::Error;

use crate::algebra::Weight;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("weight {0} is not dominant (need λ(h2) a positive integer, or λ = 0)")]
    NotDominant(Weight),
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("evaluation parameters must be pairwise distinct")]
    RepeatedParameter,
    #[error("module is not cyclic on the given vector: span has dimension {span} of {dim}")]
    NotCyclic { span: usize, dim: usize },
    #[error("expected a one-dimensional space of singular vectors of weight {weight}, found {found}")]
    SingularVector { weight: Weight, found: usize },
    #[error("character division left a nonzero remainder")]
    InexactDivision,
    #[error("{0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
