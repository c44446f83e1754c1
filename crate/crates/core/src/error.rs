use thiserror::Error;

use crate::superdim::SuperDim;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("superdimension subtraction underflow: {lhs} - {rhs}")]
    DimUnderflow { lhs: SuperDim, rhs: SuperDim },
    #[error("element index {index} out of range for algebra of dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("unknown basis name `{0}`")]
    UnknownName(String),
    #[error("duplicate basis name `{0}`")]
    DuplicateName(String),
    #[error("invalid scalar literal `{0}`")]
    BadScalar(String),
    #[error("invalid expression: {0}")]
    BadExpression(String),
    #[error("subspace is not a graded ideal: {0}")]
    NotAnIdeal(String),
    #[error("subspace is not graded")]
    NotGraded,
    #[error("algebra is not nilpotent (lower central series stabilises at dimension {0})")]
    NotNilpotent(SuperDim),
    #[error("algebra is not a Heisenberg superalgebra")]
    NotHeisenberg,
    #[error("ideal is not central")]
    NotCentral,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("degree {degree} exceeds truncation bound {max}")]
    DegreeOverflow { degree: usize, max: usize },
    #[error("malformed algebra JSON: {0}")]
    Json(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
