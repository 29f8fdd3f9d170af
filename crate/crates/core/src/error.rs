use thiserror::Error;

use crate::field::Field;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("ambient ring mismatch: {0}")]
    AmbientMismatch(String),
    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("window too small: upper bound must be at least {required}")]
    WindowTooSmall { required: i64 },
    #[error("tail below the window is not certified for index {index}")]
    UncertifiedTail { index: usize },
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("not a Groebner basis: {0}")]
    NotGroebner(String),
    #[error("invalid simplicial complex: {0}")]
    InvalidComplex(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
