use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("parts must be weakly decreasing: {0}")]
    Monotonicity(String),
    #[error("strict partition has a repeated part: {0}")]
    Strictness(String),
    #[error("{what} does not fit in {space}")]
    OutOfBounds { what: String, space: String },
    #[error("{inner} is not contained in {outer}")]
    NotContained { inner: String, outer: String },
    #[error("operation requires a non-empty shape")]
    EmptyShape,
    #[error("shape is not a rim")]
    NotARim,
    #[error("h(a, b) requires a >= 0, got a = {0}")]
    NegativeA(i64),
    #[error("{0}")]
    WrongSpace(String),
    #[error("wrong diagram kind: {0}")]
    WrongDiagramKind(String),
    #[error("special class index {p} outside 0..={max}")]
    OutOfRangeP { p: i64, max: u32 },
    #[error("content size must be non-negative, got {0}")]
    NegativeContent(i64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
