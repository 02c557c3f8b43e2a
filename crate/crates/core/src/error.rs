use crate::tensor::ClassTag;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("{tag} expects {expected} parameters, got {got}")]
    ParameterCount {
        tag: ClassTag,
        expected: usize,
        got: usize,
    },

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error(
        "matrix is not symmetric: max deviation {deviation:e} exceeds tolerance {tolerance:e}"
    )]
    Asymmetric { deviation: f64, tolerance: f64 },

    #[error("degenerate input: {0}")]
    Degenerate(&'static str),

    #[error("domain error: {0}")]
    Domain(&'static str),

    #[error("no closed form for symmetry class {0}")]
    UnsupportedClass(ClassTag),

    #[error("wrong symmetry class: expected {expected}, got {got}")]
    WrongClass { expected: ClassTag, got: ClassTag },

    #[error("invalid solver configuration: {0}")]
    Config(&'static str),

    #[error("numerical failure: {0}")]
    Numeric(&'static str),
}
