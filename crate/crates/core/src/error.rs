use thiserror::Error;

use crate::gl2z::Mat2;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("matrix {0} is not unimodular")]
    NotUnimodular(Mat2),

    #[error("centralizer of {0} is not a finite set handled here")]
    UnsupportedOrder(Mat2),

    #[error("parameters do not give an integral matrix: {0}")]
    Integrality(String),

    #[error("gcd({p}, {q}) must be 1")]
    Gcd { p: i64, q: i64 },

    #[error("bad row parameters: {0}")]
    BadParams(String),

    #[error("pair does not define a brace: {0}")]
    InvalidSpec(String),
}
