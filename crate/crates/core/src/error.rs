use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("vector is not in the rational span of the configuration")]
    OutsideSpan,
    #[error("vector is not in the rational span of face {face:?}")]
    NotInFaceSpan { face: Vec<usize> },
    #[error("face {face:?} has codimension {codim}, expected 1")]
    NotCodimOne { face: Vec<usize>, codim: usize },
    #[error("column set {0:?} is not a face")]
    NotAFace(Vec<usize>),
    #[error("computation limit exceeded in {what} (budget {limit})")]
    LimitExceeded { what: &'static str, limit: u64 },
    #[error("unsupported request: {0}")]
    Unsupported(String),
    #[error("class order {order} exceeds bound {bound}")]
    OrderExceedsBound { order: String, bound: u64 },
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}
