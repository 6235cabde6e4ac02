use num_bigint::BigUint;
use thiserror::Error;

/// Errors raised by the exact-arithmetic kernel and the constructions built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("cannot mix elements of Q(sqrt{left}) and Q(sqrt{right})")]
    MixedRadicand { left: u32, right: u32 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("value is not positive")]
    NotPositive,

    /// The value is one of the contraction's fixed points, i.e. a tree root.
    #[error("value is the root with index {0}")]
    IsRoot(usize),

    #[error("no root reached within {0} parent steps")]
    BoundExceeded(usize),

    #[error("zero denominator while folding term {position}")]
    ZeroDenominator { position: usize },

    #[error("chain did not reach C(1,0) within {0} circles")]
    NoTermination(usize),

    #[error("closed form left a nonzero irrational component: {0}")]
    NonRealResult(String),

    #[error("expansion failed: {0}")]
    ExpansionFailed(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("index {0} out of range")]
    IndexOutOfRange(BigUint),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
