use thiserror::Error;

use crate::partition::Partition;

pub type Result<T, E = KronError> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KronError {
    #[error("invalid partition syntax {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("parts must be weakly decreasing positive integers, got {0:?}")]
    NotAPartition(Vec<u32>),

    #[error("size mismatch: {what} ({left} vs {right})")]
    SizeMismatch {
        what: &'static str,
        left: usize,
        right: usize,
    },

    #[error("partition {partition} does not fit in a {rows}x{cols} frame")]
    DoesNotFit {
        partition: Partition,
        rows: usize,
        cols: usize,
    },

    #[error("partition {0} is not self-conjugate")]
    NotSelfConjugate(Partition),

    #[error("{op} is undefined outside its validity domain: {detail}")]
    OutOfDomain { op: &'static str, detail: String },

    #[error("{op} for m = {m} exceeds the desk-scale budget; pass the budget override to run it anyway")]
    BudgetExceeded { op: &'static str, m: u32 },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl KronError {
    pub(crate) fn domain(op: &'static str, detail: impl Into<String>) -> Self {
        KronError::OutOfDomain {
            op,
            detail: detail.into(),
        }
    }

    /// True for errors that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, KronError::Internal(_))
    }
}
