use thiserror::Error;

use crate::table::Element;

/// Which of the two operations of a structure an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operation {
    Add,
    Mul,
}

impl std::fmt::Display for Operation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Operation::Add => f.write_str("addition"),
            Operation::Mul => f.write_str("multiplication"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("operation is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(Element, Element, Element),
    #[error("operation has no two-sided identity")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    MissingInverse(Element),
    #[error("subset is empty")]
    EmptySubset,
    #[error("element {0} is not idempotent")]
    NotIdempotent(Element),
    #[error("carrier size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("{0} is not a group")]
    NotAGroup(Operation),
    #[error("structure failed verification: {0}")]
    NotVerified(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("postcondition violated: {0}")]
    PostconditionViolated(String),
    #[error("iota is not bijective")]
    IotaNotBijective,
    #[error("order {order} exceeds the cap {max} for {kind} enumeration")]
    OrderTooLarge {
        kind: String,
        order: usize,
        max: usize,
    },
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
