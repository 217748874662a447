use std::fmt;

use crate::model::Rational;
use crate::reductions::ReductionKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("problem has no variables")]
    NoVariables,

    #[error("problem has no functions")]
    NoFunctions,

    /// The payoff matrix is identically zero; every mixed strategy is optimal.
    #[error("trivial game: payoff matrix is zero")]
    TrivialGame,

    #[error("not a strategy: {0}")]
    NotAStrategy(Box<StrategyViolation>),

    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("{m} functions exceed the direct-reduction cap of {cap}")]
    CapExceeded { m: usize, cap: usize },

    #[error("enumeration of {count} candidates exceeds the limit of {limit}")]
    LimitExceeded { count: u128, limit: u128 },

    #[error("certificate kind mismatch: expected {expected:?}, found {found:?}")]
    WrongCertificate {
        expected: ReductionKind,
        found: ReductionKind,
    },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("stage {index} ({kind:?}) failed: {source}")]
    Stage {
        index: usize,
        kind: ReductionKind,
        #[source]
        source: Box<Error>,
    },
}

/// Which strategy condition a candidate point failed, with the witness.
#[derive(Debug, Clone, PartialEq)]
pub enum StrategyViolation {
    NegativeEntry {
        index: usize,
        value: Rational,
    },
    SumNotOne {
        sum: Rational,
    },
    /// A valid probability vector whose Chebyshev value differs from the shift.
    ValueNotShift {
        value: Rational,
        shift: Rational,
    },
    MissingPoint,
}

impl fmt::Display for StrategyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NegativeEntry { index, value } => {
                write!(f, "entry {index} is negative ({value})")
            }
            Self::SumNotOne { sum } => write!(f, "entries sum to {sum}, not 1"),
            Self::ValueNotShift { value, shift } => {
                write!(f, "objective value {value} differs from shift {shift}")
            }
            Self::MissingPoint => write!(f, "solution carries no point"),
        }
    }
}

impl From<StrategyViolation> for Error {
    fn from(v: StrategyViolation) -> Self {
        Error::NotAStrategy(Box::new(v))
    }
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
