use crate::family::Family;
use thiserror::Error;

/// Errors produced by group arithmetic, enumeration, and root-system search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group spec: {0}")]
    SpecInvalid(String),

    #[error("invalid window: {0}")]
    WindowInvalid(String),

    #[error("operands belong to different group specs")]
    SpecMismatch,

    #[error("letter {0} is not in the generator alphabet")]
    LetterOutOfAlphabet(i64),

    #[error("position {0} is frozen")]
    FrozenPosition(i64),

    #[error("operation requires family A or B, got {0}")]
    FamilyMismatch(Family),

    #[error("reduced-word cap of {0} exceeded")]
    CapExceeded(usize),

    #[error("element budget of {0} exceeded")]
    BudgetExceeded(usize),

    #[error("root horizon {horizon} cannot certify optimality (need {needed})")]
    InsufficientRootHorizon { horizon: i64, needed: i64 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
