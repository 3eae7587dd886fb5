use thiserror::Error;

use crate::descent::DescentViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),

    #[error("element `{element}` is not a member of the {role}")]
    UnknownElement { element: String, role: &'static str },

    #[error("map is not total: no image for `{0}`")]
    NotTotal(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("square does not commute at `{element}`: `{via_top}` vs `{via_left}`")]
    NotCommuting {
        element: String,
        via_top: String,
        via_left: String,
    },

    #[error("square is not a pullback")]
    NotAPullback,

    #[error("square is not a pushout")]
    NotAPushout,

    #[error("invalid descent data: {0}")]
    InvalidDescent(DescentViolation),

    #[error("pullback square has no unique fiber partner for `{0}`")]
    NotUnique(String),

    #[error("base mismatch: {0}")]
    BaseMismatch(String),

    #[error("malformed span: {0}")]
    MalformedSpan(String),

    #[error("not a domain cycle: {0}")]
    NotADomainCycle(String),

    #[error("invalid alternating sequence: {0}")]
    InvalidSequence(String),

    #[error("not a graph homomorphism: {0}")]
    NotGraphHom(String),

    #[error("induced source/target on the amalgamated graph is ill defined at `{0}`")]
    ComponentMismatch(String),

    #[error("invalid search budget: {0}")]
    InvalidBudget(String),

    #[error("search budget exceeded")]
    BudgetExceeded,

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
