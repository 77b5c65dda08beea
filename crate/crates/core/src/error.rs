use crate::model::Objective;
use crate::rational::Rational;

/// Errors shared by the evaluators, solvers and generators.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("alpha {alpha} outside the {domain} domain of {criterion}")]
    AlphaOutOfRange {
        alpha: Rational,
        criterion: &'static str,
        domain: &'static str,
    },
    #[error("problem too large: {what} exceeds cap {cap}")]
    TooLarge { what: &'static str, cap: u64 },
    #[error("objective {found:?} not supported, expected {expected}")]
    WrongObjective { expected: &'static str, found: Objective },
    #[error("all processing times must equal 1 in every scenario")]
    NotUnitTime,
    #[error("precedence constraints are not supported by this solver")]
    HasPrecedence,
    #[error("processing times, due dates and weights must be integers")]
    NonIntegerData,
    #[error("LP solve failed: {0}")]
    LpFailure(String),
    #[error("degenerate formula: {0}")]
    DegenerateFormula(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
