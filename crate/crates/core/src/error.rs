use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("field error: {0}")]
    Field(String),
    #[error("context mismatch: {0}")]
    Context(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("no solution at degree bound {0}")]
    NoSolution(u32),
    #[error("not liftable: {0}")]
    NotLiftable(String),
    #[error("no regular deformation found (budget exhausted after {0} candidates)")]
    BudgetExhausted(usize),
    #[error("sequence does not extend to a G-admissible module: {0}")]
    DoesNotExtend(String),
    #[error("dual not cyclic at level {0}")]
    NotCyclic(u32),
    #[error("insufficient length: {0}")]
    InsufficientLength(String),
    #[error("internal error: {0}")]
    Internal(String),
}
