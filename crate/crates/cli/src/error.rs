use mcmrep_core::Error;
use thiserror::Error as ThisError;

use crate::commands::Output;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("syntax error: {0}")]
    Syntax(String),
    /// The command ran and its answer is negative; the report is still produced.
    #[error("check failed")]
    Rejected(Output),
    #[error(transparent)]
    Core(Error),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(m) => CliError::Internal(m),
            e => CliError::Core(e),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::BudgetExceeded { .. }) => EXIT_BUDGET,
            CliError::Internal(_) => EXIT_INTERNAL,
            _ => EXIT_INVALID,
        }
    }
}
