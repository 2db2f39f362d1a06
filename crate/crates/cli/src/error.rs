use thiserror::Error;

/// Failures of a command, each mapped to a process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable or malformed input.
    #[error("input error: {0}")]
    Input(String),
    /// Well-formed input that the command cannot handle.
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("cannot write output: {0}")]
    Output(String),
    /// An exact check that should hold for every valid input did not.
    #[error("internal check failed: {0}")]
    Violation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Precondition(_) | CliError::Output(_) => 2,
            CliError::Violation(_) => 3,
        }
    }
}
