use sunseq_core::Error as CoreError;

use crate::definition::DefinitionError;

/// Exit status of a run.
pub const EXIT_HELD: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Definition(#[from] DefinitionError),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    /// A comparison the user asked for came out false.
    #[error("{0}")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch(_) | CliError::Core(CoreError::InterlacingViolated { .. }) => {
                EXIT_REFUTED
            }
            _ => EXIT_USAGE,
        }
    }
}
