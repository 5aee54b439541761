use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// A flag value that failed to parse or is out of range.
    #[error("{flag}: {message}")]
    BadArgument { flag: &'static str, message: String },
    #[error(transparent)]
    Core(#[from] betatau_core::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
    /// Raised after output is written, when `--strict` is set.
    #[error("{0} result(s) left unresolved")]
    Unresolved(usize),
}

impl CliError {
    pub fn bad(flag: &'static str, message: impl std::fmt::Display) -> Self {
        CliError::BadArgument {
            flag,
            message: message.to_string(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::BadArgument { .. } | CliError::Core(_) => 2,
            CliError::Io(_) => 1,
            CliError::Unresolved(_) => 3,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
