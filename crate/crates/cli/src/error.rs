use pmas_core::{Coalition, Error};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{source_name}:{line}:{column}: {message}")]
    Parse {
        source_name: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{players} players exceed the limit of {limit}")]
    Size { players: usize, limit: usize },
    #[error("the point is not in the core: coalition {violated} can improve")]
    NotInCore { violated: Coalition },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } => 2,
            CliError::Size { .. } => 3,
            CliError::NotInCore { .. } => 4,
            CliError::Io { .. } | CliError::Usage(_) | CliError::Core(_) => 5,
        }
    }

    pub fn parse(
        source_name: &str,
        line: usize,
        column: usize,
        message: impl Into<String>,
    ) -> Self {
        CliError::Parse {
            source_name: source_name.to_string(),
            line,
            column,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::TooManyPlayers { players, limit } => CliError::Size { players, limit },
            Error::NotInCore { violated } => CliError::NotInCore { violated },
            other => CliError::Core(other),
        }
    }
}
