use thiserror::Error;

use crate::parse::ParseError;

/// Process exit statuses.
pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_NEGATIVE: u8 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] qsymq::Error),
    #[error("{0}")]
    Usage(String),
    #[error("malformed record: {0}")]
    Record(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) | CliError::Record(_) => EXIT_PARSE,
            _ => EXIT_USAGE,
        }
    }

    pub(crate) fn io(path: impl Into<String>) -> impl FnOnce(std::io::Error) -> CliError {
        let path = path.into();
        move |source| CliError::Io { path, source }
    }
}
