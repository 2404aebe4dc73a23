use std::fmt;

use epsmult_core::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at {0}")]
    Parse(ParseError),
    #[error("{context}: {source}")]
    Core { context: String, source: CoreError },
    #[error("{0}")]
    Usage(String),
    #[error("io error on {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub fn core(context: impl Into<String>, source: CoreError) -> Self {
        CliError::Core { context: context.into(), source }
    }

    pub fn status(&self) -> ExitStatus {
        match self {
            CliError::Parse(_) => ExitStatus::ParseError,
            CliError::Core { source, .. } => match source.root() {
                CoreError::Inconclusive { .. } | CoreError::SequenceTooShort { .. } => ExitStatus::Inconclusive,
                _ => ExitStatus::Precondition,
            },
            CliError::Usage(_) => ExitStatus::Precondition,
            CliError::Io { .. } => ExitStatus::Failure,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success,
    Failure,
    Inconclusive,
    Precondition,
    ParseError,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        match self {
            ExitStatus::Success => 0,
            ExitStatus::Failure => 1,
            ExitStatus::Inconclusive => 2,
            ExitStatus::Precondition => 3,
            ExitStatus::ParseError => 4,
        }
    }
}
