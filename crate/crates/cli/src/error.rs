use std::fmt;
use std::path::PathBuf;

use thiserror::Error;

/// Exit codes shared by every command.
pub mod exit {
    pub const FOUND: i32 = 0;
    pub const ABSENT: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const BUDGET: i32 = 3;
}

/// A malformed line in an input file. Line 0 means the file as a whole.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            f.write_str(&self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
    /// A search or construction failed on valid input.
    #[error("{0}")]
    Failed(#[from] fulkerson_core::Error),
    #[error("search budget exhausted: {0}")]
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Io { .. } | CliError::Usage(_) => exit::USAGE,
            CliError::Failed(fulkerson_core::Error::BudgetExhausted) | CliError::Budget(_) => exit::BUDGET,
            CliError::Failed(_) => exit::ABSENT,
        }
    }
}
