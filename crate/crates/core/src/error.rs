use thiserror::Error;

/// Errors raised by graph construction, solvers, checks and parsers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Malformed or out-of-range input data.
    #[error("invalid input: {0}")]
    Input(String),

    /// An operation was called on the wrong kind of object.
    #[error("usage error: {0}")]
    Usage(String),

    /// The graph does not satisfy an operation's structural requirement.
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// A size or magnitude guard was exceeded.
    #[error("out of range: {0}")]
    Range(String),

    #[error("no convergence after {iterations} iterations (last residual {residual:e})")]
    Convergence { iterations: usize, residual: f64 },

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("graph generation failed: {0}")]
    Generation(String),

    /// Parse failure with a 1-based location.
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code used by the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) => 1,
            Error::Convergence { .. } | Error::Numerical(_) => 3,
            _ => 2,
        }
    }
}
