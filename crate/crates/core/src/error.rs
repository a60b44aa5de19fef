use thiserror::Error;

/// Crate-wide error type.
///
/// `InvalidInput` maps to CLI exit code 2, `Numerical` to exit code 3.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or inadmissible input data (bad polygon, out-of-range
    /// exponent, precondition violation, unparsable file).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// One of the structural hypotheses on the boundary decomposition is
    /// violated; carries the name of the failed hypothesis.
    #[error("hypothesis {hypothesis} violated: {detail}")]
    Hypothesis { hypothesis: &'static str, detail: String },

    /// Solver breakdown or a residual contract that could not be met.
    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical(msg.into())
    }

    /// Process exit code for the CLI: 2 for input errors, 3 for numerical
    /// failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) | Error::Io(_) | Error::Json(_) => 2,
            Error::Hypothesis { .. } | Error::Numerical(_) => 3,
        }
    }
}
