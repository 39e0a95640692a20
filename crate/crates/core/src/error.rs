use thiserror::Error;

/// Errors produced by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// The alpha-exponential kernel was evaluated at its singular point.
    #[error("alpha-exponential kernel is singular at t = 0 for alpha = {alpha}")]
    Singularity { alpha: f64 },
    /// Malformed or inconsistent input data.
    #[error("invalid input: {0}")]
    Input(String),
    /// A user supplied function produced a non-finite value during time marching.
    #[error("non-finite value at step {step}: {what}")]
    NonFinite { step: usize, what: String },
    /// A closed-form bound was requested while the contraction condition fails.
    #[error("contraction condition violated: {0}")]
    ConditionViolated(String),
    /// Expression syntax error.
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
