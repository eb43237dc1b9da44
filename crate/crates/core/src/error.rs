use thiserror::Error;

/// Errors raised by the quadrature, correction and detection routines.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on an argument was violated (divisibility of `n`,
    /// breakpoint outside the interval, too few nodes, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The requested computation is not supported by the supplied inputs,
    /// e.g. a missing derivative evaluator or an unknown built-in name.
    #[error("configuration error: {0}")]
    Configuration(String),

    /// The sampled data shows no clear isolated discontinuity.
    #[error("no clear discontinuity (confidence {confidence:.3} below threshold {threshold})")]
    NoClearDiscontinuity { confidence: f64, threshold: f64 },

    /// The reference integrator did not converge.
    #[error("oracle failure: {0}")]
    OracleFailure(String),

    /// A piecewise-polynomial file could not be parsed or validated.
    #[error("malformed piecewise function file: {0}")]
    MalformedFile(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// True for errors caused by bad user input rather than a numerical failure.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::InvalidArgument(_) | Error::Configuration(_) | Error::MalformedFile(_)
        )
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Configuration(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
