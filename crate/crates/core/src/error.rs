use thiserror::Error;

/// Errors raised by the walk models, special functions and quadrature.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error in {op}: {reason}")]
    Domain { op: &'static str, reason: String },

    #[error("quadrature did not converge: estimate {estimate:e}, error estimate {error:e} after {evaluations} evaluations")]
    Convergence {
        estimate: f64,
        error: f64,
        evaluations: usize,
    },

    #[error("problem size too large for {op}: {reason}")]
    Size { op: &'static str, reason: String },
}

impl Error {
    pub(crate) fn domain(op: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            op,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
