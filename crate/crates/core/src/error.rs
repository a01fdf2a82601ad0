use thiserror::Error;

/// Errors raised by the numerical kernels and the identity registry.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{op}: argument outside domain ({detail})")]
    Domain { op: &'static str, detail: String },

    #[error("{op} did not converge: {detail}")]
    Convergence { op: &'static str, detail: String },

    #[error("divergent series: {0}")]
    Divergence(String),

    #[error("integrand returned a non-finite value at x = {x:e}")]
    NonFiniteSample { x: f64 },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("invalid parameters for {id}: {detail}")]
    InvalidParams { id: String, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            op,
            detail: detail.into(),
        }
    }

    pub(crate) fn convergence(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Convergence {
            op,
            detail: detail.into(),
        }
    }
}
