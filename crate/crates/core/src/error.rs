use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("no convergence in {what}: {detail}")]
    NonConvergence { what: &'static str, detail: String },

    #[error("tail bound violated in {what}: integrand {observed:e} exceeds envelope {bound:e} at {at}")]
    TailBoundFailure {
        what: &'static str,
        at: f64,
        observed: f64,
        bound: f64,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole: {0}")]
    Pole(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("output error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn no_convergence(what: &'static str, detail: impl Into<String>) -> Self {
        Error::NonConvergence {
            what,
            detail: detail.into(),
        }
    }

    /// True for errors that stem from a truncated series or integral rather
    /// than a bad argument.
    pub fn is_convergence_failure(&self) -> bool {
        matches!(
            self,
            Error::NonConvergence { .. } | Error::TailBoundFailure { .. }
        )
    }
}
