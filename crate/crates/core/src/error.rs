use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A constructor or operation received a parameter outside its domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Two grid densities were combined but live on different grids.
    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    /// A downstream analyzer failed on one data set of a collection.
    #[error("analyzer failed on data set {index}: {source}")]
    Analyzer {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    /// The variance correction produced a non-positive value.
    #[error("correction infeasible; increase m or n*")]
    CorrectionInfeasible,

    /// An iterative routine ran out of iterations.
    #[error("no convergence: {0}")]
    NoConvergence(String),

    /// A sampler finished with unusable diagnostics (e.g. acceptance
    /// collapse). The message carries the per-chain numbers.
    #[error("sampler diagnostics: {0}")]
    Sampler(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
