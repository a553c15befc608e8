//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Input outside the mathematical domain of an operation
    /// (gamma pole, focal-line frame, invalid mode index, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A special-function evaluation converged, but not to the requested
    /// tolerance. Carries the achieved relative error estimate.
    #[error("accuracy target not met: achieved {achieved:.3e}, requested {requested:.3e}")]
    Accuracy { achieved: f64, requested: f64 },

    /// A windowed integral failed its internal convergence check.
    #[error("quadrature did not converge: {0}")]
    Quadrature(String),

    /// Invalid run configuration (CLI layer).
    #[error("invalid configuration: {0}")]
    Config(String),

    /// A NaN or infinity appeared where a finite value is required.
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
