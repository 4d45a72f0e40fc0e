use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by model evaluation, discretization and the eigen engine.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter, grid or evaluator output outside its admissible domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// An iterative method exhausted its budget. `partial` holds whatever
    /// eigenvalues had already deflated.
    #[error("no convergence after {iterations} iterations ({} of {size} eigenvalues found)", .partial.len())]
    Convergence {
        iterations: usize,
        size: usize,
        partial: Vec<Complex64>,
    },

    #[error("matrix dimension {size} exceeds the configured cap {cap}")]
    Capacity { size: usize, cap: usize },

    /// Spinor reconstruction divides by the energy, so it is undefined for zero modes.
    #[error("energy magnitude {0:e} is below the zero-mode threshold")]
    ZeroMode(f64),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
