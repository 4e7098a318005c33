//! Error type shared across the toolkit.

use thiserror::Error;

/// Everything that can go wrong constructing inputs or running the oracle.
#[derive(Debug, Clone, PartialEq, Error)]
#[non_exhaustive]
pub enum Error {
    /// A constructor argument violated its documented range.
    #[error("invalid {name} = {value}: {requirement}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        requirement: &'static str,
    },

    /// Potentials and wavefunctions live on the open half-line ρ > 0.
    #[error("rho = {rho} is outside the domain rho > 0")]
    NonPositiveRho { rho: f64 },

    /// A Kratzer spectrum needs A < 0; a ≥ 0 would make exp(aρ) blow up.
    #[error("no bound state: Kratzer coefficient A = {a_coefficient} must be negative")]
    NoBoundState { a_coefficient: f64 },

    /// Eigenvalue bisection exhausted its iteration budget before the bracket
    /// shrank to the requested tolerance.
    #[error(
        "eigenvalue bisection stalled after {iterations} iterations: \
         bracket [{lower:e}, {upper:e}] wider than tol {tol:e}"
    )]
    Convergence {
        iterations: u32,
        lower: f64,
        upper: f64,
        tol: f64,
    },

    /// The integrator could not certify the requested absolute accuracy.
    #[error("quadrature accuracy {achieved:e} exceeds the required bound {required:e}")]
    Accuracy { achieved: f64, required: f64 },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Helper for finite, range-checked constructor arguments.
    pub(crate) fn invalid(name: &'static str, value: f64, requirement: &'static str) -> Self {
        Error::InvalidParameter {
            name,
            value,
            requirement,
        }
    }
}
