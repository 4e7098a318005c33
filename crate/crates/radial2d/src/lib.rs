//! Bound states of the two-dimensional radial Schrödinger equation.
//!
//! For a particle of reduced mass μ moving in a circularly symmetric potential
//! V(ρ), writing the wavefunction as ψ(ρ, φ) = ρ^{−1/2} R_m(ρ) e^{±imφ}
//! reduces the 2D Schrödinger equation to the radial form
//!
//! ```text
//! R_m''(ρ) + [ (2μ/ħ²)(E − V(ρ)) − (m² − 1/4)/ρ² ] R_m(ρ) = 0 .
//! ```
//!
//! Two potential families admit closed-form ground solutions per angular
//! momentum m through a polynomial-times-exponential ansatz:
//!
//! * **pseudoharmonic**: V(ρ) = Aρ² + B/ρ² + C (harmonic plus inverse square),
//! * **modified Kratzer**: V(ρ) = A/ρ + B/ρ² + C (Coulomb-like plus inverse
//!   square, shifted).
//!
//! The crate is organized as three modules:
//!
//! * [`potentials`] — the families, molecular ↔ algebraic parameter maps,
//!   pointwise evaluation, and the reduction to "primed" coefficients
//!   (multiplied by 2μ/ħ²);
//! * [`ansatz`] — coefficient matching that yields the exponents (a, b), the
//!   closed-form energy, and normalized wavefunction evaluators;
//! * [`oracle`] — an independent numerical cross-check: a finite-difference
//!   discretization whose lowest eigenvalue is found by guaranteed Sturm
//!   bisection, plus adaptive Gauss–Legendre normalization integrals and a
//!   pointwise residual scan of the radial equation.
//!
//! Everything is a pure function over immutable values; all types are `Send`
//! and `Sync` and safe to use from concurrent verification jobs.

pub mod ansatz;
pub mod error;
pub mod oracle;
pub mod potentials;

mod special;

pub use ansatz::{AngularMomentum, AnsatzSolution, RadialEvaluator};
pub use error::{Error, Result};
pub use oracle::{OracleReport, RadialGrid, TridiagonalOperator};
pub use potentials::{Family, MolecularParams, PhysicalContext, PotentialSpec, ReducedCoefficients};
