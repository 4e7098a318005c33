//! Potential families, parameter maps, and the reduction to primed coefficients.
//!
//! Both families are quadratic-plus-inverse-square shapes on ρ > 0:
//!
//! ```text
//! pseudoharmonic    V(ρ) = A ρ² + B/ρ² + C       (A > 0, B ≥ 0)
//! modified Kratzer  V(ρ) = A/ρ  + B/ρ² + C       (B ≥ 0; bound states need A < 0)
//! ```
//!
//! The molecular parameterization writes the same shapes through a dissociation
//! energy D_e and an equilibrium separation ρ_e:
//!
//! ```text
//! pseudoharmonic    V(ρ) = D_e (ρ/ρ_e − ρ_e/ρ)²   ⇒  A = D_e/ρ_e², B = D_e ρ_e², C = −2D_e
//! modified Kratzer  V(ρ) = D_e ((ρ − ρ_e)/ρ)²     ⇒  A = −2D_e ρ_e, B = D_e ρ_e², C = D_e
//! ```
//!
//! (The Kratzer cross term carries the binomial 2: expanding the square gives
//! D_e − 2D_e ρ_e/ρ + D_e ρ_e²/ρ². A widely copied single-factor variant
//! −D_e ρ_e breaks both V(ρ_e) = 0 and the equivalence with the squared form,
//! so it is not used here.)
//!
//! Downstream algebra works in "primed" coefficients X' = (2μ/ħ²)·X, which turn
//! the radial equation into coefficient form R″ + [E′ − V′(ρ) − (m²−¼)/ρ²]R = 0.
//!
//! `B = 0` is admitted for both families as a documented extension beyond the
//! strictly molecular case: it produces the 2D harmonic-oscillator and 2D
//! Coulomb limits that anchor the test suite.

use std::fmt;

use crate::error::{Error, Result};

/// Which of the two solvable families a [`PotentialSpec`] belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// V(ρ) = Aρ² + B/ρ² + C.
    Pseudoharmonic,
    /// V(ρ) = A/ρ + B/ρ² + C.
    Kratzer,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Pseudoharmonic => write!(f, "pseudoharmonic"),
            Family::Kratzer => write!(f, "kratzer"),
        }
    }
}

/// Reduced mass μ and ħ; fixes the scale 2μ/ħ² used by the primed reduction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalContext {
    mu: f64,
    hbar: f64,
}

impl PhysicalContext {
    /// Requires μ > 0 and ħ > 0 (finite).
    pub fn new(mu: f64, hbar: f64) -> Result<Self> {
        if !(mu.is_finite() && mu > 0.0) {
            return Err(Error::invalid("mu", mu, "must be finite and > 0"));
        }
        if !(hbar.is_finite() && hbar > 0.0) {
            return Err(Error::invalid("hbar", hbar, "must be finite and > 0"));
        }
        Ok(Self { mu, hbar })
    }

    /// Natural units μ = ħ = 1, the default everywhere in the tests.
    pub fn natural() -> Self {
        Self { mu: 1.0, hbar: 1.0 }
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// 2μ/ħ² — multiplies energies/coefficients into primed (inverse length²) form.
    pub fn primed_scale(&self) -> f64 {
        2.0 * self.mu / (self.hbar * self.hbar)
    }
}

impl Default for PhysicalContext {
    fn default() -> Self {
        Self::natural()
    }
}

/// Molecular parameterization: dissociation energy and equilibrium separation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MolecularParams {
    de: f64,
    rho_e: f64,
}

impl MolecularParams {
    /// Requires D_e > 0 and ρ_e > 0 (finite).
    pub fn new(de: f64, rho_e: f64) -> Result<Self> {
        if !(de.is_finite() && de > 0.0) {
            return Err(Error::invalid("De", de, "must be finite and > 0"));
        }
        if !(rho_e.is_finite() && rho_e > 0.0) {
            return Err(Error::invalid("rho_e", rho_e, "must be finite and > 0"));
        }
        Ok(Self { de, rho_e })
    }

    pub fn de(&self) -> f64 {
        self.de
    }

    pub fn rho_e(&self) -> f64 {
        self.rho_e
    }
}

/// Primed coefficients X′ = (2μ/ħ²)·X of a [`PotentialSpec`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedCoefficients {
    /// A′ = 2μA/ħ².
    pub a_p: f64,
    /// B′ = 2μB/ħ².
    pub b_p: f64,
    /// C′ = 2μC/ħ².
    pub c_p: f64,
}

/// A potential family together with its algebraic coefficients (A, B, C).
///
/// The coefficients are the canonical representation; the molecular
/// constructors are conveniences that map (D_e, ρ_e) onto them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialSpec {
    family: Family,
    a: f64,
    b: f64,
    c: f64,
}

impl PotentialSpec {
    /// Builds a spec, enforcing the per-family coefficient ranges.
    ///
    /// Pseudoharmonic needs A > 0 (confinement) and B ≥ 0. Kratzer needs
    /// B ≥ 0; A may have either sign at construction time — the bound-state
    /// requirement A < 0 is checked where a spectrum is actually demanded, so
    /// that a repulsive tail surfaces as a no-bound-state error rather than a
    /// construction failure.
    pub fn new(family: Family, a: f64, b: f64, c: f64) -> Result<Self> {
        for (name, value) in [("A", a), ("B", b), ("C", c)] {
            if !value.is_finite() {
                return Err(Error::invalid(name, value, "must be finite"));
            }
        }
        if family == Family::Pseudoharmonic && a <= 0.0 {
            return Err(Error::invalid(
                "A",
                a,
                "pseudoharmonic confinement requires A > 0",
            ));
        }
        if b < 0.0 {
            return Err(Error::invalid(
                "B",
                b,
                "inverse-square strength requires B >= 0",
            ));
        }
        Ok(Self { family, a, b, c })
    }

    /// Pseudoharmonic spec from molecular parameters:
    /// A = D_e/ρ_e², B = D_e ρ_e², C = −2D_e.
    pub fn pseudoharmonic_from_molecular(mp: &MolecularParams) -> Self {
        Self {
            family: Family::Pseudoharmonic,
            a: mp.de / (mp.rho_e * mp.rho_e),
            b: mp.de * mp.rho_e * mp.rho_e,
            c: -2.0 * mp.de,
        }
    }

    /// Kratzer spec from molecular parameters, expanding D_e((ρ−ρ_e)/ρ)²:
    /// A = −2D_e ρ_e, B = D_e ρ_e², C = D_e.
    pub fn kratzer_from_molecular(mp: &MolecularParams) -> Self {
        Self {
            family: Family::Kratzer,
            a: -2.0 * mp.de * mp.rho_e,
            b: mp.de * mp.rho_e * mp.rho_e,
            c: mp.de,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// Pointwise potential value V(ρ); both families are singular at ρ = 0,
    /// so ρ must be strictly positive.
    pub fn evaluate(&self, rho: f64) -> Result<f64> {
        if !(rho.is_finite() && rho > 0.0) {
            return Err(Error::NonPositiveRho { rho });
        }
        let inv_sq = self.b / (rho * rho);
        Ok(match self.family {
            Family::Pseudoharmonic => self.a * rho * rho + inv_sq + self.c,
            Family::Kratzer => self.a / rho + inv_sq + self.c,
        })
    }

    /// Primed coefficients (every coefficient multiplied by 2μ/ħ²).
    pub fn reduce(&self, ctx: &PhysicalContext) -> ReducedCoefficients {
        let k = ctx.primed_scale();
        ReducedCoefficients {
            a_p: k * self.a,
            b_p: k * self.b,
            c_p: k * self.c,
        }
    }
}
