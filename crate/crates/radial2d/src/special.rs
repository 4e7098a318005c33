//! Gamma-function access for normalization constants.
//!
//! The closed-form norms are ratios like α^{s+1}/Γ(s+1) with irrational s, so
//! we need Γ and ln Γ at non-integer arguments. `libm` ships the musl ports of
//! `tgamma`/`lgamma`, accurate to a few ulp over the range used here
//! (arguments up to a few hundred); the tests pin both against independently
//! computed references.

/// Γ(x) for x > 0. Production code works with ln Γ to dodge overflow; the
/// direct form exists for the test suite's independent cross-evaluations.
#[cfg(test)]
pub(crate) fn gamma(x: f64) -> f64 {
    libm::tgamma(x)
}

/// ln Γ(x) for x > 0.
pub(crate) fn ln_gamma(x: f64) -> f64 {
    libm::lgamma(x)
}
