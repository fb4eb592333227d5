//! Mellin values at s = 0 for the integrand shapes that occur in the
//! torsion computation, and a numeric finite-part oracle.
//!
//! Convention: the value of t ↦ f(t) is d/ds|_{s=0} (M(s)/Γ(s)) with
//! M(s) = ∫_0^∞ t^{s-1} f(t) dt continued meromorphically. When M is
//! regular at 0 this is M(0).

mod closed_form;
mod finite_part;
pub mod oracle;

pub use closed_form::{ln_q, AtomValues, ClosedForm, Monomial, Transcendental};
pub use finite_part::{numeric_mellin_finite_part, ExpansionTerm, FinitePartConfig, MellinEstimate};

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::poly::RatPoly;
use crate::rational::{q, Q};

/// Value of e^{-tc²}∫_R e^{-tλ²}P(iλ)dλ: −2π∫_0^c P.
pub fn mellin_poly_gaussian(p: &RatPoly, c: &Q) -> Result<ClosedForm> {
    if !p.is_even() {
        return Err(Error::Unsupported("Gaussian Mellin value needs an even polynomial".into()));
    }
    Ok(ClosedForm::rational(p.integral_to(c) * q(-2)).with_pi(1))
}

/// Value of e^{-tc²}(1/π)∫_{D_ε} e^{-tz²}/(iz+j) dz: −2 log(c+j).
pub fn mellin_pole_term(c: &Q, j: &Q) -> Result<ClosedForm> {
    if !c.is_positive() || j.is_negative() {
        return Err(Error::Unsupported(format!("pole term needs c > 0, j >= 0 (c = {c}, j = {j})")));
    }
    Ok(ClosedForm::log(c + j, q(-2)))
}

/// As [`mellin_pole_term`] with c = √radicand.
pub fn mellin_pole_term_sqrt(radicand: &Q, j: &Q) -> Result<ClosedForm> {
    if !radicand.is_positive() || j.is_negative() {
        return Err(Error::Unsupported(format!("pole term needs c² > 0, j >= 0 (c² = {radicand}, j = {j})")));
    }
    Ok(ClosedForm::log_sqrt_plus(radicand.clone(), j.clone(), q(-2)))
}

/// Value of e^{-tc²}(1/π)∫_R e^{-tλ²}ψ(1+iλ)dλ: −2 log Γ(1+c) + C_ψ.
pub fn mellin_digamma(c: &Q) -> Result<ClosedForm> {
    if !c.is_positive() {
        return Err(Error::Unsupported(format!("digamma term needs c > 0 (c = {c})")));
    }
    Ok(&ClosedForm::log_gamma(c + q(1), q(-2)) + &ClosedForm::term(Monomial::of(Transcendental::Cpsi), q(1)))
}
