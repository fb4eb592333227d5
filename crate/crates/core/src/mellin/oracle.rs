//! Quadrature oracles for the closed-form Mellin values.

use num_complex::Complex64;
use serde::Serialize;
use statrs::function::gamma::gamma;

use super::{mellin_digamma, mellin_pole_term, mellin_poly_gaussian, numeric_mellin_finite_part};
use super::{AtomValues, ExpansionTerm, FinitePartConfig};
use crate::error::Result;
use crate::poly::RatPoly;
use crate::quad::{contour_d_eps, integrate_to_infinity, QuadConfig};
use crate::rational::{self, Q};
use crate::special::digamma;

#[derive(Clone, Debug, Serialize)]
pub struct OracleCheck {
    pub label: String,
    pub closed_form: f64,
    pub numeric: f64,
    pub error_bar: f64,
    pub rel_err: f64,
}

impl OracleCheck {
    fn new(label: String, closed_form: f64, numeric: f64, error_bar: f64) -> Self {
        // an exactly vanishing closed form is compared absolutely
        let scale = if closed_form == 0.0 { 1.0 } else { closed_form.abs() };
        let rel_err = (closed_form - numeric).abs() / scale;
        OracleCheck { label, closed_form, numeric, error_bar, rel_err }
    }
}

fn inner_quad() -> QuadConfig {
    QuadConfig { rel_tol: 1e-12, ..QuadConfig::default() }
}

/// e^{-tc²}(1/π)∫_{D_ε} e^{-tz²}/(iz+j) dz on the contour itself.
pub fn pole_integrand(c: f64, j: f64) -> impl Fn(f64) -> f64 + Sync {
    move |t: f64| {
        let g = |z: Complex64| (-t * z * z).exp() / (Complex64::new(0.0, 1.0) * z + j);
        // keep e^{tε²} on the half circle bounded
        let eps = (if j > 0.0 { 0.5 * j.min(1.0) } else { 0.5 }).min(1.0 / t.sqrt());
        let v = contour_d_eps(&g, eps, 1.0 / t.sqrt(), &inner_quad()).value;
        (-t * c * c).exp() * v.re / std::f64::consts::PI
    }
}

/// e^{-tc²}(1/π)∫_R e^{-tλ²}ψ(1+iλ)dλ.
pub fn digamma_integrand(c: f64) -> impl Fn(f64) -> f64 + Sync {
    move |t: f64| (-t * c * c).exp() * digamma_moment(t)
}

fn digamma_moment(t: f64) -> f64 {
    // the imaginary part is odd in λ
    let g = |l: f64| (-t * l * l).exp() * digamma(Complex64::new(1.0, l)).re;
    2.0 * integrate_to_infinity(&g, 0.0, 1.0 / t.sqrt(), &inner_quad()).value / std::f64::consts::PI
}

/// e^{-tc²}∫_R e^{-tλ²}P(iλ)dλ.
pub fn poly_integrand(p: &RatPoly, c: f64) -> impl Fn(f64) -> f64 + Sync {
    let rot = p.rotate_even();
    move |t: f64| {
        let g = |l: f64| (-t * l * l).exp() * rot.eval_f64(l);
        (-t * c * c).exp() * 2.0 * integrate_to_infinity(&g, 0.0, 1.0 / t.sqrt(), &inner_quad()).value
    }
}

/// Exact small-t expansion of [`poly_integrand`] through t^{order}.
pub fn poly_gaussian_expansion(p: &RatPoly, c: f64, order: usize) -> Vec<ExpansionTerm> {
    let mut out: Vec<ExpansionTerm> = Vec::new();
    let deg = p.degree().unwrap_or(0);
    for k in 0..=deg / 2 {
        let pk = rational::to_f64(&p.coeff(2 * k));
        if pk == 0.0 {
            continue;
        }
        // ∫ e^{-tλ²}(iλ)^{2k} dλ = (−1)^k Γ(k+½) t^{−k−½}
        let base = pk * if k % 2 == 0 { 1.0 } else { -1.0 } * gamma(k as f64 + 0.5);
        let mut fac = 1.0;
        for r in 0..=order + k {
            if r > 0 {
                fac *= -c * c / r as f64;
            }
            let e = r as f64 - k as f64 - 0.5;
            match out.iter_mut().find(|t| t.exponent == e) {
                Some(t) => *t = ExpansionTerm::known(e, 0, t.coefficient.unwrap() + base * fac),
                None => out.push(ExpansionTerm::known(e, 0, base * fac)),
            }
        }
    }
    out
}

fn split_for(c: f64) -> f64 {
    (0.5 / (c * c).max(1.0)).min(0.05)
}

/// −2 log(c+j) against the contour integral.
pub fn check_pole_term(c: &Q, j: &Q) -> Result<OracleCheck> {
    let closed = mellin_pole_term(c, j)?.eval(&AtomValues::default())?;
    let (cf, jf) = (rational::to_f64(c), rational::to_f64(j));
    let f = pole_integrand(cf, jf);
    let terms = [ExpansionTerm::unknown(0.0, 0), ExpansionTerm::unknown(0.5, 0)];
    let split = split_for(cf.max(jf));
    let cfg = FinitePartConfig { split, fit_lo: split * 1e-4, extra_terms: 10, ..FinitePartConfig::default() };
    let est = numeric_mellin_finite_part(&f, &terms, &cfg)?;
    Ok(OracleCheck::new(format!("pole c={c} j={j}"), closed, est.value, est.error))
}

/// −2π∫_0^c P against Gaussian quadrature.
pub fn check_poly_gaussian(p: &RatPoly, c: &Q) -> Result<OracleCheck> {
    let closed = mellin_poly_gaussian(p, c)?.eval(&AtomValues::default())?;
    let cf = rational::to_f64(c);
    let f = poly_integrand(p, cf);
    let split = (1.0 / (cf * cf)).min(0.5);
    let terms = poly_gaussian_expansion(p, cf, 40);
    let cfg = FinitePartConfig { split, extra_terms: 0, ..FinitePartConfig::default() };
    let est = numeric_mellin_finite_part(&f, &terms, &cfg)?;
    Ok(OracleCheck::new(format!("poly {p} c={c}"), closed, est.value, est.error))
}

/// C_ψ-free difference of two digamma values against quadrature.
pub fn check_digamma_difference(c1: &Q, c2: &Q) -> Result<OracleCheck> {
    let closed = (&mellin_digamma(c1)? - &mellin_digamma(c2)?).eval(&AtomValues::default())?;
    let (a, b) = (rational::to_f64(c1), rational::to_f64(c2));
    let f = move |t: f64| ((-t * a * a).exp() - (-t * b * b).exp()) * digamma_moment(t);
    let terms = [ExpansionTerm::unknown(0.5, 0), ExpansionTerm::unknown(0.5, 1), ExpansionTerm::unknown(1.0, 0)];
    let cfg = FinitePartConfig { split: split_for(a.max(b)), extra_terms: 8, ..FinitePartConfig::default() };
    let est = numeric_mellin_finite_part(&f, &terms, &cfg)?;
    Ok(OracleCheck::new(format!("digamma c={c1} minus c={c2}"), closed, est.value, est.error))
}
