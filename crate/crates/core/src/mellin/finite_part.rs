//! Numeric d/ds|_0 (M(s)/Γ(s)) for sampled integrands with a known shape of
//! small-t expansion.
//!
//! The integral is split at t_s. Above t_s the integrand is integrated
//! directly (in the variable log t). Below t_s it is replaced by its
//! expansion Σ a t^e log^p t, whose finite part is elementary. Unknown
//! coefficients, plus a few fit-only higher terms, come from a least-squares
//! fit on a log-spaced grid in (0, t_s].

use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::quad::{integrate_to_infinity, QuadConfig};
use crate::special::EULER_GAMMA;

/// a · t^exponent · log(t)^log_power, with a = None meaning "fit it".
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExpansionTerm {
    pub exponent: f64,
    pub log_power: u8,
    pub coefficient: Option<f64>,
}

impl ExpansionTerm {
    pub fn known(exponent: f64, log_power: u8, a: f64) -> Self {
        ExpansionTerm { exponent, log_power, coefficient: Some(a) }
    }
    pub fn unknown(exponent: f64, log_power: u8) -> Self {
        ExpansionTerm { exponent, log_power, coefficient: None }
    }

    fn basis(&self, t: f64) -> f64 {
        let b = t.powf(self.exponent);
        match self.log_power {
            0 => b,
            p => b * t.ln().powi(p as i32),
        }
    }

    /// Finite part of ∫_0^T t^{s-1} t^e log^p t dt contributed to the value.
    fn finite_part(&self, a: f64, big_t: f64) -> Result<f64> {
        let (e, lt) = (self.exponent, big_t.ln());
        Ok(match (self.log_power, e == 0.0) {
            (0, false) => a * big_t.powf(e) / e,
            // a T^s/s = a/s + a log T + …, value B + γA
            (0, true) => a * (lt + EULER_GAMMA),
            (1, false) => a * big_t.powf(e) * (lt / e - 1.0 / (e * e)),
            _ => {
                return Err(Error::Numeric(format!(
                    "expansion term t^{e} log^{} t has no finite part at s = 0",
                    self.log_power
                )))
            }
        })
    }
}

#[derive(Clone, Debug)]
pub struct FinitePartConfig {
    /// t_s: the expansion is used on (0, t_s]
    pub split: f64,
    /// smallest t of the fit grid
    pub fit_lo: f64,
    pub fit_points: usize,
    /// fit-only terms continuing the exponent lattice
    pub extra_terms: usize,
    pub extra_step: f64,
    /// max |fit residual| / max |f| on the grid
    pub residual_tol: f64,
    pub quad: QuadConfig,
}

impl Default for FinitePartConfig {
    fn default() -> Self {
        FinitePartConfig {
            split: 0.05,
            fit_lo: 1e-3,
            fit_points: 48,
            extra_terms: 6,
            extra_step: 0.5,
            residual_tol: 1e-7,
            quad: QuadConfig { rel_tol: 1e-11, ..QuadConfig::default() },
        }
    }
}

#[derive(Clone, Debug)]
pub struct MellinEstimate {
    pub value: f64,
    /// |difference between splits t_s and t_s/2| plus quadrature error
    pub error: f64,
    /// all expansion coefficients used below t_s (given ones included)
    pub coefficients: Vec<(ExpansionTerm, f64)>,
    pub fit_residual: f64,
}

struct Pass {
    value: f64,
    quad_error: f64,
    coefficients: Vec<(ExpansionTerm, f64)>,
    fit_residual: f64,
}

fn model_terms(terms: &[ExpansionTerm], cfg: &FinitePartConfig) -> Vec<ExpansionTerm> {
    let mut out = terms.to_vec();
    let any_unknown = terms.iter().any(|t| t.coefficient.is_none());
    if !any_unknown || cfg.extra_terms == 0 {
        return out;
    }
    let top = terms.iter().map(|t| t.exponent).fold(f64::NEG_INFINITY, f64::max);
    let max_log = terms.iter().map(|t| t.log_power).max().unwrap_or(0);
    for k in 1..=cfg.extra_terms {
        for p in 0..=max_log {
            out.push(ExpansionTerm::unknown(top + cfg.extra_step * k as f64, p));
        }
    }
    out
}

fn one_pass(f: &(dyn Fn(f64) -> f64 + Sync), terms: &[ExpansionTerm], split: f64, cfg: &FinitePartConfig) -> Result<Pass> {
    let model = model_terms(terms, cfg);
    let unknown: Vec<usize> = (0..model.len()).filter(|&i| model[i].coefficient.is_none()).collect();
    let mut coeffs: Vec<f64> = model.iter().map(|t| t.coefficient.unwrap_or(0.0)).collect();
    let mut fit_residual = 0.0;
    if !unknown.is_empty() {
        let npts = cfg.fit_points.max(unknown.len() + 4);
        let lo = cfg.fit_lo.min(split * 0.5);
        let grid: Vec<f64> = (0..npts)
            .map(|i| lo * (split / lo).powf(i as f64 / (npts - 1) as f64))
            .collect();
        let values: Vec<f64> = grid.par_iter().map(|&t| f(t)).collect();
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::Numeric("integrand is not finite on the fit grid".into()));
        }
        let scale = values.iter().fold(0.0f64, |a, v| a.max(v.abs())).max(1e-300);
        let mut a = DMatrix::<f64>::zeros(npts, unknown.len());
        let mut b = DVector::<f64>::zeros(npts);
        for (r, (&t, &v)) in grid.iter().zip(&values).enumerate() {
            let known: f64 = model.iter().zip(&coeffs).filter(|(m, _)| m.coefficient.is_some()).map(|(m, c)| c * m.basis(t)).sum();
            b[r] = v - known;
            for (col, &i) in unknown.iter().enumerate() {
                a[(r, col)] = model[i].basis(t);
            }
        }
        // column equilibration
        let norms: Vec<f64> = (0..unknown.len()).map(|c| a.column(c).norm().max(1e-300)).collect();
        for (c, nrm) in norms.iter().enumerate() {
            a.column_mut(c).scale_mut(1.0 / nrm);
        }
        let svd = a.clone().svd(true, true);
        let x = svd
            .solve(&b, 1e-14)
            .map_err(|e| Error::Numeric(format!("least squares failed: {e}")))?;
        let res = &a * &x - &b;
        fit_residual = res.amax() / scale;
        if fit_residual > cfg.residual_tol {
            return Err(Error::Numeric(format!(
                "small-t fit residual {fit_residual:.3e} exceeds {:.1e}",
                cfg.residual_tol
            )));
        }
        for (col, &i) in unknown.iter().enumerate() {
            coeffs[i] = x[col] / norms[col];
        }
    }
    let mut value = 0.0;
    for (m, &c) in model.iter().zip(&coeffs) {
        value += m.finite_part(c, split)?;
    }
    // ∫_{t_s}^∞ f(t) dt/t with t = t_s e^x
    let g = |x: f64| f(split * x.exp());
    let tail = integrate_to_infinity(&g, 0.0, 1.0, &cfg.quad);
    value += tail.value;
    Ok(Pass {
        value,
        quad_error: tail.error,
        coefficients: model.into_iter().zip(coeffs).collect(),
        fit_residual,
    })
}

/// Finite-part Mellin value at 0 of `f`, given the shape of its small-t
/// expansion. The error bar compares the splits t_s and t_s/2.
pub fn numeric_mellin_finite_part(
    f: &(dyn Fn(f64) -> f64 + Sync),
    small_t: &[ExpansionTerm],
    cfg: &FinitePartConfig,
) -> Result<MellinEstimate> {
    if !(cfg.split > 0.0) {
        return Err(Error::Numeric("split must be positive".into()));
    }
    let a = one_pass(f, small_t, cfg.split, cfg)?;
    let b = one_pass(f, small_t, cfg.split * 0.5, cfg)?;
    Ok(MellinEstimate {
        value: a.value,
        error: (a.value - b.value).abs() + a.quad_error,
        coefficients: a.coefficients,
        fit_residual: a.fit_residual.max(b.fit_residual),
    })
}
