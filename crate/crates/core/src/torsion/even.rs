//! Φ(λ) for even d: log T_X(τ_λ) = κ(X)Φ(λ), evaluated numerically from the
//! c-function log-derivatives on the contour D_ε.
//!
//! The half circle of D_ε runs through the lower half plane (θ from π to
//! 2π), so the pole of c_ν'/c_ν at 0 lies above the contour.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::Serialize;

use crate::branching;
use crate::cfunc;
use crate::error::{Error, Result};
use crate::liedata::{self, check_weight, RankData, Role, Weight};
use crate::mellin::{numeric_mellin_finite_part, ExpansionTerm, FinitePartConfig};
use crate::quad::{contour_d_eps, QuadConfig};
use crate::rational;

#[derive(Clone, Debug)]
pub struct PhiConfig {
    /// radius of the half circle; must stay below 1/2
    pub eps: f64,
    pub quad: QuadConfig,
    pub finite_part: FinitePartConfig,
}

impl Default for PhiConfig {
    fn default() -> Self {
        PhiConfig {
            eps: 0.25,
            // the line and arc pieces cancel heavily, so a pure relative
            // tolerance is never met
            quad: QuadConfig { rel_tol: 1e-12, abs_tol: 1e-14, ..QuadConfig::default() },
            finite_part: FinitePartConfig { extra_terms: 10, ..FinitePartConfig::default() },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PhiEstimate {
    pub phi: f64,
    pub error: f64,
    /// number of (ν, σ) pairs in the J-integrand
    pub pairs: usize,
}

struct Pair {
    sigma: Weight,
    nu: Weight,
    weight: f64,
    shift: f64,
}

fn pairs(tau: &Weight, rank: &RankData) -> Result<Vec<Pair>> {
    let mut w: BTreeMap<Weight, i64> = BTreeMap::new();
    for p in 1..=rank.dimension() {
        let sign = if p % 2 == 0 { 1 } else { -1 };
        for (nu, c) in branching::nu_p(tau, p, rank)? {
            *w.entry(nu).or_insert(0) += sign * p as i64 * c;
        }
    }
    let omega = rational::to_f64(&liedata::casimir_g(tau, rank)?);
    let mut out = Vec::new();
    for (nu, c) in w {
        if c == 0 {
            continue;
        }
        for sigma in branching::branch_k_to_m(&nu, rank)? {
            let dim = liedata::dim_m(&sigma, rank)? as f64;
            let shift = omega - rational::to_f64(&liedata::casimir_m(&sigma, rank)?);
            out.push(Pair { sigma, nu: nu.clone(), weight: c as f64 * dim, shift });
        }
    }
    Ok(out)
}

/// J(k_t^τ)/κ for t > 0.
pub fn j_integrand(tau: &Weight, rank: &RankData, cfg: &PhiConfig) -> Result<impl Fn(f64) -> f64 + Sync> {
    rank.require_even("phi_even")?;
    check_weight(tau, rank, Role::G)?;
    if rank.n > 2 {
        return Err(Error::CostGuard(format!("phi_even at n = {} > 2", rank.n)));
    }
    if !(cfg.eps > 0.0 && cfg.eps < 0.5) {
        return Err(Error::Unsupported(format!("contour radius {} outside (0, 1/2)", cfg.eps)));
    }
    let ps = pairs(tau, rank)?;
    let quad = cfg.quad.clone();
    let eps0 = cfg.eps;
    let rank = rank.clone();
    Ok(move |t: f64| {
        // the value does not depend on ε < 1/2; shrinking it keeps e^{tε²} tame
        let eps = eps0.min(1.0 / t.sqrt());
        let mut total = Complex64::new(0.0, 0.0);
        for p in &ps {
            let damp = (-t * p.shift).exp();
            if damp == 0.0 {
                continue;
            }
            let g = |z: Complex64| {
                (-t * z * z).exp() * cfunc::c_log_derivative_numeric(&p.sigma, &p.nu, z, &rank).unwrap()
            };
            total += p.weight * damp * contour_d_eps(&g, eps, 1.0 / t.sqrt(), &quad).value;
        }
        -(total / Complex64::new(0.0, 4.0 * std::f64::consts::PI)).re
    })
}

/// Φ(λ) = ½ · d/ds|_0 of the Mellin transform of J(k_t^τ)/κ.
pub fn phi_even(tau: &Weight, rank: &RankData, cfg: &PhiConfig) -> Result<PhiEstimate> {
    let f = j_integrand(tau, rank, cfg)?;
    let ps = pairs(tau, rank)?;
    let smax = ps.iter().map(|p| p.shift.abs()).fold(1.0, f64::max);
    let fp = FinitePartConfig {
        split: cfg.finite_part.split.min(0.5 / smax),
        fit_lo: cfg.finite_part.fit_lo.min(0.02 / smax),
        ..cfg.finite_part.clone()
    };
    let terms = [ExpansionTerm::unknown(0.0, 0), ExpansionTerm::unknown(0.5, 0)];
    let est = numeric_mellin_finite_part(&f, &terms, &fp)?;
    Ok(PhiEstimate { phi: 0.5 * est.value, error: 0.5 * est.error, pairs: ps.len() })
}
