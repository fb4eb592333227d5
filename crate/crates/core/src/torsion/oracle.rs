//! Numeric Mellin oracles for M𝓘 and MJ built from the integrands
//! themselves rather than from the closed forms.


use num_complex::Complex64;

use crate::cfunc::{self, PoleList};
use crate::error::Result;
use crate::kostant;
use crate::liedata::{self, RankData, Weight};
use crate::mellin::{numeric_mellin_finite_part, ExpansionTerm, FinitePartConfig, MellinEstimate};
use crate::plancherel;
use crate::quad::{contour_d_eps, integrate_to_infinity, QuadConfig};
use crate::rational::{self, Q};
use crate::branching;

fn quad() -> QuadConfig {
    QuadConfig { rel_tol: 1e-12, ..QuadConfig::default() }
}

fn sign_k1(k: usize) -> f64 {
    if k % 2 == 0 {
        -1.0
    } else {
        1.0
    }
}

/// Where the log-derivative Σ_ν m_ν[ν:σ] c_ν'/c_ν comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PoleSource {
    /// the truncated partial-fraction lists f_{k,m}
    Truncated,
    /// the Γ-product formula, summed over ν without truncation
    GammaFormula,
}

enum LogDerivative {
    Poles(PoleList),
    Gamma { sigma: Weight, nus: Vec<(Weight, f64)> },
}

struct JPiece {
    weight: f64,
    radicand: f64,
    ld: LogDerivative,
}

/// MJ/κ as d/ds|_0 of the Mellin transform of J(t)/κ with
/// J(t) = −κ/(4πi) Σ_k(−1)^{k+1} Σ_σ dim σ e^{−t(λ_k²+c(σ_k)−c(σ))} ∫_{D_ε} e^{−tz²} f dz.
pub fn mj_numeric(base: &[Q], m: u64, rank: &RankData, source: PoleSource) -> Result<MellinEstimate> {
    rank.require_odd("mj_numeric")?;
    let tau = liedata::tau_m(base, m)?;
    let mut pieces = Vec::new();
    for d in kostant::kostant_data(&tau, rank)? {
        let c_k = liedata::casimir_m(&d.sigma, rank)?;
        let weights = branching::m_nu(&d.sigma, rank)?;
        for sigma in cfunc::support_sigmas(base, m, d.k, rank)? {
            let radicand = rational::to_f64(&(&d.lambda * &d.lambda + &c_k - liedata::casimir_m(&sigma, rank)?));
            let weight = sign_k1(d.k) * liedata::dim_m(&sigma, rank)? as f64;
            let ld = match source {
                PoleSource::Truncated => LogDerivative::Poles(cfunc::f_km(&sigma, base, m, d.k, rank)?),
                PoleSource::GammaFormula => {
                    let mut nus = Vec::new();
                    for (nu, c) in &weights {
                        if branching::mult_k_m(nu, &sigma, rank)? == 1 {
                            nus.push((nu.clone(), *c as f64));
                        }
                    }
                    LogDerivative::Gamma { sigma: sigma.clone(), nus }
                }
            };
            pieces.push(JPiece { weight, radicand, ld });
        }
    }
    let rmax = pieces.iter().map(|p| p.radicand).fold(1.0, f64::max);
    let f = |t: f64| -> f64 {
        let eps = 0.5f64.min(1.0 / t.sqrt());
        let mut total = Complex64::new(0.0, 0.0);
        for p in &pieces {
            let damp = (-t * p.radicand).exp();
            if damp == 0.0 {
                continue;
            }
            let g = |z: Complex64| -> Complex64 {
                let l = match &p.ld {
                    LogDerivative::Poles(pl) => pl.eval(z),
                    LogDerivative::Gamma { sigma, nus } => nus
                        .iter()
                        .map(|(nu, c)| *c * cfunc::c_log_derivative_numeric(sigma, nu, z, rank).unwrap())
                        .sum(),
                };
                (-t * z * z).exp() * l
            };
            total += p.weight * damp * contour_d_eps(&g, eps, 1.0 / t.sqrt(), &quad()).value;
        }
        // −1/(4πi)
        (total / Complex64::new(0.0, 4.0 * std::f64::consts::PI)).re * -1.0
    };
    let terms = [ExpansionTerm::unknown(0.0, 0), ExpansionTerm::unknown(0.5, 0)];
    let cfg = FinitePartConfig {
        split: (0.5 / rmax).min(0.05),
        fit_lo: (0.02 / rmax).min(1e-3),
        extra_terms: 10,
        ..FinitePartConfig::default()
    };
    numeric_mellin_finite_part(&f, &terms, &cfg)
}

/// M𝓘/κ from (1/2π)Σ_k(−1)^{k+1} e^{−tλ_k²} ∫_R Ω(σ_k,λ) e^{−tλ²} dλ, with Ω
/// evaluated by the direct digamma formula.
pub fn mical_numeric(base: &[Q], m: u64, rank: &RankData) -> Result<MellinEstimate> {
    rank.require_odd("mical_numeric")?;
    let tau = liedata::tau_m(base, m)?;
    let data: Vec<(f64, f64, Weight)> = kostant::kostant_data(&tau, rank)?
        .into_iter()
        .map(|d| (sign_k1(d.k), rational::to_f64(&d.lambda), d.sigma))
        .collect();
    let lmax = data.iter().map(|d| d.1).fold(1.0, f64::max);
    let f = |t: f64| -> f64 {
        let mut total = 0.0;
        for (s, lam, sigma) in &data {
            let g = |l: f64| (-t * l * l).exp() * plancherel::omega_direct(sigma, l, rank).unwrap();
            let v = 2.0 * integrate_to_infinity(&g, 0.0, 1.0 / t.sqrt(), &quad()).value;
            total += s * (-t * lam * lam).exp() * v;
        }
        total / (2.0 * std::f64::consts::PI)
    };
    let n = rank.n as f64;
    let mut terms = Vec::new();
    let mut e = -(n - 0.5);
    while e <= 0.5 + 1e-12 {
        terms.push(ExpansionTerm::unknown(e, 0));
        if e.fract() != 0.0 {
            terms.push(ExpansionTerm::unknown(e, 1));
        }
        e += 0.5;
    }
    let cfg = FinitePartConfig {
        // the constant competes with t^{1/2} log t; a grid reaching far below
        // the split keeps it well determined
        split: (0.05 / (lmax * lmax)).min(0.003),
        fit_lo: 1e-8,
        extra_terms: 6,
        ..FinitePartConfig::default()
    };
    numeric_mellin_finite_part(&f, &terms, &cfg)
}

