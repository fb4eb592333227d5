//! Harish-Chandra c-functions c_ν(σ:z), their logarithmic derivatives as
//! exact partial fractions (odd d) or numerically (even d), and the
//! truncated sums f_{k,m}.
//!
//! The normalising constant α(n) is never assigned: every consumer only
//! sees log-derivatives or ratios.

use std::collections::BTreeMap;

use num_complex::Complex64;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::branching;
use crate::error::{Error, Result};
use crate::kostant;
use crate::liedata::{self, check_weight, RankData, Role, Weight};
use crate::rational::{self, q, Q};
use crate::special::{digamma, ln_gamma};

/// coeff · i/(iz − location)
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PoleTerm {
    #[serde(rename = "sign")]
    pub coeff: i64,
    #[serde(with = "rational::serde_q")]
    pub location: Q,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PoleList {
    pub terms: Vec<PoleTerm>,
}

impl PoleList {
    pub fn from_map(map: BTreeMap<Q, i64>) -> Self {
        PoleList {
            terms: map
                .into_iter()
                .filter(|(_, c)| *c != 0)
                .map(|(location, coeff)| PoleTerm { coeff, location })
                .collect(),
        }
    }

    pub fn to_map(&self) -> BTreeMap<Q, i64> {
        let mut m = BTreeMap::new();
        for t in &self.terms {
            *m.entry(t.location.clone()).or_insert(0) += t.coeff;
        }
        m.retain(|_, c| *c != 0);
        m
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let i = Complex64::new(0.0, 1.0);
        self.terms
            .iter()
            .map(|t| i * t.coeff as f64 / (i * z - rational::to_f64(&t.location)))
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

fn range_inclusive(lo: &Q, hi: &Q) -> Vec<Q> {
    let mut out = Vec::new();
    let mut l = lo.clone();
    while &l <= hi {
        out.push(l.clone());
        l += Q::one();
    }
    out
}

/// Pole terms of c_ν(σ:z)^{-1} c_ν'(σ:z), restricted to l ≥ `floor`.
fn log_derivative_terms(sigma: &Weight, nu: &Weight, rank: &RankData, floor: Option<&Q>) -> BTreeMap<Q, i64> {
    let mut out = BTreeMap::new();
    for (idx, (ks, kn)) in sigma.entries.iter().zip(&nu.entries).enumerate() {
        let rho = &rank.rho_m()[idx];
        let ks = ks.abs();
        let keep = |l: &Q| floor.is_none_or(|f| l >= f);
        for l in range_inclusive(&(&ks + q(1)), kn) {
            if keep(&l) {
                *out.entry(&l + rho).or_insert(0) += 1;
            }
        }
        for l in range_inclusive(&ks, kn) {
            if keep(&l) {
                *out.entry(-(&l + rho)).or_insert(0) -= 1;
            }
        }
    }
    out
}

/// +i/(iz−l−ρ_j) for |k_j(σ)| < l ≤ k_j(ν) and −i/(iz+l+ρ_j) for
/// |k_j(σ)| ≤ l ≤ k_j(ν).
pub fn c_log_derivative(sigma: &Weight, nu: &Weight, rank: &RankData) -> Result<PoleList> {
    rank.require_odd("c_log_derivative")?;
    if branching::mult_k_m(nu, sigma, rank)? == 0 {
        return Err(Error::ZeroMultiplicity);
    }
    let mut terms = Vec::new();
    for (idx, (ks, kn)) in sigma.entries.iter().zip(&nu.entries).enumerate() {
        let rho = &rank.rho_m()[idx];
        let ks = ks.abs();
        for l in range_inclusive(&(&ks + q(1)), kn) {
            terms.push(PoleTerm { coeff: 1, location: &l + rho });
        }
        for l in range_inclusive(&ks, kn) {
            terms.push(PoleTerm { coeff: -1, location: -(&l + rho) });
        }
    }
    Ok(PoleList { terms })
}

/// c_ν(σ:z)^{-1} c_ν'(σ:z) from the Γ-product formula, either parity.
pub fn c_log_derivative_numeric(sigma: &Weight, nu: &Weight, z: Complex64, rank: &RankData) -> Result<Complex64> {
    check_weight(sigma, rank, Role::M)?;
    check_weight(nu, rank, Role::K)?;
    let i = Complex64::new(0.0, 1.0);
    let iz = i * z;
    let f = rational::to_f64;
    let mut s = Complex64::new(0.0, 0.0);
    for (k, r) in sigma.entries.iter().zip(rank.rho_m()) {
        let a = f(&(k + r));
        s += digamma(iz - a) + digamma(iz + a);
    }
    if rank.is_odd() {
        for (k, r) in nu.entries.iter().zip(rank.rho_m()) {
            let a = f(&(k + r));
            s -= digamma(iz - a) + digamma(iz + a + 1.0);
        }
        Ok(i * s)
    } else {
        for (k, r) in nu.entries.iter().zip(&rank.rho) {
            let a = f(&(k + r));
            s -= digamma(iz - a + 1.0) + digamma(iz + a);
        }
        Ok(i * s + 2.0 * i * digamma(2.0 * iz) - 2.0 * i * std::f64::consts::LN_2)
    }
}

/// c_ν(σ:z)/α(n) for even d.
pub fn c_function_even(sigma: &Weight, nu: &Weight, z: Complex64, eps: f64, rank: &RankData) -> Result<Complex64> {
    rank.require_even("c_function_even")?;
    check_weight(sigma, rank, Role::M)?;
    check_weight(nu, rank, Role::K)?;
    let i = Complex64::new(0.0, 1.0);
    let iz = i * z;
    let near_pole = |w: Complex64| {
        let k = (-w.re).round();
        k >= 0.0 && (w + k).norm() < eps
    };
    let f = rational::to_f64;
    let mut num = vec![2.0 * iz];
    for (k, r) in sigma.entries.iter().zip(rank.rho_m()) {
        let a = f(&(k + r));
        num.push(iz - a);
        num.push(iz + a);
    }
    if num.iter().any(|&w| near_pole(w)) {
        return Err(Error::Numeric(format!("z = {z} lies within {eps} of a pole")));
    }
    let mut den = Vec::new();
    for (k, r) in nu.entries.iter().zip(&rank.rho) {
        let a = f(&(k + r));
        den.push(iz - a + 1.0);
        den.push(iz + a);
    }
    let log: Complex64 = num.iter().map(|&w| ln_gamma(w)).sum::<Complex64>()
        - den.iter().map(|&w| ln_gamma(w)).sum::<Complex64>()
        - 2.0 * iz * std::f64::consts::LN_2;
    Ok(log.exp())
}

/// σ_{τ(m),k} for the shifted base.
pub fn sigma_tau_mk(base: &[Q], m: u64, k: usize, rank: &RankData) -> Result<Weight> {
    let tau = liedata::tau_m(base, m)?;
    let data = kostant::kostant_data(&tau, rank)?;
    data.into_iter()
        .nth(k)
        .map(|d| d.sigma)
        .ok_or_else(|| Error::Unsupported(format!("k = {k} > n = {}", rank.n)))
}

/// M-types σ with m_ν(σ_{τ(m),k})[ν:σ] ≠ 0 for some ν.
pub fn support_sigmas(base: &[Q], m: u64, k: usize, rank: &RankData) -> Result<Vec<Weight>> {
    let s = sigma_tau_mk(base, m, k, rank)?;
    let mut out = std::collections::BTreeSet::new();
    for nu in branching::m_nu(&s, rank)?.keys() {
        out.extend(branching::branch_k_to_m(nu, rank)?);
    }
    Ok(out.into_iter().collect())
}

fn merged(sigma: &Weight, base: &[Q], m: u64, k: usize, rank: &RankData, truncate: bool) -> Result<PoleList> {
    rank.require_odd("f_km")?;
    if m == 0 {
        return Err(Error::Unsupported("f_km needs m >= 1".into()));
    }
    check_weight(sigma, rank, Role::M)?;
    let s = sigma_tau_mk(base, m, k, rank)?;
    let floor = q(m as i64);
    let mut total: BTreeMap<Q, i64> = BTreeMap::new();
    for (nu, c) in branching::m_nu(&s, rank)? {
        if branching::mult_k_m(&nu, sigma, rank)? == 0 {
            continue;
        }
        let terms = log_derivative_terms(sigma, &nu, rank, if truncate { Some(&floor) } else { None });
        for (loc, v) in terms {
            *total.entry(loc).or_insert(0) += c * v;
        }
    }
    Ok(PoleList::from_map(total))
}

/// Σ_ν m_ν(σ_{τ(m),k})[ν:σ] c_ν^{-1}c_ν', with every l < m dropped.
pub fn f_km(sigma: &Weight, base: &[Q], m: u64, k: usize, rank: &RankData) -> Result<PoleList> {
    merged(sigma, base, m, k, rank, true)
}

/// The same signed merge without truncation.
pub fn f_km_untruncated(sigma: &Weight, base: &[Q], m: u64, k: usize, rank: &RankData) -> Result<PoleList> {
    merged(sigma, base, m, k, rank, false)
}
