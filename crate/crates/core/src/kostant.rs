//! MA-data (λ_{τ,k}, σ_{τ,k}) attached to a G-representation τ (odd d).

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::liedata::{self, check_weight, RankData, Role, Weight};
use crate::rational::{self, q, Q};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KostantDatum {
    pub k: usize,
    pub sigma: Weight,
    #[serde(with = "rational::serde_q")]
    pub lambda: Q,
}

/// One entry of the full decomposition over W¹.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionEntry {
    #[serde(with = "rational::serde_q")]
    pub lambda: Q,
    pub sigma: Weight,
    pub level: usize,
}

/// σ_{τ,k} = (τ_1+1,…,τ_k+1, τ_{k+2},…,τ_{n+1}) and λ_{τ,k} = τ_{k+1}+n−k.
pub fn kostant_data(tau: &Weight, rank: &RankData) -> Result<Vec<KostantDatum>> {
    rank.require_odd("kostant_data")?;
    check_weight(tau, rank, Role::G)?;
    let n = rank.n;
    let t = &tau.entries;
    Ok((0..=n)
        .map(|k| {
            let mut s: Vec<Q> = t[..k].iter().map(|x| x + q(1)).collect();
            s.extend(t[k + 1..].iter().cloned());
            KostantDatum { k, sigma: Weight::new(Role::M, s), lambda: &t[k] + q((n - k) as i64) }
        })
        .collect())
}

pub fn full_decomposition(tau: &Weight, rank: &RankData) -> Result<Vec<DecompositionEntry>> {
    let data = kostant_data(tau, rank)?;
    let mut out = Vec::with_capacity(2 * data.len());
    for d in &data {
        out.push(DecompositionEntry { lambda: d.lambda.clone(), sigma: d.sigma.clone(), level: d.k });
    }
    for d in &data {
        out.push(DecompositionEntry {
            lambda: -d.lambda.clone(),
            sigma: liedata::w0_action(&d.sigma, rank)?,
            level: 2 * rank.n - d.k,
        });
    }
    Ok(out)
}

/// τ(Ω) = λ_{τ,k}² + c(σ_{τ,k}) for every k.
pub fn casimir_identity_check(tau: &Weight, rank: &RankData) -> Result<bool> {
    let c = liedata::casimir_g(tau, rank)?;
    for d in kostant_data(tau, rank)? {
        if c != &d.lambda * &d.lambda + liedata::casimir_m(&d.sigma, rank)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Σ_k (−1)^k dim σ_{τ,k}; vanishes identically.
pub fn alternating_dim_sum(tau: &Weight, rank: &RankData) -> Result<i64> {
    let mut s = 0i64;
    for d in kostant_data(tau, rank)? {
        let dim = liedata::dim_m(&d.sigma, rank)? as i64;
        s += if d.k % 2 == 0 { dim } else { -dim };
    }
    Ok(s)
}
