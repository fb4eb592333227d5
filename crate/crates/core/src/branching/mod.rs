//! K↓M and G↓K branching, the inverse map σ ↦ ν(σ), the multiplicities
//! m_ν(σ) and the alternating identity over exterior powers of p.

pub mod characters;
pub mod klimyk;

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::kostant;
use crate::liedata::{self, check_weight, RankData, Role, Weight};
use crate::rational::{self, q, Q};

use klimyk::{exterior_power, tensor_decompose, vector_weights};

/// Signed K-types attached to one M-type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchingTable {
    pub sigma: Weight,
    pub entries: BTreeMap<Weight, i64>,
}

impl Serialize for BranchingTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(self.entries.len()))?;
        for (k, v) in &self.entries {
            m.serialize_entry(&k.key(), v)?;
        }
        m.end()
    }
}

/// All vectors x with lo_j ≤ x_j ≤ hi_j, stepping by one from lo_j.
fn box_product(ranges: &[(Q, Q)]) -> Vec<Vec<Q>> {
    let mut out = vec![Vec::new()];
    for (lo, hi) in ranges {
        let mut next = Vec::new();
        for prefix in &out {
            let mut x = lo.clone();
            while &x <= hi {
                let mut v = prefix.clone();
                v.push(x.clone());
                next.push(v);
                x += Q::one();
            }
        }
        out = next;
    }
    out
}

/// Ranges for the interlacing pattern of a branching rule.
fn interlacing_ranges(hw: &[Q], rank: &RankData, from: Role) -> Vec<(Q, Q)> {
    let r = hw.len();
    match (from, rank.is_odd()) {
        // B_n ↓ D_n: a2 ≥ b2 ≥ a3 ≥ … ≥ a_{n+1} ≥ |b_{n+1}|
        (Role::K, true) => (0..r)
            .map(|j| if j + 1 < r { (hw[j + 1].clone(), hw[j].clone()) } else { (-hw[j].clone(), hw[j].clone()) })
            .collect(),
        // D_{n+1} ↓ B_n: a1 ≥ b2 ≥ a2 ≥ … ≥ a_n ≥ b_{n+1} ≥ |a_{n+1}|
        (Role::K, false) => (1..r)
            .map(|j| if j + 1 < r { (hw[j].clone(), hw[j - 1].clone()) } else { (hw[j].abs(), hw[j - 1].clone()) })
            .collect(),
        // D_{n+1} ↓ B_n: t1 ≥ k2 ≥ t2 ≥ … ≥ t_n ≥ k_{n+1} ≥ |t_{n+1}|
        (Role::G, true) => (1..r)
            .map(|j| if j + 1 < r { (hw[j].clone(), hw[j - 1].clone()) } else { (hw[j].abs(), hw[j - 1].clone()) })
            .collect(),
        // B_{n+1} ↓ D_{n+1}: t1 ≥ k1 ≥ t2 ≥ … ≥ t_{n+1} ≥ |k_{n+1}|
        (Role::G, false) => (0..r)
            .map(|j| if j + 1 < r { (hw[j + 1].clone(), hw[j].clone()) } else { (-hw[j].clone(), hw[j].clone()) })
            .collect(),
        (Role::M, _) => unreachable!("M has no branching here"),
    }
}

/// M-types of ν|_M, each with multiplicity one.
pub fn branch_k_to_m(nu: &Weight, rank: &RankData) -> Result<Vec<Weight>> {
    check_weight(nu, rank, Role::K)?;
    let ranges = interlacing_ranges(&nu.entries, rank, Role::K);
    Ok(box_product(&ranges).into_iter().map(|v| Weight::new(Role::M, v)).collect())
}

/// K-types of τ|_K, each with multiplicity one.
pub fn branch_g_to_k(tau: &Weight, rank: &RankData) -> Result<Vec<Weight>> {
    check_weight(tau, rank, Role::G)?;
    let ranges = interlacing_ranges(&tau.entries, rank, Role::G);
    Ok(box_product(&ranges).into_iter().map(|v| Weight::new(Role::K, v)).collect())
}

/// [ν:σ] ∈ {0,1}.
pub fn mult_k_m(nu: &Weight, sigma: &Weight, rank: &RankData) -> Result<u8> {
    check_weight(nu, rank, Role::K)?;
    check_weight(sigma, rank, Role::M)?;
    if liedata::uniform_integrality(&[nu.entries.clone(), sigma.entries.clone()].concat()) {
        let ranges = interlacing_ranges(&nu.entries, rank, Role::K);
        let inside = ranges.iter().zip(&sigma.entries).all(|((lo, hi), x)| lo <= x && x <= hi);
        Ok(inside as u8)
    } else {
        Ok(0)
    }
}

/// ν(σ) = Σ_{μ∈{0,1}ⁿ} (−1)^{|μ|} ν(Λ(σ)−μ), dropping non-dominant terms.
pub fn nu_of_sigma(sigma: &Weight, rank: &RankData) -> Result<BranchingTable> {
    rank.require_odd("nu_of_sigma")?;
    check_weight(sigma, rank, Role::M)?;
    if sigma.last().is_negative() {
        return Err(Error::InvalidWeight(format!("{sigma} has negative last entry; apply w0 first")));
    }
    let n = rank.n;
    let mut entries = BTreeMap::new();
    for mask in 0u32..(1 << n) {
        let v: Vec<Q> = sigma
            .entries
            .iter()
            .enumerate()
            .map(|(j, x)| if mask >> j & 1 == 1 { x - q(1) } else { x.clone() })
            .collect();
        let nu = Weight::new(Role::K, v);
        if liedata::validate_weight(&nu, rank)? {
            entries.insert(nu, if mask.count_ones() % 2 == 0 { 1 } else { -1 });
        }
    }
    Ok(BranchingTable { sigma: sigma.clone(), entries })
}

/// The integers m_ν(σ) with σ + w0σ = Σ_ν m_ν(σ) i*(ν), for any dominant σ.
pub fn m_nu(sigma: &Weight, rank: &RankData) -> Result<BTreeMap<Weight, i64>> {
    let w0 = liedata::w0_action(sigma, rank)?;
    let fixed = &w0 == sigma;
    let base = if sigma.last().is_negative() { w0 } else { sigma.clone() };
    let table = nu_of_sigma(&base, rank)?;
    let factor = if fixed { 2 } else { 1 };
    Ok(table.entries.into_iter().map(|(k, v)| (k, factor * v)).collect())
}

/// Formal sum of M-types.
pub type MSum = BTreeMap<Weight, i64>;

/// Expands i*(ν(σ)) and compares with σ (fixed point) or σ + w0σ.
pub fn verify_iota(sigma: &Weight, rank: &RankData) -> Result<bool> {
    let w0 = liedata::w0_action(sigma, rank)?;
    let base = if sigma.last().is_negative() { w0.clone() } else { sigma.clone() };
    let table = nu_of_sigma(&base, rank)?;
    let mut got = MSum::new();
    for (nu, c) in &table.entries {
        for s in branch_k_to_m(nu, rank)? {
            *got.entry(s).or_insert(0) += c;
        }
    }
    got.retain(|_, v| *v != 0);
    let mut expect = MSum::new();
    *expect.entry(sigma.clone()).or_insert(0) += 1;
    if &w0 != sigma {
        *expect.entry(w0).or_insert(0) += 1;
    }
    Ok(got == expect)
}

/// K-types of Λ^p p ⊗ τ|_K with multiplicities.
pub fn nu_p(tau: &Weight, p: usize, rank: &RankData) -> Result<BTreeMap<Weight, i64>> {
    let rt = rank.root_type(Role::K);
    let r = rank.entry_count(Role::K);
    let ext = exterior_power(&vector_weights(r, rt), p);
    let mut out = BTreeMap::new();
    for nu in branch_g_to_k(tau, rank)? {
        for (hw, c) in tensor_decompose(&nu.entries, &ext, rt) {
            *out.entry(Weight::new(Role::K, hw)).or_insert(0) += c;
        }
    }
    out.retain(|_, v| *v != 0);
    Ok(out)
}

/// Σ_p (−1)^p p [ν_p(τ):ν] for every ν, by tensor-product arithmetic.
pub fn alternating_p_lhs(tau: &Weight, rank: &RankData) -> Result<BTreeMap<Weight, i64>> {
    rank.require_odd("alternating_p_identity")?;
    if rank.n > 2 {
        return Err(Error::CostGuard(format!("n = {} > 2", rank.n)));
    }
    let mut out = BTreeMap::new();
    for p in 1..=rank.dimension() {
        let sign = if p % 2 == 0 { 1 } else { -1 };
        for (nu, c) in nu_p(tau, p, rank)? {
            *out.entry(nu).or_insert(0) += sign * p as i64 * c;
        }
    }
    out.retain(|_, v| *v != 0);
    Ok(out)
}

/// Σ_k (−1)^{k+1} m_ν(σ_{τ,k}) for every ν.
pub fn alternating_p_rhs(tau: &Weight, rank: &RankData) -> Result<BTreeMap<Weight, i64>> {
    let mut out = BTreeMap::new();
    for d in kostant::kostant_data(tau, rank)? {
        let sign = if d.k % 2 == 0 { -1 } else { 1 };
        for (nu, c) in m_nu(&d.sigma, rank)? {
            *out.entry(nu).or_insert(0) += sign * c;
        }
    }
    out.retain(|_, v| *v != 0);
    Ok(out)
}

/// Both sides of the identity at a single ν.
pub fn alternating_p_identity(tau: &Weight, nu: &Weight, rank: &RankData) -> Result<(i64, i64)> {
    check_weight(nu, rank, Role::K)?;
    let rhs = alternating_p_rhs(tau, rank)?.get(nu).copied().unwrap_or(0);
    let lhs = alternating_p_lhs(tau, rank)?.get(nu).copied().unwrap_or(0);
    Ok((lhs, rhs))
}

/// Dominant M-weights in τ's integrality class with |k_j| ≤ τ_{j−1}+1.
pub fn casimir_box(tau: &Weight, rank: &RankData) -> Result<Vec<Weight>> {
    check_weight(tau, rank, Role::G)?;
    let shift = if tau.is_integral() { Q::zero() } else { rational::half() };
    let ranges: Vec<(Q, Q)> = tau.entries[..rank.n]
        .iter()
        .map(|t| {
            let b = t + q(1);
            // largest class member ≤ b
            let hi = (&b - &shift).floor() + &shift;
            (-hi.clone(), hi)
        })
        .collect();
    let mut out = Vec::new();
    for v in box_product(&ranges) {
        let s = Weight::new(Role::M, v);
        if liedata::validate_weight(&s, rank)? {
            out.push(s);
        }
    }
    Ok(out)
}

/// min over the box of τ(Ω) − c(σ).
pub fn max_casimir_gap(tau: &Weight, rank: &RankData) -> Result<Q> {
    let c = liedata::casimir_g(tau, rank)?;
    casimir_box(tau, rank)?
        .iter()
        .map(|s| liedata::casimir_m(s, rank).map(|cs| &c - cs))
        .collect::<Result<Vec<Q>>>()?
        .into_iter()
        .min()
        .ok_or_else(|| Error::Invariant("empty dominance box".into()))
}
