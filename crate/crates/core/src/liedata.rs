//! Root data, weights, Weyl dimensions and Casimir values for
//! G = Spin(d,1), K = Spin(d) and M = Spin(d-1).
//!
//! Coordinates are the standard e_j with the Euclidean inner product.
//! G-weights carry n+1 entries (k_1..k_{n+1}). M-weights carry n entries
//! (k_2..k_{n+1}). K-weights carry n entries for odd d and n+1 for even d.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::RatPoly;
use crate::rational::{self, half, q, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    /// d = 2n+1
    Odd,
    /// d = 2n+2
    Even,
}

impl std::str::FromStr for Parity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "odd" => Ok(Parity::Odd),
            "even" => Ok(Parity::Even),
            _ => Err(Error::Parse(format!("parity {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Role {
    G,
    K,
    M,
}

/// Classical root system types that occur here.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootType {
    B,
    D,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankData {
    pub n: usize,
    pub parity: Parity,
    #[serde(with = "rational::serde_qvec")]
    pub rho: Vec<Q>,
}

pub fn rho_values(n: usize, parity: Parity) -> Result<Vec<Q>> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    let top = match parity {
        Parity::Odd => q(n as i64),
        Parity::Even => q(n as i64) + half(),
    };
    Ok((0..=n).map(|j| &top - q(j as i64)).collect())
}

impl RankData {
    pub fn new(n: usize, parity: Parity) -> Result<Self> {
        Ok(RankData { n, parity, rho: rho_values(n, parity)? })
    }

    pub fn odd(n: usize) -> Result<Self> {
        Self::new(n, Parity::Odd)
    }

    pub fn even(n: usize) -> Result<Self> {
        Self::new(n, Parity::Even)
    }

    pub fn dimension(&self) -> usize {
        match self.parity {
            Parity::Odd => 2 * self.n + 1,
            Parity::Even => 2 * self.n + 2,
        }
    }

    pub fn is_odd(&self) -> bool {
        self.parity == Parity::Odd
    }

    pub fn require_odd(&self, what: &'static str) -> Result<()> {
        if self.is_odd() {
            Ok(())
        } else {
            Err(Error::OddOnly(what))
        }
    }

    pub fn require_even(&self, what: &'static str) -> Result<()> {
        if self.is_odd() {
            Err(Error::EvenOnly(what))
        } else {
            Ok(())
        }
    }

    /// (ρ_2,…,ρ_{n+1})
    pub fn rho_m(&self) -> &[Q] {
        &self.rho[1..]
    }

    /// Σ_{j=1}^{n+1} ρ_j²
    pub fn rho_norm2(&self) -> Q {
        self.rho.iter().map(|r| r * r).sum()
    }

    pub fn entry_count(&self, role: Role) -> usize {
        match (role, self.parity) {
            (Role::G, _) => self.n + 1,
            (Role::K, Parity::Odd) => self.n,
            (Role::K, Parity::Even) => self.n + 1,
            (Role::M, _) => self.n,
        }
    }

    pub fn root_type(&self, role: Role) -> RootType {
        match (role, self.parity) {
            (Role::G, Parity::Odd) | (Role::K, Parity::Even) | (Role::M, Parity::Odd) => RootType::D,
            _ => RootType::B,
        }
    }

    /// Half sum of positive roots of the compact or complexified group in
    /// the role's own coordinates.
    pub fn rho_of(&self, role: Role) -> Vec<Q> {
        weyl_rho(self.entry_count(role), self.root_type(role))
    }
}

/// ρ for B_r is (r−1/2,…,1/2); for D_r it is (r−1,…,0).
pub fn weyl_rho(r: usize, rt: RootType) -> Vec<Q> {
    (0..r)
        .map(|i| {
            let base = q((r - 1 - i) as i64);
            match rt {
                RootType::B => base + half(),
                RootType::D => base,
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub role: Role,
    #[serde(with = "rational::serde_qvec")]
    pub entries: Vec<Q>,
}

impl Weight {
    pub fn new(role: Role, entries: Vec<Q>) -> Self {
        Weight { role, entries }
    }

    pub fn from_ints(role: Role, xs: &[i64]) -> Self {
        Weight::new(role, xs.iter().map(|&x| q(x)).collect())
    }

    pub fn parse(role: Role, s: &str) -> Result<Self> {
        Ok(Weight::new(role, rational::parse_list(s)?))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn last(&self) -> Q {
        self.entries.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|x| x.is_integer())
    }

    pub fn key(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(rational::fmt).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All entries integral, or all in ℤ+1/2.
pub fn uniform_integrality(xs: &[Q]) -> bool {
    xs.iter().all(|x| x.is_integer()) || xs.iter().all(rational::is_half_odd)
}

/// Dominance chain for B_r (x_1≥…≥x_r≥0) or D_r (x_1≥…≥x_{r−1}≥|x_r|).
pub fn is_dominant_chain(xs: &[Q], rt: RootType) -> bool {
    let r = xs.len();
    if r == 0 {
        return true;
    }
    if xs.windows(2).take(r.saturating_sub(2)).any(|w| w[0] < w[1]) {
        return false;
    }
    match rt {
        RootType::B => (r < 2 || xs[r - 2] >= xs[r - 1]) && !xs[r - 1].is_negative(),
        RootType::D => r < 2 || xs[r - 2] >= xs[r - 1].abs(),
    }
}

pub fn validate_weight(w: &Weight, rank: &RankData) -> Result<bool> {
    let expected = rank.entry_count(w.role);
    if w.len() != expected {
        return Err(Error::WrongLength { expected, got: w.len() });
    }
    Ok(uniform_integrality(&w.entries) && is_dominant_chain(&w.entries, rank.root_type(w.role)))
}

/// Like [`validate_weight`] but turns a `false` into an error.
pub fn check_weight(w: &Weight, rank: &RankData, role: Role) -> Result<()> {
    if w.role != role {
        return Err(Error::InvalidWeight(format!("expected a {role:?}-weight, got {:?}", w.role)));
    }
    if validate_weight(w, rank)? {
        Ok(())
    } else {
        Err(Error::InvalidWeight(format!("{w} is not a dominant {role:?}-weight for n={}", rank.n)))
    }
}

pub fn w0_action(sigma: &Weight, rank: &RankData) -> Result<Weight> {
    check_weight(sigma, rank, Role::M)?;
    let mut out = sigma.clone();
    if rank.is_odd() {
        if let Some(last) = out.entries.last_mut() {
            *last = -last.clone();
        }
    }
    Ok(out)
}

pub fn theta_twist(tau: &Weight, rank: &RankData) -> Result<Weight> {
    rank.require_odd("theta_twist")?;
    check_weight(tau, rank, Role::G)?;
    let mut out = tau.clone();
    if let Some(last) = out.entries.last_mut() {
        *last = -last.clone();
    }
    Ok(out)
}

/// (τ_1+m,…,τ_{n+1}+m)
pub fn tau_m(base: &[Q], m: u64) -> Result<Weight> {
    if base.windows(2).any(|w| w[0] < w[1]) || base.iter().any(|x| x.is_negative() || !x.is_integer()) {
        return Err(Error::InvalidWeight(format!(
            "base must be a non-increasing list of naturals, got {:?}",
            base.iter().map(rational::fmt).collect::<Vec<_>>()
        )));
    }
    let mq = q(m as i64);
    Ok(Weight::new(Role::G, base.iter().map(|x| x + &mq).collect()))
}

/// Weyl dimension from shifted coordinates ξ = k+ρ and the root type.
pub fn weyl_dimension(xi: &[Q], rho: &[Q], rt: RootType) -> Q {
    let mut num = Q::one();
    let mut den = Q::one();
    for i in 0..xi.len() {
        for j in i + 1..xi.len() {
            num *= &xi[i] * &xi[i] - &xi[j] * &xi[j];
            den *= &rho[i] * &rho[i] - &rho[j] * &rho[j];
        }
        if rt == RootType::B {
            num *= &xi[i];
            den *= &rho[i];
        }
    }
    num / den
}

fn dim_role(w: &Weight, rank: &RankData, role: Role) -> Result<u64> {
    check_weight(w, rank, role)?;
    let rho = rank.rho_of(role);
    let xi: Vec<Q> = w.entries.iter().zip(&rho).map(|(k, r)| k + r).collect();
    let d = weyl_dimension(&xi, &rho, rank.root_type(role));
    match rational::to_i64(&d) {
        Some(v) if v > 0 => Ok(v as u64),
        _ => Err(Error::Invariant(format!("Weyl dimension of {w} is {d}"))),
    }
}

pub fn dim_m(sigma: &Weight, rank: &RankData) -> Result<u64> {
    dim_role(sigma, rank, Role::M)
}

pub fn dim_k(nu: &Weight, rank: &RankData) -> Result<u64> {
    dim_role(nu, rank, Role::K)
}

pub fn dim_g(tau: &Weight, rank: &RankData) -> Result<u64> {
    dim_role(tau, rank, Role::G)
}

/// dim τ(m) as an exact polynomial in m (odd parity).
pub fn dim_tau_m_polynomial(base: &[Q], rank: &RankData) -> Result<RatPoly> {
    rank.require_odd("dim_tau_m_polynomial")?;
    check_weight(&tau_m(base, 0)?, rank, Role::G)?;
    let rho = &rank.rho;
    let mut p = RatPoly::one();
    for i in 0..rho.len() {
        for j in i + 1..rho.len() {
            // (ξ_i−ξ_j)(ξ_i+ξ_j) with ξ = τ + m + ρ
            let diff = &base[i] - &base[j] + &rho[i] - &rho[j];
            let sum = RatPoly::linear(&base[i] + &base[j] + &rho[i] + &rho[j], q(2));
            let den = &rho[i] * &rho[i] - &rho[j] * &rho[j];
            p = &p * &sum.scale(&(diff / den));
        }
    }
    Ok(p)
}

/// c(σ) = Σ_{j≥2}(k_j+ρ_j)² − Σ_j ρ_j²
pub fn casimir_m(sigma: &Weight, rank: &RankData) -> Result<Q> {
    check_weight(sigma, rank, Role::M)?;
    Ok(casimir_m_unchecked(&sigma.entries, rank))
}

pub(crate) fn casimir_m_unchecked(k: &[Q], rank: &RankData) -> Q {
    let s: Q = k.iter().zip(rank.rho_m()).map(|(k, r)| (k + r) * (k + r)).sum();
    s - rank.rho_norm2()
}

/// τ(Ω) = Σ_j(k_j+ρ_j)² − Σ_j ρ_j²
pub fn casimir_g(tau: &Weight, rank: &RankData) -> Result<Q> {
    check_weight(tau, rank, Role::G)?;
    let s: Q = tau.entries.iter().zip(&rank.rho).map(|(k, r)| (k + r) * (k + r)).sum();
    Ok(s - rank.rho_norm2())
}

/// π_{σ,λ}(Ω) = −λ² + c(σ)
pub fn casimir_principal(sigma: &Weight, lambda: f64, rank: &RankData) -> Result<f64> {
    Ok(-lambda * lambda + rational::to_f64(&casimir_m(sigma, rank)?))
}

/// Brings x to the dominant chamber of B_r or D_r. Returns the dominant
/// vector and det(w), or `None` when x lies on a wall.
pub fn reflect_to_dominant(x: &[Q], rt: RootType) -> Option<(Vec<Q>, i32)> {
    let r = x.len();
    let mut idx: Vec<usize> = (0..r).collect();
    idx.sort_by(|&a, &b| x[b].abs().cmp(&x[a].abs()));
    let abs: Vec<Q> = idx.iter().map(|&i| x[i].abs()).collect();
    if abs.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let zero_count = abs.iter().filter(|a| a.is_zero()).count();
    if rt == RootType::B && zero_count > 0 {
        return None;
    }
    // sign of the sorting permutation
    let mut perm_sign = 1i32;
    let mut seen = vec![false; r];
    for s in 0..r {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut c = s;
        while !seen[c] {
            seen[c] = true;
            c = idx[c];
            len += 1;
        }
        if len % 2 == 0 {
            perm_sign = -perm_sign;
        }
    }
    let negatives = x.iter().filter(|v| v.is_negative()).count();
    let mut y = abs;
    let sign = match rt {
        RootType::B => {
            if negatives % 2 == 0 {
                perm_sign
            } else {
                -perm_sign
            }
        }
        // Weyl elements of D_r change an even number of signs, so det(w) is
        // the permutation sign; an odd count leaves the last entry negative.
        RootType::D => {
            if negatives % 2 == 1 {
                if let Some(last) = y.last_mut() {
                    *last = -last.clone();
                }
            }
            perm_sign
        }
    };
    Some((y, sign))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qr;
    use proptest::prelude::*;

    fn w(role: Role, xs: &[i64]) -> Weight {
        Weight::from_ints(role, xs)
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho_values(2, Parity::Odd).unwrap(), vec![q(2), q(1), q(0)]);
        assert_eq!(rho_values(1, Parity::Odd).unwrap(), vec![q(1), q(0)]);
        assert_eq!(rho_values(1, Parity::Even).unwrap(), vec![qr(3, 2), qr(1, 2)]);
        assert_eq!(rho_values(0, Parity::Odd), Err(Error::ZeroRank));
    }

    #[test]
    fn rho_strictly_decreasing() {
        for n in 1..=16 {
            for p in [Parity::Odd, Parity::Even] {
                let r = rho_values(n, p).unwrap();
                assert!(r.windows(2).all(|w| w[0] > w[1]));
                assert_eq!(r[n].is_zero(), p == Parity::Odd);
            }
        }
    }

    #[test]
    fn validation_examples() {
        let r2 = RankData::odd(2).unwrap();
        assert!(validate_weight(&w(Role::G, &[3, 2, 1]), &r2).unwrap());
        assert!(!validate_weight(&w(Role::G, &[1, 2, 0]), &r2).unwrap());
        let s = Weight::new(Role::M, vec![qr(1, 2), qr(-1, 2)]);
        assert!(validate_weight(&s, &r2).unwrap());
        assert!(validate_weight(&w(Role::G, &[1, 2]), &r2).is_err());
        let mixed = Weight::new(Role::M, vec![q(1), qr(1, 2)]);
        assert!(!validate_weight(&mixed, &r2).unwrap());
    }

    #[test]
    fn w0_and_theta() {
        let r2 = RankData::odd(2).unwrap();
        assert_eq!(w0_action(&w(Role::M, &[2, 1]), &r2).unwrap(), w(Role::M, &[2, -1]));
        assert_eq!(w0_action(&w(Role::M, &[2, 0]), &r2).unwrap(), w(Role::M, &[2, 0]));
        let e2 = RankData::even(2).unwrap();
        assert_eq!(w0_action(&w(Role::M, &[2, 1]), &e2).unwrap(), w(Role::M, &[2, 1]));
        assert_eq!(theta_twist(&w(Role::G, &[3, 2, 1]), &r2).unwrap(), w(Role::G, &[3, 2, -1]));
        assert_eq!(theta_twist(&w(Role::G, &[3, 2, 0]), &r2).unwrap(), w(Role::G, &[3, 2, 0]));
        assert!(theta_twist(&w(Role::G, &[3, 2, 1]), &e2).is_err());
        for m in 1..5 {
            let t = tau_m(&[q(2), q(1), q(0)], m).unwrap();
            assert_ne!(theta_twist(&t, &r2).unwrap(), t);
        }
    }

    #[test]
    fn tau_m_examples() {
        assert_eq!(tau_m(&[q(1), q(1)], 0).unwrap(), w(Role::G, &[1, 1]));
        assert_eq!(tau_m(&[q(2), q(1)], 3).unwrap(), w(Role::G, &[5, 4]));
        assert_eq!(tau_m(&[q(1), q(1), q(1)], 2).unwrap(), w(Role::G, &[3, 3, 3]));
    }

    // Spin(4) = SU(2)×SU(2): (a,b) has spins ((a+b)/2, (a−b)/2).
    fn su2_pair_dim(a: &Q, b: &Q) -> Q {
        (a + b + q(1)) * (a - b + q(1))
    }

    #[test]
    fn dimension_examples() {
        let r1 = RankData::odd(1).unwrap();
        let r2 = RankData::odd(2).unwrap();
        assert_eq!(dim_m(&w(Role::M, &[0, 0]), &r2).unwrap(), 1);
        assert_eq!(dim_m(&w(Role::M, &[1, 0]), &r2).unwrap(), 4);
        assert_eq!(dim_m(&w(Role::M, &[1, 1]), &r2).unwrap(), 3);
        assert_eq!(dim_k(&w(Role::K, &[0, 0]), &r2).unwrap(), 1);
        assert_eq!(dim_k(&w(Role::K, &[1]), &r1).unwrap(), 3);
        assert_eq!(dim_k(&Weight::new(Role::K, vec![qr(1, 2)]), &r1).unwrap(), 2);
        assert_eq!(dim_g(&w(Role::G, &[0, 0]), &r1).unwrap(), 1);
        assert_eq!(dim_g(&w(Role::G, &[1, 0]), &r1).unwrap(), 4);
        assert_eq!(dim_g(&w(Role::G, &[1, 1]), &r1).unwrap(), 3);
        assert!(dim_m(&w(Role::M, &[0, 1]), &r2).is_err());
        // Spin(4) oracle on a grid, including half-integral weights
        for a2 in 0..12 {
            for b2 in -a2..=a2 {
                let (a, b) = (qr(a2, 2), qr(b2, 2));
                let s = Weight::new(Role::M, vec![a.clone(), b.clone()]);
                if validate_weight(&s, &r2).unwrap() {
                    assert_eq!(q(dim_m(&s, &r2).unwrap() as i64), su2_pair_dim(&a, &b));
                }
                let t = Weight::new(Role::G, vec![a.clone(), b.clone()]);
                if validate_weight(&t, &r1).unwrap() {
                    assert_eq!(q(dim_g(&t, &r1).unwrap() as i64), su2_pair_dim(&a, &b));
                }
            }
        }
        // Spin(5) spinor and vector, Spin(6) = SU(4) vector and spinor
        assert_eq!(dim_k(&Weight::new(Role::K, vec![qr(1, 2), qr(1, 2)]), &r2).unwrap(), 4);
        assert_eq!(dim_k(&w(Role::K, &[1, 0]), &r2).unwrap(), 5);
        assert_eq!(dim_g(&w(Role::G, &[1, 0, 0]), &r2).unwrap(), 6);
        assert_eq!(dim_g(&Weight::new(Role::G, vec![qr(1, 2), qr(1, 2), qr(-1, 2)]), &r2).unwrap(), 4);
        assert_eq!(dim_g(&w(Role::G, &[1, 1, 0]), &r2).unwrap(), 15);
        // even parity: G = B_{n+1}, K = D_{n+1}, M = B_n
        let e1 = RankData::even(1).unwrap();
        assert_eq!(dim_g(&w(Role::G, &[1, 0]), &e1).unwrap(), 5);
        assert_eq!(dim_k(&w(Role::K, &[1, 1]), &e1).unwrap(), 3);
        assert_eq!(dim_m(&w(Role::M, &[1]), &e1).unwrap(), 3);
    }

    #[test]
    fn casimir_examples() {
        let r1 = RankData::odd(1).unwrap();
        let r2 = RankData::odd(2).unwrap();
        assert_eq!(casimir_m(&w(Role::M, &[1]), &r1).unwrap(), q(0));
        assert_eq!(casimir_m(&w(Role::M, &[0]), &r1).unwrap(), q(-1));
        assert_eq!(casimir_m(&w(Role::M, &[0, 0]), &r2).unwrap(), q(-4));
        assert_eq!(casimir_g(&w(Role::G, &[0, 0]), &r1).unwrap(), q(0));
        assert_eq!(casimir_g(&w(Role::G, &[2, 1]), &r1).unwrap(), q(9));
        // (3²+2²+1²) − (2²+1²+0²)
        assert_eq!(casimir_g(&w(Role::G, &[1, 1, 1]), &r2).unwrap(), q(9));
        assert_eq!(casimir_principal(&w(Role::M, &[1]), 0.0, &r1).unwrap(), 0.0);
        assert_eq!(casimir_principal(&w(Role::M, &[0]), 1.0, &r1).unwrap(), -2.0);
    }

    #[test]
    fn dim_polynomial_matches_pointwise() {
        for (n, base) in [(1usize, vec![1, 1]), (2, vec![2, 1, 1]), (3, vec![3, 1, 1, 0])] {
            let rank = RankData::odd(n).unwrap();
            let b: Vec<Q> = base.iter().map(|&x| q(x)).collect();
            let p = dim_tau_m_polynomial(&b, &rank).unwrap();
            assert_eq!(p.degree(), Some(n * (n + 1) / 2));
            assert!(p.leading() > q(0));
            for m in 0..=20u64 {
                let t = tau_m(&b, m).unwrap();
                assert_eq!(p.eval(&q(m as i64)), q(dim_g(&t, &rank).unwrap() as i64));
            }
        }
    }

    #[test]
    fn reflection_to_dominant() {
        // B_2: (−1/2, 3/2) → (3/2, 1/2) by a swap and a sign flip, det +1
        let (y, s) = reflect_to_dominant(&[qr(-1, 2), qr(3, 2)], RootType::B).unwrap();
        assert_eq!(y, vec![qr(3, 2), qr(1, 2)]);
        assert_eq!(s, 1);
        assert!(reflect_to_dominant(&[q(1), q(0)], RootType::B).is_none());
        assert!(reflect_to_dominant(&[q(1), q(-1)], RootType::D).is_none());
        // D_2: (1, 0) is regular, (0, 2) → (2, 0) by a swap
        assert_eq!(reflect_to_dominant(&[q(0), q(2)], RootType::D).unwrap(), (vec![q(2), q(0)], -1));
        // s_{e1−e2}s_{e1+e2} sends (−1,0) to (1,0)
        assert_eq!(reflect_to_dominant(&[q(-1), q(0)], RootType::D).unwrap(), (vec![q(1), q(0)], 1));
        // D_3: one negative stays on the last slot
        let (y, s) = reflect_to_dominant(&[q(-1), q(3), q(2)], RootType::D).unwrap();
        assert_eq!(y, vec![q(3), q(2), q(-1)]);
        assert_eq!(s, 1);
    }

    fn dominant_m(n: usize) -> impl Strategy<Value = Weight> {
        (prop::collection::vec(0i64..6, n), any::<bool>(), any::<bool>()).prop_map(move |(mut v, neg, halfint)| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            let mut e: Vec<Q> = v.iter().map(|&x| if halfint { q(x) + half() } else { q(x) }).collect();
            if neg {
                let l = e.len() - 1;
                e[l] = -e[l].clone();
            }
            Weight::new(Role::M, e)
        })
    }

    proptest! {
        #[test]
        fn w0_preserves_dim_and_casimir(s in (1usize..5).prop_flat_map(dominant_m)) {
            let rank = RankData::odd(s.len()).unwrap();
            let t = w0_action(&s, &rank).unwrap();
            prop_assert_eq!(dim_m(&s, &rank).unwrap(), dim_m(&t, &rank).unwrap());
            prop_assert_eq!(casimir_m(&s, &rank).unwrap(), casimir_m(&t, &rank).unwrap());
        }

        #[test]
        fn dims_positive_integers(n in 1usize..5, xs in prop::collection::vec(0i64..7, 6), halfint in any::<bool>(), odd in any::<bool>()) {
            let rank = RankData::new(n, if odd { Parity::Odd } else { Parity::Even }).unwrap();
            for role in [Role::G, Role::K, Role::M] {
                let c = rank.entry_count(role);
                let mut v: Vec<i64> = xs[..c].to_vec();
                v.sort_unstable_by(|a, b| b.cmp(a));
                let e: Vec<Q> = v.iter().map(|&x| if halfint { q(x) + half() } else { q(x) }).collect();
                let wt = Weight::new(role, e);
                prop_assert!(validate_weight(&wt, &rank).unwrap());
                let d = dim_role(&wt, &rank, role).unwrap();
                prop_assert!(d >= 1);
            }
        }
    }
}
