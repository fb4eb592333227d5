//! Plancherel polynomials P_σ, the polynomials P_j and Q_{j,l}, and the
//! split Ω = Ω₁ + Ω₂ of the Fourier transform of the invariant cusp
//! distribution (odd d).
//!
//! Polynomials returned by [`plancherel_polynomial`] are the coefficient of
//! the symbolic constant c_n.

use std::collections::BTreeMap;

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::liedata::{self, check_weight, RankData, Role, Weight};
use crate::poly::RatPoly;
use crate::rational::{self, q, Q};
use crate::special::{digamma, EULER_GAMMA};

/// Π(ξ) = ∏_{i<j}(ξ_i² − ξ_j²)
pub fn pi_polynomial(xi: &[Q]) -> Q {
    let mut p = Q::one();
    for i in 0..xi.len() {
        for j in i + 1..xi.len() {
            p *= &xi[i] * &xi[i] - &xi[j] * &xi[j];
        }
    }
    p
}

fn shifted(sigma: &Weight, rank: &RankData) -> Vec<Q> {
    sigma.entries.iter().zip(rank.rho_m()).map(|(k, r)| k + r).collect()
}

/// P_σ(z)/c_n = −∏_{i<j}(v_i² − v_j²)/(ρ_i² − ρ_j²) with v = (z, ξ_2,…,ξ_{n+1}).
pub fn plancherel_polynomial(sigma: &Weight, rank: &RankData) -> Result<RatPoly> {
    rank.require_odd("plancherel_polynomial")?;
    check_weight(sigma, rank, Role::M)?;
    let xi = shifted(sigma, rank);
    let rho = &rank.rho;
    let mut p = RatPoly::constant(-Q::one());
    for (j, x) in xi.iter().enumerate() {
        let r = &rho[j + 1];
        let den = &rho[0] * &rho[0] - r * r;
        p = &p * &RatPoly::new(vec![-(x * x) / &den, Q::zero(), Q::one() / &den]);
    }
    let mut c = Q::one();
    for i in 0..xi.len() {
        for j in i + 1..xi.len() {
            let (ri, rj) = (&rho[i + 1], &rho[j + 1]);
            c *= (&xi[i] * &xi[i] - &xi[j] * &xi[j]) / (ri * ri - rj * rj);
        }
    }
    Ok(p.scale(&c))
}

/// P_j(σ,λ) = dim σ ∏_{p≠j}(−λ² − ξ_p²)/(ξ_j² − ξ_p²), j ∈ 2..=n+1.
pub fn p_j(sigma: &Weight, j: usize, rank: &RankData) -> Result<RatPoly> {
    rank.require_odd("p_j")?;
    check_weight(sigma, rank, Role::M)?;
    if !(2..=rank.n + 1).contains(&j) {
        return Err(Error::Unsupported(format!("index j = {j} outside 2..={}", rank.n + 1)));
    }
    let xi = shifted(sigma, rank);
    let xj = &xi[j - 2];
    let dim = q(liedata::dim_m(sigma, rank)? as i64);
    let mut p = RatPoly::constant(dim);
    for (idx, xp) in xi.iter().enumerate() {
        if idx == j - 2 {
            continue;
        }
        let den = xj * xj - xp * xp;
        if den.is_zero() {
            return Err(Error::Singular(format!("coincident shifted entries in {sigma}")));
        }
        p = &p * &RatPoly::new(vec![-(xp * xp) / &den, Q::zero(), -Q::one() / &den]);
    }
    Ok(p)
}

/// 2l·(P(λ) − P(il))/(λ² + l²) for an even P.
pub fn q_from_poly(p: &RatPoly, l: &Q) -> Result<RatPoly> {
    let at = p.eval_even_at_imaginary(l);
    let num = &p.scale(&(q(2) * l)) - &RatPoly::constant(q(2) * l * at);
    let (quo, rem) = num.div_rem(&RatPoly::new(vec![l * l, Q::zero(), Q::one()]));
    if !rem.is_zero() {
        return Err(Error::Invariant(format!("Q_(j,l) division left remainder {rem}")));
    }
    Ok(quo)
}

pub fn q_jl(sigma: &Weight, j: usize, l: &Q, rank: &RankData) -> Result<RatPoly> {
    q_from_poly(&p_j(sigma, j, rank)?, l)
}

/// Ω(σ,λ) = d·(ψ(1+iλ)+ψ(1−iλ)+2γ) + Σ_l c_l·2l/(λ²+l²) + poly(λ),
/// with d = −dim σ.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OmegaDecomposition {
    pub dim_sigma: u64,
    pub m0: i64,
    /// (l, c_l), ascending in l
    #[serde(serialize_with = "ser_poles")]
    pub pole_terms: Vec<(Q, Q)>,
    pub poly_part: RatPoly,
    #[serde(with = "rational::serde_q")]
    pub digamma_coefficient: Q,
}

fn ser_poles<S: serde::Serializer>(v: &[(Q, Q)], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for (l, c) in v {
        seq.serialize_element(&serde_json::json!({"l": rational::fmt(l), "coeff": rational::fmt(c)}))?;
    }
    seq.end()
}

impl OmegaDecomposition {
    pub fn eval(&self, lambda: f64) -> f64 {
        let z = Complex64::new(1.0, lambda);
        let psi = digamma(z).re * 2.0 + 2.0 * EULER_GAMMA;
        let mut v = rational::to_f64(&self.digamma_coefficient) * psi;
        for (l, c) in &self.pole_terms {
            let l = rational::to_f64(l);
            v += rational::to_f64(c) * 2.0 * l / (lambda * lambda + l * l);
        }
        v + self.poly_part.eval_f64(lambda)
    }
}

/// The split with the default m₀ = |k_{n+1}(σ)| − 1.
pub fn omega_decomposition(sigma: &Weight, rank: &RankData) -> Result<OmegaDecomposition> {
    let m0 = sigma.last().abs() - q(1);
    let m0 = rational::to_i64(&m0).unwrap_or(-1);
    omega_decomposition_split(sigma, m0, rank)
}

/// The same split with an arbitrary 0 ≤ m₀ ≤ |k_{n+1}(σ)| − 1.
pub fn omega_decomposition_split(sigma: &Weight, m0: i64, rank: &RankData) -> Result<OmegaDecomposition> {
    rank.require_odd("omega_decomposition")?;
    check_weight(sigma, rank, Role::M)?;
    if !sigma.is_integral() {
        return Err(Error::Unsupported(format!("half-integral {sigma}")));
    }
    if sigma.last().is_zero() {
        return Err(Error::Unsupported(format!("{sigma} has k_(n+1) = 0")));
    }
    let sigma = if sigma.last().is_negative() { liedata::w0_action(sigma, rank)? } else { sigma.clone() };
    if m0 < 0 || q(m0) > sigma.last() - q(1) {
        return Err(Error::Unsupported(format!("split m0 = {m0} for {sigma}")));
    }
    let dim = liedata::dim_m(&sigma, rank)?;
    let dimq = q(dim as i64);
    let mut poles: BTreeMap<Q, Q> = BTreeMap::new();
    for l in 1..=m0 {
        *poles.entry(q(l)).or_insert_with(Q::zero) -= &dimq;
    }
    let mut poly = RatPoly::zero();
    let xi = shifted(&sigma, rank);
    for j in 2..=rank.n + 1 {
        let pj = p_j(&sigma, j, rank)?;
        let c = &xi[j - 2];
        let mut l = q(m0 + 1);
        while &l < c {
            *poles.entry(l.clone()).or_insert_with(Q::zero) -= pj.eval_even_at_imaginary(&l);
            poly = &poly - &q_from_poly(&pj, &l)?;
            l += Q::one();
        }
        // −dim·c/(c²+λ²) = −(dim/2)·2c/(λ²+c²)
        *poles.entry(c.clone()).or_insert_with(Q::zero) -= &dimq / q(2);
        poly = &poly - &q_from_poly(&pj, c)?.scale(&rational::half());
    }
    poles.retain(|_, v| !v.is_zero());
    Ok(OmegaDecomposition {
        dim_sigma: dim,
        m0,
        pole_terms: poles.into_iter().collect(),
        poly_part: poly,
        digamma_coefficient: -dimq,
    })
}

/// Π(s_α λ_σ)/Π(ρ_M) for α = e_1 ± e_j: slot j of ξ replaced by ∓iλ.
pub fn reflected_pi_ratio(sigma: &Weight, j: usize, plus: bool, lambda: Complex64, rank: &RankData) -> Complex64 {
    let xi: Vec<Complex64> = shifted(sigma, rank).iter().map(|x| Complex64::new(rational::to_f64(x), 0.0)).collect();
    let mut v = xi.clone();
    let il = Complex64::new(0.0, 1.0) * lambda;
    v[j - 2] = if plus { -il } else { il };
    let mut num = Complex64::new(1.0, 0.0);
    for a in 0..v.len() {
        for b in a + 1..v.len() {
            num *= v[a] * v[a] - v[b] * v[b];
        }
    }
    num / rational::to_f64(&pi_polynomial(rank.rho_m()))
}

/// Ω(σ,λ) straight from the digamma formula with reflected Π-ratios.
pub fn omega_direct(sigma: &Weight, lambda: f64, rank: &RankData) -> Result<f64> {
    rank.require_odd("omega_direct")?;
    check_weight(sigma, rank, Role::M)?;
    let dim = liedata::dim_m(sigma, rank)? as f64;
    let xi = shifted(sigma, rank);
    let il = Complex64::new(0.0, lambda);
    let mut s = Complex64::new(0.0, 0.0);
    for j in 2..=rank.n + 1 {
        let x = rational::to_f64(&xi[j - 2]);
        for (plus, sgn) in [(true, 1.0), (false, -1.0)] {
            let h = il + sgn * x;
            let ratio = reflected_pi_ratio(sigma, j, plus, Complex64::new(lambda, 0.0), rank);
            s += ratio * (digamma(1.0 + h) + digamma(1.0 - h));
        }
    }
    Ok(-2.0 * dim * EULER_GAMMA - 0.5 * s.re)
}

/// Σ_{α=e_1±e_j} Π(s_α λ_σ)/Π(ρ_M) as an exact polynomial in λ.
pub fn reflected_pi_sum(sigma: &Weight, rank: &RankData) -> Result<RatPoly> {
    rank.require_odd("reflected_pi_sum")?;
    check_weight(sigma, rank, Role::M)?;
    let xi = shifted(sigma, rank);
    let denom = pi_polynomial(rank.rho_m());
    let mut total = RatPoly::zero();
    for j in 0..xi.len() {
        // (∓iλ)² = −λ² in slot j, the same for both signs
        let sq: Vec<RatPoly> = xi
            .iter()
            .enumerate()
            .map(|(p, x)| if p == j { RatPoly::monomial(-Q::one(), 2) } else { RatPoly::constant(x * x) })
            .collect();
        let mut prod = RatPoly::one();
        for a in 0..sq.len() {
            for b in a + 1..sq.len() {
                prod = &prod * &(&sq[a] - &sq[b]);
            }
        }
        total = &total + &prod.scale(&(q(2) / &denom));
    }
    Ok(total)
}
