//! Assembly of the non-hyperbolic part of log T_X(τ(m)): the L²-torsion
//! polynomial, the constant C(n), the Mellin contributions MI, MT, M𝓘 and
//! MJ, asymptotic sweeps, truncated hyperbolic sums and the even-d Φ.
//!
//! Closed forms keep vol, κ, C_Γ and c_n symbolic; numeric renderings use a
//! [`GeometryInput`] and a value for c_n.

pub mod even;
pub mod hyperbolic;
mod oracle;

pub use oracle::{mical_numeric, mj_numeric, PoleSource};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::cfunc;
use crate::error::{Error, Result};
use crate::kostant::{self, KostantDatum};
use crate::liedata::{self, RankData, Weight};
use crate::mellin::{mellin_poly_gaussian, AtomValues, ClosedForm, Monomial, Transcendental};
use crate::plancherel;
use crate::poly::RatPoly;
use crate::rational::{self, q, Q};

/// vol(X), κ(X) and C(Γ).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GeometryInput {
    pub vol: f64,
    pub kappa: u64,
    pub c_gamma: f64,
}

impl GeometryInput {
    pub fn new(vol: f64, kappa: u64, c_gamma: f64) -> Result<Self> {
        if !(vol.is_finite() && vol > 0.0) || !c_gamma.is_finite() {
            return Err(Error::Unsupported(format!("geometry vol = {vol}, C_Gamma = {c_gamma}")));
        }
        Ok(GeometryInput { vol, kappa, c_gamma })
    }

    pub fn atoms(&self, cn: f64) -> AtomValues {
        AtomValues { cn, vol: self.vol, kappa: self.kappa as f64, cgamma: self.c_gamma, cpsi: None }
    }
}

fn sign_k1(k: usize) -> Q {
    // (−1)^{k+1}
    if k % 2 == 0 {
        q(-1)
    } else {
        q(1)
    }
}

fn data_at(base: &[Q], m: u64, rank: &RankData) -> Result<Vec<KostantDatum>> {
    rank.require_odd("torsion terms")?;
    let tau = liedata::tau_m(base, m)?;
    liedata::check_weight(&tau, rank, liedata::Role::G)?;
    if tau.last().is_zero() {
        return Err(Error::Unsupported(format!("tau_(n+1) + m = 0 for {tau}")));
    }
    kostant::kostant_data(&tau, rank)
}

/// C(n) = (−1)^{n−1} 2^{n(n+1)/2} n! / (2πⁿ ∏_{0≤i<j≤n}(i+j)), literally.
pub fn c_of_n(n: usize) -> Result<ClosedForm> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    let mut num = BigInt::one() << (n * (n + 1) / 2);
    for i in 2..=n {
        num *= i;
    }
    let mut den = BigInt::from(2);
    for i in 0..=n {
        for j in i + 1..=n {
            den *= i + j;
        }
    }
    let mut c = Q::new(num, den);
    if n % 2 == 0 {
        c = -c;
    }
    Ok(ClosedForm::rational(c).with_pi(-(n as i32)))
}

/// log T^{(2)}(τ(m)) = π·c_n·vol·poly(m).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct L2Polynomial {
    pub n: usize,
    #[serde(with = "rational::serde_qvec")]
    pub base: Vec<Q>,
    pub poly: RatPoly,
}

impl L2Polynomial {
    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    pub fn at(&self, m: u64) -> ClosedForm {
        ClosedForm::rational(self.poly.eval(&q(m as i64))).with_pi(1).with_cn().with_vol()
    }
}

/// 2Σ_k(−1)^k ∫_0^{λ_k} P_{σ_k}/c_n at a single m.
pub fn l2_bracket(base: &[Q], m: u64, rank: &RankData) -> Result<Q> {
    let mut s = Q::zero();
    for d in data_at(base, m, rank)? {
        let p = plancherel::plancherel_polynomial(&d.sigma, rank)?;
        let v = p.integral_to(&d.lambda);
        s += if d.k % 2 == 0 { v } else { -v };
    }
    Ok(s * q(2))
}

/// The polynomial in m, by exact interpolation and checked at extra points.
pub fn l2_polynomial(base: &[Q], rank: &RankData) -> Result<L2Polynomial> {
    rank.require_odd("l2_polynomial")?;
    let deg = rank.n * (rank.n + 1) / 2 + 1;
    let pts: Vec<(Q, Q)> = (1..=deg as u64 + 1)
        .map(|m| Ok((q(m as i64), l2_bracket(base, m, rank)?)))
        .collect::<Result<_>>()?;
    let poly = RatPoly::interpolate(&pts);
    for m in deg as u64 + 2..=deg as u64 + 4 {
        if poly.eval(&q(m as i64)) != l2_bracket(base, m, rank)? {
            return Err(Error::Invariant(format!("L2 values are not polynomial of degree {deg}")));
        }
    }
    Ok(L2Polynomial { n: rank.n, base: base.to_vec(), poly })
}

/// c_n fixed by matching the top coefficient of l2 against −C(n)·m·dim τ(m).
#[derive(Clone, Debug, Serialize)]
pub struct Calibration {
    pub n: usize,
    /// c_n from |C(n)|, a rational multiple of π^{−(n+1)}
    pub cn: ClosedForm,
    pub cn_value: f64,
    /// C(n) exactly as printed, sign included
    pub c_literal: ClosedForm,
    /// lc(poly)/lc(m·dim τ(m))
    #[serde(with = "rational::serde_q")]
    pub leading_ratio: Q,
    /// the printed C(n) is negative while C(n) > 0 is asserted
    pub sign_conflict: bool,
}

pub fn calibrate_cn(base: &[Q], rank: &RankData) -> Result<Calibration> {
    let l2 = l2_polynomial(base, rank)?;
    let dim = liedata::dim_tau_m_polynomial(base, rank)?;
    let mdim = &dim * &RatPoly::monomial(Q::one(), 1);
    if l2.poly.degree() != mdim.degree() || mdim.leading().is_zero() {
        return Err(Error::Singular(format!(
            "degrees {:?} and {:?} of l2 and m dim tau(m) differ",
            l2.poly.degree(),
            mdim.degree()
        )));
    }
    let ratio = l2.poly.leading() / mdim.leading();
    let literal = c_of_n(rank.n)?;
    let c_abs = literal.coefficient(&Monomial { pi: -(rank.n as i32), ..Monomial::default() }).abs();
    // π c_n lc(poly) = −|C| lc(m dim)
    let cn_rat = -(&c_abs) / &ratio;
    if !cn_rat.is_positive() {
        return Err(Error::Invariant(format!("calibrated c_n = {cn_rat} is not positive")));
    }
    let cn = ClosedForm::rational(cn_rat).with_pi(-(rank.n as i32) - 1);
    let cn_value = cn.eval(&AtomValues::default())?;
    let sign_conflict = literal.terms().any(|(_, c)| c.is_negative());
    Ok(Calibration { n: rank.n, cn, cn_value, c_literal: literal, leading_ratio: ratio, sign_conflict })
}

/// C(n) recovered from a value of c_n: −π c_n lc(poly)/lc(m dim τ(m)).
pub fn leading_constant(base: &[Q], cn: &ClosedForm, rank: &RankData) -> Result<ClosedForm> {
    let l2 = l2_polynomial(base, rank)?;
    let dim = liedata::dim_tau_m_polynomial(base, rank)?;
    let r = -(l2.poly.leading() / dim.leading());
    Ok(cn.scale(&r).with_pi(1))
}

/// MI = 2 log T^{(2)}, from the L² polynomial.
pub fn mi_term(base: &[Q], m: u64, rank: &RankData) -> Result<ClosedForm> {
    data_at(base, m, rank)?;
    Ok(l2_polynomial(base, rank)?.at(m).scale(&q(2)))
}

/// MI term by term: 2 vol c_n Σ_k(−1)^{k+1} E_k(0).
pub fn mi_term_direct(base: &[Q], m: u64, rank: &RankData) -> Result<ClosedForm> {
    let mut total = ClosedForm::zero();
    for d in data_at(base, m, rank)? {
        let p = plancherel::plancherel_polynomial(&d.sigma, rank)?;
        total = &total + &mellin_poly_gaussian(&p, &d.lambda)?.scale(&(sign_k1(d.k) * q(2)));
    }
    Ok(total.with_cn().with_vol())
}

/// MT = −C_Γ Σ_k(−1)^{k+1} dim σ_k λ_k.
pub fn mt_term(base: &[Q], m: u64, rank: &RankData) -> Result<ClosedForm> {
    let mut s = Q::zero();
    for d in data_at(base, m, rank)? {
        s += sign_k1(d.k) * q(liedata::dim_m(&d.sigma, rank)? as i64) * &d.lambda;
    }
    Ok(ClosedForm::rational(-s).with_cgamma())
}

/// Contribution of one σ_{τ(m),k} to M𝓘, before the sign (−1)^{k+1} and
/// the factor κ.
pub fn mical_block(sigma: &Weight, lambda: &Q, m: u64, rank: &RankData) -> Result<ClosedForm> {
    if m == 0 {
        return Err(Error::Unsupported("M-cal needs m >= 1".into()));
    }
    let dec = plancherel::omega_decomposition_split(sigma, m as i64 - 1, rank)?;
    let d = &dec.digamma_coefficient;
    // d·(ψ-block): d(−2 log Γ(1+λ) + C_ψ) − 2dγλ, with the l ≤ m−1 poles
    // (coefficient d each) folded into log Γ(m+λ)
    let mut out = &ClosedForm::log_gamma(lambda + q(m as i64), q(-2) * d)
        + &ClosedForm::term(Monomial::of(Transcendental::Cpsi), d.clone());
    out.add_term(Monomial::of(Transcendental::EulerGamma), q(-2) * d * lambda);
    for (l, c) in &dec.pole_terms {
        if l <= &q(m as i64 - 1) {
            if c != d {
                return Err(Error::Invariant(format!("pole coefficient {c} at l = {l} below the split")));
            }
            continue;
        }
        out = &out + &ClosedForm::log(lambda + l, q(-2) * c);
    }
    // (1/2π)·Mellin of the polynomial part: −∫_0^λ poly(iλ')dλ'
    let rot = dec.poly_part.rotate_even();
    out.add_term(Monomial::one(), -rot.integral_to(lambda));
    Ok(out)
}

/// M𝓘 = Σ_k(−1)^{k+1} κ·block_k.
pub fn mical_term(base: &[Q], m: u64, rank: &RankData) -> Result<ClosedForm> {
    if m == 0 {
        return Err(Error::Unsupported("M-cal needs m >= 1".into()));
    }
    let mut total = ClosedForm::zero();
    for d in data_at(base, m, rank)? {
        total = &total + &mical_block(&d.sigma, &d.lambda, m, rank)?.scale(&sign_k1(d.k));
    }
    Ok(total.with_kappa())
}

/// One logarithm of MJ before summation.
#[derive(Clone, Debug, Serialize)]
pub struct MjAtom {
    pub k: usize,
    pub sigma: Weight,
    #[serde(with = "rational::serde_q")]
    pub radicand: Q,
    #[serde(with = "rational::serde_q")]
    pub shift: Q,
    #[serde(with = "rational::serde_q")]
    pub coefficient: Q,
}

/// Every log(√(λ_k² + c(σ_k) − c(σ)) + l + ρ_j) with its coefficient/κ.
pub fn mj_atoms(base: &[Q], m: u64, rank: &RankData) -> Result<Vec<MjAtom>> {
    if m == 0 {
        return Err(Error::Unsupported("MJ needs m >= 1".into()));
    }
    let mut out = Vec::new();
    for d in data_at(base, m, rank)? {
        let c_k = liedata::casimir_m(&d.sigma, rank)?;
        for sigma in cfunc::support_sigmas(base, m, d.k, rank)? {
            let f = cfunc::f_km(&sigma, base, m, d.k, rank)?;
            if f.is_empty() {
                continue;
            }
            let radicand = &d.lambda * &d.lambda + &c_k - liedata::casimir_m(&sigma, rank)?;
            if !radicand.is_positive() {
                return Err(Error::Invariant(format!("radicand {radicand} for sigma = {sigma}")));
            }
            let dim = q(liedata::dim_m(&sigma, rank)? as i64);
            for t in &f.terms {
                // ∫_{D_ε} e^{-tz²} i/(iz−ℓ) dz is iπ·(the j = |ℓ| kernel), negated for ℓ > 0
                let s = if t.location.is_positive() { q(-1) } else { q(1) };
                out.push(MjAtom {
                    k: d.k,
                    sigma: sigma.clone(),
                    radicand: radicand.clone(),
                    shift: t.location.abs(),
                    coefficient: sign_k1(d.k) * &dim * q(t.coeff) * s / q(2),
                });
            }
        }
    }
    Ok(out)
}

/// MJ = κ Σ coefficient·log(√radicand + shift).
pub fn mj_term(base: &[Q], m: u64, rank: &RankData) -> Result<ClosedForm> {
    let mut total = ClosedForm::zero();
    for a in mj_atoms(base, m, rank)? {
        total = &total + &ClosedForm::log_sqrt_plus(a.radicand, a.shift, a.coefficient);
    }
    Ok(total.with_kappa())
}

/// ½(MI + MT + M𝓘 + MJ); MH needs a length spectrum and is left out.
pub fn nonhyperbolic_log_torsion(base: &[Q], m: u64, rank: &RankData) -> Result<ClosedForm> {
    let parts = [
        mi_term(base, m, rank)?,
        mt_term(base, m, rank)?,
        mical_term(base, m, rank)?,
        mj_term(base, m, rank)?,
    ];
    Ok(parts.into_iter().sum::<ClosedForm>().scale(&rational::half()))
}

#[derive(Clone, Debug, Serialize)]
pub struct TermNumeric {
    pub mi: f64,
    pub mt: f64,
    pub mical: f64,
    pub mj: f64,
    pub log_torsion: f64,
    pub l2: f64,
    pub residual: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct TermReport {
    pub n: usize,
    #[serde(with = "rational::serde_qvec")]
    pub base: Vec<Q>,
    pub m: u64,
    pub geometry: GeometryInput,
    pub cn: f64,
    pub mi: ClosedForm,
    pub mt: ClosedForm,
    pub mical: ClosedForm,
    pub mj: ClosedForm,
    pub log_torsion: ClosedForm,
    pub cpsi_coefficient: ClosedForm,
    pub numeric: TermNumeric,
    pub excluded: &'static str,
}

pub fn term_report(base: &[Q], m: u64, geom: &GeometryInput, cn: f64, rank: &RankData) -> Result<TermReport> {
    let mi = mi_term(base, m, rank)?;
    let mt = mt_term(base, m, rank)?;
    let mical = mical_term(base, m, rank)?;
    let mj = mj_term(base, m, rank)?;
    let total = [mi.clone(), mt.clone(), mical.clone(), mj.clone()]
        .into_iter()
        .sum::<ClosedForm>()
        .scale(&rational::half());
    let cpsi = total.cpsi_coefficient();
    if !cpsi.is_zero() || !mical.cpsi_coefficient().is_zero() {
        return Err(Error::Invariant(format!("C_psi survives with coefficient {cpsi}")));
    }
    let at = geom.atoms(cn);
    let ev = |f: &ClosedForm| f.eval(&at);
    let numeric = TermNumeric {
        mi: ev(&mi)?,
        mt: ev(&mt)?,
        mical: ev(&mical)?,
        mj: ev(&mj)?,
        log_torsion: ev(&total)?,
        l2: ev(&mi)? / 2.0,
        residual: ev(&total)? - ev(&mi)? / 2.0,
    };
    Ok(TermReport {
        n: rank.n,
        base: base.to_vec(),
        m,
        geometry: *geom,
        cn,
        mi,
        mt,
        mical,
        mj,
        log_torsion: total,
        cpsi_coefficient: cpsi,
        numeric,
        excluded: "MH (hyperbolic contribution) needs the length spectrum of Gamma",
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepRow {
    pub m: u64,
    pub dim_tau: f64,
    pub l2: f64,
    pub mt: f64,
    pub mical: f64,
    pub mj: f64,
    pub log_torsion: f64,
    pub residual: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Sweep {
    pub rows: Vec<SweepRow>,
    pub residual_slope: f64,
    pub l2_slope: f64,
    pub mt_slope: f64,
    pub mical_slope: f64,
    pub mj_slope: f64,
    /// l2(m)/(m dim τ(m)) at the largest m
    pub l2_ratio: f64,
}

/// Least-squares slope of log|y| against log m over the top half.
pub fn top_half_slope(ms: &[u64], ys: &[f64]) -> Result<f64> {
    if ms.len() < 8 {
        return Err(Error::Unsupported(format!("{} points, a sweep fit needs at least 8", ms.len())));
    }
    let start = ms.len() / 2;
    let pts: Vec<(f64, f64)> = ms[start..]
        .iter()
        .zip(&ys[start..])
        .filter(|(_, y)| y.abs() > 0.0)
        .map(|(&m, y)| ((m as f64).ln(), y.abs().ln()))
        .collect();
    if pts.len() < 4 {
        return Ok(f64::NEG_INFINITY);
    }
    let nf = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / nf;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / nf;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    Ok(sxy / sxx)
}

pub fn asymptotic_sweep(base: &[Q], ms: &[u64], geom: &GeometryInput, cn: f64, rank: &RankData) -> Result<Sweep> {
    if ms.len() < 8 {
        return Err(Error::Unsupported(format!("{} points, a sweep fit needs at least 8", ms.len())));
    }
    let l2 = l2_polynomial(base, rank)?;
    let dim = liedata::dim_tau_m_polynomial(base, rank)?;
    let at = geom.atoms(cn);
    let rows: Vec<SweepRow> = ms
        .par_iter()
        .map(|&m| {
            let l2v = l2.at(m).eval(&at)?;
            let mt = mt_term(base, m, rank)?.eval(&at)?;
            let mical = mical_term(base, m, rank)?.eval(&at)?;
            let mj = mj_term(base, m, rank)?.eval(&at)?;
            let total = l2v + 0.5 * (mt + mical + mj);
            Ok(SweepRow {
                m,
                dim_tau: rational::to_f64(&dim.eval(&q(m as i64))),
                l2: l2v,
                mt,
                mical,
                mj,
                log_torsion: total,
                residual: total - l2v,
            })
        })
        .collect::<Result<_>>()?;
    let col = |f: fn(&SweepRow) -> f64| rows.iter().map(f).collect::<Vec<f64>>();
    let last = rows.last().expect("nonempty");
    Ok(Sweep {
        residual_slope: top_half_slope(ms, &col(|r| r.residual))?,
        l2_slope: top_half_slope(ms, &col(|r| r.l2))?,
        mt_slope: top_half_slope(ms, &col(|r| r.mt))?,
        mical_slope: top_half_slope(ms, &col(|r| r.mical))?,
        mj_slope: top_half_slope(ms, &col(|r| r.mj))?,
        l2_ratio: last.l2 / (last.m as f64 * last.dim_tau),
        rows,
    })
}
