//! Hyperbolic weights L(γ;σ), their w0-symmetrisation and the truncated
//! hyperbolic heat-kernel sum over a table of closed geodesics.

use std::io::Read;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::branching::characters::{weyl_character, weyl_denominator};
use crate::error::{Error, Result};
use crate::kostant;
use crate::liedata::{self, check_weight, RankData, Role, RootType, Weight};
use crate::rational::{self, Q};

/// Angle perturbation used when the Weyl denominator vanishes.
pub const DEGENERATE_EPS: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeodesicRecord {
    pub length: f64,
    pub prim_length: f64,
    pub angles: Vec<f64>,
}

impl GeodesicRecord {
    pub fn new(length: f64, prim_length: f64, angles: Vec<f64>) -> Result<Self> {
        if !(length > 0.0 && prim_length > 0.0 && length.is_finite()) {
            return Err(Error::Parse(format!("lengths {length}, {prim_length} must be positive")));
        }
        if prim_length > length * (1.0 + 1e-12) {
            return Err(Error::Parse(format!("primitive length {prim_length} exceeds length {length}")));
        }
        let r = length / prim_length;
        if (r - r.round()).abs() > 1e-9 * r {
            return Err(Error::Parse(format!("length/prim_length = {r} is not an integer")));
        }
        let pi = std::f64::consts::PI;
        if let Some(a) = angles.iter().find(|a| !(**a > -pi && **a <= pi)) {
            return Err(Error::Parse(format!("angle {a} outside (-pi, pi]")));
        }
        Ok(GeodesicRecord { length, prim_length, angles })
    }

    /// n_Γ(γ) = ℓ(γ)/ℓ(γ₀)
    pub fn multiplicity(&self) -> u64 {
        (self.length / self.prim_length).round() as u64
    }
}

/// Reads `length,prim_length,theta_1,…,theta_n` rows.
pub fn parse_geodesics<R: Read>(reader: R, n: usize) -> Result<Vec<GeodesicRecord>> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let headers = rdr.headers().map_err(|e| Error::Parse(format!("geodesic CSV header: {e}")))?.clone();
    let mut expect = vec!["length".to_string(), "prim_length".to_string()];
    expect.extend((1..=n).map(|j| format!("theta_{j}")));
    let got: Vec<&str> = headers.iter().collect();
    if got != expect.iter().map(String::as_str).collect::<Vec<_>>() {
        return Err(Error::Parse(format!("geodesic CSV header {got:?}, expected {expect:?}")));
    }
    let mut out = Vec::new();
    for (line, row) in rdr.records().enumerate() {
        let row = row.map_err(|e| Error::Parse(format!("geodesic CSV row {}: {e}", line + 2)))?;
        let vals: Vec<f64> = row
            .iter()
            .map(|s| s.parse::<f64>().map_err(|_| Error::Parse(format!("row {}: {s:?} is not a number", line + 2))))
            .collect::<Result<_>>()?;
        out.push(GeodesicRecord::new(vals[0], vals[1], vals[2..].to_vec())?);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct HyperbolicWeight {
    pub re: f64,
    pub im: f64,
    /// angles were nudged by [`DEGENERATE_EPS`] to evaluate the character
    pub perturbed: bool,
}

impl HyperbolicWeight {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// Tr σ(m_γ) by the Weyl character formula of Spin(2n).
pub fn character(sigma: &Weight, angles: &[f64], rank: &RankData) -> Result<(Complex64, bool)> {
    check_weight(sigma, rank, Role::M)?;
    if angles.len() != rank.n {
        return Err(Error::WrongLength { expected: rank.n, got: angles.len() });
    }
    if sigma.entries.iter().all(|x| x == &Q::from_integer(0.into())) {
        return Ok((Complex64::new(1.0, 0.0), false));
    }
    if weyl_denominator(angles, RootType::D).norm() > 1e-6 {
        return Ok((weyl_character(&sigma.entries, angles, RootType::D), false));
    }
    let nudged: Vec<f64> = angles.iter().enumerate().map(|(j, a)| a + DEGENERATE_EPS * (j + 1) as f64).collect();
    Ok((weyl_character(&sigma.entries, &nudged, RootType::D), true))
}

/// conj(Tr σ(m_γ)) e^{−nℓ} / ∏_j (1 − e^{−ℓ}e^{iθ_j})(1 − e^{−ℓ}e^{−iθ_j}).
pub fn hyperbolic_weight(rec: &GeodesicRecord, sigma: &Weight, rank: &RankData) -> Result<HyperbolicWeight> {
    rank.require_odd("hyperbolic_weight")?;
    let (chi, perturbed) = character(sigma, &rec.angles, rank)?;
    let q = (-rec.length).exp();
    let mut det = Complex64::new(1.0, 0.0);
    for &th in &rec.angles {
        let e = Complex64::new(0.0, th).exp();
        det *= (1.0 - q * e) * (1.0 - q / e);
    }
    let w = chi.conj() * (-(rank.n as f64) * rec.length).exp() / det;
    Ok(HyperbolicWeight { re: w.re, im: w.im, perturbed })
}

/// L(γ;σ) + L(γ;w0σ), which is real.
pub fn l_sym(rec: &GeodesicRecord, sigma: &Weight, rank: &RankData) -> Result<f64> {
    let a = hyperbolic_weight(rec, sigma, rank)?.value();
    let b = hyperbolic_weight(rec, &liedata::w0_action(sigma, rank)?, rank)?.value();
    Ok((a + b).re)
}

/// Σ_k(−1)^{k+1} e^{−tλ_k²} Σ_γ ℓ(γ₀) L_sym(γ;σ_k) e^{−ℓ²/4t}/√(4πt) over the table.
pub fn h_series(t: f64, base: &[Q], m: u64, table: &[GeodesicRecord], rank: &RankData) -> Result<f64> {
    if !(t > 0.0) {
        return Err(Error::Unsupported(format!("t = {t} must be positive")));
    }
    let tau = liedata::tau_m(base, m)?;
    let mut total = 0.0;
    for d in kostant::kostant_data(&tau, rank)? {
        let lam = rational::to_f64(&d.lambda);
        let s = if d.k % 2 == 0 { -1.0 } else { 1.0 };
        let mut inner = 0.0;
        for g in table {
            inner += g.prim_length * l_sym(g, &d.sigma, rank)? * (-g.length * g.length / (4.0 * t)).exp()
                / (4.0 * std::f64::consts::PI * t).sqrt();
        }
        total += s * (-t * lam * lam).exp() * inner;
    }
    Ok(total)
}
