//! Univariate polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{self, q, Q};

/// Coefficients in ascending degree, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RatPoly {
    #[serde(with = "rational::serde_qvec")]
    coeffs: Vec<Q>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Q) -> Self {
        RatPoly::new(vec![c])
    }

    pub fn one() -> Self {
        RatPoly::constant(Q::one())
    }

    /// c·x^k
    pub fn monomial(c: Q, k: usize) -> Self {
        let mut v = vec![Q::zero(); k + 1];
        v[k] = c;
        RatPoly::new(v)
    }

    /// a + b·x
    pub fn linear(a: Q, b: Q) -> Self {
        RatPoly::new(vec![a, b])
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        RatPoly::new(cs.iter().map(|&c| q(c)).collect())
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.coeffs.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Q {
        self.coeffs.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(|c| c.is_zero())
    }

    pub fn scale(&self, c: &Q) -> Self {
        RatPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.coeffs.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + rational::to_f64(c))
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + rational::to_f64(c))
    }

    /// P(i·x) for an even polynomial, which is real: Σ c_{2k} (−1)^k x^{2k}.
    pub fn eval_even_at_imaginary(&self, x: &Q) -> Q {
        debug_assert!(self.is_even());
        self.rotate_even().eval(x)
    }

    /// The even polynomial x ↦ P(i·x).
    pub fn rotate_even(&self) -> Self {
        debug_assert!(self.is_even());
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 4 == 2 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn derivative(&self) -> Self {
        RatPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * q(k as i64)).collect())
    }

    /// Antiderivative vanishing at 0.
    pub fn antiderivative(&self) -> Self {
        let mut v = vec![Q::zero()];
        v.extend(self.coeffs.iter().enumerate().map(|(k, c)| c / q(k as i64 + 1)));
        RatPoly::new(v)
    }

    /// ∫₀^c P.
    pub fn integral_to(&self, c: &Q) -> Q {
        self.antiderivative().eval(c)
    }

    /// P(a + b·x).
    pub fn compose_linear(&self, a: &Q, b: &Q) -> Self {
        let inner = RatPoly::linear(a.clone(), b.clone());
        self.coeffs.iter().rev().fold(RatPoly::zero(), |acc, c| &(&acc * &inner) + &RatPoly::constant(c.clone()))
    }

    /// Euclidean division; returns (quotient, remainder).
    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.coeffs.len() - 1;
        let lead = d.leading();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (RatPoly::zero(), self.clone());
        }
        let mut quo = vec![Q::zero(); r.len() - dd];
        for k in (0..quo.len()).rev() {
            let c = &r[k + dd] / &lead;
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    r[k + i] -= &c * dc;
                }
            }
            quo[k] = c;
        }
        r.truncate(dd);
        (RatPoly::new(quo), RatPoly::new(r))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(RatPoly::one(), |acc, _| &acc * self)
    }

    /// Exact interpolation through (x_i, y_i) with distinct nodes.
    pub fn interpolate(points: &[(Q, Q)]) -> Self {
        let mut out = RatPoly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = RatPoly::one();
            let mut denom = Q::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    basis = &basis * &RatPoly::linear(-xj, Q::one());
                    denom *= xi - xj;
                }
            }
            out = &out + &basis.scale(&(yi / denom));
        }
        out
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, o: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        RatPoly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, o: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        RatPoly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, o: &RatPoly) -> RatPoly {
        if self.is_zero() || o.is_zero() {
            return RatPoly::zero();
        }
        let mut v = vec![Q::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        RatPoly::new(v)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{k}")?,
            }
        }
        Ok(())
    }
}
