//! Exact linear combinations of transcendental atoms.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};
use crate::rational::{self, q, Q};
use crate::special::EULER_GAMMA;

/// The non-algebraic factor of a monomial (at most one per monomial).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Transcendental {
    EulerGamma,
    /// log q, q > 0
    Log(Q),
    /// log Γ(q), q > 0
    LogGamma(Q),
    /// log(√r + s) with r not a rational square
    LogSqrtPlus { radicand: Q, shift: Q },
    /// The digamma constant; it must cancel in assembled quantities.
    Cpsi,
}

/// π^pi · c_n^cn · vol^vol · κ^kappa · C_Γ^cgamma · transcendental
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub pi: i32,
    pub cn: u32,
    pub vol: u32,
    pub kappa: u32,
    pub cgamma: u32,
    pub trans: Option<Transcendental>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn of(trans: Transcendental) -> Self {
        Monomial { trans: Some(trans), ..Monomial::default() }
    }

    fn times(&self, o: &Monomial) -> Monomial {
        assert!(
            self.trans.is_none() || o.trans.is_none(),
            "product of two transcendental atoms is not representable"
        );
        Monomial {
            pi: self.pi + o.pi,
            cn: self.cn + o.cn,
            vol: self.vol + o.vol,
            kappa: self.kappa + o.kappa,
            cgamma: self.cgamma + o.cgamma,
            trans: self.trans.clone().or_else(|| o.trans.clone()),
        }
    }

    pub fn key(&self) -> String {
        let mut parts = Vec::new();
        match self.pi {
            0 => {}
            1 => parts.push("pi".to_string()),
            p => parts.push(format!("pi^{p}")),
        }
        for (name, e) in [("cn", self.cn), ("vol", self.vol), ("kappa", self.kappa), ("cgamma", self.cgamma)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                e => parts.push(format!("{name}^{e}")),
            }
        }
        if let Some(t) = &self.trans {
            parts.push(match t {
                Transcendental::EulerGamma => "gamma_E".to_string(),
                Transcendental::Log(x) => format!("log({x})"),
                Transcendental::LogGamma(x) => format!("loggamma({x})"),
                Transcendental::LogSqrtPlus { radicand, shift } => format!("log(sqrt({radicand})+{shift})"),
                Transcendental::Cpsi => "C_psi".to_string(),
            });
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// Numeric values for the symbolic constants.
#[derive(Clone, Copy, Debug)]
pub struct AtomValues {
    pub cn: f64,
    pub vol: f64,
    pub kappa: f64,
    pub cgamma: f64,
    /// None makes any surviving C_psi an error.
    pub cpsi: Option<f64>,
}

impl Default for AtomValues {
    fn default() -> Self {
        AtomValues { cn: 1.0, vol: 1.0, kappa: 1.0, cgamma: 0.0, cpsi: None }
    }
}

fn ln_bigint(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        x.to_f64().unwrap_or(f64::NAN).ln()
    } else {
        let shift = bits - 64;
        (x >> shift).to_f64().unwrap_or(f64::NAN).ln() + shift as f64 * std::f64::consts::LN_2
    }
}

/// log of a positive rational without overflowing f64.
pub fn ln_q(x: &Q) -> f64 {
    ln_bigint(x.numer()) - ln_bigint(x.denom())
}

impl Transcendental {
    pub fn eval(&self, cpsi: Option<f64>) -> Result<f64> {
        Ok(match self {
            Transcendental::EulerGamma => EULER_GAMMA,
            Transcendental::Log(x) => ln_q(x),
            Transcendental::LogGamma(x) => ln_gamma(rational::to_f64(x)),
            Transcendental::LogSqrtPlus { radicand, shift } => {
                (rational::to_f64(radicand).sqrt() + rational::to_f64(shift)).ln()
            }
            Transcendental::Cpsi => {
                cpsi.ok_or_else(|| Error::Invariant("C_psi survives in an assembled quantity".into()))?
            }
        })
    }
}

/// Σ coefficient · monomial with exact rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClosedForm {
    terms: BTreeMap<Monomial, Q>,
}

impl ClosedForm {
    pub fn zero() -> Self {
        ClosedForm::default()
    }

    pub fn rational(c: Q) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: Q) -> Self {
        let mut f = ClosedForm::zero();
        f.add_term(m, c);
        f
    }

    /// c·log x, folding log 1 away.
    pub fn log(x: Q, c: Q) -> Self {
        assert!(x.is_positive(), "log of a nonpositive rational");
        if x == q(1) {
            return ClosedForm::zero();
        }
        Self::term(Monomial::of(Transcendental::Log(x)), c)
    }

    /// c·log Γ(x); Γ(1) = Γ(2) = 1 fold away.
    pub fn log_gamma(x: Q, c: Q) -> Self {
        assert!(x.is_positive(), "log gamma of a nonpositive rational");
        if x == q(1) || x == q(2) {
            return ClosedForm::zero();
        }
        Self::term(Monomial::of(Transcendental::LogGamma(x)), c)
    }

    /// c·log(√r + s), exact when r is a square.
    pub fn log_sqrt_plus(radicand: Q, shift: Q, c: Q) -> Self {
        match rational::sqrt_exact(&radicand) {
            Some(root) => Self::log(root + shift, c),
            None => Self::term(Monomial::of(Transcendental::LogSqrtPlus { radicand, shift }), c),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = ClosedForm::zero();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    /// Multiplies every monomial by `m` (at most one side transcendental).
    pub fn times(&self, m: &Monomial) -> Self {
        let mut out = ClosedForm::zero();
        for (k, v) in &self.terms {
            out.add_term(k.times(m), v.clone());
        }
        out
    }

    pub fn with_pi(&self, e: i32) -> Self {
        self.times(&Monomial { pi: e, ..Monomial::default() })
    }
    pub fn with_cn(&self) -> Self {
        self.times(&Monomial { cn: 1, ..Monomial::default() })
    }
    pub fn with_vol(&self) -> Self {
        self.times(&Monomial { vol: 1, ..Monomial::default() })
    }
    pub fn with_kappa(&self) -> Self {
        self.times(&Monomial { kappa: 1, ..Monomial::default() })
    }
    pub fn with_cgamma(&self) -> Self {
        self.times(&Monomial { cgamma: 1, ..Monomial::default() })
    }

    /// Part multiplying C_psi, with the C_psi factor removed.
    pub fn cpsi_coefficient(&self) -> ClosedForm {
        let mut out = ClosedForm::zero();
        for (m, v) in &self.terms {
            if m.trans == Some(Transcendental::Cpsi) {
                out.add_term(Monomial { trans: None, ..m.clone() }, v.clone());
            }
        }
        out
    }

    /// Coefficient of the rational (non-transcendental) monomial `m`.
    pub fn coefficient(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    /// True when some logarithm has an irrational square-root argument.
    pub fn has_algebraic_logs(&self) -> bool {
        self.terms
            .keys()
            .any(|m| matches!(m.trans, Some(Transcendental::LogSqrtPlus { .. })))
    }

    pub fn atoms_used(&self) -> BTreeSet<&'static str> {
        let mut s = BTreeSet::new();
        for m in self.terms.keys() {
            if m.pi > 0 {
                s.insert("Pi");
            }
            if m.pi < 0 {
                s.insert("InvPi");
            }
            if m.cn > 0 {
                s.insert("Cn");
            }
            if m.vol > 0 {
                s.insert("Vol");
            }
            if m.kappa > 0 {
                s.insert("Kappa");
            }
            if m.cgamma > 0 {
                s.insert("CGamma");
            }
            match &m.trans {
                None => {
                    if m.pi == 0 {
                        s.insert("One");
                    }
                }
                Some(Transcendental::EulerGamma) => {
                    s.insert("EulerGamma");
                }
                Some(Transcendental::Log(_)) | Some(Transcendental::LogSqrtPlus { .. }) => {
                    s.insert("Log");
                }
                Some(Transcendental::LogGamma(_)) => {
                    s.insert("LogGamma");
                }
                Some(Transcendental::Cpsi) => {
                    s.insert("Cpsi");
                }
            }
        }
        s
    }

    pub fn eval(&self, at: &AtomValues) -> Result<f64> {
        let mut acc = 0.0;
        // sum small terms first for a deterministic, slightly better rounding
        let mut parts = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut x = rational::to_f64(c)
                * std::f64::consts::PI.powi(m.pi)
                * at.cn.powi(m.cn as i32)
                * at.vol.powi(m.vol as i32)
                * at.kappa.powi(m.kappa as i32)
                * at.cgamma.powi(m.cgamma as i32);
            if let Some(t) = &m.trans {
                x *= t.eval(at.cpsi)?;
            }
            parts.push(x);
        }
        parts.sort_by(|a, b| a.abs().total_cmp(&b.abs()));
        for x in parts {
            acc += x;
        }
        Ok(acc)
    }
}

impl Add for &ClosedForm {
    type Output = ClosedForm;
    fn add(self, o: &ClosedForm) -> ClosedForm {
        let mut out = self.clone();
        for (m, v) in &o.terms {
            out.add_term(m.clone(), v.clone());
        }
        out
    }
}

impl Sub for &ClosedForm {
    type Output = ClosedForm;
    fn sub(self, o: &ClosedForm) -> ClosedForm {
        self + &(-o)
    }
}

impl Neg for &ClosedForm {
    type Output = ClosedForm;
    fn neg(self) -> ClosedForm {
        self.scale(&q(-1))
    }
}

impl std::iter::Sum for ClosedForm {
    fn sum<I: Iterator<Item = ClosedForm>>(it: I) -> ClosedForm {
        it.fold(ClosedForm::zero(), |a, b| &a + &b)
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m.trans.is_none() && m.pi == 0 && m.key() == "1" {
                write!(f, "{c}")?;
            } else {
                write!(f, "({c})*{}", m.key())?;
            }
        }
        Ok(())
    }
}

impl Serialize for ClosedForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            map.serialize_entry(&m.key(), &rational::fmt(c))?;
        }
        map.end()
    }
}
