//! Command-line front end. Every subcommand prints one JSON document (or a
//! CSV table) to stdout; diagnostics go to stderr.
//!
//! Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0  | success |
//! | 2  | malformed weight, rational or range |
//! | 3  | unreadable or malformed geodesic CSV |
//! | 4  | numeric tolerance not met |
//! | 5  | invariant violated |
//! | 6  | input outside the supported domain |
//! | 64 | command-line usage error |

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Map, Value};

use crate::error::Error;
use crate::liedata::{self, Parity, RankData, Role, Weight};
use crate::mellin::{oracle, AtomValues};
use crate::poly::RatPoly;
use crate::rational::{self, Q};
use crate::torsion::{self, even, hyperbolic, GeometryInput};
use crate::{branching, cfunc, kostant, plancherel};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CSV: i32 = 3;
pub const EXIT_TOLERANCE: i32 = 4;
pub const EXIT_INVARIANT: i32 = 5;
pub const EXIT_UNSUPPORTED: i32 = 6;
pub const EXIT_USAGE: i32 = 64;

/// Default significant digits for numeric output.
pub const PRECISION_ENV: &str = "HYPERTORSION_PRECISION";

#[derive(Parser, Debug)]
#[command(name = "hypertorsion", version, about = "Representation data and Mellin closed forms for analytic torsion")]
struct Cli {
    /// output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// significant digits of numeric values (at least 16)
    #[arg(long, global = true, env = PRECISION_ENV, default_value_t = 17)]
    precision: usize,
    /// which renderings to emit
    #[arg(long, global = true, value_enum, default_value_t = Mode::Both)]
    mode: Mode,
    /// write to this file instead of stdout
    #[arg(long, short = 'o', global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Numeric,
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ParityArg {
    Odd,
    Even,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RoleArg {
    G,
    K,
    M,
}

impl From<RoleArg> for Role {
    fn from(r: RoleArg) -> Role {
        match r {
            RoleArg::G => Role::G,
            RoleArg::K => Role::K,
            RoleArg::M => Role::M,
        }
    }
}

#[derive(Args, Debug, Clone)]
struct RankArgs {
    /// rank n (d = 2n+1 odd, d = 2n+2 even)
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = ParityArg::Odd)]
    parity: ParityArg,
}

impl RankArgs {
    fn rank(&self) -> Result<RankData, Error> {
        let p = match self.parity {
            ParityArg::Odd => Parity::Odd,
            ParityArg::Even => Parity::Even,
        };
        RankData::new(self.n, p)
    }
}

#[derive(Args, Debug, Clone)]
struct GeometryArgs {
    #[arg(long, default_value_t = 1.0)]
    vol: f64,
    #[arg(long, default_value_t = 1)]
    kappa: u64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    cgamma: f64,
    /// numeric value of c_n; calibrated from the L² polynomial if omitted
    #[arg(long)]
    cn: Option<f64>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// dimension of an irreducible G-, K- or M-representation
    Dim {
        #[command(flatten)]
        rank: RankArgs,
        #[arg(long, value_enum)]
        role: RoleArg,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Casimir eigenvalue of a G- or M-weight, or of a principal series with --lambda
    Casimir {
        #[command(flatten)]
        rank: RankArgs,
        #[arg(long, value_enum)]
        role: RoleArg,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        lambda: Option<f64>,
    },
    /// Kostant data (k, σ_{τ,k}, λ_{τ,k}) of a G-weight
    Kostant {
        #[command(flatten)]
        rank: RankArgs,
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
    },
    /// branching G→K, K→M, or the signed K-types ν(σ) of an M-weight
    Branch {
        #[command(flatten)]
        rank: RankArgs,
        #[arg(long, value_enum)]
        role: RoleArg,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Plancherel polynomial P_σ/c_n and the P_j
    Plancherel {
        #[command(flatten)]
        rank: RankArgs,
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
        /// comma-separated λ values
        #[arg(long)]
        lambda: Option<String>,
    },
    /// decomposition of Ω(σ,λ) and its values
    Omega {
        #[command(flatten)]
        rank: RankArgs,
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
        #[arg(long)]
        lambda: Option<String>,
        /// split index m₀; defaults to |k_{n+1}(σ)| − 1
        #[arg(long, allow_hyphen_values = true)]
        m0: Option<i64>,
    },
    /// log-derivative of the c-function c_ν(σ:z)
    Cfun {
        #[command(flatten)]
        rank: RankArgs,
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        /// evaluation point "re,im"
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
    },
    /// Mellin closed forms against quadrature
    MellinCheck {
        #[arg(long, value_enum, default_value_t = CheckKind::All)]
        kind: CheckKind,
        #[arg(long)]
        c: Option<String>,
        #[arg(long)]
        j: Option<String>,
        /// second argument of a digamma difference
        #[arg(long)]
        c2: Option<String>,
        /// even polynomial coefficients, constant first
        #[arg(long, allow_hyphen_values = true)]
        poly: Option<String>,
        /// relative tolerance; defaults to 1e-6 (1e-8 for polynomials)
        #[arg(long)]
        tol: Option<f64>,
    },
    /// L²-torsion polynomial and its values
    L2 {
        #[command(flatten)]
        rank: RankArgs,
        /// base weight τ
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        /// "a..b", a list "1,3,5" or one value
        #[arg(long, default_value = "0..10")]
        m: String,
    },
    /// MI, MT, M𝓘, MJ and the non-hyperbolic log-torsion at one m
    Terms {
        #[command(flatten)]
        rank: RankArgs,
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        #[arg(long)]
        m: u64,
        #[command(flatten)]
        geometry: GeometryArgs,
    },
    /// per-m table and fitted growth exponents
    Sweep {
        #[command(flatten)]
        rank: RankArgs,
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        #[arg(long, default_value = "10..200")]
        m: String,
        #[command(flatten)]
        geometry: GeometryArgs,
    },
    /// hyperbolic weights and the truncated hyperbolic sum over a geodesic table
    Hyperbolic {
        #[command(flatten)]
        rank: RankArgs,
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        #[arg(long)]
        m: u64,
        /// CSV with header length,prim_length,theta_1..theta_n
        #[arg(long)]
        geodesics: PathBuf,
        /// comma-separated t values
        #[arg(long, default_value = "0.5,1,2")]
        t: String,
    },
    /// Φ(λ) for even d with log T = κΦ
    PhiEven {
        #[arg(long)]
        n: usize,
        /// G-weight
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        #[arg(long, default_value_t = 0.25)]
        eps: f64,
        /// fail with exit 4 if the error bar exceeds this
        #[arg(long)]
        tol: Option<f64>,
    },
    /// c_n from the leading coefficient of the L² polynomial
    Calibrate {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CheckKind {
    All,
    Pole,
    Poly,
    Digamma,
}

#[derive(Debug)]
enum CliError {
    Lib(Error),
    Csv(String),
    Tolerance(String),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Csv(_) => EXIT_CSV,
            CliError::Tolerance(_) => EXIT_TOLERANCE,
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Lib(e) => match e {
                Error::Parse(_) | Error::InvalidWeight(_) | Error::WrongLength { .. } => EXIT_PARSE,
                Error::Numeric(_) => EXIT_TOLERANCE,
                Error::Invariant(_) => EXIT_INVARIANT,
                Error::ZeroRank
                | Error::OddOnly(_)
                | Error::EvenOnly(_)
                | Error::Unsupported(_)
                | Error::Singular(_)
                | Error::ZeroMultiplicity
                | Error::CostGuard(_) => EXIT_UNSUPPORTED,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Lib(e) => e.to_string(),
            CliError::Csv(s) => format!("geodesic table: {s}"),
            CliError::Tolerance(s) => format!("tolerance not met: {s}"),
            CliError::Usage(s) => s.clone(),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Output under construction: exact and numeric sections plus an optional table.
struct Doc {
    mode: Mode,
    digits: usize,
    info: Map<String, Value>,
    exact: Map<String, Value>,
    numeric: Map<String, Value>,
    table: Option<(Vec<String>, Vec<Vec<String>>)>,
}

impl Doc {
    fn new(cli: &Cli, command: &str) -> Self {
        let mut info = Map::new();
        info.insert("command".into(), json!(command));
        Doc { mode: cli.mode, digits: cli.precision, info, exact: Map::new(), numeric: Map::new(), table: None }
    }

    fn num(&self, x: f64) -> String {
        render(x, self.digits)
    }

    fn info(&mut self, k: &str, v: Value) {
        self.info.insert(k.into(), v);
    }

    fn exact(&mut self, k: &str, v: Value) {
        self.exact.insert(k.into(), v);
    }

    fn numeric(&mut self, k: &str, x: f64) {
        let s = self.num(x);
        self.numeric.insert(k.into(), json!(s));
    }

    fn numeric_value(&mut self, k: &str, v: Value) {
        self.numeric.insert(k.into(), v);
    }

    fn to_json(&self) -> Value {
        let mut out = self.info.clone();
        if self.mode != Mode::Numeric && !self.exact.is_empty() {
            out.insert("exact".into(), Value::Object(self.exact.clone()));
        }
        if self.mode != Mode::Exact && !self.numeric.is_empty() {
            out.insert("numeric".into(), Value::Object(self.numeric.clone()));
        }
        if let Some((h, rows)) = &self.table {
            let objs: Vec<Value> = rows
                .iter()
                .map(|r| Value::Object(h.iter().cloned().zip(r.iter().map(|x| json!(x))).collect()))
                .collect();
            out.insert("table".into(), Value::Array(objs));
        }
        Value::Object(out)
    }

    fn to_csv(&self) -> CliResult<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| CliError::Usage(format!("writing CSV: {e}"));
        match &self.table {
            Some((h, rows)) => {
                w.write_record(h).map_err(io)?;
                for r in rows {
                    w.write_record(r).map_err(io)?;
                }
            }
            None => {
                w.write_record(["key", "value"]).map_err(io)?;
                let mut flat = BTreeMap::new();
                flatten("", &self.to_json(), &mut flat);
                for (k, v) in flat {
                    w.write_record([k, v]).map_err(io)?;
                }
            }
        }
        let bytes = w.into_inner().map_err(|e| CliError::Usage(format!("writing CSV: {e}")))?;
        Ok(String::from_utf8(bytes).expect("CSV is UTF-8"))
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut BTreeMap<String, String>) {
    let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                flatten(&join(k), x, out);
            }
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&join(&i.to_string()), x, out);
            }
        }
        Value::String(s) => {
            out.insert(prefix.to_string(), s.clone());
        }
        other => {
            out.insert(prefix.to_string(), other.to_string());
        }
    }
}

/// `digits` significant digits in scientific notation.
pub fn render(x: f64, digits: usize) -> String {
    if x.is_finite() {
        format!("{:.*e}", digits.saturating_sub(1), x)
    } else {
        x.to_string()
    }
}

fn q_json(x: &Q) -> Value {
    json!(rational::fmt(x))
}

fn weight(role: Role, s: &str) -> CliResult<Weight> {
    Ok(Weight::parse(role, s)?)
}

fn parse_f64_list(s: &str) -> CliResult<Vec<f64>> {
    s.split(',')
        .map(|x| x.trim().parse::<f64>().map_err(|_| CliError::Lib(Error::Parse(format!("number {x:?}")))))
        .collect()
}

/// "a..b" (inclusive), "a,b,c" or "a".
pub fn parse_m_range(s: &str) -> Result<Vec<u64>, Error> {
    let bad = || Error::Parse(format!("m range {s:?}"));
    let t = s.trim();
    let out: Vec<u64> = if let Some((a, b)) = t.split_once("..") {
        let a: u64 = a.trim().parse().map_err(|_| bad())?;
        let b: u64 = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
        (a..=b).collect()
    } else {
        t.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect::<Result<_, _>>()?
    };
    if out.is_empty() {
        return Err(bad());
    }
    Ok(out)
}

fn geometry(g: &GeometryArgs) -> CliResult<GeometryInput> {
    Ok(GeometryInput::new(g.vol, g.kappa, g.cgamma)?)
}

fn cn_value(g: &GeometryArgs, base: &[Q], rank: &RankData) -> CliResult<f64> {
    match g.cn {
        Some(c) => Ok(c),
        None => Ok(torsion::calibrate_cn(base, rank)?.cn_value),
    }
}

fn run(cli: &Cli) -> CliResult<Doc> {
    let name = match &cli.cmd {
        Cmd::Dim { .. } => "dim",
        Cmd::Casimir { .. } => "casimir",
        Cmd::Kostant { .. } => "kostant",
        Cmd::Branch { .. } => "branch",
        Cmd::Plancherel { .. } => "plancherel",
        Cmd::Omega { .. } => "omega",
        Cmd::Cfun { .. } => "cfun",
        Cmd::MellinCheck { .. } => "mellin-check",
        Cmd::L2 { .. } => "l2",
        Cmd::Terms { .. } => "terms",
        Cmd::Sweep { .. } => "sweep",
        Cmd::Hyperbolic { .. } => "hyperbolic",
        Cmd::PhiEven { .. } => "phi-even",
        Cmd::Calibrate { .. } => "calibrate",
    };
    let mut doc = Doc::new(cli, name);
    match &cli.cmd {
        Cmd::Dim { rank, role, weight: w } => {
            let r = rank.rank()?;
            let role = Role::from(*role);
            let w = weight(role, w)?;
            let d = match role {
                Role::G => liedata::dim_g(&w, &r)?,
                Role::K => liedata::dim_k(&w, &r)?,
                Role::M => liedata::dim_m(&w, &r)?,
            };
            doc.info("weight", json!(w.key()));
            doc.exact("dim", json!(d));
        }
        Cmd::Casimir { rank, role, weight: w, lambda } => {
            let r = rank.rank()?;
            let role = Role::from(*role);
            let w = weight(role, w)?;
            doc.info("weight", json!(w.key()));
            match (role, lambda) {
                (Role::G, None) => {
                    let c = liedata::casimir_g(&w, &r)?;
                    doc.exact("casimir", q_json(&c));
                    doc.numeric("casimir", rational::to_f64(&c));
                }
                (Role::M, None) => {
                    let c = liedata::casimir_m(&w, &r)?;
                    doc.exact("casimir", q_json(&c));
                    doc.numeric("casimir", rational::to_f64(&c));
                }
                (Role::M, Some(l)) => {
                    doc.info("lambda", json!(doc.num(*l)));
                    doc.numeric("casimir", liedata::casimir_principal(&w, *l, &r)?);
                }
                _ => return Err(Error::Unsupported("casimir is defined for G-weights and principal series (M-weight with --lambda)".into()).into()),
            }
        }
        Cmd::Kostant { rank, tau } => {
            let r = rank.rank()?;
            let tau = weight(Role::G, tau)?;
            let data = kostant::kostant_data(&tau, &r)?;
            let omega = liedata::casimir_g(&tau, &r)?;
            doc.info("tau", json!(tau.key()));
            doc.exact("casimir", q_json(&omega));
            doc.exact("casimir_identity", json!(kostant::casimir_identity_check(&tau, &r)?));
            doc.exact("alternating_dim_sum", json!(kostant::alternating_dim_sum(&tau, &r)?));
            let mut rows = Vec::new();
            for d in &data {
                rows.push(vec![
                    d.k.to_string(),
                    d.sigma.key(),
                    rational::fmt(&d.lambda),
                    liedata::dim_m(&d.sigma, &r)?.to_string(),
                ]);
            }
            doc.table = Some((vec!["k".into(), "sigma".into(), "lambda".into(), "dim_sigma".into()], rows));
        }
        Cmd::Branch { rank, role, weight: w } => {
            let r = rank.rank()?;
            let role = Role::from(*role);
            let w = weight(role, w)?;
            doc.info("weight", json!(w.key()));
            match role {
                Role::G => {
                    let ks = branching::branch_g_to_k(&w, &r)?;
                    doc.exact("k_types", json!(ks.iter().map(Weight::key).collect::<Vec<_>>()));
                }
                Role::K => {
                    let ms = branching::branch_k_to_m(&w, &r)?;
                    doc.exact("m_types", json!(ms.iter().map(Weight::key).collect::<Vec<_>>()));
                }
                Role::M => {
                    let m = branching::m_nu(&w, &r)?;
                    let table: Map<String, Value> = m.iter().map(|(k, v)| (k.key(), json!(v))).collect();
                    doc.exact("m_nu", Value::Object(table));
                    doc.exact("verify_iota", json!(branching::verify_iota(&w, &r)?));
                }
            }
        }
        Cmd::Plancherel { rank, sigma, lambda } => {
            let r = rank.rank()?;
            let s = weight(Role::M, sigma)?;
            let p = plancherel::plancherel_polynomial(&s, &r)?;
            doc.info("sigma", json!(s.key()));
            doc.exact("plancherel_over_cn", serde_json::to_value(&p).expect("serialisable"));
            let mut pj = Map::new();
            let mut sum = RatPoly::zero();
            for j in 2..=r.n + 1 {
                let q = plancherel::p_j(&s, j, &r)?;
                sum = &sum + &q;
                pj.insert(j.to_string(), serde_json::to_value(&q).expect("serialisable"));
            }
            doc.exact("p_j", Value::Object(pj));
            doc.exact("sum_p_j", serde_json::to_value(&sum).expect("serialisable"));
            if let Some(ls) = lambda {
                let vals: Vec<Value> = parse_f64_list(ls)?
                    .into_iter()
                    .map(|l| json!({"lambda": doc.num(l), "value": doc.num(p.eval_f64(l))}))
                    .collect();
                doc.numeric_value("plancherel_over_cn", Value::Array(vals));
            }
        }
        Cmd::Omega { rank, sigma, lambda, m0 } => {
            let r = rank.rank()?;
            let s = weight(Role::M, sigma)?;
            let dec = match m0 {
                Some(m0) => plancherel::omega_decomposition_split(&s, *m0, &r)?,
                None => plancherel::omega_decomposition(&s, &r)?,
            };
            doc.info("sigma", json!(s.key()));
            doc.exact("decomposition", serde_json::to_value(&dec).expect("serialisable"));
            if let Some(ls) = lambda {
                let mut rows = Vec::new();
                for l in parse_f64_list(ls)? {
                    let a = dec.eval(l);
                    let b = plancherel::omega_direct(&s, l, &r)?;
                    rows.push(vec![doc.num(l), doc.num(a), doc.num(b), doc.num((a - b).abs() / b.abs().max(1e-300))]);
                }
                doc.table = Some((vec!["lambda".into(), "decomposed".into(), "direct".into(), "rel_diff".into()], rows));
            }
        }
        Cmd::Cfun { rank, sigma, nu, z } => {
            let r = rank.rank()?;
            let s = weight(Role::M, sigma)?;
            let nu = weight(Role::K, nu)?;
            doc.info("sigma", json!(s.key()));
            doc.info("nu", json!(nu.key()));
            let mult = branching::mult_k_m(&nu, &s, &r)?;
            doc.exact("multiplicity", json!(mult));
            let poles = if r.is_odd() && mult == 1 { Some(cfunc::c_log_derivative(&s, &nu, &r)?) } else { None };
            if let Some(p) = &poles {
                doc.exact("poles", serde_json::to_value(p).expect("serialisable"));
            }
            if let Some(z) = z {
                let v = parse_f64_list(z)?;
                if v.len() != 2 {
                    return Err(Error::Parse(format!("z {z:?}, expected re,im")).into());
                }
                let zc = Complex64::new(v[0], v[1]);
                if mult == 0 {
                    doc.numeric_value("log_derivative", json!({"re": doc.num(0.0), "im": doc.num(0.0)}));
                } else {
                    let g = cfunc::c_log_derivative_numeric(&s, &nu, zc, &r)?;
                    doc.numeric_value("log_derivative", json!({"re": doc.num(g.re), "im": doc.num(g.im)}));
                    if let Some(p) = &poles {
                        let e = p.eval(zc);
                        doc.numeric_value("partial_fractions", json!({"re": doc.num(e.re), "im": doc.num(e.im)}));
                    }
                }
            }
        }
        Cmd::MellinCheck { kind, c, j, c2, poly, tol } => {
            let opt_q = |s: &Option<String>| s.as_deref().map(rational::parse).transpose();
            let (c, j, c2) = (opt_q(c)?, opt_q(j)?, opt_q(c2)?);
            let mut checks: Vec<(oracle::OracleCheck, f64)> = Vec::new();
            let pole_tol = tol.unwrap_or(1e-6);
            let poly_tol = tol.unwrap_or(1e-8);
            let want = |k: CheckKind| matches!(kind, CheckKind::All) || std::mem::discriminant(kind) == std::mem::discriminant(&k);
            if want(CheckKind::Pole) {
                let pts = match (&c, &j) {
                    (Some(c), Some(j)) => vec![(c.clone(), j.clone())],
                    _ => default_pole_points(),
                };
                for (c, j) in pts {
                    checks.push((oracle::check_pole_term(&c, &j)?, pole_tol));
                }
            }
            if want(CheckKind::Poly) {
                let pts = match (poly, &c) {
                    (Some(p), Some(c)) => vec![(RatPoly::new(rational::parse_list(p)?), c.clone())],
                    _ => default_poly_points(),
                };
                for (p, c) in pts {
                    checks.push((oracle::check_poly_gaussian(&p, &c)?, poly_tol));
                }
            }
            if want(CheckKind::Digamma) {
                let pts = match (&c, &c2) {
                    (Some(a), Some(b)) => vec![(a.clone(), b.clone())],
                    _ => default_digamma_points(),
                };
                for (a, b) in pts {
                    checks.push((oracle::check_digamma_difference(&a, &b)?, pole_tol));
                }
            }
            let mut rows = Vec::new();
            let mut failed = Vec::new();
            for (ch, t) in &checks {
                let pass = ch.rel_err <= *t;
                if !pass {
                    failed.push(ch.label.clone());
                }
                rows.push(vec![
                    ch.label.clone(),
                    doc.num(ch.closed_form),
                    doc.num(ch.numeric),
                    doc.num(ch.error_bar),
                    doc.num(ch.rel_err),
                    doc.num(*t),
                    if pass { "PASS".into() } else { "FAIL".into() },
                ]);
            }
            doc.table = Some((
                ["label", "closed_form", "numeric", "error_bar", "rel_err", "tolerance", "status"].map(String::from).to_vec(),
                rows,
            ));
            if !failed.is_empty() {
                emit(cli, &doc)?;
                return Err(CliError::Tolerance(failed.join("; ")));
            }
        }
        Cmd::L2 { rank, tau, m } => {
            let r = rank.rank()?;
            let base = rational::parse_list(tau)?;
            let ms = parse_m_range(m)?;
            let l2 = torsion::l2_polynomial(&base, &r)?;
            let dim = liedata::dim_tau_m_polynomial(&base, &r)?;
            doc.info("base", json!(base.iter().map(rational::fmt).collect::<Vec<_>>()));
            doc.exact("polynomial_over_pi_cn_vol", serde_json::to_value(&l2.poly).expect("serialisable"));
            doc.exact("degree", json!(l2.degree()));
            doc.exact("dim_tau_m", serde_json::to_value(&dim).expect("serialisable"));
            let at = AtomValues { cn: torsion::calibrate_cn(&base, &r)?.cn_value, ..AtomValues::default() };
            let mut rows = Vec::new();
            for m in ms {
                let v = l2.poly.eval(&rational::q(m as i64));
                rows.push(vec![m.to_string(), rational::fmt(&v), doc.num(l2.at(m).eval(&at)?)]);
            }
            doc.info("cn_for_numeric", json!(doc.num(at.cn)));
            doc.table = Some((vec!["m".into(), "poly".into(), "l2_at_vol_1".into()], rows));
        }
        Cmd::Terms { rank, tau, m, geometry: g } => {
            let r = rank.rank()?;
            let base = rational::parse_list(tau)?;
            let geom = geometry(g)?;
            let cn = cn_value(g, &base, &r)?;
            let rep = torsion::term_report(&base, *m, &geom, cn, &r)?;
            doc.info("base", json!(base.iter().map(rational::fmt).collect::<Vec<_>>()));
            doc.info("m", json!(m));
            doc.info("geometry", json!({"vol": doc.num(geom.vol), "kappa": geom.kappa, "c_gamma": doc.num(geom.c_gamma)}));
            doc.info("cn", json!(doc.num(cn)));
            doc.info("excluded", json!(rep.excluded));
            for (k, f) in [("MI", &rep.mi), ("MT", &rep.mt), ("MIcal", &rep.mical), ("MJ", &rep.mj), ("log_torsion", &rep.log_torsion)] {
                doc.exact(k, serde_json::to_value(f).expect("serialisable"));
            }
            doc.exact("cpsi_coefficient", serde_json::to_value(&rep.cpsi_coefficient).expect("serialisable"));
            let n = &rep.numeric;
            for (k, v) in [("MI", n.mi), ("MT", n.mt), ("MIcal", n.mical), ("MJ", n.mj), ("log_torsion", n.log_torsion), ("l2", n.l2), ("residual", n.residual)] {
                doc.numeric(k, v);
            }
        }
        Cmd::Sweep { rank, tau, m, geometry: g } => {
            let r = rank.rank()?;
            let base = rational::parse_list(tau)?;
            let geom = geometry(g)?;
            let cn = cn_value(g, &base, &r)?;
            let ms = parse_m_range(m)?;
            let sw = torsion::asymptotic_sweep(&base, &ms, &geom, cn, &r)?;
            doc.info("base", json!(base.iter().map(rational::fmt).collect::<Vec<_>>()));
            doc.info("cn", json!(doc.num(cn)));
            for (k, v) in [
                ("residual_slope", sw.residual_slope),
                ("l2_slope", sw.l2_slope),
                ("mt_slope", sw.mt_slope),
                ("mical_slope", sw.mical_slope),
                ("mj_slope", sw.mj_slope),
                ("l2_ratio", sw.l2_ratio),
            ] {
                doc.numeric(k, v);
            }
            let rows = sw
                .rows
                .iter()
                .map(|x| {
                    let mut v = vec![x.m.to_string()];
                    v.extend([x.dim_tau, x.l2, x.mt, x.mical, x.mj, x.log_torsion, x.residual].map(|y| doc.num(y)));
                    v
                })
                .collect();
            doc.table = Some((
                ["m", "dim_tau", "l2", "mt", "mical", "mj", "log_torsion", "residual"].map(String::from).to_vec(),
                rows,
            ));
        }
        Cmd::Hyperbolic { rank, tau, m, geodesics, t } => {
            let r = rank.rank()?;
            let base = rational::parse_list(tau)?;
            let file = std::fs::File::open(geodesics).map_err(|e| CliError::Csv(format!("{}: {e}", geodesics.display())))?;
            let table = hyperbolic::parse_geodesics(file, r.n).map_err(|e| CliError::Csv(e.to_string()))?;
            let tau_m = liedata::tau_m(&base, *m)?;
            let data = kostant::kostant_data(&tau_m, &r)?;
            let mut rows = Vec::new();
            for (gi, g) in table.iter().enumerate() {
                for d in &data {
                    let w = hyperbolic::hyperbolic_weight(g, &d.sigma, &r)?;
                    if w.perturbed {
                        eprintln!("warning: geodesic {gi}: degenerate angles perturbed by {:e}", hyperbolic::DEGENERATE_EPS);
                    }
                    let ls = hyperbolic::l_sym(g, &d.sigma, &r)?;
                    rows.push(vec![
                        gi.to_string(),
                        d.k.to_string(),
                        d.sigma.key(),
                        doc.num(w.re),
                        doc.num(w.im),
                        doc.num(ls),
                        w.perturbed.to_string(),
                    ]);
                }
            }
            let mut hs = Vec::new();
            for tv in parse_f64_list(t)? {
                hs.push(json!({"t": doc.num(tv), "value": doc.num(hyperbolic::h_series(tv, &base, *m, &table, &r)?)}));
            }
            doc.info("geodesics", json!(table.len()));
            doc.numeric_value("h_series", Value::Array(hs));
            doc.table = Some((
                ["geodesic", "k", "sigma", "weight_re", "weight_im", "l_sym", "perturbed"].map(String::from).to_vec(),
                rows,
            ));
        }
        Cmd::PhiEven { n, tau, eps, tol } => {
            let r = RankData::even(*n)?;
            let w = weight(Role::G, tau)?;
            let cfg = even::PhiConfig { eps: *eps, ..even::PhiConfig::default() };
            let est = even::phi_even(&w, &r, &cfg)?;
            doc.info("tau", json!(w.key()));
            doc.info("eps", json!(doc.num(*eps)));
            doc.numeric("phi", est.phi);
            doc.numeric("error", est.error);
            doc.numeric_value("pairs", json!(est.pairs));
            if let Some(t) = tol {
                if est.error > *t {
                    emit(cli, &doc)?;
                    return Err(CliError::Tolerance(format!("error bar {} exceeds {t}", est.error)));
                }
            }
        }
        Cmd::Calibrate { n, tau } => {
            let r = RankData::odd(*n)?;
            let base = rational::parse_list(tau)?;
            let c = torsion::calibrate_cn(&base, &r)?;
            doc.info("base", json!(base.iter().map(rational::fmt).collect::<Vec<_>>()));
            doc.exact("cn", serde_json::to_value(&c.cn).expect("serialisable"));
            doc.exact("c_literal", serde_json::to_value(&c.c_literal).expect("serialisable"));
            doc.exact("leading_ratio", q_json(&c.leading_ratio));
            doc.exact("sign_conflict", json!(c.sign_conflict));
            doc.numeric("cn", c.cn_value);
            doc.numeric("c_literal", c.c_literal.eval(&AtomValues::default())?);
            if c.sign_conflict {
                eprintln!("warning: the literal C({n}) is negative while the calibrated magnitude is positive");
            }
        }
    }
    Ok(doc)
}

fn default_pole_points() -> Vec<(Q, Q)> {
    let q = rational::q;
    vec![(q(1), q(0)), (q(2), q(0)), (rational::qr(5, 2), q(3)), (q(10), q(1))]
}

fn default_poly_points() -> Vec<(RatPoly, Q)> {
    let (q, qr) = (rational::q, rational::qr);
    vec![
        (RatPoly::new(vec![q(1), q(0), q(-2)]), q(1)),
        (RatPoly::new(vec![qr(1, 2), q(0), q(3), q(0), qr(-1, 5)]), qr(3, 2)),
        (RatPoly::new(vec![q(0), q(0), q(0), q(0), q(1)]), q(2)),
    ]
}

fn default_digamma_points() -> Vec<(Q, Q)> {
    let (q, qr) = (rational::q, rational::qr);
    vec![(q(1), q(2)), (q(2), qr(7, 2)), (q(1), qr(7, 2))]
}

fn emit(cli: &Cli, doc: &Doc) -> CliResult<()> {
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&doc.to_json()).expect("serialisable") + "\n",
        Format::Csv => doc.to_csv()?,
    };
    match &cli.output {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Usage(format!("{}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| CliError::Usage(e.to_string()))
        }
    }
}

/// Runs the command line and returns the process exit code.
pub fn main_with_args<I: IntoIterator<Item = OsString>>(args: I) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    if cli.precision < 16 {
        eprintln!("error: precision must be at least 16, got {}", cli.precision);
        return EXIT_USAGE;
    }
    let result = run(&cli).and_then(|doc| emit(&cli, &doc));
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.code()
        }
    }
}
