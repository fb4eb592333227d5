//! Adaptive Gauss–Kronrod (7/15) quadrature for real and complex
//! integrands, semi-infinite ranges and the contour D_ε.

use std::collections::BinaryHeap;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Values an integrand may take.
pub trait Integrand: Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> + Send + Sync {
    fn zero() -> Self;
    fn magnitude(&self) -> f64;
}

impl Integrand for f64 {
    fn zero() -> Self {
        0.0
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl Integrand for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

#[derive(Clone, Debug)]
pub struct QuadConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_intervals: usize,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig { rel_tol: 1e-10, abs_tol: 1e-300, max_intervals: 4000 }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Estimate<T> {
    pub value: T,
    pub error: f64,
}

fn kronrod<T: Integrand>(f: &dyn Fn(f64) -> T, a: f64, b: f64) -> (T, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut fx = [T::zero(); 15];
    fx[7] = f(c);
    for i in 0..7 {
        let x = h * XGK[i];
        fx[i] = f(c - x);
        fx[14 - i] = f(c + x);
    }
    let mut k = fx[7] * WGK[7];
    let mut g = fx[7] * WG[3];
    let mut resabs = fx[7].magnitude() * WGK[7];
    for i in 0..7 {
        let s = fx[i] + fx[14 - i];
        k = k + s * WGK[i];
        resabs += WGK[i] * (fx[i].magnitude() + fx[14 - i].magnitude());
        if i % 2 == 1 {
            g = g + s * WG[i / 2];
        }
    }
    let mean = k * 0.5;
    let mut resasc = WGK[7] * (fx[7] - mean).magnitude();
    for i in 0..7 {
        resasc += WGK[i] * ((fx[i] - mean).magnitude() + (fx[14 - i] - mean).magnitude());
    }
    let (resabs, resasc) = (resabs * h.abs(), resasc * h.abs());
    // QUADPACK's error heuristic with a rounding floor
    let mut err = ((k - g) * h).magnitude();
    if resasc != 0.0 && err != 0.0 {
        err = resasc * (200.0 * err / resasc).powf(1.5).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * resabs);
    }
    (k * h, err)
}

struct Piece<T> {
    a: f64,
    b: f64,
    value: T,
    error: f64,
}

impl<T> PartialEq for Piece<T> {
    fn eq(&self, o: &Self) -> bool {
        self.error == o.error
    }
}
impl<T> Eq for Piece<T> {}
impl<T> PartialOrd for Piece<T> {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}
impl<T> Ord for Piece<T> {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        self.error.total_cmp(&o.error)
    }
}

/// ∫_a^b f by global adaptive bisection.
pub fn integrate<T: Integrand>(f: &dyn Fn(f64) -> T, a: f64, b: f64, cfg: &QuadConfig) -> Estimate<T> {
    if a == b {
        return Estimate { value: T::zero(), error: 0.0 };
    }
    let (v, e) = kronrod(f, a, b);
    let mut heap = BinaryHeap::new();
    heap.push(Piece { a, b, value: v, error: e });
    let mut total = v;
    let mut err = e;
    while heap.len() < cfg.max_intervals {
        if !err.is_finite() || err <=  cfg.abs_tol.max(cfg.rel_tol.max(100.0 * f64::EPSILON) * total.magnitude()) {
            break;
        }
        let Some(p) = heap.pop() else { break };
        let m = 0.5 * (p.a + p.b);
        if m <= p.a || m >= p.b {
            heap.push(p);
            break;
        }
        let (v1, e1) = kronrod(f, p.a, m);
        let (v2, e2) = kronrod(f, m, p.b);
        total = total - p.value + v1 + v2;
        err = err - p.error + e1 + e2;
        heap.push(Piece { a: p.a, b: m, value: v1, error: e1 });
        heap.push(Piece { a: m, b: p.b, value: v2, error: e2 });
    }
    // re-sum to shed accumulated rounding
    let mut value = T::zero();
    let mut error = 0.0;
    for p in heap.iter() {
        value = value + p.value;
        error += p.error;
    }
    Estimate { value, error }
}

/// ∫_a^∞ f over blocks of doubling length until the blocks stop mattering.
pub fn integrate_to_infinity<T: Integrand>(f: &dyn Fn(f64) -> T, a: f64, scale: f64, cfg: &QuadConfig) -> Estimate<T> {
    let mut lo = a;
    let mut width = scale.max(1e-300);
    let mut value = T::zero();
    let mut error = 0.0;
    let mut quiet = 0;
    for _ in 0..200 {
        let hi = lo + width;
        let piece = integrate(f, lo, hi, cfg);
        value = value + piece.value;
        error += piece.error;
        let small = piece.value.magnitude() <= cfg.rel_tol * 1e-3 * value.magnitude() + cfg.abs_tol;
        quiet = if small { quiet + 1 } else { 0 };
        if !piece.value.magnitude().is_finite() {
            break;
        }
        if quiet >= 3 {
            break;
        }
        lo = hi;
        width *= 2.0;
    }
    Estimate { value, error }
}

/// ∫_{D_ε} g(z) dz where D_ε = (−∞,−ε] ∪ {lower half circle} ∪ [ε,∞).
/// `scale` is a length over which g varies on the real axis.
pub fn contour_d_eps(g: &dyn Fn(Complex64) -> Complex64, eps: f64, scale: f64, cfg: &QuadConfig) -> Estimate<Complex64> {
    let line = |x: f64| g(Complex64::new(x, 0.0)) + g(Complex64::new(-x, 0.0));
    let tail = integrate_to_infinity(&line, eps, scale, cfg);
    let arc = |th: f64| {
        let e = Complex64::new(0.0, th).exp();
        g(e * eps) * Complex64::new(0.0, eps) * e
    };
    let half = integrate(&arc, std::f64::consts::PI, 2.0 * std::f64::consts::PI, cfg);
    Estimate { value: tail.value + half.value, error: tail.error + half.error }
}
