//! Complex log-gamma and digamma (Stirling series with recurrence and
//! reflection), plus the Euler–Mascheroni constant.

use std::f64::consts::PI;

use num_complex::Complex64;

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

// B_{2k} for k = 1..10
const BERNOULLI: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];

const ASYMPTOTIC_RADIUS: f64 = 16.0;

fn shift_count(z: Complex64) -> usize {
    if z.norm() >= ASYMPTOTIC_RADIUS && z.re > 0.0 {
        0
    } else {
        (ASYMPTOTIC_RADIUS - z.re).ceil().max(0.0) as usize
    }
}

/// cot z without overflow for large |Im z|.
fn cot(z: Complex64) -> Complex64 {
    let i = Complex64::new(0.0, 1.0);
    if z.im > 1.0 {
        let q = (2.0 * i * z).exp();
        i * (q + 1.0) / (q - 1.0)
    } else if z.im < -1.0 {
        let q = (-2.0 * i * z).exp();
        i * (1.0 + q) / (1.0 - q)
    } else {
        z.cos() / z.sin()
    }
}

/// log sin z, correct mod 2πi, without overflow for large |Im z|.
fn ln_sin(z: Complex64) -> Complex64 {
    let i = Complex64::new(0.0, 1.0);
    if z.im > 1.0 {
        -i * z + (1.0 - (2.0 * i * z).exp()).ln() + Complex64::new(0.0, 0.5).ln()
    } else if z.im < -1.0 {
        i * z + (1.0 - (-2.0 * i * z).exp()).ln() + Complex64::new(0.0, -0.5).ln()
    } else {
        z.sin().ln()
    }
}

/// ψ(z); poles at the nonpositive integers give non-finite values.
pub fn digamma(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // ψ(z) = ψ(1−z) − π cot(πz)
        return digamma(Complex64::new(1.0, 0.0) - z) - PI * cot(z * PI);
    }
    let n = shift_count(z);
    let mut acc = Complex64::new(0.0, 0.0);
    let mut w = z;
    for _ in 0..n {
        acc -= w.inv();
        w += 1.0;
    }
    let w2 = (w * w).inv();
    let mut series = Complex64::new(0.0, 0.0);
    let mut pw = w2;
    for (k, b) in BERNOULLI.iter().enumerate() {
        series += pw * (b / (2.0 * (k + 1) as f64));
        pw *= w2;
    }
    acc + w.ln() - 0.5 * w.inv() - series
}

/// A branch of log Γ(z) that is continuous for Re z > 0.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // log Γ(z) = log π − log sin(πz) − log Γ(1−z), correct mod 2πi
        return Complex64::new(PI.ln(), 0.0) - ln_sin(z * PI) - ln_gamma(Complex64::new(1.0, 0.0) - z);
    }
    let n = shift_count(z);
    let mut acc = Complex64::new(0.0, 0.0);
    let mut w = z;
    for _ in 0..n {
        acc -= w.ln();
        w += 1.0;
    }
    let w2 = (w * w).inv();
    let mut series = Complex64::new(0.0, 0.0);
    let mut pw = w.inv();
    for (k, b) in BERNOULLI.iter().enumerate() {
        let m = 2.0 * (k + 1) as f64;
        series += pw * (b / (m * (m - 1.0)));
        pw *= w2;
    }
    acc + (w - 0.5) * w.ln() - w + 0.5 * (2.0 * PI).ln() + series
}

pub fn digamma_real(x: f64) -> f64 {
    digamma(Complex64::new(x, 0.0)).re
}
