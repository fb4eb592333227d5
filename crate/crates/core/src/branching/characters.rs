//! Numeric Weyl characters of Spin groups on a maximal torus.
//!
//! A torus element is given by angles θ_1..θ_r. For B_r the alternant is
//! det[2i sin(μ_j θ_k)]; for D_r it is ½(det[2cos(μ_j θ_k)] + det[2i sin(μ_j θ_k)]).

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::liedata::{weyl_rho, RootType};
use crate::rational::{self, Q};

fn det(m: DMatrix<Complex64>) -> Complex64 {
    if m.nrows() == 0 {
        Complex64::new(1.0, 0.0)
    } else {
        m.determinant()
    }
}

/// Σ_{w∈W} det(w) e^{i⟨wμ,θ⟩}
pub fn alternant(mu: &[f64], theta: &[f64], rt: RootType) -> Complex64 {
    let r = mu.len();
    let sin = DMatrix::from_fn(r, r, |j, k| Complex64::new(0.0, 2.0 * (mu[j] * theta[k]).sin()));
    match rt {
        RootType::B => det(sin),
        RootType::D => {
            let cos = DMatrix::from_fn(r, r, |j, k| Complex64::new(2.0 * (mu[j] * theta[k]).cos(), 0.0));
            (det(cos) + det(sin)) * 0.5
        }
    }
}

/// Weyl denominator A_ρ(θ).
pub fn weyl_denominator(theta: &[f64], rt: RootType) -> Complex64 {
    let rho: Vec<f64> = weyl_rho(theta.len(), rt).iter().map(rational::to_f64).collect();
    alternant(&rho, theta, rt)
}

/// χ_λ(θ) = A_{λ+ρ}(θ)/A_ρ(θ); the caller keeps θ off the walls.
pub fn weyl_character(highest: &[Q], theta: &[f64], rt: RootType) -> Complex64 {
    let rho = weyl_rho(highest.len(), rt);
    let shifted: Vec<f64> = highest.iter().zip(&rho).map(|(k, r)| rational::to_f64(&(k + r))).collect();
    alternant(&shifted, theta, rt) / weyl_denominator(theta, rt)
}
