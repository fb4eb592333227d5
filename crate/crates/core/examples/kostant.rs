//! The M-types σ_{τ,k} and exponents λ_{τ,k} attached to a G-weight.

use hypertorsion::{kostant, liedata, RankData, Role, Weight};

fn main() -> hypertorsion::Result<()> {
    let rank = RankData::odd(2)?;
    let tau = Weight::parse(Role::G, "3,2,1")?;
    println!("τ = {}, τ(Ω) = {}", tau.key(), liedata::casimir_g(&tau, &rank)?);
    for d in kostant::kostant_data(&tau, &rank)? {
        println!(
            "k = {}  σ = {:<8} λ = {:<3} λ² + c(σ) = {}",
            d.k,
            d.sigma.key(),
            d.lambda,
            &d.lambda * &d.lambda + liedata::casimir_m(&d.sigma, &rank)?
        );
    }
    println!("Σ (−1)^k dim σ_k = {}", kostant::alternating_dim_sum(&tau, &rank)?);
    Ok(())
}
