//! Branching G → K → M and the signed K-types ν(σ).

use hypertorsion::{branching, RankData, Role, Weight};

fn main() -> hypertorsion::Result<()> {
    let rank = RankData::odd(2)?;
    let tau = Weight::parse(Role::G, "2,1,1")?;
    let ks = branching::branch_g_to_k(&tau, &rank)?;
    println!("{} restricted to K: {}", tau.key(), ks.iter().map(|k| k.key()).collect::<Vec<_>>().join(" "));
    let nu = &ks[0];
    let ms = branching::branch_k_to_m(nu, &rank)?;
    println!("{} restricted to M: {}", nu.key(), ms.iter().map(|m| m.key()).collect::<Vec<_>>().join(" "));

    let sigma = Weight::parse(Role::M, "2,1")?;
    for (nu, c) in branching::m_nu(&sigma, &rank)? {
        println!("m_ν({}) at ν = {}: {c:+}", sigma.key(), nu.key());
    }
    println!("i*(ν(σ)) = σ + w0σ: {}", branching::verify_iota(&sigma, &rank)?);

    // Σ_p (−1)^p p [Λ^p p ⊗ τ : ν] against Σ_k (−1)^k m_ν(σ_{τ,k})
    let lhs = branching::alternating_p_lhs(&tau, &rank)?;
    let rhs = branching::alternating_p_rhs(&tau, &rank)?;
    println!("alternating K-type identity holds: {}", lhs == rhs);
    Ok(())
}
