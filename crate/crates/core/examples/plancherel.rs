//! Plancherel polynomials and the partial-fraction form of Ω(σ, λ).

use hypertorsion::{plancherel, RankData, Role, Weight};

fn main() -> hypertorsion::Result<()> {
    let rank = RankData::odd(2)?;
    let sigma = Weight::parse(Role::M, "3,1")?;
    let p = plancherel::plancherel_polynomial(&sigma, &rank)?;
    println!("P_σ/c_n for σ = {}: {:?}", sigma.key(), p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());
    for j in 2..=rank.n + 1 {
        println!("P_{j}: {:?}", plancherel::p_j(&sigma, j, &rank)?.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());
    }

    let dec = plancherel::omega_decomposition(&sigma, &rank)?;
    println!("Ω poles (l, coeff): {:?}", dec.pole_terms.iter().map(|(l, c)| (l.to_string(), c.to_string())).collect::<Vec<_>>());
    println!("digamma coefficient: {}", dec.digamma_coefficient);
    for lambda in [0.3, 1.7, 10.0] {
        let direct = plancherel::omega_direct(&sigma, lambda, &rank)?;
        println!("λ = {lambda:<5} decomposition {:.15e}  direct {:.15e}", dec.eval(lambda), direct);
    }
    Ok(())
}
