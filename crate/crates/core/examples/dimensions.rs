//! Weyl dimensions and Casimir eigenvalues for G = Spin(2n+2), K = Spin(2n+1)
//! and M = Spin(2n).

use hypertorsion::liedata;
use hypertorsion::rational::q;
use hypertorsion::{RankData, Role, Weight};

fn main() -> hypertorsion::Result<()> {
    let rank = RankData::odd(2)?;
    for s in ["0,0,0", "1,0,0", "1,1,1", "1,1,-1", "2,1,0"] {
        let tau = Weight::parse(Role::G, s)?;
        println!(
            "G {:<10} dim {:>4}  casimir {}",
            tau.key(),
            liedata::dim_g(&tau, &rank)?,
            liedata::casimir_g(&tau, &rank)?
        );
    }
    for s in ["0,0", "1,0", "1,1", "1/2,-1/2"] {
        let sigma = Weight::parse(Role::M, s)?;
        println!("M {:<10} dim {:>4}  casimir {}", sigma.key(), liedata::dim_m(&sigma, &rank)?, liedata::casimir_m(&sigma, &rank)?);
    }
    let p = liedata::dim_tau_m_polynomial(&[q(1), q(1), q(1)], &rank)?;
    println!("dim τ(m) for τ = (1,1,1): coefficients {:?}", p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());
    Ok(())
}
