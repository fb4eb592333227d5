//! Φ(λ) for even dimension, where log T = κ Φ.

use hypertorsion::torsion::even::{phi_even, PhiConfig};
use hypertorsion::{RankData, Role, Weight};

fn main() -> hypertorsion::Result<()> {
    let rank = RankData::even(1)?;
    let tau = Weight::parse(Role::G, "1,1")?;
    for eps in [0.25, 0.125] {
        let est = phi_even(&tau, &rank, &PhiConfig { eps, ..PhiConfig::default() })?;
        println!("ε = {eps}: Φ = {:.10} ± {:.1e} ({} pairs)", est.phi, est.error, est.pairs);
    }
    Ok(())
}
