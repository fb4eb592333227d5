//! Hyperbolic weights and the truncated hyperbolic sum over a small
//! geodesic table.

use hypertorsion::rational::q;
use hypertorsion::torsion::hyperbolic::{self, GeodesicRecord};
use hypertorsion::{RankData, Role, Weight};

const TABLE: &str = "length,prim_length,theta_1,theta_2
1.1,1.1,0.4,1.3
2.2,1.1,0.8,2.6
1.7,1.7,0.0,0.0
";

fn main() -> hypertorsion::Result<()> {
    let rank = RankData::odd(2)?;
    let table = hyperbolic::parse_geodesics(TABLE.as_bytes(), 2)?;
    let sigma = Weight::parse(Role::M, "1,1")?;
    for rec in &table {
        let w = hyperbolic::hyperbolic_weight(rec, &sigma, &rank)?;
        println!("ℓ = {} (×{}): weight {:.10}{}", rec.length, rec.multiplicity(), w.value(), if w.perturbed { " (perturbed angles)" } else { "" });
    }
    let single = GeodesicRecord::new(3.0, 3.0, vec![0.5, 1.0])?;
    println!("L_sym on a single record: {:.10e}", hyperbolic::l_sym(&single, &sigma, &rank)?);
    for t in [0.25, 0.5, 1.0, 2.0] {
        println!("H({t}) = {:.10e}", hyperbolic::h_series(t, &[q(1), q(1), q(1)], 2, &table, &rank)?);
    }
    Ok(())
}
