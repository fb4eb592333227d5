//! Logarithmic derivative of the c-function as a pole list, checked against
//! the Γ-product form.

use num_complex::Complex64;

use hypertorsion::{cfunc, RankData, Role, Weight};

fn main() -> hypertorsion::Result<()> {
    let rank = RankData::odd(2)?;
    let sigma = Weight::parse(Role::M, "1,1")?;
    let nu = Weight::parse(Role::K, "3,1")?;
    let poles = cfunc::c_log_derivative(&sigma, &nu, &rank)?;
    println!("poles of c'/c for σ = {}, ν = {}:", sigma.key(), nu.key());
    for (p, c) in poles.to_map() {
        println!("  i·{p}: {c:+}");
    }
    for z in [Complex64::new(0.4, 0.2), Complex64::new(2.0, -1.5)] {
        let a = poles.eval(z);
        let b = cfunc::c_log_derivative_numeric(&sigma, &nu, z, &rank)?;
        println!("z = {z}: partial fractions {a:.12}, Γ-product {b:.12}");
    }
    Ok(())
}
