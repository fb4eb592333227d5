//! Closed-form Mellin values at s = 0 against the numeric finite-part oracle.

use hypertorsion::mellin::{self, oracle, AtomValues};
use hypertorsion::rational::{q, qr};
use hypertorsion::RatPoly;

fn main() -> hypertorsion::Result<()> {
    let at = AtomValues::default();
    let pole = mellin::mellin_pole_term(&qr(5, 2), &q(3))?;
    println!("pole term (5/2, 3): {pole} = {:.15}", pole.eval(&at)?);
    let p = RatPoly::new(vec![q(1), q(0), q(-2)]);
    println!("Gaussian polynomial: {}", mellin::mellin_poly_gaussian(&p, &q(1))?);
    println!("digamma (c = 2): {}", mellin::mellin_digamma(&q(2))?);

    for check in [
        oracle::check_pole_term(&qr(5, 2), &q(3))?,
        oracle::check_poly_gaussian(&p, &q(1))?,
        oracle::check_digamma_difference(&q(2), &qr(7, 2))?,
    ] {
        println!("{check:?}");
    }
    Ok(())
}
