//! The Mellin contributions MI, MT, M𝓘, MJ at one m and their sum.

use hypertorsion::rational::q;
use hypertorsion::torsion::{self, GeometryInput};
use hypertorsion::RankData;

fn main() -> hypertorsion::Result<()> {
    let rank = RankData::odd(1)?;
    let base = [q(1), q(1)];
    let geom = GeometryInput::new(1.0, 1, 0.3)?;
    let cn = torsion::calibrate_cn(&base, &rank)?.cn_value;
    let rep = torsion::term_report(&base, 4, &geom, cn, &rank)?;
    println!("MI    = {}", rep.mi);
    println!("MT    = {}", rep.mt);
    println!("MIcal = {}", rep.mical);
    println!("MJ    = {}", rep.mj);
    println!("{:#?}", rep.numeric);
    println!("{}", rep.excluded);
    Ok(())
}
