//! Growth in m of the L²-torsion and of the remaining terms.

use hypertorsion::rational::q;
use hypertorsion::torsion::{self, GeometryInput};
use hypertorsion::RankData;

fn main() -> hypertorsion::Result<()> {
    let rank = RankData::odd(1)?;
    let base = [q(1), q(1)];
    let geom = GeometryInput::new(1.0, 1, 0.3)?;
    let cn = torsion::calibrate_cn(&base, &rank)?.cn_value;
    let ms: Vec<u64> = (10..=80).step_by(5).collect();
    let sw = torsion::asymptotic_sweep(&base, &ms, &geom, cn, &rank)?;
    for row in &sw.rows {
        println!("m = {:<4} l2 {:>14.6e}  residual {:>12.6e}", row.m, row.l2, row.residual);
    }
    println!("slopes: l2 {:.3}, residual {:.3}, MT {:.3}, MIcal {:.3}, MJ {:.3}", sw.l2_slope, sw.residual_slope, sw.mt_slope, sw.mical_slope, sw.mj_slope);
    println!("l2 / (m dim τ(m)) at the top of the range: {:.5}", sw.l2_ratio);
    Ok(())
}
