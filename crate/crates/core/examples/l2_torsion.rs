//! The L²-torsion polynomial in m and the calibration of c_n.

use hypertorsion::mellin::AtomValues;
use hypertorsion::rational::q;
use hypertorsion::{torsion, RankData};

fn main() -> hypertorsion::Result<()> {
    for n in 1..=2 {
        let rank = RankData::odd(n)?;
        let base = vec![q(1); n + 1];
        let l2 = torsion::l2_polynomial(&base, &rank)?;
        let cal = torsion::calibrate_cn(&base, &rank)?;
        println!("n = {n}: degree {}, c_n = {} ≈ {:.12e}", l2.degree(), cal.cn, cal.cn_value);
        println!("  literal C(n) = {}, sign discrepancy: {}", cal.c_literal, cal.sign_conflict);
        let at = AtomValues { cn: cal.cn_value, ..AtomValues::default() };
        for m in [1, 10, 100] {
            println!("  m = {m:<4} log T2 / vol = {:.10e}", l2.at(m).eval(&at)?);
        }
    }
    Ok(())
}
