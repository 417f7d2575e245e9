//! Sweeps the height of the centre monomial with the other valuations fixed
//! and prints where the curve class changes.

use tropical_cubic::classify::center_sweep;
use tropical_cubic::numeric::{int, ExtRational};
use tropical_cubic::SymmetricCubicValuations;

fn main() -> tropical_cubic::Result<()> {
    for (fixed, lo, hi) in [
        (
            SymmetricCubicValuations::from_ints(-10, 0, 0, -5, Some(0)),
            -20,
            ExtRational::Infinity,
        ),
        (
            SymmetricCubicValuations::from_ints(0, 14, 0, 4, Some(0)),
            -15,
            ExtRational::from_int(2),
        ),
    ] {
        let report = center_sweep(&fixed, &int(lo), &hi)?;
        println!(
            "v12={} v34={} v67={} v8={}",
            fixed.v12, fixed.v34, fixed.v67, fixed.v8
        );
        for interval in &report.intervals {
            println!("  {interval}");
        }
    }
    Ok(())
}
