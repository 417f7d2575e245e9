//! The hexagonal honeycomb with a tail, and its symmetric variant without a
//! constant term.

use tropical_cubic::classify::honeycomb_profile;
use tropical_cubic::{build_symmetric_cubic, SymmetricCubicValuations};
use tropical_cubic::{classify_by_subdivision, dual_curve, extract_cycle, regular_subdivision};

fn main() -> tropical_cubic::Result<()> {
    for v in [
        SymmetricCubicValuations::from_ints(3, 2, 0, 1, Some(3)),
        SymmetricCubicValuations::from_ints(3, 2, 0, 1, None),
    ] {
        let p = build_symmetric_cubic(&v);
        let curve = dual_curve(&p, &regular_subdivision(&p)?)?;
        let cycle = extract_cycle(&curve)?;
        let sides: Vec<String> = cycle.side_lengths.iter().map(ToString::to_string).collect();
        println!("v = {v}: {}", classify_by_subdivision(&v)?);
        println!("  cycle side lengths {}", sides.join(", "));
        println!(
            "  {} bounded edges, {} rays",
            curve.edges.len(),
            curve.rays.len()
        );
        println!("  {:?}", honeycomb_profile(&v));
    }
    Ok(())
}
