//! Writes an SVG of a curve beside its dual subdivision.

use tropical_cubic::render::{svg, BoundingBox};
use tropical_cubic::{
    build_symmetric_cubic, dual_curve, regular_subdivision, SymmetricCubicValuations,
};

fn main() -> tropical_cubic::Result<()> {
    let v: SymmetricCubicValuations = std::env::args()
        .nth(1)
        .as_deref()
        .unwrap_or("-10,0,-12,-5,0")
        .parse()?;
    let p = build_symmetric_cubic(&v);
    let sub = regular_subdivision(&p)?;
    let curve = dual_curve(&p, &sub)?;
    let bbox = BoundingBox::around(&curve, 2);
    let path = std::env::temp_dir().join("tropical-cubic.svg");
    std::fs::write(&path, svg(&curve, Some(&sub), &bbox, &format!("v = {v}")))?;
    println!("wrote {}", path.display());
    Ok(())
}
