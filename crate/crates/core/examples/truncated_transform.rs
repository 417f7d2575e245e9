//! The transformed cubic has the point-reflected curve, with dual labels
//! reflected through the centre of the triangle.

use tropical_cubic::curve::{reflect_support_point, truncated_transform};
use tropical_cubic::{
    build_symmetric_cubic, dual_curve, regular_subdivision, SymmetricCubicValuations,
};

fn main() -> tropical_cubic::Result<()> {
    let v = SymmetricCubicValuations::from_ints(3, 2, 0, 1, Some(3));
    let f = build_symmetric_cubic(&v);
    let g = truncated_transform(&v);
    println!("f = {f}");
    println!("g = {g}");
    let cf = dual_curve(&f, &regular_subdivision(&f)?)?;
    let cg = dual_curve(&g, &regular_subdivision(&g)?)?;
    for vertex in &cg.vertices {
        println!("g vertex {} dual to {}", vertex.point, vertex.cell);
    }
    let same = cf.reflect().signature() == cg.map_dual(reflect_support_point)?.signature();
    println!("curve of g is the reflected curve of f: {same}");
    Ok(())
}
