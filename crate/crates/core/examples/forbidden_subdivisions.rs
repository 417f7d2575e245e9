//! Subdivisions of the truncated cubic that no lift induces, checked in the
//! symmetric slice and again with one free height per point.

use tropical_cubic::classify::{shape_points, FORBIDDEN_SHAPES};
use tropical_cubic::subdivision::{is_regular_shape, Slice};

fn main() -> tropical_cubic::Result<()> {
    for shape in FORBIDDEN_SHAPES {
        let cells: Vec<String> = shape
            .iter()
            .map(|c| {
                format!(
                    "[{}]",
                    c.iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                )
            })
            .collect();
        let points = shape_points(shape);
        let symmetric = is_regular_shape(&points, Slice::Symmetric5)?.is_some();
        let general = is_regular_shape(&points, Slice::General8)?.is_some();
        println!(
            "{:<44} symmetric lift: {:<5} general lift: {general}",
            cells.join(" "),
            symmetric
        );
    }
    Ok(())
}
