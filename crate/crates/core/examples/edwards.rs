//! Classifies the tropicalised Edwards-curve cubic for a few parameter pairs.

use tropical_cubic::series::{classify_edwards_auto, LaurentPolynomial, DEFAULT_ORDER};

fn main() -> tropical_cubic::Result<()> {
    for (r, s) in [
        ("1", "0"),
        ("1", "q"),
        ("q", "1 + q^2"),
        ("2 - q", "q^2"),
        ("1 + q", "1 - q"),
    ] {
        let (r, s): (LaurentPolynomial, LaurentPolynomial) = (r.parse()?, s.parse()?);
        match classify_edwards_auto(&r, &s, DEFAULT_ORDER) {
            Ok(c) => println!(
                "r = {r}, s = {s}: u = {} at order {}, {} ({})",
                c.valuations,
                c.order,
                c.class,
                c.shape
                    .map_or("outside the catalogue".to_string(), |t| format!(
                        "shape {}",
                        t.tag()
                    ))
            ),
            Err(e) => println!("r = {r}, s = {s}: {e}"),
        }
    }
    Ok(())
}
