//! Shared generators for the integration tests.
#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::Rng;
use tropical_cubic::numeric::{int, rat, ExtRational, Rational};
use tropical_cubic::SymmetricCubicValuations;

/// A rational in `[-20, 20]` with denominator at most 4.
pub fn wide_rational(rng: &mut StdRng) -> Rational {
    let den = rng.gen_range(1..=4);
    rat(rng.gen_range(-20 * den..=20 * den), den)
}

/// Small integers hit cone boundaries often.
pub fn small_int(rng: &mut StdRng) -> Rational {
    int(rng.gen_range(-3..=3))
}

/// Mixed suite: one third low-integer vectors, the rest wide rationals,
/// and about one in ten without a constant term.
pub fn random_valuations(rng: &mut StdRng) -> SymmetricCubicValuations {
    let boundary = rng.gen_ratio(1, 3);
    let draw = |rng: &mut StdRng| {
        if boundary {
            small_int(rng)
        } else {
            wide_rational(rng)
        }
    };
    let v12 = draw(rng);
    let v34 = draw(rng);
    let v5 = draw(rng);
    let v67 = draw(rng);
    let v8 = if rng.gen_ratio(1, 10) {
        ExtRational::Infinity
    } else {
        ExtRational::Finite(draw(rng))
    };
    SymmetricCubicValuations::new(v12, v34, v5, v67, v8)
}

pub fn suite(rng: &mut StdRng, n: usize) -> Vec<SymmetricCubicValuations> {
    (0..n).map(|_| random_valuations(rng)).collect()
}

/// A rational strictly between `lo` and `hi`.
pub fn between(rng: &mut StdRng, lo: &Rational, hi: &Rational) -> Rational {
    let t = rat(rng.gen_range(1..1000), 1000);
    lo + (hi - lo) * t
}
