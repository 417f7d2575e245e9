//! Exact tropical geometry of symmetric truncated cubics.
//!
//! Valuation vectors become min-plus polynomials, regular subdivisions and
//! dual tropical curves, all in exact rational arithmetic. On top of that
//! sit the curve-class catalog, a sweep in the middle coefficient, and the
//! valuations of a family of cubics given by truncated q-series.

pub mod classify;
pub mod cli;
pub mod curve;
pub mod error;
pub mod numeric;
pub mod oracle;
pub mod render;
pub mod series;
pub mod subdivision;
pub mod tropical;

pub use classify::{classify_by_cones, classify_by_subdivision, CurveClass, CycleShape, Row};
pub use curve::{dual_curve, extract_cycle, TropicalCurve};
pub use error::{Error, Result};
pub use numeric::{ExtRational, LatticePoint, Rational, RationalPoint};
pub use subdivision::{regular_subdivision, Subdivision};
pub use tropical::{build_symmetric_cubic, SymmetricCubicValuations, TropicalPolynomial};
