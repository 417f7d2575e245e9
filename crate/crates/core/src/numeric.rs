//! Exact scalars and lattice vectors.
//!
//! Everything downstream works over [`Rational`] (arbitrary precision) or the
//! extended scalar [`ExtRational`], which adds a single `+inf` used for the
//! valuation of a vanishing coefficient. There is no floating point here.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Shorthand for building a rational from machine integers.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p/q`, `p` or a terminating decimal such as `-7.5`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim().replace('\u{2212}', "-");
    if t.is_empty() {
        return Err(Error::Parse("empty number".into()));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(Error::Parse(format!("bad decimal '{s}'")));
        }
        let negative = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        let whole_val: BigInt = if whole_digits.is_empty() {
            BigInt::zero()
        } else {
            whole_digits
                .parse()
                .map_err(|_| Error::Parse(format!("bad decimal '{s}'")))?
        };
        let frac_val: BigInt = frac
            .parse()
            .map_err(|_| Error::Parse(format!("bad decimal '{s}'")))?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let mag = Rational::new(whole_val * &scale + frac_val, scale);
        return Ok(if negative { -mag } else { mag });
    }
    let t = t.strip_prefix('+').unwrap_or(&t);
    Rational::from_str(t).map_err(|_| Error::Parse(format!("bad rational '{s}'")))
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A rational number extended by `+inf`.
///
/// Ordering is total with `Infinity` above every finite value. Addition is
/// absorbing on `Infinity`; any operation that would need `inf - inf` or
/// `-inf` is an error.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtRational {
    Finite(Rational),
    Infinity,
}

impl ExtRational {
    pub fn from_int(n: i64) -> Self {
        ExtRational::Finite(int(n))
    }

    pub fn new(numer: i64, denom: i64) -> Self {
        ExtRational::Finite(rat(numer, denom))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtRational::Finite(_))
    }

    pub fn is_infinite(&self) -> bool {
        !self.is_finite()
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ExtRational::Finite(r) => Some(r),
            ExtRational::Infinity => None,
        }
    }

    pub fn into_finite(self) -> Option<Rational> {
        match self {
            ExtRational::Finite(r) => Some(r),
            ExtRational::Infinity => None,
        }
    }

    pub fn checked_sub(&self, other: &ExtRational) -> Result<ExtRational> {
        match (self, other) {
            (ExtRational::Finite(a), ExtRational::Finite(b)) => Ok(ExtRational::Finite(a - b)),
            (ExtRational::Infinity, ExtRational::Finite(_)) => Ok(ExtRational::Infinity),
            (ExtRational::Infinity, ExtRational::Infinity) => {
                Err(Error::IndeterminateInfinity("inf - inf"))
            }
            (ExtRational::Finite(_), ExtRational::Infinity) => Err(Error::IndeterminateInfinity(
                "finite - inf is not representable",
            )),
        }
    }

    pub fn checked_neg(&self) -> Result<ExtRational> {
        match self {
            ExtRational::Finite(a) => Ok(ExtRational::Finite(-a)),
            ExtRational::Infinity => Err(Error::IndeterminateInfinity("-inf is not representable")),
        }
    }

    /// Multiplies by an integer; `0 * inf` and negative multiples of `inf` are errors.
    pub fn checked_scale(&self, k: i64) -> Result<ExtRational> {
        match self {
            ExtRational::Finite(a) => Ok(ExtRational::Finite(a * int(k))),
            ExtRational::Infinity if k > 0 => Ok(ExtRational::Infinity),
            ExtRational::Infinity if k == 0 => Err(Error::IndeterminateInfinity("0 * inf")),
            ExtRational::Infinity => Err(Error::IndeterminateInfinity("negative multiple of inf")),
        }
    }

    pub fn abs(&self) -> ExtRational {
        match self {
            ExtRational::Finite(a) => ExtRational::Finite(a.abs()),
            ExtRational::Infinity => ExtRational::Infinity,
        }
    }
}

impl From<Rational> for ExtRational {
    fn from(r: Rational) -> Self {
        ExtRational::Finite(r)
    }
}

impl From<i64> for ExtRational {
    fn from(n: i64) -> Self {
        ExtRational::from_int(n)
    }
}

impl PartialOrd for ExtRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtRational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtRational::Finite(a), ExtRational::Finite(b)) => a.cmp(b),
            (ExtRational::Finite(_), ExtRational::Infinity) => Ordering::Less,
            (ExtRational::Infinity, ExtRational::Finite(_)) => Ordering::Greater,
            (ExtRational::Infinity, ExtRational::Infinity) => Ordering::Equal,
        }
    }
}

impl Add for &ExtRational {
    type Output = ExtRational;

    fn add(self, rhs: &ExtRational) -> ExtRational {
        match (self, rhs) {
            (ExtRational::Finite(a), ExtRational::Finite(b)) => ExtRational::Finite(a + b),
            _ => ExtRational::Infinity,
        }
    }
}

impl Add for ExtRational {
    type Output = ExtRational;

    fn add(self, rhs: ExtRational) -> ExtRational {
        &self + &rhs
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::Finite(r) => f.write_str(&format_rational(r)),
            ExtRational::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for ExtRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "inf" | "+inf" | "infinity" | "\u{221e}" => Ok(ExtRational::Infinity),
            _ => parse_rational(s).map(ExtRational::Finite),
        }
    }
}

impl Serialize for ExtRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ExtRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Serde adapter storing a [`Rational`] in the `p/q` string form.
pub mod rational_str {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// An integer point, used for exponents and primitive directions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64) -> Self {
        LatticePoint { x, y }
    }

    /// Rotation by +90 degrees.
    pub fn rotate_ccw(self) -> Self {
        LatticePoint::new(-self.y, self.x)
    }

    pub fn gcd(self) -> i64 {
        self.x.gcd(&self.y)
    }

    pub fn is_primitive(self) -> bool {
        self.gcd() == 1
    }

    pub fn to_rational(self) -> RationalPoint {
        RationalPoint::new(int(self.x), int(self.y))
    }
}

impl Add for LatticePoint {
    type Output = LatticePoint;

    fn add(self, rhs: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for LatticePoint {
    type Output = LatticePoint;

    fn sub(self, rhs: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for LatticePoint {
    type Output = LatticePoint;

    fn neg(self) -> LatticePoint {
        LatticePoint::new(-self.x, -self.y)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A point of the plane with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RationalPoint {
    #[serde(with = "rational_str")]
    pub x: Rational,
    #[serde(with = "rational_str")]
    pub y: Rational,
}

impl RationalPoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        RationalPoint { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        RationalPoint::new(int(x), int(y))
    }

    pub fn neg(&self) -> RationalPoint {
        RationalPoint::new(-&self.x, -&self.y)
    }

    pub fn sub(&self, other: &RationalPoint) -> RationalPoint {
        RationalPoint::new(&self.x - &other.x, &self.y - &other.y)
    }

    pub fn add(&self, other: &RationalPoint) -> RationalPoint {
        RationalPoint::new(&self.x + &other.x, &self.y + &other.y)
    }

    pub fn scale(&self, k: &Rational) -> RationalPoint {
        RationalPoint::new(&self.x * k, &self.y * k)
    }

    pub fn midpoint(&self, other: &RationalPoint) -> RationalPoint {
        let half = rat(1, 2);
        RationalPoint::new((&self.x + &other.x) * &half, (&self.y + &other.y) * &half)
    }

    /// Dot product with an integer vector.
    pub fn dot(&self, v: LatticePoint) -> Rational {
        &self.x * int(v.x) + &self.y * int(v.y)
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{})",
            format_rational(&self.x),
            format_rational(&self.y)
        )
    }
}

/// Splits a nonzero rational vector into `t * u` with `u` a primitive integer
/// vector and `t > 0`.
pub fn primitive_decomposition(d: &RationalPoint) -> Result<(LatticePoint, Rational)> {
    if d.x.is_zero() && d.y.is_zero() {
        return Err(Error::DegenerateSegment);
    }
    let l = d.x.denom().lcm(d.y.denom());
    let ix = (&d.x * Rational::from_integer(l.clone())).to_integer();
    let iy = (&d.y * Rational::from_integer(l.clone())).to_integer();
    let g = ix.gcd(&iy);
    let ux = (&ix / &g).to_i64().expect("direction fits in i64");
    let uy = (&iy / &g).to_i64().expect("direction fits in i64");
    Ok((LatticePoint::new(ux, uy), Rational::new(g, l)))
}

/// Length of the segment `pq` in units of its primitive lattice direction.
pub fn lattice_length(p: &RationalPoint, q: &RationalPoint) -> Result<Rational> {
    primitive_decomposition(&q.sub(p)).map(|(_, t)| t)
}

/// `(q - p) / gcd`, the primitive integer vector pointing from `p` to `q`.
pub fn primitive_direction(p: LatticePoint, q: LatticePoint) -> Result<LatticePoint> {
    let d = q - p;
    if d.x == 0 && d.y == 0 {
        return Err(Error::DegenerateSegment);
    }
    let g = d.gcd();
    Ok(LatticePoint::new(d.x / g, d.y / g))
}

/// Twice the signed area of the triangle `(o, a, b)`.
pub fn cross(o: LatticePoint, a: LatticePoint, b: LatticePoint) -> i64 {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

/// Counterclockwise convex hull with collinear boundary points dropped.
///
/// Returns fewer than three points when the input is collinear.
pub fn convex_hull(points: &[LatticePoint]) -> Vec<LatticePoint> {
    let mut pts: Vec<LatticePoint> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<LatticePoint> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<LatticePoint> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        // all collinear: the chain degenerates to the two extreme points
        let mut ends = vec![pts[0], pts[pts.len() - 1]];
        ends.dedup();
        return ends;
    }
    lower
}

/// Exact area of a simple polygon given by its vertices in order.
pub fn polygon_area(vertices: &[LatticePoint]) -> Rational {
    if vertices.len() < 3 {
        return Rational::zero();
    }
    let n = vertices.len();
    let twice: i64 = (0..n)
        .map(|i| {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            a.x * b.y - a.y * b.x
        })
        .sum();
    rat(twice.abs(), 2)
}

/// Whether `p` lies in the closed convex polygon given counterclockwise.
pub fn in_convex_polygon(p: LatticePoint, ccw: &[LatticePoint]) -> bool {
    let n = ccw.len();
    (0..n).all(|i| cross(ccw[i], ccw[(i + 1) % n], p) >= 0)
}

/// Whether `p` lies in the open interior of the convex polygon.
pub fn in_convex_interior(p: LatticePoint, ccw: &[LatticePoint]) -> bool {
    let n = ccw.len();
    (0..n).all(|i| cross(ccw[i], ccw[(i + 1) % n], p) > 0)
}

/// Whether `p` lies on the closed segment `ab`.
pub fn on_segment(p: LatticePoint, a: LatticePoint, b: LatticePoint) -> bool {
    cross(a, b, p) == 0
        && p.x >= a.x.min(b.x)
        && p.x <= a.x.max(b.x)
        && p.y >= a.y.min(b.y)
        && p.y <= a.y.max(b.y)
}

/// All lattice points of the closed convex polygon, by bounding-box scan.
pub fn lattice_points_in(ccw: &[LatticePoint]) -> Vec<LatticePoint> {
    if ccw.is_empty() {
        return Vec::new();
    }
    let (mut xmin, mut xmax, mut ymin, mut ymax) = (ccw[0].x, ccw[0].x, ccw[0].y, ccw[0].y);
    for p in ccw {
        xmin = xmin.min(p.x);
        xmax = xmax.max(p.x);
        ymin = ymin.min(p.y);
        ymax = ymax.max(p.y);
    }
    let mut out = Vec::new();
    for x in xmin..=xmax {
        for y in ymin..=ymax {
            let p = LatticePoint::new(x, y);
            let inside = if ccw.len() >= 3 {
                in_convex_polygon(p, ccw)
            } else {
                ccw.len() == 2 && on_segment(p, ccw[0], ccw[1]) || ccw.len() == 1 && p == ccw[0]
            };
            if inside {
                out.push(p);
            }
        }
    }
    out
}
