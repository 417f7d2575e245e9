//! Min-plus tropical polynomials in two variables.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{
    convex_hull, format_rational, int, polygon_area, ExtRational, LatticePoint, Rational,
    RationalPoint,
};

/// Label of one of the eight monomials of the symmetric truncated cubic.
///
/// `1 -> (1,2)`, `2 -> (2,1)`, `3 -> (2,0)`, `4 -> (0,2)`, `5 -> (1,1)`,
/// `6 -> (1,0)`, `7 -> (0,1)`, `8 -> (0,0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct SupportLabel(u8);

const LABEL_POINTS: [LatticePoint; 8] = [
    LatticePoint::new(1, 2),
    LatticePoint::new(2, 1),
    LatticePoint::new(2, 0),
    LatticePoint::new(0, 2),
    LatticePoint::new(1, 1),
    LatticePoint::new(1, 0),
    LatticePoint::new(0, 1),
    LatticePoint::new(0, 0),
];

impl SupportLabel {
    pub fn new(label: u8) -> Result<Self> {
        if (1..=8).contains(&label) {
            Ok(SupportLabel(label))
        } else {
            Err(Error::Parse(format!("support label {label} outside 1..8")))
        }
    }

    pub fn get(self) -> u8 {
        self.0
    }

    pub fn point(self) -> LatticePoint {
        LABEL_POINTS[usize::from(self.0 - 1)]
    }

    pub fn from_point(p: LatticePoint) -> Option<Self> {
        LABEL_POINTS
            .iter()
            .position(|&q| q == p)
            .map(|i| SupportLabel(i as u8 + 1))
    }

    pub fn all() -> impl Iterator<Item = SupportLabel> {
        (1..=8).map(SupportLabel)
    }
}

impl TryFrom<u8> for SupportLabel {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        SupportLabel::new(v)
    }
}

impl From<SupportLabel> for u8 {
    fn from(l: SupportLabel) -> u8 {
        l.0
    }
}

impl fmt::Display for SupportLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Convenience: the lattice point of label `l`. Panics outside `1..=8`.
pub fn label_point(l: u8) -> LatticePoint {
    SupportLabel::new(l).expect("label in 1..=8").point()
}

/// The five valuations `(v12, v34, v5, v67, v8)` of a symmetric truncated cubic.
///
/// Only `v8` may be infinite (vanishing constant term).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymmetricCubicValuations {
    pub v12: Rational,
    pub v34: Rational,
    pub v5: Rational,
    pub v67: Rational,
    pub v8: ExtRational,
}

impl SymmetricCubicValuations {
    pub fn new(v12: Rational, v34: Rational, v5: Rational, v67: Rational, v8: ExtRational) -> Self {
        SymmetricCubicValuations {
            v12,
            v34,
            v5,
            v67,
            v8,
        }
    }

    pub fn from_ints(v12: i64, v34: i64, v5: i64, v67: i64, v8: Option<i64>) -> Self {
        SymmetricCubicValuations::new(
            int(v12),
            int(v34),
            int(v5),
            int(v67),
            v8.map_or(ExtRational::Infinity, ExtRational::from_int),
        )
    }

    /// Builds from five extended values, rejecting an infinite `v12..v67`.
    pub fn from_ext(values: [ExtRational; 5]) -> Result<Self> {
        let [a, b, c, d, e] = values;
        let fin = |x: ExtRational, name: &'static str| {
            x.into_finite().ok_or(Error::NonFiniteCoefficient(name))
        };
        Ok(SymmetricCubicValuations::new(
            fin(a, "v12")?,
            fin(b, "v34")?,
            fin(c, "v5")?,
            fin(d, "v67")?,
            e,
        ))
    }

    pub fn to_ext(&self) -> [ExtRational; 5] {
        [
            self.v12.clone().into(),
            self.v34.clone().into(),
            self.v5.clone().into(),
            self.v67.clone().into(),
            self.v8.clone(),
        ]
    }

    /// Valuation attached to a support label.
    pub fn height(&self, label: SupportLabel) -> ExtRational {
        match label.get() {
            1 | 2 => self.v12.clone().into(),
            3 | 4 => self.v34.clone().into(),
            5 => self.v5.clone().into(),
            6 | 7 => self.v67.clone().into(),
            _ => self.v8.clone(),
        }
    }

    pub fn with_v5(&self, k: Rational) -> Self {
        SymmetricCubicValuations {
            v5: k,
            ..self.clone()
        }
    }
}

impl fmt::Display for SymmetricCubicValuations {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{},{}",
            format_rational(&self.v12),
            format_rational(&self.v34),
            format_rational(&self.v5),
            format_rational(&self.v67),
            self.v8
        )
    }
}

impl FromStr for SymmetricCubicValuations {
    type Err = Error;

    /// Parses `v12,v34,v5,v67,v8`, e.g. `3,2,0,1,inf`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 5 {
            return Err(Error::Parse(format!(
                "expected 5 comma-separated values, got {}",
                parts.len()
            )));
        }
        let vals = parts
            .iter()
            .map(|p| p.parse::<ExtRational>())
            .collect::<Result<Vec<_>>>()?;
        let arr: [ExtRational; 5] = vals.try_into().expect("length checked");
        SymmetricCubicValuations::from_ext(arr)
    }
}

/// A tropical polynomial `min (c_ij + i X + j Y)` with finite coefficients.
///
/// Terms with an infinite coefficient never attain the minimum and are
/// dropped at construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct TropicalPolynomial {
    terms: BTreeMap<LatticePoint, Rational>,
}

impl TropicalPolynomial {
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (LatticePoint, ExtRational)>,
    {
        let terms = terms
            .into_iter()
            .filter_map(|(p, c)| c.into_finite().map(|c| (p, c)))
            .collect();
        TropicalPolynomial { terms }
    }

    pub fn from_finite_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (LatticePoint, Rational)>,
    {
        TropicalPolynomial {
            terms: terms.into_iter().collect(),
        }
    }

    pub fn terms(&self) -> &BTreeMap<LatticePoint, Rational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> Vec<LatticePoint> {
        self.terms.keys().copied().collect()
    }

    pub fn coefficient(&self, p: LatticePoint) -> ExtRational {
        self.terms
            .get(&p)
            .map_or(ExtRational::Infinity, |c| ExtRational::Finite(c.clone()))
    }

    /// Value of term `p` at `pt`, or `None` when `p` is not in the support.
    pub fn term_value(&self, p: LatticePoint, pt: &RationalPoint) -> Option<Rational> {
        self.terms.get(&p).map(|c| c + pt.dot(p))
    }

    /// The minimum over all terms and every exponent attaining it.
    pub fn evaluate(&self, pt: &RationalPoint) -> Result<(Rational, BTreeSet<LatticePoint>)> {
        let mut best: Option<Rational> = None;
        let mut argmin = BTreeSet::new();
        for (&p, c) in &self.terms {
            let val = c + pt.dot(p);
            match &best {
                Some(b) if val > *b => {}
                Some(b) if val == *b => {
                    argmin.insert(p);
                }
                _ => {
                    best = Some(val);
                    argmin.clear();
                    argmin.insert(p);
                }
            }
        }
        best.map(|b| (b, argmin)).ok_or(Error::EmptyPolynomial)
    }

    /// Counterclockwise vertices of the Newton polygon, starting from the
    /// topmost (then rightmost) vertex.
    pub fn newton_polygon(&self) -> Result<Vec<LatticePoint>> {
        let mut hull = convex_hull(&self.support());
        if hull.len() < 3 {
            return Err(Error::DegenerateSupport);
        }
        let start = hull
            .iter()
            .enumerate()
            .max_by_key(|(_, p)| (p.y, p.x))
            .map(|(i, _)| i)
            .expect("nonempty hull");
        hull.rotate_left(start);
        Ok(hull)
    }

    pub fn newton_area(&self) -> Result<Rational> {
        Ok(polygon_area(&self.newton_polygon()?))
    }

    /// The polynomial `max(-c_ij + iX + jY)` rewritten in min form at `-X`,
    /// i.e. the coefficient-negated polynomial used for max-convention input.
    pub fn negated_coefficients(&self) -> TropicalPolynomial {
        TropicalPolynomial {
            terms: self.terms.iter().map(|(p, c)| (*p, -c)).collect(),
        }
    }

    pub fn to_json(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .map(|(p, c)| TermJson {
                i: p.x,
                j: p.y,
                coeff: format_rational(c),
            })
            .collect()
    }

    pub fn from_json(terms: &[TermJson]) -> Result<Self> {
        let parsed = terms
            .iter()
            .map(|t| Ok((LatticePoint::new(t.i, t.j), t.coeff.parse::<ExtRational>()?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(TropicalPolynomial::from_terms(parsed))
    }
}

impl fmt::Display for TropicalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(p, c)| {
                let mut s = format_rational(c);
                match p.x {
                    0 => {}
                    1 => s.push_str(" + X"),
                    k => s.push_str(&format!(" + {k}X")),
                }
                match p.y {
                    0 => {}
                    1 => s.push_str(" + Y"),
                    k => s.push_str(&format!(" + {k}Y")),
                }
                s
            })
            .collect();
        write!(f, "min({})", parts.join(", "))
    }
}

/// JSON form of one term: `{"i":1,"j":2,"coeff":"3"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub i: i64,
    pub j: i64,
    pub coeff: String,
}

/// The symmetric truncated cubic with coefficient valuations `v`.
pub fn build_symmetric_cubic(v: &SymmetricCubicValuations) -> TropicalPolynomial {
    TropicalPolynomial::from_terms(SupportLabel::all().map(|l| (l.point(), v.height(l))))
}
