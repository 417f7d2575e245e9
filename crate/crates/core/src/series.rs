//! Truncated Laurent series in `q` over the rationals, the two theta-like
//! products and the valuations of the Edwards-curve coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::classify::{classify_by_subdivision, CurveClass, CycleShape, Row};
use crate::error::{Error, Result};
use crate::numeric::{format_rational, int, parse_rational, ExtRational, Rational};
use crate::tropical::SymmetricCubicValuations;

/// A Laurent series in `q` known exactly up to and including `q^order`.
///
/// When `lossy` is false the series has no terms beyond those stored and
/// is an exact Laurent polynomial; when true, terms above `order` are
/// unknown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    order: i64,
    coeffs: BTreeMap<i64, Rational>,
    lossy: bool,
}

impl QSeries {
    pub fn zero(order: i64) -> QSeries {
        QSeries {
            order,
            coeffs: BTreeMap::new(),
            lossy: false,
        }
    }

    pub fn one(order: i64) -> QSeries {
        QSeries::monomial(Rational::one(), 0, order)
    }

    pub fn monomial(c: Rational, exp: i64, order: i64) -> QSeries {
        QSeries::from_terms([(exp, c)], order)
    }

    /// Builds from `(exponent, coefficient)` pairs, truncating at `order`.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Rational)>, order: i64) -> QSeries {
        let mut coeffs: BTreeMap<i64, Rational> = BTreeMap::new();
        for (e, c) in terms {
            *coeffs.entry(e).or_insert_with(Rational::zero) += c;
        }
        QSeries {
            order,
            coeffs,
            lossy: false,
        }
        .normalized()
    }

    /// Drops zero coefficients and everything above the order, recording loss.
    fn normalized(mut self) -> QSeries {
        self.coeffs.retain(|_, c| !c.is_zero());
        let above = self.coeffs.split_off(&(self.order + 1));
        self.lossy |= !above.is_empty();
        self
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn is_lossy(&self) -> bool {
        self.lossy
    }

    pub fn coefficient(&self, exp: i64) -> Rational {
        self.coeffs
            .get(&exp)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    /// Exactly zero, as opposed to zero up to the order.
    pub fn is_exact_zero(&self) -> bool {
        self.coeffs.is_empty() && !self.lossy
    }

    /// Same series re-truncated at `order`; raising the order of a lossy
    /// series is not possible and keeps the old one.
    pub fn truncate(&self, order: i64) -> QSeries {
        let order = if self.lossy {
            order.min(self.order)
        } else {
            order
        };
        QSeries {
            order,
            coeffs: self.coeffs.clone(),
            lossy: self.lossy,
        }
        .normalized()
    }

    /// Exponent from which unknown terms may start, `None` when exact.
    fn known_until(&self) -> Option<i64> {
        self.lossy.then_some(self.order)
    }

    /// Smallest exponent that may carry a nonzero coefficient.
    fn lowest_possible(&self) -> Option<i64> {
        match self.coeffs.keys().next() {
            Some(&e) => Some(e),
            None => self.known_until().map(|o| o + 1),
        }
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        let mut coeffs = self.coeffs.clone();
        for (e, c) in &other.coeffs {
            *coeffs.entry(*e).or_insert_with(Rational::zero) += c;
        }
        QSeries {
            order: self.order.min(other.order),
            coeffs,
            lossy: self.lossy || other.lossy,
        }
        .normalized()
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> QSeries {
        QSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
            lossy: self.lossy,
        }
    }

    pub fn scale(&self, k: &Rational) -> QSeries {
        QSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * k)).collect(),
            lossy: self.lossy,
        }
        .normalized()
    }

    /// Product; the result is known up to the lesser of the input orders and
    /// the first exponent an unknown tail can reach.
    pub fn mul(&self, other: &QSeries) -> QSeries {
        let cap = self.order.min(other.order);
        if self.is_exact_zero() || other.is_exact_zero() {
            return QSeries::zero(cap);
        }
        let mut known = cap;
        if let (Some(k), Some(low)) = (self.known_until(), other.lowest_possible()) {
            known = known.min(k + low);
        }
        if let (Some(k), Some(low)) = (other.known_until(), self.lowest_possible()) {
            known = known.min(k + low);
        }
        let mut coeffs: BTreeMap<i64, Rational> = BTreeMap::new();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &other.coeffs {
                if ea + eb > known {
                    break;
                }
                *coeffs.entry(ea + eb).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        let dropped = self
            .coeffs
            .keys()
            .any(|ea| other.coeffs.keys().any(|eb| ea + eb > known));
        QSeries {
            order: known,
            coeffs,
            lossy: self.lossy || other.lossy || dropped,
        }
        .normalized()
    }

    pub fn pow(&self, k: u32) -> QSeries {
        (0..k).fold(QSeries::one(self.order), |acc, _| acc.mul(self))
    }

    pub fn valuation(&self) -> SeriesValuation {
        match self.coeffs.keys().next() {
            Some(&e) => SeriesValuation::Finite(e),
            None if self.lossy => SeriesValuation::Indeterminate,
            None => SeriesValuation::Infinite,
        }
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in &self.coeffs {
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            let coef = format_rational(&mag);
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{coef}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{coef}*q")?,
                (e, true) => write!(f, "q^{e}")?,
                (e, false) => write!(f, "{coef}*q^{e}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        if self.lossy {
            write!(f, " + O(q^{})", self.order + 1)?;
        }
        Ok(())
    }
}

/// An exact Laurent polynomial in `q`, as given on input.
///
/// Accepts sums like `1 - 2*q + 1/2*q^3`, `2q^-1`, or comma separated
/// terms `1, -2*q, 1/2*q^3`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPolynomial {
    pub fn new(terms: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let mut map: BTreeMap<i64, Rational> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        LaurentPolynomial { terms: map }
    }

    pub fn constant(c: i64) -> Self {
        LaurentPolynomial::new([(0, int(c))])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_series(&self, order: i64) -> QSeries {
        QSeries::from_terms(self.terms.iter().map(|(e, c)| (*e, c.clone())), order)
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top = self.terms.keys().next_back().copied().unwrap_or(0).max(0);
        write!(f, "{}", self.to_series(top))
    }
}

impl FromStr for LaurentPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("series {s:?}: {why}"));
        let cleaned: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| if c == '\u{2212}' { '-' } else { c })
            .collect();
        if cleaned.is_empty() {
            return Err(bad("empty"));
        }
        // split into signed terms, keeping exponent signs after '^'
        let mut pieces: Vec<String> = Vec::new();
        let mut cur = String::new();
        let mut prev: Option<char> = None;
        for c in cleaned.chars() {
            let splits = match c {
                ',' => true,
                '+' | '-' => !matches!(prev, None | Some('^') | Some(',')) && !cur.is_empty(),
                _ => false,
            };
            if splits {
                pieces.push(std::mem::take(&mut cur));
            }
            if c != ',' {
                cur.push(c);
            }
            prev = Some(c);
        }
        pieces.push(cur);
        let mut terms = Vec::new();
        for piece in pieces {
            if piece.is_empty() {
                return Err(bad("empty term"));
            }
            terms.push(
                parse_term(&piece).ok_or_else(|| bad(&format!("cannot read term {piece:?}")))?,
            );
        }
        Ok(LaurentPolynomial::new(terms))
    }
}

fn parse_term(t: &str) -> Option<(i64, Rational)> {
    let (sign, body) = match t.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, t.strip_prefix('+').unwrap_or(t)),
    };
    let Some(qpos) = body.find('q') else {
        return parse_rational(body).ok().map(|c| (0, c * int(sign)));
    };
    let (coef, rest) = body.split_at(qpos);
    let coef = coef.strip_suffix('*').unwrap_or(coef);
    let c = if coef.is_empty() {
        Rational::one()
    } else {
        parse_rational(coef).ok()?
    };
    let exp = match &rest[1..] {
        "" => 1,
        e => e.strip_prefix('^')?.parse().ok()?,
    };
    Some((exp, c * int(sign)))
}

/// Valuation of a truncated series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesValuation {
    Finite(i64),
    Infinite,
    /// Zero up to the truncation order with a possibly nonzero tail.
    Indeterminate,
}

impl SeriesValuation {
    pub fn to_ext(self) -> Option<ExtRational> {
        match self {
            SeriesValuation::Finite(e) => Some(ExtRational::from_int(e)),
            SeriesValuation::Infinite => Some(ExtRational::Infinity),
            SeriesValuation::Indeterminate => None,
        }
    }
}

impl fmt::Display for SeriesValuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesValuation::Finite(e) => write!(f, "{e}"),
            SeriesValuation::Infinite => write!(f, "inf"),
            SeriesValuation::Indeterminate => write!(f, "?"),
        }
    }
}

/// `prod_{n>=1} (1 + q^n)` truncated at `order`.
pub fn alpha(order: i64) -> QSeries {
    theta_product(order, 1)
}

/// `prod_{n>=1} (1 + (-q)^n)` truncated at `order`.
pub fn alpha_bar(order: i64) -> QSeries {
    theta_product(order, -1)
}

fn theta_product(order: i64, sign: i64) -> QSeries {
    let mut acc = QSeries::one(order);
    for n in 1..=order.max(0) {
        let c = if n % 2 == 1 { sign } else { 1 };
        let factor = QSeries::from_terms([(0, int(1)), (n, int(c))], order);
        acc = acc.mul(&factor);
    }
    // factors beyond the order only touch exponents above it
    QSeries { lossy: true, ..acc }
}

/// The coefficients `(d12, d34, d5, d67, d8)` of the truncated symmetric
/// cubic attached to the Edwards curve with parameters `r, s`.
pub fn edwards_coefficients(r: &QSeries, s: &QSeries, order: i64) -> [QSeries; 5] {
    let (r, s) = (r.truncate(order), s.truncate(order));
    let a = alpha(order);
    let b = alpha_bar(order);
    let two = int(2);
    let ab = a.mul(&b);
    let a2 = a.pow(2);
    let b2 = b.pow(2);
    let a4_minus_b4 = a.pow(4).sub(&b.pow(4));
    let (r2, s2, rs) = (r.pow(2), s.pow(2), r.mul(&s));
    let ar_minus_bs = a.mul(&r).sub(&b.mul(&s));

    let d12 = ab
        .mul(&a4_minus_b4)
        .mul(&b.mul(&s).sub(&a.mul(&r)))
        .scale(&two);
    let d34 = a4_minus_b4.mul(&b2.mul(&s2).sub(&a2.mul(&r2)));
    let d5 = ab
        .mul(&ar_minus_bs)
        .mul(&b.pow(3).mul(&r).sub(&a.pow(3).mul(&s)))
        .scale(&int(8));
    let inner = a4_minus_b4
        .neg()
        .mul(&rs)
        .add(&ab.mul(&b2.mul(&r2).sub(&a2.mul(&s2))).scale(&two));
    let d67 = ar_minus_bs.mul(&inner).scale(&two);
    let d8 = a2
        .mul(&s2)
        .sub(&b2.mul(&r2))
        .mul(&b2.mul(&s2).sub(&a2.mul(&r2)))
        .scale(&two);
    [d12, d34, d5, d67, d8]
}

/// Valuations `(u12, u34, u5, u67, u8)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdwardsValuations(pub [SeriesValuation; 5]);

const COEFF_NAMES: [&str; 5] = ["d12", "d34", "d5", "d67", "d8"];

impl EdwardsValuations {
    pub fn of(d: &[QSeries; 5]) -> EdwardsValuations {
        EdwardsValuations([0, 1, 2, 3, 4].map(|i| d[i].valuation()))
    }

    pub fn is_determinate(&self) -> bool {
        !self.0.contains(&SeriesValuation::Indeterminate)
    }

    /// As cubic valuations; only `u8` may be infinite.
    pub fn to_cubic(&self) -> Result<SymmetricCubicValuations> {
        let mut out = Vec::with_capacity(5);
        for (i, (u, name)) in self.0.iter().zip(COEFF_NAMES).enumerate() {
            match u.to_ext() {
                None => return Err(Error::IndeterminateValuation(name)),
                Some(ExtRational::Infinity) if i < 4 => return Err(Error::InfiniteValuation(name)),
                Some(x) => out.push(x),
            }
        }
        SymmetricCubicValuations::from_ext(out.try_into().expect("five values"))
    }
}

impl fmt::Display for EdwardsValuations {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The seven curve shapes that occur for Edwards curves, `(a)` to `(g)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdwardsShape {
    /// One vertex, no cycle.
    NoEdge,
    /// One bounded edge, no cycle.
    OneEdge,
    SquareOnly,
    SquareOneEdge,
    TrivalentPentagon,
    SmoothSquare,
    SmoothHeptagon,
}

impl EdwardsShape {
    pub fn of_class(class: &CurveClass) -> Option<EdwardsShape> {
        Some(match class {
            CurveClass::NonSmooth(Row::I) => EdwardsShape::NoEdge,
            CurveClass::NonSmooth(Row::J) => EdwardsShape::OneEdge,
            CurveClass::NonSmooth(Row::F) => EdwardsShape::SquareOnly,
            CurveClass::NonSmooth(Row::G) => EdwardsShape::SquareOneEdge,
            CurveClass::NonSmooth(Row::H) => EdwardsShape::TrivalentPentagon,
            CurveClass::Smooth(CycleShape::Square) => EdwardsShape::SmoothSquare,
            CurveClass::Smooth(CycleShape::Heptagon) => EdwardsShape::SmoothHeptagon,
            _ => return None,
        })
    }

    /// Short tag `a` to `g`.
    pub fn tag(self) -> char {
        (b'a' + self as u8) as char
    }

    pub fn has_cycle(self) -> bool {
        !matches!(self, EdwardsShape::NoEdge | EdwardsShape::OneEdge)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdwardsClassification {
    pub order: i64,
    pub valuations: EdwardsValuations,
    pub class: CurveClass,
    /// `None` would be a shape outside the known seven.
    pub shape: Option<EdwardsShape>,
}

/// Classifies at a fixed truncation order.
pub fn classify_edwards(r: &QSeries, s: &QSeries, order: i64) -> Result<EdwardsClassification> {
    let valuations = EdwardsValuations::of(&edwards_coefficients(r, s, order));
    let cubic = valuations.to_cubic()?;
    // the curve of f is minus that of h; classes are reflection invariant
    let class = classify_by_subdivision(&cubic)?;
    let shape = EdwardsShape::of_class(&class);
    Ok(EdwardsClassification {
        order,
        valuations,
        class,
        shape,
    })
}

pub const DEFAULT_ORDER: i64 = 12;
pub const MAX_ORDER: i64 = 96;

/// Classifies exact inputs, doubling the order from `start` on
/// indeterminate valuations up to [`MAX_ORDER`].
pub fn classify_edwards_auto(
    r: &LaurentPolynomial,
    s: &LaurentPolynomial,
    start: i64,
) -> Result<EdwardsClassification> {
    let mut order = start.max(1);
    loop {
        match classify_edwards(&r.to_series(order), &s.to_series(order), order) {
            Err(Error::IndeterminateValuation(_)) if order < MAX_ORDER => {
                order = (order * 2).min(MAX_ORDER)
            }
            other => return other,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    fn poly(s: &str, order: i64) -> QSeries {
        s.parse::<LaurentPolynomial>().unwrap().to_series(order)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(poly("1+q", 5).mul(&poly("1-q", 5)), poly("1-q^2", 5));
        let sq = poly("q", 1).mul(&poly("q", 1));
        assert!(sq.is_lossy());
        assert_eq!(sq.valuation(), SeriesValuation::Indeterminate);
        assert_eq!(
            poly("1+q", 3).pow(4),
            QSeries {
                lossy: true,
                ..poly("1+4q+6q^2+4q^3", 3)
            }
        );
    }

    #[test]
    fn products() {
        assert_eq!(
            alpha(3)
                .terms()
                .map(|(e, c)| (e, c.clone()))
                .collect::<Vec<_>>(),
            vec![(0, int(1)), (1, int(1)), (2, int(1)), (3, int(2))]
        );
        let b = alpha_bar(3);
        assert_eq!(
            (0..=3).map(|e| b.coefficient(e)).collect::<Vec<_>>(),
            vec![int(1), int(-1), int(1), int(-2)]
        );
        let small = alpha(6).mul(&alpha_bar(6));
        let big = alpha(12).mul(&alpha_bar(12));
        for e in 0..=6 {
            assert_eq!(small.coefficient(e), big.coefficient(e));
        }
    }

    #[test]
    fn lossy_tail_limits_product_order() {
        let a = alpha(4);
        let p = a.mul(&poly("q^-2", 4));
        assert_eq!(p.order(), 2);
        assert_eq!(p.coefficient(-2), int(1));
        let z = QSeries {
            lossy: true,
            ..QSeries::zero(3)
        };
        assert_eq!(
            z.mul(&poly("q", 10)).valuation(),
            SeriesValuation::Indeterminate
        );
        assert_eq!(
            QSeries::zero(3).mul(&a).valuation(),
            SeriesValuation::Infinite
        );
    }

    #[test]
    fn parse_formats() {
        let want = LaurentPolynomial::new([(0, int(1)), (1, int(-2)), (3, rat(1, 2))]);
        assert_eq!(
            "1, -2*q, 1/2*q^3".parse::<LaurentPolynomial>().unwrap(),
            want
        );
        assert_eq!(
            "1 - 2q + 1/2*q^3".parse::<LaurentPolynomial>().unwrap(),
            want
        );
        assert_eq!(
            "q^-1".parse::<LaurentPolynomial>().unwrap(),
            LaurentPolynomial::new([(-1, int(1))])
        );
        assert_eq!(
            "0".parse::<LaurentPolynomial>().unwrap(),
            LaurentPolynomial::default()
        );
        assert!("1 + x".parse::<LaurentPolynomial>().is_err());
        assert!("".parse::<LaurentPolynomial>().is_err());
        assert_eq!(poly("1 - 2q + 1/2*q^3", 5).to_string(), "1 - 2*q + 1/2*q^3");
    }

    #[test]
    fn coefficient_examples() {
        let one = poly("1", 4);
        let zero = poly("0", 4);
        let d = edwards_coefficients(&one, &zero, 4);
        let want_d8 = alpha(4).pow(2).mul(&alpha_bar(4).pow(2)).scale(&int(2));
        assert_eq!(d[4], want_d8);
        assert_eq!(
            EdwardsValuations::of(&d).0,
            [1, 1, 0, 0, 0].map(SeriesValuation::Finite)
        );
        let d = edwards_coefficients(&zero, &zero, 4);
        assert!(d.iter().all(QSeries::is_exact_zero));
        let d = edwards_coefficients(&one, &one, 4);
        assert_eq!(d[0].valuation(), SeriesValuation::Finite(2));
    }

    #[test]
    fn classify_examples() {
        let one: LaurentPolynomial = "1".parse().unwrap();
        let zero = LaurentPolynomial::default();
        let c = classify_edwards(&one.to_series(6), &zero.to_series(6), 6).unwrap();
        assert_eq!(c.class, CurveClass::NonSmooth(Row::F));
        assert_eq!(c.shape.map(EdwardsShape::tag), Some('c'));
        assert!(matches!(
            classify_edwards_auto(&zero, &zero, DEFAULT_ORDER),
            Err(Error::InfiniteValuation("d12"))
        ));
    }

    #[test]
    fn larger_order_keeps_valuations() {
        let r: LaurentPolynomial = "1 + q".parse().unwrap();
        let s: LaurentPolynomial = "1 - q^2".parse().unwrap();
        let lo = EdwardsValuations::of(&edwards_coefficients(&r.to_series(8), &s.to_series(8), 8));
        let hi = EdwardsValuations::of(&edwards_coefficients(
            &r.to_series(24),
            &s.to_series(24),
            24,
        ));
        for (a, b) in lo.0.iter().zip(hi.0) {
            if *a != SeriesValuation::Indeterminate {
                assert_eq!(*a, b);
            }
        }
    }

    #[test]
    fn doubling_resolves_deep_cancellation() {
        // r = s makes (alpha_bar s - alpha r) start at q^1 and d8 start deep
        let r: LaurentPolynomial = "q^5".parse().unwrap();
        let c = classify_edwards_auto(&r, &r, 4).unwrap();
        assert!(c.order > 4);
        assert!(c.valuations.is_determinate());
    }
}
