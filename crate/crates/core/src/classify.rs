//! Named curve classes: inequality cones, subdivision catalog, honeycomb
//! analysis and the one-parameter sweep in `v5`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{format_rational, int, ExtRational, LatticePoint, Rational};
use crate::oracle::Relation;
use crate::subdivision::{
    is_unimodular_subdivision, regular_subdivision, Subdivision, SubdivisionJson,
};
use crate::tropical::{build_symmetric_cubic, SupportLabel, SymmetricCubicValuations};

/// Shape of the cycle of a smooth curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CycleShape {
    Triangle,
    Square,
    Pentagon,
    Hexagon,
    Heptagon,
}

impl CycleShape {
    pub const ALL: [CycleShape; 5] = [
        CycleShape::Triangle,
        CycleShape::Square,
        CycleShape::Pentagon,
        CycleShape::Hexagon,
        CycleShape::Heptagon,
    ];

    pub fn sides(self) -> usize {
        self as usize + 3
    }

    pub fn from_sides(n: usize) -> Option<CycleShape> {
        CycleShape::ALL.get(n.checked_sub(3)?).copied()
    }

    pub fn name(self) -> &'static str {
        match self {
            CycleShape::Triangle => "Triangle",
            CycleShape::Square => "Square",
            CycleShape::Pentagon => "Pentagon",
            CycleShape::Hexagon => "Hexagon",
            CycleShape::Heptagon => "Heptagon",
        }
    }
}

/// The catalogued non-smooth subdivision types `A` to `J`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Row {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    I,
    J,
}

impl Row {
    pub const ALL: [Row; 10] = [
        Row::A,
        Row::B,
        Row::C,
        Row::D,
        Row::E,
        Row::F,
        Row::G,
        Row::H,
        Row::I,
        Row::J,
    ];

    pub fn letter(self) -> char {
        (b'A' + self as u8) as char
    }

    pub fn from_letter(c: char) -> Option<Row> {
        let i = (c.to_ascii_uppercase() as u8).checked_sub(b'A')?;
        Row::ALL.get(usize::from(i)).copied()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurveClass {
    Smooth(CycleShape),
    NonSmooth(Row),
    /// Not in the catalog; carries the subdivision fingerprint.
    Unlisted(String),
}

impl CurveClass {
    pub fn is_smooth(&self) -> bool {
        matches!(self, CurveClass::Smooth(_))
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveClass::Smooth(s) => write!(f, "Smooth/{}", s.name()),
            CurveClass::NonSmooth(r) => write!(f, "NonSmooth/{}", r.letter()),
            CurveClass::Unlisted(fp) => write!(f, "Unlisted/{fp}"),
        }
    }
}

impl FromStr for CurveClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown curve class {s:?}"));
        let (kind, rest) = s.split_once('/').ok_or_else(bad)?;
        match kind {
            "Smooth" => CycleShape::ALL
                .into_iter()
                .find(|c| c.name() == rest)
                .map(CurveClass::Smooth)
                .ok_or_else(bad),
            "NonSmooth" => {
                let mut chars = rest.chars();
                match (chars.next().and_then(Row::from_letter), chars.next()) {
                    (Some(r), None) => Ok(CurveClass::NonSmooth(r)),
                    _ => Err(bad()),
                }
            }
            "Unlisted" => Ok(CurveClass::Unlisted(rest.to_string())),
            _ => Err(bad()),
        }
    }
}

/// `c12*v12 + c34*v34 + c5*v5 + c67*v67 + c8*v8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm(pub [i64; 5]);

const VAR_NAMES: [&str; 5] = ["v12", "v34", "v5", "v67", "v8"];

impl LinearForm {
    /// Value with the `v8` term left out.
    fn finite_part(&self, v: &SymmetricCubicValuations) -> Rational {
        let [a, b, c, d, _] = self.0;
        int(a) * &v.v12 + int(b) * &v.v34 + int(c) * &v.v5 + int(d) * &v.v67
    }

    pub fn evaluate(&self, v: &SymmetricCubicValuations) -> ExtRational {
        let base = self.finite_part(v);
        match (&v.v8, self.0[4]) {
            (_, 0) => ExtRational::Finite(base),
            (ExtRational::Finite(v8), c8) => ExtRational::Finite(base + int(c8) * v8),
            // only the sign of the infinite part matters; see `holds`
            (ExtRational::Infinity, _) => ExtRational::Infinity,
        }
    }

    /// `form rel 0`, with an infinite `v8` decided by the sign of its coefficient.
    pub fn holds(&self, rel: Relation, v: &SymmetricCubicValuations) -> bool {
        let c8 = self.0[4];
        match (&v.v8, c8) {
            (ExtRational::Infinity, c8) if c8 != 0 => rel != Relation::Eq && c8 < 0,
            _ => {
                let x = match self.evaluate(v) {
                    ExtRational::Finite(x) => x,
                    ExtRational::Infinity => unreachable!("v8 unused"),
                };
                match rel {
                    Relation::Lt => x.is_negative(),
                    Relation::Le => !x.is_positive(),
                    Relation::Eq => x.is_zero(),
                }
            }
        }
    }

    /// The form as a function of `v5` alone: `(slope, intercept)`, or `None`
    /// when it involves an infinite `v8`.
    pub fn in_v5(&self, v: &SymmetricCubicValuations) -> Option<(Rational, Rational)> {
        let mut fixed = v.clone();
        fixed.v5 = Rational::zero();
        match self.evaluate(&fixed) {
            ExtRational::Finite(b) if self.0[4] == 0 || v.v8.is_finite() => {
                Some((int(self.0[2]), b))
            }
            _ => None,
        }
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, name) in self.0.iter().zip(VAR_NAMES) {
            if *c == 0 {
                continue;
            }
            let sign = if *c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}{name}")?;
            } else {
                write!(f, "{sign}{mag}{name}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// One inequality or equation `form rel 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Condition {
    pub form: LinearForm,
    pub relation: Relation,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = match self.relation {
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Eq => "=",
        };
        write!(f, "{}{}0", self.form, rel)
    }
}

const fn cond(c: [i64; 5], relation: Relation) -> Condition {
    Condition {
        form: LinearForm(c),
        relation,
    }
}

use Relation::{Eq as EQ, Le as LE, Lt as LT};

/// A cone of valuation vectors sharing one class.
#[derive(Clone, Copy, Debug)]
pub struct Cone {
    pub class: ConeClass,
    pub conditions: [Condition; 3],
}

/// A class with a static name, usable in const tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConeClass {
    Smooth(CycleShape),
    NonSmooth(Row),
}

impl From<ConeClass> for CurveClass {
    fn from(c: ConeClass) -> CurveClass {
        match c {
            ConeClass::Smooth(s) => CurveClass::Smooth(s),
            ConeClass::NonSmooth(r) => CurveClass::NonSmooth(r),
        }
    }
}

impl Cone {
    pub fn contains(&self, v: &SymmetricCubicValuations) -> bool {
        self.conditions.iter().all(|c| c.form.holds(c.relation, v))
    }
}

/// The five open cones of smooth curves.
pub const SMOOTH_CONES: [Cone; 5] = [
    Cone {
        class: ConeClass::Smooth(CycleShape::Triangle),
        conditions: [
            cond([0, -1, 0, 2, -1], LT),
            cond([1, 0, -1, -1, 1], LT),
            cond([-2, 0, 3, 0, -1], LT),
        ],
    },
    Cone {
        class: ConeClass::Smooth(CycleShape::Square),
        conditions: [
            cond([0, 0, -1, 2, -1], LT),
            cond([-1, 0, 2, -1, 0], LT),
            cond([1, -1, -1, 1, 0], LT),
        ],
    },
    Cone {
        class: ConeClass::Smooth(CycleShape::Pentagon),
        conditions: [
            cond([0, 0, 1, -2, 1], LT),
            cond([-1, 0, 1, 1, -1], LT),
            cond([1, -1, -1, 1, 0], LT),
        ],
    },
    Cone {
        class: ConeClass::Smooth(CycleShape::Hexagon),
        conditions: [
            cond([0, 0, -1, 2, -1], LT),
            cond([0, -1, 1, 0, 0], LT),
            cond([-1, 1, 1, -1, 0], LT),
        ],
    },
    Cone {
        class: ConeClass::Smooth(CycleShape::Heptagon),
        conditions: [
            cond([0, 0, 1, -2, 1], LT),
            cond([0, -1, 0, 2, -1], LT),
            cond([-1, 1, 1, -1, 0], LT),
        ],
    },
];

/// Row `A` with its middle inequality weak, as tabulated. On the face
/// `-v12+3v67-2v8 = 0` the cells `[1,2,6,7]` and `[6,7,8]` merge, so this
/// version is not used for classification.
pub const ROW_A_AS_TABULATED: Cone = Cone {
    class: ConeClass::NonSmooth(Row::A),
    conditions: [
        cond([1, -2, 0, 1, 0], LT),
        cond([-1, 0, 0, 3, -2], LE),
        cond([1, 0, -2, 1, 0], LE),
    ],
};

/// Cones of the catalogued non-smooth classes.
pub const NON_SMOOTH_CONES: [Cone; 10] = [
    Cone {
        class: ConeClass::NonSmooth(Row::A),
        conditions: [
            cond([1, -2, 0, 1, 0], LT),
            cond([-1, 0, 0, 3, -2], LT),
            cond([1, 0, -2, 1, 0], LE),
        ],
    },
    Cone {
        class: ConeClass::NonSmooth(Row::B),
        conditions: [
            cond([-1, 0, 0, 3, -2], LT),
            cond([1, -1, 0, -1, 1], LT),
            cond([0, 0, 1, -2, 1], EQ),
        ],
    },
    Cone {
        class: ConeClass::NonSmooth(Row::C),
        conditions: [
            cond([0, -1, 0, 2, -1], LT),
            cond([1, -1, 0, -1, 1], LT),
            cond([-1, 1, 1, -1, 0], EQ),
        ],
    },
    Cone {
        class: ConeClass::NonSmooth(Row::D),
        conditions: [
            cond([0, -1, 0, 2, -1], LT),
            cond([1, 0, 0, -3, 2], LT),
            cond([2, 0, -3, 0, 1], LE),
        ],
    },
    Cone {
        class: ConeClass::NonSmooth(Row::E),
        conditions: [
            cond([1, 0, 0, -3, 2], LT),
            cond([0, -1, 0, 2, -1], LT),
            cond([-1, 0, 1, 1, -1], EQ),
        ],
    },
    Cone {
        class: ConeClass::NonSmooth(Row::F),
        conditions: [
            cond([1, -2, 0, 1, 0], LT),
            cond([1, -1, 0, -1, 1], EQ),
            cond([1, -1, -1, 1, 0], EQ),
        ],
    },
    Cone {
        class: ConeClass::NonSmooth(Row::G),
        conditions: [
            cond([1, -2, 0, 1, 0], LT),
            cond([-1, 1, 0, 1, -1], LT),
            cond([-1, 1, 1, -1, 0], EQ),
        ],
    },
    Cone {
        class: ConeClass::NonSmooth(Row::H),
        conditions: [
            cond([0, -1, 1, 0, 0], LT),
            cond([-2, 1, 2, 0, -1], LT),
            cond([0, 1, 0, -2, 1], LE),
        ],
    },
    Cone {
        class: ConeClass::NonSmooth(Row::I),
        conditions: [
            cond([2, -3, 0, 0, 1], EQ),
            cond([-1, 2, 0, -1, 0], LE),
            cond([0, 1, -1, 0, 0], LE),
        ],
    },
    Cone {
        class: ConeClass::NonSmooth(Row::J),
        conditions: [
            cond([0, -1, 0, 2, -1], LT),
            cond([0, 1, -1, 0, 0], LE),
            cond([1, -2, 0, 1, 0], EQ),
        ],
    },
];

/// All fifteen cones, smooth first.
pub fn all_cones() -> impl Iterator<Item = &'static Cone> {
    SMOOTH_CONES.iter().chain(NON_SMOOTH_CONES.iter())
}

/// The cone containing `v`, if any.
pub fn matching_cone(v: &SymmetricCubicValuations) -> Result<Option<&'static Cone>> {
    let hits: Vec<&Cone> = all_cones().filter(|c| c.contains(v)).collect();
    match hits.as_slice() {
        [] => Ok(None),
        [one] => Ok(Some(*one)),
        many => Err(Error::ConeOverlap(
            many.iter()
                .map(|c| CurveClass::from(c.class).to_string())
                .collect(),
        )),
    }
}

/// Class by inequality cones; `Unlisted("")` outside every cone.
pub fn classify_by_cones(v: &SymmetricCubicValuations) -> Result<CurveClass> {
    Ok(match matching_cone(v)? {
        Some(c) => c.class.into(),
        None => CurveClass::Unlisted(String::new()),
    })
}

/// Catalog subdivisions, by cube labels.
pub fn catalog_cells(class: ConeClass) -> &'static [&'static [u8]] {
    match class {
        ConeClass::Smooth(CycleShape::Triangle) => &[
            &[1, 2, 5],
            &[1, 5, 8],
            &[2, 5, 8],
            &[1, 4, 7],
            &[1, 7, 8],
            &[2, 3, 6],
            &[2, 6, 8],
        ],
        ConeClass::Smooth(CycleShape::Square) => &[
            &[1, 2, 5],
            &[1, 5, 7],
            &[2, 5, 6],
            &[5, 6, 7],
            &[1, 4, 7],
            &[2, 3, 6],
            &[6, 7, 8],
        ],
        ConeClass::Smooth(CycleShape::Pentagon) => &[
            &[1, 2, 5],
            &[1, 5, 7],
            &[2, 5, 6],
            &[5, 7, 8],
            &[5, 6, 8],
            &[1, 4, 7],
            &[2, 3, 6],
        ],
        ConeClass::Smooth(CycleShape::Hexagon) => &[
            &[1, 2, 5],
            &[1, 4, 5],
            &[2, 3, 5],
            &[4, 5, 7],
            &[3, 5, 6],
            &[5, 6, 7],
            &[6, 7, 8],
        ],
        ConeClass::Smooth(CycleShape::Heptagon) => &[
            &[1, 2, 5],
            &[1, 4, 5],
            &[4, 5, 7],
            &[5, 7, 8],
            &[5, 6, 8],
            &[3, 5, 6],
            &[2, 3, 5],
        ],
        ConeClass::NonSmooth(Row::A) => &[&[1, 2, 6, 7], &[1, 4, 7], &[2, 3, 6], &[6, 7, 8]],
        ConeClass::NonSmooth(Row::B) => &[
            &[1, 5, 7],
            &[1, 2, 5],
            &[2, 5, 6],
            &[5, 6, 7, 8],
            &[1, 4, 7],
            &[2, 3, 6],
        ],
        ConeClass::NonSmooth(Row::C) => &[
            &[1, 4, 5, 7],
            &[1, 2, 5],
            &[2, 3, 5, 6],
            &[5, 7, 8],
            &[5, 6, 8],
        ],
        ConeClass::NonSmooth(Row::D) => {
            &[&[1, 4, 7], &[1, 7, 8], &[1, 2, 8], &[2, 6, 8], &[2, 3, 6]]
        }
        ConeClass::NonSmooth(Row::E) => &[
            &[1, 2, 5],
            &[1, 5, 7, 8],
            &[1, 4, 7],
            &[2, 5, 6, 8],
            &[2, 3, 6],
        ],
        ConeClass::NonSmooth(Row::F) => &[&[1, 4, 5, 7], &[1, 2, 5], &[2, 3, 5, 6], &[5, 6, 7, 8]],
        ConeClass::NonSmooth(Row::G) => &[
            &[1, 4, 5, 7],
            &[1, 2, 5],
            &[2, 3, 5, 6],
            &[5, 6, 7],
            &[6, 7, 8],
        ],
        ConeClass::NonSmooth(Row::H) => {
            &[&[1, 2, 5], &[1, 4, 5], &[2, 3, 5], &[4, 5, 8], &[3, 5, 8]]
        }
        ConeClass::NonSmooth(Row::I) => &[&[1, 2, 3, 4, 8]],
        ConeClass::NonSmooth(Row::J) => &[&[1, 2, 3, 4, 6, 7], &[6, 7, 8]],
    }
}

/// The catalog subdivision of a class, for the full support or, with
/// `without_constant`, for the support missing `(0,0)`.
///
/// Without the constant term only classes whose sole cell at `(0,0)` is
/// `[6,7,8]` survive, with that cell removed.
pub fn catalog_subdivision(class: ConeClass, without_constant: bool) -> Option<Subdivision> {
    let cells = catalog_cells(class);
    let cells: Vec<&[u8]> = if without_constant {
        let touching: Vec<&&[u8]> = cells.iter().filter(|c| c.contains(&8)).collect();
        if touching.as_slice() != [&&[6u8, 7, 8][..]] {
            return None;
        }
        cells.iter().copied().filter(|c| !c.contains(&8)).collect()
    } else {
        cells.to_vec()
    };
    Some(Subdivision::from_labels(&cells).expect("catalog cells are valid"))
}

/// Five subdivision shapes of the full support that no valuation vector
/// induces, as hull-vertex labels of their cells.
pub const FORBIDDEN_SHAPES: [&[&[u8]]; 5] = [
    &[&[1, 2, 3, 4], &[3, 5, 8], &[4, 5, 8]],
    &[&[1, 2, 3, 4], &[5, 6, 7, 8], &[3, 5, 6], &[4, 5, 7]],
    &[&[1, 2, 5], &[1, 4, 5], &[2, 3, 5], &[3, 4, 8]],
    &[
        &[1, 2, 3, 4],
        &[5, 6, 7],
        &[6, 7, 8],
        &[3, 5, 6],
        &[4, 5, 7],
    ],
    &[
        &[1, 2, 3, 4],
        &[3, 5, 6],
        &[4, 5, 7],
        &[5, 6, 8],
        &[5, 7, 8],
    ],
];

/// A labelled shape as lattice-point cells, ready for `is_regular_shape`.
pub fn shape_points(cells: &[&[u8]]) -> Vec<Vec<LatticePoint>> {
    cells
        .iter()
        .map(|c| c.iter().map(|&l| crate::tropical::label_point(l)).collect())
        .collect()
}

/// Hull-vertex fingerprint of a labelled shape, comparable with [`Subdivision::shape`].
pub fn shape_key(cells: &[&[u8]]) -> BTreeSet<Vec<LatticePoint>> {
    shape_points(cells)
        .into_iter()
        .map(|mut c| {
            c.sort();
            c
        })
        .collect()
}

fn all_cone_classes() -> impl Iterator<Item = ConeClass> {
    all_cones().map(|c| c.class)
}

/// A compact fingerprint of a subdivision shape.
pub fn fingerprint(s: &Subdivision) -> String {
    let cells: Vec<String> = s
        .shape()
        .iter()
        .map(|c| {
            let parts: Vec<String> = c
                .iter()
                .map(|&p| match SupportLabel::from_point(p) {
                    Some(l) => l.to_string(),
                    None => p.to_string(),
                })
                .collect();
            parts.join("-")
        })
        .collect();
    cells.join(",")
}

/// Class of a computed subdivision: catalog match first, then smoothness by
/// unimodularity, with the cycle length read off the cells around `(1,1)`.
pub fn classify_subdivision(s: &Subdivision) -> CurveClass {
    let without_constant = !s
        .cells()
        .iter()
        .any(|c| c.points.contains(&LatticePoint::new(0, 0)));
    let shape = s.shape();
    for class in all_cone_classes() {
        if let Some(cat) = catalog_subdivision(class, without_constant) {
            if cat.shape() == shape {
                return class.into();
            }
        }
    }
    if is_unimodular_subdivision(s) {
        let around = s
            .cells()
            .iter()
            .filter(|c| c.points.contains(&LatticePoint::new(1, 1)))
            .count();
        if let Some(shape) = CycleShape::from_sides(around) {
            return CurveClass::Smooth(shape);
        }
    }
    CurveClass::Unlisted(fingerprint(s))
}

pub fn classify_by_subdivision(v: &SymmetricCubicValuations) -> Result<CurveClass> {
    Ok(classify_subdivision(&regular_subdivision(
        &build_symmetric_cubic(v),
    )?))
}

/// Classification with its evidence, for reporting.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationJson {
    pub class: String,
    pub cone: Vec<String>,
    pub subdivision: SubdivisionJson,
}

/// Classifies by subdivision and attaches the matching cone, if any.
pub fn classification_report(v: &SymmetricCubicValuations) -> Result<ClassificationJson> {
    let sub = regular_subdivision(&build_symmetric_cubic(v))?;
    let class = classify_subdivision(&sub);
    let cone = matching_cone(v)?
        .map(|c| c.conditions.iter().map(Condition::to_string).collect())
        .unwrap_or_default();
    Ok(ClassificationJson {
        class: class.to_string(),
        cone,
        subdivision: sub.to_json(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HoneycombType {
    /// Five rays and a tail.
    Tail,
    /// Six rays.
    SixRays,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoneycombProfile {
    pub is_honeycomb: bool,
    pub kind: HoneycombType,
    pub quasi_symmetric: bool,
    pub symmetric: bool,
    pub side_length: ExtRational,
    pub tail_length: ExtRational,
}

pub fn honeycomb_profile(v: &SymmetricCubicValuations) -> HoneycombProfile {
    let is_honeycomb = SMOOTH_CONES[3].contains(v);
    let balanced = int(2) * &v.v34 == &v.v12 + &v.v67;
    let head = -&v.v5 + int(2) * &v.v67;
    let (kind, quasi_symmetric, symmetric, tail_length) = match &v.v8 {
        ExtRational::Finite(v8) => (
            HoneycombType::Tail,
            is_honeycomb && balanced && head < *v8,
            false,
            ExtRational::Finite((&v.v5 - int(2) * &v.v67 + v8).abs()),
        ),
        ExtRational::Infinity => (
            HoneycombType::SixRays,
            is_honeycomb && balanced,
            is_honeycomb && balanced,
            ExtRational::Infinity,
        ),
    };
    HoneycombProfile {
        is_honeycomb,
        kind,
        quasi_symmetric,
        symmetric,
        side_length: ExtRational::Finite((&v.v34 - &v.v5).abs()),
        tail_length,
    }
}

/// One end of a sweep interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    Unbounded,
    Closed(Rational),
    Open(Rational),
}

impl Bound {
    fn value(&self) -> Option<&Rational> {
        match self {
            Bound::Unbounded => None,
            Bound::Closed(x) | Bound::Open(x) => Some(x),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepInterval {
    pub lower: Bound,
    pub upper: Bound,
    pub class: CurveClass,
}

impl SweepInterval {
    pub fn contains(&self, k: &Rational) -> bool {
        let lo = match &self.lower {
            Bound::Unbounded => true,
            Bound::Closed(a) => a <= k,
            Bound::Open(a) => a < k,
        };
        let hi = match &self.upper {
            Bound::Unbounded => true,
            Bound::Closed(b) => k <= b,
            Bound::Open(b) => k < b,
        };
        lo && hi
    }

    pub fn is_point(&self) -> bool {
        matches!((&self.lower, &self.upper), (Bound::Closed(a), Bound::Closed(b)) if a == b)
    }
}

impl fmt::Display for SweepInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            let k = self.lower.value().expect("closed");
            return write!(f, "k = {}: {}", format_rational(k), self.class);
        }
        match &self.lower {
            Bound::Unbounded => write!(f, "(-inf, ")?,
            Bound::Closed(a) => write!(f, "[{}, ", format_rational(a))?,
            Bound::Open(a) => write!(f, "({}, ", format_rational(a))?,
        }
        match &self.upper {
            Bound::Unbounded => write!(f, "inf)")?,
            Bound::Closed(b) => write!(f, "{}]", format_rational(b))?,
            Bound::Open(b) => write!(f, "{})", format_rational(b))?,
        }
        write!(f, ": {}", self.class)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub fixed: SymmetricCubicValuations,
    pub breakpoints: Vec<ExtRational>,
    pub intervals: Vec<SweepInterval>,
}

impl SweepReport {
    pub fn class_at(&self, k: &Rational) -> Option<&CurveClass> {
        self.intervals
            .iter()
            .find(|i| i.contains(k))
            .map(|i| &i.class)
    }
}

/// Values of `v5` at which four support points lift to a common plane, or
/// three collinear points to a common line, or a catalog form vanishes.
fn candidate_breakpoints(fixed: &SymmetricCubicValuations) -> BTreeSet<Rational> {
    let mut out = BTreeSet::new();
    for cone in all_cones().chain(std::iter::once(&ROW_A_AS_TABULATED)) {
        for c in &cone.conditions {
            if let Some((a, b)) = c.form.in_v5(fixed) {
                if !a.is_zero() {
                    out.insert(-b / a);
                }
            }
        }
    }
    // heights as (slope in v5, intercept)
    let labels: Vec<SupportLabel> = SupportLabel::all()
        .filter(|l| l.get() != 8 || fixed.v8.is_finite())
        .collect();
    let lift = |l: SupportLabel| -> (Rational, Rational) {
        if l.get() == 5 {
            (int(1), Rational::zero())
        } else {
            (
                Rational::zero(),
                fixed.height(l).into_finite().expect("finite height"),
            )
        }
    };
    let mut push_root = |coeffs: Vec<(i64, SupportLabel)>| {
        let mut a = Rational::zero();
        let mut b = Rational::zero();
        for (c, l) in coeffs {
            let (sa, sb) = lift(l);
            a += int(c) * sa;
            b += int(c) * sb;
        }
        if !a.is_zero() {
            out.insert(-b / a);
        }
    };
    let n = labels.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (p, q, r) = (labels[i].point(), labels[j].point(), labels[k].point());
                let cr = (q - p).x * (r - p).y - (q - p).y * (r - p).x;
                if cr == 0 {
                    // affine dependency of three collinear points
                    let (c0, c1, c2) = collinear_dependency(p, q, r);
                    push_root(vec![(c0, labels[i]), (c1, labels[j]), (c2, labels[k])]);
                }
                for m in k + 1..n {
                    // cofactor expansion of det [1 x y h] along the height column
                    let pts = [labels[i], labels[j], labels[k], labels[m]];
                    let coeffs = (0..4)
                        .map(|t| {
                            let others: Vec<LatticePoint> =
                                (0..4).filter(|&u| u != t).map(|u| pts[u].point()).collect();
                            let minor = (others[1] - others[0]).x * (others[2] - others[0]).y
                                - (others[1] - others[0]).y * (others[2] - others[0]).x;
                            let sign = if t % 2 == 0 { -1 } else { 1 };
                            (sign * minor, pts[t])
                        })
                        .collect();
                    push_root(coeffs);
                }
            }
        }
    }
    out
}

/// Integer weights `(a, b, c)` with `a p + b q + c r = 0` and `a + b + c = 0`
/// for collinear points.
fn collinear_dependency(p: LatticePoint, q: LatticePoint, r: LatticePoint) -> (i64, i64, i64) {
    // pick the coordinate that separates the points
    let (x0, x1, x2) = if p.x != q.x || p.x != r.x {
        (p.x, q.x, r.x)
    } else {
        (p.y, q.y, r.y)
    };
    // a x0 + b x1 + c x2 = 0 with a + b + c = 0
    (x1 - x2, x2 - x0, x0 - x1)
}

/// Sweeps `v5 = k` over `[k_min, k_max]` with the other valuations fixed
/// (the `v5` of `fixed` is ignored). `k_max` may be infinite.
///
/// Every point and open interval between candidate breakpoints is
/// classified by subdivision; equal neighbours are merged.
pub fn center_sweep(
    fixed: &SymmetricCubicValuations,
    k_min: &Rational,
    k_max: &ExtRational,
) -> Result<SweepReport> {
    if let ExtRational::Finite(hi) = k_max {
        if hi < k_min {
            return Err(Error::Parse("empty sweep range".into()));
        }
    }
    let in_range = |k: &Rational| k > k_min && k_max.finite().is_none_or(|hi| k < hi);
    let mut points: Vec<Rational> = vec![k_min.clone()];
    points.extend(candidate_breakpoints(fixed).into_iter().filter(in_range));
    if let ExtRational::Finite(hi) = k_max {
        if hi != k_min {
            points.push(hi.clone());
        }
    }
    let classify = |k: &Rational| classify_by_subdivision(&fixed.with_v5(k.clone()));

    let mut pieces: Vec<SweepInterval> = Vec::new();
    for (idx, p) in points.iter().enumerate() {
        pieces.push(SweepInterval {
            lower: Bound::Closed(p.clone()),
            upper: Bound::Closed(p.clone()),
            class: classify(p)?,
        });
        let next = points.get(idx + 1);
        let probe = match next {
            Some(q) => Some((p + q) / int(2)),
            None if k_max.is_infinite() => Some(p + int(1)),
            None => None,
        };
        if let Some(probe) = probe {
            pieces.push(SweepInterval {
                lower: Bound::Open(p.clone()),
                upper: next.map_or(Bound::Unbounded, |q| Bound::Open(q.clone())),
                class: classify(&probe)?,
            });
        }
    }

    let mut intervals: Vec<SweepInterval> = Vec::new();
    for piece in pieces {
        match intervals.last_mut() {
            Some(last) if last.class == piece.class => last.upper = piece.upper,
            _ => intervals.push(piece),
        }
    }
    let breakpoints = intervals
        .windows(2)
        .filter_map(|w| w[0].upper.value().cloned())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .map(ExtRational::Finite)
        .collect();
    Ok(SweepReport {
        fixed: fixed.clone(),
        breakpoints,
        intervals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    fn v(a: i64, b: i64, c: i64, d: i64, e: Option<i64>) -> SymmetricCubicValuations {
        SymmetricCubicValuations::from_ints(a, b, c, d, e)
    }

    #[test]
    fn cone_examples() {
        assert_eq!(
            classify_by_cones(&v(3, 2, 0, 1, Some(3))).unwrap(),
            CurveClass::Smooth(CycleShape::Hexagon)
        );
        assert_eq!(
            classify_by_cones(&v(-10, 0, -15, -5, Some(0))).unwrap(),
            CurveClass::NonSmooth(Row::C)
        );
        assert_eq!(
            classify_by_cones(&v(0, 0, 0, 0, Some(0))).unwrap(),
            CurveClass::NonSmooth(Row::I)
        );
    }

    #[test]
    fn subdivision_examples() {
        assert_eq!(
            classify_by_subdivision(&v(3, 2, 0, 1, Some(3))).unwrap(),
            CurveClass::Smooth(CycleShape::Hexagon)
        );
        assert_eq!(
            classify_by_subdivision(&v(0, 14, -1, 4, Some(0))).unwrap(),
            CurveClass::Smooth(CycleShape::Triangle)
        );
        assert_eq!(
            classify_by_subdivision(&v(0, 14, 0, 4, Some(0))).unwrap(),
            CurveClass::NonSmooth(Row::D)
        );
        assert_eq!(
            classify_by_subdivision(&v(3, 2, 0, 1, None)).unwrap(),
            CurveClass::Smooth(CycleShape::Hexagon)
        );
    }

    #[test]
    fn tabulated_row_a_face_is_a_different_subdivision() {
        // on -v12+3v67-2v8 = 0 the printed weak inequality admits a three-cell subdivision
        let w = v(0, 1, 1, 0, Some(0));
        assert!(ROW_A_AS_TABULATED.contains(&w));
        assert!(!NON_SMOOTH_CONES[0].contains(&w));
        let sub = regular_subdivision(&build_symmetric_cubic(&w)).unwrap();
        assert_eq!(
            sub,
            Subdivision::from_labels(&[&[1, 2, 6, 7, 8], &[1, 4, 7], &[2, 3, 6]]).unwrap()
        );
        assert!(matches!(
            classify_subdivision(&sub),
            CurveClass::Unlisted(_)
        ));
    }

    #[test]
    fn catalog_is_regular_and_matches_cones() {
        for cone in all_cones() {
            for without in [false, true] {
                let Some(cat) = catalog_subdivision(cone.class, without) else {
                    continue;
                };
                assert_eq!(classify_subdivision(&cat), CurveClass::from(cone.class));
            }
        }
    }

    #[test]
    fn forbidden_shapes_are_not_regular() {
        use crate::subdivision::{is_regular_shape, Slice};
        for shape in FORBIDDEN_SHAPES {
            assert_eq!(
                is_regular_shape(&shape_points(shape), Slice::Symmetric5).unwrap(),
                None,
                "{shape:?}"
            );
        }
    }

    #[test]
    fn infinite_constant_in_cones() {
        let w = v(3, 2, 0, 1, None);
        assert!(LinearForm([0, 0, -1, 2, -1]).holds(LT, &w));
        assert!(!LinearForm([0, 0, 1, -2, 1]).holds(LT, &w));
        assert!(!LinearForm([1, -1, 0, -1, 1]).holds(EQ, &w));
        assert_eq!(
            classify_by_cones(&w).unwrap(),
            CurveClass::Smooth(CycleShape::Hexagon)
        );
    }

    #[test]
    fn class_strings_round_trip() {
        for c in [
            CurveClass::Smooth(CycleShape::Hexagon),
            CurveClass::NonSmooth(Row::I),
            CurveClass::Unlisted("1-2".into()),
        ] {
            assert_eq!(c.to_string().parse::<CurveClass>().unwrap(), c);
        }
        assert_eq!(CurveClass::NonSmooth(Row::I).to_string(), "NonSmooth/I");
        assert!("Smooth/Octagon".parse::<CurveClass>().is_err());
    }

    #[test]
    fn form_display() {
        assert_eq!(LinearForm([0, 0, -1, 2, -1]).to_string(), "-v5+2v67-v8");
        assert_eq!(cond([-1, 1, 1, -1, 0], EQ).to_string(), "-v12+v34+v5-v67=0");
    }

    #[test]
    fn honeycomb_examples() {
        let h = honeycomb_profile(&v(3, 2, 0, 1, Some(3)));
        assert!(h.is_honeycomb && h.quasi_symmetric && !h.symmetric);
        assert_eq!(h.kind, HoneycombType::Tail);
        assert_eq!(h.side_length, ExtRational::from_int(2));
        assert_eq!(h.tail_length, ExtRational::from_int(1));

        let h = honeycomb_profile(&v(3, 2, 0, 1, None));
        assert!(h.is_honeycomb && h.quasi_symmetric && h.symmetric);
        assert_eq!(h.kind, HoneycombType::SixRays);
        assert_eq!(h.tail_length, ExtRational::Infinity);

        let h = honeycomb_profile(&v(3, 2, 0, 1, Some(100)));
        assert!(h.quasi_symmetric);
        assert_eq!(h.tail_length, ExtRational::from_int(98));
    }

    #[test]
    fn first_sweep() {
        let r = center_sweep(
            &v(-10, 0, 0, -5, Some(0)),
            &int(-20),
            &ExtRational::from_int(5),
        )
        .unwrap();
        assert_eq!(
            r.breakpoints,
            vec![
                ExtRational::from_int(-15),
                ExtRational::from_int(-10),
                ExtRational::new(-15, 2)
            ]
        );
        let classes: Vec<String> = r.intervals.iter().map(|i| i.to_string()).collect();
        assert_eq!(
            classes,
            [
                "[-20, -15): Smooth/Heptagon",
                "k = -15: NonSmooth/C",
                "(-15, -10): Smooth/Pentagon",
                "k = -10: NonSmooth/B",
                "(-10, -15/2): Smooth/Square",
                "[-15/2, 5]: NonSmooth/A",
            ]
        );
        assert_eq!(
            r.class_at(&rat(-31, 4)),
            Some(&CurveClass::Smooth(CycleShape::Square))
        );
    }

    #[test]
    fn second_sweep() {
        let r = center_sweep(
            &v(0, 14, 0, 4, Some(0)),
            &int(-15),
            &ExtRational::from_int(2),
        )
        .unwrap();
        assert_eq!(
            r.breakpoints,
            vec![
                ExtRational::from_int(-10),
                ExtRational::from_int(-4),
                ExtRational::from_int(0)
            ]
        );
        let classes: Vec<&CurveClass> = r.intervals.iter().map(|i| &i.class).collect();
        assert_eq!(
            classes,
            [
                &CurveClass::Smooth(CycleShape::Heptagon),
                &CurveClass::NonSmooth(Row::C),
                &CurveClass::Smooth(CycleShape::Pentagon),
                &CurveClass::NonSmooth(Row::E),
                &CurveClass::Smooth(CycleShape::Triangle),
                &CurveClass::NonSmooth(Row::D),
            ]
        );
    }

    #[test]
    fn degenerate_and_unbounded_sweeps() {
        let r = center_sweep(
            &v(-10, 0, 0, -5, Some(0)),
            &int(-10),
            &ExtRational::from_int(-10),
        )
        .unwrap();
        assert_eq!(r.intervals.len(), 1);
        assert!(r.intervals[0].is_point());
        assert_eq!(r.intervals[0].class, CurveClass::NonSmooth(Row::B));
        let r = center_sweep(&v(-10, 0, 0, -5, Some(0)), &int(-8), &ExtRational::Infinity).unwrap();
        assert_eq!(r.intervals.last().unwrap().upper, Bound::Unbounded);
        assert_eq!(r.class_at(&int(1000)), Some(&CurveClass::NonSmooth(Row::A)));
    }
}
