//! Regular subdivisions of the Newton polygon and their realizability.
//!
//! A cell is recorded by its *touched set*: every support point whose lifted
//! height lies on the supporting affine function of the cell. Under the min
//! convention these are exactly the terms attaining the minimum at the dual
//! curve vertex. Two subdivisions are equal when their touched sets agree;
//! [`Subdivision::shape`] forgets non-vertex touched points for comparisons
//! that only care about the polygons.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{
    convex_hull, cross, in_convex_interior, in_convex_polygon, int, lattice_points_in,
    polygon_area, rat, LatticePoint, Rational, RationalPoint,
};
use crate::oracle::{fm_feasible, FeasibilityResult, LinearRow, MixedLinearSystem, Relation};
use crate::tropical::{SupportLabel, TropicalPolynomial};

/// Largest support the exhaustive oracle accepts.
pub const ORACLE_MAX_POINTS: usize = 12;

/// A two-dimensional cell of a subdivision.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    /// Touched support points, sorted.
    pub points: Vec<LatticePoint>,
    /// Polygon vertices, counterclockwise.
    pub vertices: Vec<LatticePoint>,
}

impl Cell {
    pub fn new(points: impl IntoIterator<Item = LatticePoint>) -> Result<Cell> {
        let mut points: Vec<LatticePoint> = points.into_iter().collect();
        points.sort();
        points.dedup();
        let vertices = convex_hull(&points);
        if vertices.len() < 3 {
            return Err(Error::InvalidTiling(format!(
                "cell {points:?} has zero area"
            )));
        }
        Ok(Cell { points, vertices })
    }

    /// Builds a cell of the cubic support from labels, e.g. `[1, 2, 5]`.
    pub fn from_labels(labels: &[u8]) -> Result<Cell> {
        let pts = labels
            .iter()
            .map(|&l| SupportLabel::new(l).map(SupportLabel::point))
            .collect::<Result<Vec<_>>>()?;
        Cell::new(pts)
    }

    fn to_labels(points: &[LatticePoint]) -> Option<Vec<u8>> {
        let mut out: Vec<u8> = points
            .iter()
            .map(|&p| SupportLabel::from_point(p).map(SupportLabel::get))
            .collect::<Option<_>>()?;
        out.sort_unstable();
        Some(out)
    }

    /// Touched points as cubic labels, when every point has one.
    pub fn labels(&self) -> Option<Vec<u8>> {
        Cell::to_labels(&self.points)
    }

    pub fn vertex_labels(&self) -> Option<Vec<u8>> {
        Cell::to_labels(&self.vertices)
    }

    pub fn area(&self) -> Rational {
        polygon_area(&self.vertices)
    }

    /// Counterclockwise boundary segments between consecutive vertices.
    pub fn boundary_edges(&self) -> Vec<(LatticePoint, LatticePoint)> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| (self.vertices[i], self.vertices[(i + 1) % n]))
            .collect()
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        in_convex_polygon(p, &self.vertices)
    }

    pub fn map_points(&self, f: impl Fn(LatticePoint) -> LatticePoint) -> Result<Cell> {
        Cell::new(self.points.iter().map(|&p| f(p)))
    }

    fn interiors_disjoint(&self, other: &Cell) -> bool {
        let separated = |a: &Cell, b: &Cell| {
            a.boundary_edges()
                .iter()
                .any(|&(u, w)| b.vertices.iter().all(|&q| cross(u, w, q) <= 0))
        };
        separated(self, other) || separated(other, self)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.labels() {
            Some(ls) => {
                let s: Vec<String> = ls.iter().map(u8::to_string).collect();
                write!(f, "[{}]", s.join(","))
            }
            None => {
                let s: Vec<String> = self.points.iter().map(LatticePoint::to_string).collect();
                write!(f, "[{}]", s.join(","))
            }
        }
    }
}

/// A 1-face of a subdivision with its adjacent cells (one for boundary edges).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionEdge {
    pub ends: (LatticePoint, LatticePoint),
    pub cells: Vec<usize>,
}

impl SubdivisionEdge {
    pub fn is_interior(&self) -> bool {
        self.cells.len() == 2
    }
}

/// A polyhedral subdivision of a lattice polygon.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subdivision {
    cells: Vec<Cell>,
}

impl Subdivision {
    pub fn new(mut cells: Vec<Cell>) -> Subdivision {
        cells.sort();
        cells.dedup();
        Subdivision { cells }
    }

    pub fn from_labels(cells: &[&[u8]]) -> Result<Subdivision> {
        Ok(Subdivision::new(
            cells
                .iter()
                .map(|c| Cell::from_labels(c))
                .collect::<Result<_>>()?,
        ))
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn total_area(&self) -> Rational {
        self.cells.iter().map(Cell::area).sum()
    }

    /// Every edge of every cell, merged across neighbours, in a fixed order.
    pub fn edges(&self) -> Vec<SubdivisionEdge> {
        let mut map: BTreeMap<(LatticePoint, LatticePoint), Vec<usize>> = BTreeMap::new();
        for (i, c) in self.cells.iter().enumerate() {
            for (u, w) in c.boundary_edges() {
                let key = if u < w { (u, w) } else { (w, u) };
                map.entry(key).or_default().push(i);
            }
        }
        map.into_iter()
            .map(|(ends, cells)| SubdivisionEdge { ends, cells })
            .collect()
    }

    pub fn interior_edges(&self) -> Vec<SubdivisionEdge> {
        self.edges()
            .into_iter()
            .filter(SubdivisionEdge::is_interior)
            .collect()
    }

    pub fn boundary_edges(&self) -> Vec<SubdivisionEdge> {
        self.edges()
            .into_iter()
            .filter(|e| !e.is_interior())
            .collect()
    }

    /// Cells by polygon vertices only, forgetting non-vertex touched points.
    pub fn shape(&self) -> BTreeSet<Vec<LatticePoint>> {
        self.cells
            .iter()
            .map(|c| {
                let mut v = c.vertices.clone();
                v.sort();
                v
            })
            .collect()
    }

    /// Points of the polygon interior used as a vertex of some cell.
    pub fn interior_points_used(&self) -> BTreeSet<LatticePoint> {
        let all: Vec<LatticePoint> = self
            .cells
            .iter()
            .flat_map(|c| c.points.iter().copied())
            .collect();
        let hull = convex_hull(&all);
        self.cells
            .iter()
            .flat_map(|c| c.vertices.iter().copied())
            .filter(|&p| hull.len() >= 3 && in_convex_interior(p, &hull))
            .collect()
    }

    pub fn map_points(
        &self,
        f: impl Fn(LatticePoint) -> LatticePoint + Copy,
    ) -> Result<Subdivision> {
        Ok(Subdivision::new(
            self.cells
                .iter()
                .map(|c| c.map_points(f))
                .collect::<Result<_>>()?,
        ))
    }

    pub fn to_json(&self) -> SubdivisionJson {
        SubdivisionJson {
            cells: self
                .cells
                .iter()
                .map(|c| match c.labels() {
                    Some(ls) => CellJson::Labels(ls),
                    None => CellJson::Points(c.points.iter().map(|p| [p.x, p.y]).collect()),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &SubdivisionJson) -> Result<Subdivision> {
        let cells = json
            .cells
            .iter()
            .map(|c| match c {
                CellJson::Labels(ls) => Cell::from_labels(ls),
                CellJson::Points(ps) => Cell::new(ps.iter().map(|p| LatticePoint::new(p[0], p[1]))),
            })
            .collect::<Result<_>>()?;
        Ok(Subdivision::new(cells))
    }
}

impl fmt::Display for Subdivision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.cells.iter().map(Cell::to_string).collect();
        write!(f, "{{{}}}", s.join(", "))
    }
}

/// `{"cells":[[1,2,5],...]}`; general supports use `[[i,j],...]` point lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdivisionJson {
    pub cells: Vec<CellJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CellJson {
    Labels(Vec<u8>),
    Points(Vec<[i64; 2]>),
}

/// Solves `c_a + a.P = c_b + b.P = c_c + c.P` for the point `P`.
pub(crate) fn tie_point(
    (a, ca): (LatticePoint, &Rational),
    (b, cb): (LatticePoint, &Rational),
    (c, cc): (LatticePoint, &Rational),
) -> Option<RationalPoint> {
    // (a-b).P = cb - ca ; (a-c).P = cc - ca
    let d1 = a - b;
    let d2 = a - c;
    let det = d1.x * d2.y - d1.y * d2.x;
    if det == 0 {
        return None;
    }
    let r1 = cb - ca;
    let r2 = cc - ca;
    let det = int(det);
    let x = (&r1 * int(d2.y) - &r2 * int(d1.y)) / &det;
    let y = (&r2 * int(d1.x) - &r1 * int(d2.x)) / &det;
    Some(RationalPoint::new(x, y))
}

/// The regular subdivision induced by the coefficients, as domains of
/// affineness of the min-plus function.
///
/// Each cell is the set of terms attaining the minimum at a curve vertex;
/// vertices are found among the tie points of non-collinear term triples.
pub fn regular_subdivision(p: &TropicalPolynomial) -> Result<Subdivision> {
    let polygon = p.newton_polygon()?;
    let terms: Vec<(LatticePoint, &Rational)> = p.terms().iter().map(|(k, v)| (*k, v)).collect();
    let mut seen: BTreeSet<RationalPoint> = BTreeSet::new();
    let mut cells: BTreeSet<Vec<LatticePoint>> = BTreeSet::new();
    let n = terms.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let Some(pt) = tie_point(terms[i], terms[j], terms[k]) else {
                    continue;
                };
                if !seen.insert(pt.clone()) {
                    continue;
                }
                let (_, arg) = p.evaluate(&pt)?;
                let arg: Vec<LatticePoint> = arg.into_iter().collect();
                if convex_hull(&arg).len() >= 3 {
                    cells.insert(arg);
                }
            }
        }
    }
    let sub = Subdivision::new(cells.into_iter().map(Cell::new).collect::<Result<_>>()?);
    if sub.total_area() != polygon_area(&polygon) {
        return Err(Error::InvalidTiling(
            "cells do not cover the Newton polygon".into(),
        ));
    }
    Ok(sub)
}

/// Exhaustive reference for [`regular_subdivision`].
///
/// For every subset of the support, fits the affine function through three of
/// its lifted points and keeps the subset when every member lies on it and
/// every non-member lies strictly above it.
pub fn subdivision_oracle(p: &TropicalPolynomial) -> Result<Subdivision> {
    let pts: Vec<(LatticePoint, Rational)> =
        p.terms().iter().map(|(k, v)| (*k, v.clone())).collect();
    let n = pts.len();
    if n > ORACLE_MAX_POINTS {
        return Err(Error::OversizedSupport {
            found: n,
            max: ORACLE_MAX_POINTS,
        });
    }
    p.newton_polygon()?;
    let mut cells = Vec::new();
    for mask in 1u32..(1 << n) {
        if mask.count_ones() < 3 {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let member_pts: Vec<LatticePoint> = members.iter().map(|&i| pts[i].0).collect();
        let hull = convex_hull(&member_pts);
        if hull.len() < 3 {
            continue;
        }
        let idx = |q: LatticePoint| {
            members
                .iter()
                .copied()
                .find(|&i| pts[i].0 == q)
                .expect("hull point is a member")
        };
        let (a, b, c) = (idx(hull[0]), idx(hull[1]), idx(hull[2]));
        let Some((c0, cx, cy)) = fit_plane([&pts[a], &pts[b], &pts[c]]) else {
            continue;
        };
        let plane = |q: LatticePoint| &c0 + &cx * int(q.x) + &cy * int(q.y);
        let ok = (0..n).all(|i| {
            let h = plane(pts[i].0);
            if mask & (1 << i) != 0 {
                pts[i].1 == h
            } else {
                pts[i].1 > h
            }
        });
        if ok {
            cells.push(Cell::new(member_pts)?);
        }
    }
    Ok(Subdivision::new(cells))
}

/// Plane `z = c0 + cx x + cy y` through three lifted points, by Cramer's rule.
fn fit_plane(p: [&(LatticePoint, Rational); 3]) -> Option<(Rational, Rational, Rational)> {
    let m: Vec<[Rational; 3]> = p
        .iter()
        .map(|(q, _)| [int(1), int(q.x), int(q.y)])
        .collect();
    let z: Vec<&Rational> = p.iter().map(|(_, h)| h).collect();
    let det3 = |m: &[[Rational; 3]]| {
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    };
    let d = det3(&m);
    if d.is_zero() {
        return None;
    }
    let mut sol = Vec::with_capacity(3);
    for col in 0..3 {
        let mut mk = m.clone();
        for row in 0..3 {
            mk[row][col] = z[row].clone();
        }
        sol.push(det3(&mk) / &d);
    }
    let cy = sol.pop()?;
    let cx = sol.pop()?;
    let c0 = sol.pop()?;
    Some((c0, cx, cy))
}

/// A cell is primitive when its only lattice points are its vertices.
pub fn is_primitive(c: &Cell) -> bool {
    lattice_points_in(&c.vertices).len() == c.vertices.len()
}

/// A cell is unimodular when it is a triangle of area 1/2.
pub fn is_unimodular(c: &Cell) -> bool {
    c.vertices.len() == 3 && c.area() == rat(1, 2)
}

pub fn is_unimodular_subdivision(s: &Subdivision) -> bool {
    !s.is_empty() && s.cells().iter().all(is_unimodular)
}

pub fn is_primitive_subdivision(s: &Subdivision) -> bool {
    !s.is_empty() && s.cells().iter().all(is_primitive)
}

/// The lift space in which regularity is decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slice {
    /// Heights `(v12, v34, v5, v67[, v8])` shared by symmetric pairs; `v8`
    /// is present iff the candidate covers `(0,0)`.
    Symmetric5,
    /// One independent height per support point.
    General8,
}

/// Variable layout of a regularity query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftSpace {
    pub names: Vec<String>,
    pub support: Vec<LatticePoint>,
    /// Variable index of each support point.
    pub var_of: BTreeMap<LatticePoint, usize>,
}

impl LiftSpace {
    fn for_candidate(candidate: &Subdivision, slice: Slice) -> Result<LiftSpace> {
        let mut support: BTreeSet<LatticePoint> = BTreeSet::new();
        for c in candidate.cells() {
            let all = lattice_points_in(&c.vertices);
            match slice {
                Slice::Symmetric5 => support.extend(
                    all.into_iter()
                        .filter(|&q| SupportLabel::from_point(q).is_some()),
                ),
                Slice::General8 => support.extend(c.points.iter().copied()),
            }
        }
        let support: Vec<LatticePoint> = support.into_iter().collect();
        match slice {
            Slice::General8 => {
                let names = support
                    .iter()
                    .map(|p| format!("h{}_{}", p.x, p.y))
                    .collect();
                let var_of = support.iter().enumerate().map(|(i, &p)| (p, i)).collect();
                Ok(LiftSpace {
                    names,
                    support,
                    var_of,
                })
            }
            Slice::Symmetric5 => {
                let mut labels = Vec::new();
                for &p in &support {
                    match SupportLabel::from_point(p) {
                        Some(l) => labels.push(l.get()),
                        None => {
                            return Err(Error::InvalidTiling(format!(
                                "point {p} is not in the symmetric cubic support"
                            )))
                        }
                    }
                }
                let group = |l: u8| match l {
                    1 | 2 => 0,
                    3 | 4 => 1,
                    5 => 2,
                    6 | 7 => 3,
                    _ => 4,
                };
                let has8 = labels.contains(&8);
                let mut names: Vec<String> = ["v12", "v34", "v5", "v67"]
                    .iter()
                    .map(|s| s.to_string())
                    .collect();
                if has8 {
                    names.push("v8".into());
                }
                let var_of = support
                    .iter()
                    .zip(&labels)
                    .map(|(&p, &l)| (p, group(l)))
                    .collect();
                Ok(LiftSpace {
                    names,
                    support,
                    var_of,
                })
            }
        }
    }

    /// The polynomial whose heights are the witness values.
    pub fn polynomial(&self, witness: &[Rational]) -> TropicalPolynomial {
        TropicalPolynomial::from_finite_terms(
            self.support
                .iter()
                .map(|p| (*p, witness[self.var_of[p]].clone())),
        )
    }
}

/// Checks that the cells tile a convex lattice polygon.
pub fn validate_tiling(candidate: &Subdivision) -> Result<()> {
    if candidate.is_empty() {
        return Err(Error::InvalidTiling("no cells".into()));
    }
    let cells = candidate.cells();
    for (i, a) in cells.iter().enumerate() {
        for b in &cells[i + 1..] {
            if !a.interiors_disjoint(b) {
                return Err(Error::InvalidTiling(format!("cells {a} and {b} overlap")));
            }
        }
    }
    let all: Vec<LatticePoint> = cells
        .iter()
        .flat_map(|c| c.vertices.iter().copied())
        .collect();
    let hull = convex_hull(&all);
    if candidate.total_area() != polygon_area(&hull) {
        return Err(Error::InvalidTiling(
            "cells do not cover their convex hull".into(),
        ));
    }
    Ok(())
}

/// The mixed linear system in lift space whose solutions induce `candidate`.
///
/// For each cell, the affine function through three of its vertices must
/// agree with the lift on every touched point and lie strictly below it on
/// every other point of the support.
pub fn regularity_system(
    candidate: &Subdivision,
    slice: Slice,
) -> Result<(LiftSpace, MixedLinearSystem)> {
    validate_tiling(candidate)?;
    let space = LiftSpace::for_candidate(candidate, slice)?;
    let nv = space.names.len();
    let mut sys = MixedLinearSystem::new(space.names.clone());
    for cell in candidate.cells() {
        let (a, b, c) = (cell.vertices[0], cell.vertices[1], cell.vertices[2]);
        let area2 = int(cross(a, b, c));
        for &q in &space.support {
            // barycentric coordinates of q with respect to a, b, c
            let la = int(cross(q, b, c)) / &area2;
            let lb = int(cross(a, q, c)) / &area2;
            let lc = int(cross(a, b, q)) / &area2;
            let mut coeffs = vec![Rational::zero(); nv];
            coeffs[space.var_of[&q]] += int(1);
            coeffs[space.var_of[&a]] -= la;
            coeffs[space.var_of[&b]] -= lb;
            coeffs[space.var_of[&c]] -= lc;
            if cell.points.contains(&q) {
                if coeffs.iter().any(|x| !x.is_zero()) {
                    sys.push(LinearRow::new(coeffs, Relation::Eq, Rational::zero()));
                }
            } else {
                // lift strictly above the cell's plane: -(h_q - phi(q)) < 0
                let neg: Vec<Rational> = coeffs.into_iter().map(|x| -x).collect();
                sys.push(LinearRow::new(neg, Relation::Lt, Rational::zero()));
            }
        }
    }
    Ok((space, sys))
}

/// Decides whether some lift in the slice induces exactly `candidate`
/// (touched sets included), returning a witness lift when it does.
pub fn is_regular(candidate: &Subdivision, slice: Slice) -> Result<FeasibilityResult> {
    let (_, sys) = regularity_system(candidate, slice)?;
    fm_feasible(&sys)
}

/// Like [`is_regular`] but for a subdivision given by cell polygons only:
/// every choice of touched non-vertex points is tried.
pub fn is_regular_shape(
    shape: &[Vec<LatticePoint>],
    slice: Slice,
) -> Result<Option<(Subdivision, Vec<Rational>)>> {
    let bare = Subdivision::new(
        shape
            .iter()
            .map(|c| Cell::new(c.iter().copied()))
            .collect::<Result<_>>()?,
    );
    validate_tiling(&bare)?;
    let space = LiftSpace::for_candidate(&bare, slice)?;
    let vertices: BTreeSet<LatticePoint> = bare
        .cells()
        .iter()
        .flat_map(|c| c.vertices.iter().copied())
        .collect();
    let optional: Vec<LatticePoint> = space
        .support
        .iter()
        .copied()
        .filter(|p| !vertices.contains(p))
        .collect();
    for mask in 0u32..(1 << optional.len()) {
        let touched: Vec<LatticePoint> = (0..optional.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| optional[i])
            .collect();
        let cells = bare
            .cells()
            .iter()
            .map(|c| {
                Cell::new(
                    vertices
                        .iter()
                        .chain(&touched)
                        .copied()
                        .filter(|&q| c.contains(q)),
                )
            })
            .collect::<Result<_>>()?;
        let candidate = Subdivision::new(cells);
        if let FeasibilityResult::Feasible(w) = is_regular(&candidate, slice)? {
            return Ok(Some((candidate, w)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tropical::{build_symmetric_cubic, SymmetricCubicValuations};

    fn cubic(v12: i64, v34: i64, v5: i64, v67: i64, v8: Option<i64>) -> TropicalPolynomial {
        build_symmetric_cubic(&SymmetricCubicValuations::from_ints(v12, v34, v5, v67, v8))
    }

    fn labels(s: &Subdivision) -> Vec<Vec<u8>> {
        let mut v: Vec<Vec<u8>> = s.cells().iter().map(|c| c.labels().unwrap()).collect();
        v.sort();
        v
    }

    #[test]
    fn zero_lift_is_one_cell() {
        let s = regular_subdivision(&cubic(0, 0, 0, 0, Some(0))).unwrap();
        assert_eq!(labels(&s), vec![vec![1, 2, 3, 4, 5, 6, 7, 8]]);
        assert!(!is_unimodular_subdivision(&s));
    }

    #[test]
    fn honeycomb_subdivision() {
        let s = regular_subdivision(&cubic(3, 2, 0, 1, Some(3))).unwrap();
        assert_eq!(
            labels(&s),
            vec![
                vec![1, 2, 5],
                vec![1, 4, 5],
                vec![2, 3, 5],
                vec![3, 5, 6],
                vec![4, 5, 7],
                vec![5, 6, 7],
                vec![6, 7, 8]
            ]
        );
        assert!(is_unimodular_subdivision(&s));
        assert_eq!(s.total_area(), rat(7, 2));
        assert_eq!(
            s.interior_points_used(),
            [LatticePoint::new(1, 1)].into_iter().collect()
        );
    }

    #[test]
    fn symmetric_honeycomb_subdivision_without_constant_term() {
        let p = cubic(3, 2, 0, 1, None);
        let s = subdivision_oracle(&p).unwrap();
        assert_eq!(
            labels(&s),
            vec![
                vec![1, 2, 5],
                vec![1, 4, 5],
                vec![2, 3, 5],
                vec![3, 5, 6],
                vec![4, 5, 7],
                vec![5, 6, 7]
            ]
        );
        assert_eq!(regular_subdivision(&p).unwrap(), s);
        assert_eq!(s.total_area(), int(3));
    }

    #[test]
    fn pentagon_example_is_unimodular() {
        let s = regular_subdivision(&cubic(0, 14, -5, 4, Some(0))).unwrap();
        assert!(is_unimodular_subdivision(&s));
    }

    #[test]
    fn primitivity_and_unimodularity() {
        let c125 = Cell::from_labels(&[1, 2, 5]).unwrap();
        let c128 = Cell::from_labels(&[1, 2, 8]).unwrap();
        let hex = Cell::from_labels(&[1, 4, 7, 6, 3, 2]).unwrap();
        let c145 = Cell::from_labels(&[1, 4, 5]).unwrap();
        let c458 = Cell::from_labels(&[4, 5, 8]).unwrap();
        assert!(is_primitive(&c125));
        assert!(!is_primitive(&c128));
        assert!(!is_primitive(&hex));
        assert!(is_unimodular(&c125));
        assert!(is_unimodular(&c145));
        assert!(!is_unimodular(&c458));
        assert_eq!(c458.area(), int(1));
        assert!(!is_primitive(&c458));
    }

    #[test]
    fn degenerate_cell_rejected() {
        assert!(Cell::from_labels(&[3, 5, 4]).is_err());
    }

    #[test]
    fn oversized_support_rejected_by_oracle() {
        let terms: Vec<(LatticePoint, Rational)> = (0..13)
            .map(|i| (LatticePoint::new(i % 4, i / 4), int(i * i)))
            .collect();
        let p = TropicalPolynomial::from_finite_terms(terms);
        assert!(matches!(
            subdivision_oracle(&p),
            Err(Error::OversizedSupport { found: 13, .. })
        ));
    }

    #[test]
    fn overlapping_tiling_rejected() {
        let bad =
            Subdivision::from_labels(&[&[1, 2, 8], &[1, 4, 8], &[2, 3, 8], &[1, 2, 5]]).unwrap();
        assert!(matches!(
            is_regular(&bad, Slice::Symmetric5),
            Err(Error::InvalidTiling(_))
        ));
        let gap = Subdivision::from_labels(&[&[1, 2, 5]]).unwrap();
        assert!(validate_tiling(&gap).is_ok());
        let gap = Subdivision::from_labels(&[&[1, 2, 5], &[5, 6, 8]]).unwrap();
        assert!(validate_tiling(&gap).is_err());
    }

    #[test]
    fn single_cell_is_regular() {
        let one = Subdivision::from_labels(&[&[1, 2, 3, 4, 5, 6, 7, 8]]).unwrap();
        let res = is_regular(&one, Slice::Symmetric5).unwrap();
        assert_eq!(res, FeasibilityResult::Feasible(vec![int(0); 5]));
    }

    #[test]
    fn hexagon_cycle_subdivision_regular_in_symmetric_slice() {
        let hex = Subdivision::from_labels(&[
            &[1, 2, 5],
            &[1, 4, 5],
            &[2, 3, 5],
            &[4, 5, 7],
            &[3, 5, 6],
            &[5, 6, 7],
            &[6, 7, 8],
        ])
        .unwrap();
        let (space, sys) = regularity_system(&hex, Slice::Symmetric5).unwrap();
        let res = fm_feasible(&sys).unwrap();
        let w = res.witness().expect("feasible");
        let (v12, v34, v5, v67, v8) = (&w[0], &w[1], &w[2], &w[3], &w[4]);
        assert!(-v5 + int(2) * v67 - v8 < int(0));
        assert!(-v34 + v5 < int(0));
        assert!(-v12 + v34 + v5 - v67 < int(0));
        assert_eq!(regular_subdivision(&space.polynomial(w)).unwrap(), hex);
    }

    #[test]
    fn forbidden_three_cell_subdivision_not_regular() {
        // antidiagonal 3-4 through (1,1) plus the diagonal 5-8
        let shape: Vec<Vec<LatticePoint>> = [[1u8, 2, 3, 4].as_slice(), &[3, 5, 8], &[4, 5, 8]]
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&l| SupportLabel::new(l).unwrap().point())
                    .collect()
            })
            .collect();
        assert_eq!(is_regular_shape(&shape, Slice::Symmetric5).unwrap(), None);
    }
}
