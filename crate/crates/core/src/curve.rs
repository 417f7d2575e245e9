//! The tropical curve dual to a regular subdivision.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{
    format_rational, int, parse_rational, primitive_decomposition, primitive_direction,
    LatticePoint, Rational, RationalPoint,
};
use crate::subdivision::{tie_point, Cell, CellJson, Subdivision};
use crate::tropical::{SupportLabel, SymmetricCubicValuations, TropicalPolynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveVertex {
    pub point: RationalPoint,
    pub cell: Cell,
}

/// A bounded edge; `direction` is primitive and points from `ends.0` to `ends.1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedEdge {
    pub ends: (usize, usize),
    pub dual: (LatticePoint, LatticePoint),
    pub direction: LatticePoint,
    pub length: Rational,
    pub weight: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ray {
    pub base: usize,
    pub direction: LatticePoint,
    pub dual: (LatticePoint, LatticePoint),
    pub weight: u64,
}

/// Vertices, bounded edges and rays with weights, dual to a subdivision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalCurve {
    pub vertices: Vec<CurveVertex>,
    pub edges: Vec<BoundedEdge>,
    pub rays: Vec<Ray>,
}

/// The dual curve: one vertex per cell, one bounded edge per interior edge of
/// the subdivision, one ray per boundary edge.
///
/// Directions are the inward normals of the dual edges, which under the min
/// convention point away from the Newton polygon edge's own term region.
pub fn dual_curve(p: &TropicalPolynomial, s: &Subdivision) -> Result<TropicalCurve> {
    let coeff = |q: LatticePoint| {
        p.terms().get(&q).ok_or_else(|| {
            Error::InconsistentCurve(format!("cell point {q} is not in the support"))
        })
    };
    let mut vertices = Vec::with_capacity(s.len());
    for cell in s.cells() {
        let (a, b, c) = (cell.vertices[0], cell.vertices[1], cell.vertices[2]);
        let point = tie_point((a, coeff(a)?), (b, coeff(b)?), (c, coeff(c)?))
            .ok_or_else(|| Error::InconsistentCurve(format!("cell {cell} is degenerate")))?;
        let (_, arg) = p.evaluate(&point)?;
        if arg.iter().copied().ne(cell.points.iter().copied()) {
            return Err(Error::InconsistentCurve(format!(
                "terms attaining the min at {point} differ from cell {cell}"
            )));
        }
        vertices.push(CurveVertex {
            point,
            cell: cell.clone(),
        });
    }

    let mut edges = Vec::new();
    let mut rays = Vec::new();
    for e in s.edges() {
        let (u, w) = e.ends;
        let weight = (w - u).gcd() as u64;
        match e.cells.as_slice() {
            [i, j] => {
                let d = vertices[*j].point.sub(&vertices[*i].point);
                let (direction, length) = primitive_decomposition(&d)?;
                let along = w - u;
                if direction.x * along.x + direction.y * along.y != 0 {
                    return Err(Error::InconsistentCurve(format!(
                        "edge between cells {} and {} is not perpendicular to its dual",
                        vertices[*i].cell, vertices[*j].cell
                    )));
                }
                edges.push(BoundedEdge {
                    ends: (*i, *j),
                    dual: (u, w),
                    direction,
                    length,
                    weight,
                });
            }
            [i] => {
                let ccw = s.cells()[*i]
                    .boundary_edges()
                    .into_iter()
                    .find(|&(a, b)| (a, b) == (u, w) || (a, b) == (w, u))
                    .expect("edge belongs to its cell");
                let direction =
                    primitive_direction(LatticePoint::new(0, 0), (ccw.1 - ccw.0).rotate_ccw())?;
                rays.push(Ray {
                    base: *i,
                    direction,
                    dual: (u, w),
                    weight,
                });
            }
            _ => {
                return Err(Error::InconsistentCurve(format!(
                    "edge {u}-{w} is shared by {} cells",
                    e.cells.len()
                )))
            }
        }
    }
    Ok(TropicalCurve {
        vertices,
        edges,
        rays,
    })
}

impl TropicalCurve {
    /// Weighted sum of outgoing primitive directions at vertex `i`.
    pub fn balance_at(&self, i: usize) -> LatticePoint {
        let mut sum = LatticePoint::new(0, 0);
        let scaled = |d: LatticePoint, w: u64| LatticePoint::new(d.x * w as i64, d.y * w as i64);
        for e in &self.edges {
            if e.ends.0 == i {
                sum = sum + scaled(e.direction, e.weight);
            }
            if e.ends.1 == i {
                sum = sum - scaled(e.direction, e.weight);
            }
        }
        for r in self.rays.iter().filter(|r| r.base == i) {
            sum = sum + scaled(r.direction, r.weight);
        }
        sum
    }

    pub fn is_balanced(&self) -> bool {
        (0..self.vertices.len()).all(|i| self.balance_at(i) == LatticePoint::new(0, 0))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &(w, _) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Neighbours of each vertex through bounded edges, with the edge index.
    fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for (k, e) in self.edges.iter().enumerate() {
            adj[e.ends.0].push((e.ends.1, k));
            adj[e.ends.1].push((e.ends.0, k));
        }
        adj
    }

    /// Whether `pt` lies on a vertex, bounded edge or ray.
    pub fn contains_point(&self, pt: &RationalPoint) -> bool {
        let on_ray = |base: &RationalPoint, dir: LatticePoint, max_t: Option<&Rational>| {
            let d = pt.sub(base);
            let cross = &d.x * int(dir.y) - &d.y * int(dir.x);
            if !cross.is_zero() {
                return false;
            }
            let norm2 = int(dir.x * dir.x + dir.y * dir.y);
            let t = d.dot(dir) / norm2;
            !t.is_negative() && max_t.is_none_or(|m| t <= *m)
        };
        self.vertices.iter().any(|v| v.point == *pt)
            || self
                .edges
                .iter()
                .any(|e| on_ray(&self.vertices[e.ends.0].point, e.direction, Some(&e.length)))
            || self
                .rays
                .iter()
                .any(|r| on_ray(&self.vertices[r.base].point, r.direction, None))
    }

    /// Point reflection through the origin; the dual cells are unchanged.
    pub fn reflect(&self) -> TropicalCurve {
        TropicalCurve {
            vertices: self
                .vertices
                .iter()
                .map(|v| CurveVertex {
                    point: v.point.neg(),
                    cell: v.cell.clone(),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| BoundedEdge {
                    direction: -e.direction,
                    ..e.clone()
                })
                .collect(),
            rays: self
                .rays
                .iter()
                .map(|r| Ray {
                    direction: -r.direction,
                    ..r.clone()
                })
                .collect(),
        }
    }

    /// Relabels the dual side through a map of the support.
    pub fn map_dual(
        &self,
        f: impl Fn(LatticePoint) -> LatticePoint + Copy,
    ) -> Result<TropicalCurve> {
        Ok(TropicalCurve {
            vertices: self
                .vertices
                .iter()
                .map(|v| {
                    Ok(CurveVertex {
                        point: v.point.clone(),
                        cell: v.cell.map_points(f)?,
                    })
                })
                .collect::<Result<_>>()?,
            edges: self
                .edges
                .iter()
                .map(|e| BoundedEdge {
                    dual: (f(e.dual.0), f(e.dual.1)),
                    ..e.clone()
                })
                .collect(),
            rays: self
                .rays
                .iter()
                .map(|r| Ray {
                    dual: (f(r.dual.0), f(r.dual.1)),
                    ..r.clone()
                })
                .collect(),
        })
    }

    /// An order-independent description used to compare curves exactly.
    pub fn signature(&self) -> CurveSignature {
        let pair = |a: LatticePoint, b: LatticePoint| if a <= b { (a, b) } else { (b, a) };
        let vertices = self
            .vertices
            .iter()
            .map(|v| (v.point.clone(), v.cell.points.clone()))
            .collect();
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let a = self.vertices[e.ends.0].point.clone();
                let b = self.vertices[e.ends.1].point.clone();
                let ends = if a <= b { (a, b) } else { (b, a) };
                (ends, pair(e.dual.0, e.dual.1), e.weight, e.length.clone())
            })
            .collect();
        let rays = self
            .rays
            .iter()
            .map(|r| {
                (
                    self.vertices[r.base].point.clone(),
                    r.direction,
                    pair(r.dual.0, r.dual.1),
                    r.weight,
                )
            })
            .collect();
        CurveSignature {
            vertices,
            edges,
            rays,
        }
    }

    pub fn to_json(&self) -> CurveJson {
        let dual_json = |(a, b): (LatticePoint, LatticePoint)| match (
            SupportLabel::from_point(a),
            SupportLabel::from_point(b),
        ) {
            (Some(x), Some(y)) => CellJson::Labels(vec![x.get(), y.get()]),
            _ => CellJson::Points(vec![[a.x, a.y], [b.x, b.y]]),
        };
        CurveJson {
            vertices: self
                .vertices
                .iter()
                .map(|v| VertexJson {
                    x: format_rational(&v.point.x),
                    y: format_rational(&v.point.y),
                    cell: match v.cell.labels() {
                        Some(ls) => CellJson::Labels(ls),
                        None => {
                            CellJson::Points(v.cell.points.iter().map(|p| [p.x, p.y]).collect())
                        }
                    },
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeJson {
                    from: e.ends.0,
                    to: e.ends.1,
                    dual: dual_json(e.dual),
                    length: format_rational(&e.length),
                    weight: e.weight,
                })
                .collect(),
            rays: self
                .rays
                .iter()
                .map(|r| RayJson {
                    from: r.base,
                    direction: [r.direction.x, r.direction.y],
                    dual: dual_json(r.dual),
                    weight: r.weight,
                })
                .collect(),
        }
    }

    pub fn from_json(json: &CurveJson) -> Result<TropicalCurve> {
        let points = |c: &CellJson| -> Result<Vec<LatticePoint>> {
            match c {
                CellJson::Labels(ls) => ls
                    .iter()
                    .map(|&l| Ok(SupportLabel::new(l)?.point()))
                    .collect(),
                CellJson::Points(ps) => {
                    Ok(ps.iter().map(|p| LatticePoint::new(p[0], p[1])).collect())
                }
            }
        };
        let dual = |c: &CellJson| -> Result<(LatticePoint, LatticePoint)> {
            match points(c)?.as_slice() {
                [a, b] => Ok((*a, *b)),
                _ => Err(Error::Parse("dual edge must have two points".into())),
            }
        };
        let vertices: Vec<CurveVertex> = json
            .vertices
            .iter()
            .map(|v| {
                Ok(CurveVertex {
                    point: RationalPoint::new(parse_rational(&v.x)?, parse_rational(&v.y)?),
                    cell: Cell::new(points(&v.cell)?)?,
                })
            })
            .collect::<Result<_>>()?;
        let n = vertices.len();
        let check = |i: usize| {
            if i < n {
                Ok(i)
            } else {
                Err(Error::Parse(format!("vertex index {i} out of range")))
            }
        };
        let edges = json
            .edges
            .iter()
            .map(|e| {
                let (a, b) = (check(e.from)?, check(e.to)?);
                let (direction, _) =
                    primitive_decomposition(&vertices[b].point.sub(&vertices[a].point))?;
                Ok(BoundedEdge {
                    ends: (a, b),
                    dual: dual(&e.dual)?,
                    direction,
                    length: parse_rational(&e.length)?,
                    weight: e.weight,
                })
            })
            .collect::<Result<_>>()?;
        let rays = json
            .rays
            .iter()
            .map(|r| {
                Ok(Ray {
                    base: check(r.from)?,
                    direction: LatticePoint::new(r.direction[0], r.direction[1]),
                    dual: dual(&r.dual)?,
                    weight: r.weight,
                })
            })
            .collect::<Result<_>>()?;
        Ok(TropicalCurve {
            vertices,
            edges,
            rays,
        })
    }
}

type EdgeKey = (
    (RationalPoint, RationalPoint),
    (LatticePoint, LatticePoint),
    u64,
    Rational,
);
type RayKey = (
    RationalPoint,
    LatticePoint,
    (LatticePoint, LatticePoint),
    u64,
);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveSignature {
    pub vertices: BTreeSet<(RationalPoint, Vec<LatticePoint>)>,
    pub edges: BTreeSet<EdgeKey>,
    pub rays: BTreeSet<RayKey>,
}

/// `{"vertices":[{"x":"-3","y":"-3","cell":[1,2,5]}], "edges":[...], "rays":[...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveJson {
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<EdgeJson>,
    pub rays: Vec<RayJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub x: String,
    pub y: String,
    pub cell: CellJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub from: usize,
    pub to: usize,
    pub dual: CellJson,
    pub length: String,
    pub weight: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RayJson {
    pub from: usize,
    pub direction: [i64; 2],
    pub dual: CellJson,
    pub weight: u64,
}

/// The cycle of a genus-one curve, counterclockwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleData {
    pub present: bool,
    pub vertices_in_order: Vec<usize>,
    pub side_lengths: Vec<Rational>,
    pub side_count: usize,
}

impl CycleData {
    fn absent() -> Self {
        CycleData {
            present: false,
            vertices_in_order: vec![],
            side_lengths: vec![],
            side_count: 0,
        }
    }
}

/// Finds the unique cycle of the bounded-edge graph, if any.
pub fn extract_cycle(c: &TropicalCurve) -> Result<CycleData> {
    let n = c.vertices.len();
    let adj = c.adjacency();
    let mut components = 0;
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        components += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for &(w, _) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    let genus = c.edges.len() + components - n;
    match genus {
        0 => return Ok(CycleData::absent()),
        1 => {}
        g => return Err(Error::UnexpectedGenus(g)),
    }

    // strip leaves until only the cycle is left
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut alive = vec![true; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    while let Some(v) = queue.pop_front() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &(w, _) in &adj[v] {
            if alive[w] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    queue.push_back(w);
                }
            }
        }
    }
    let start = (0..n)
        .find(|&v| alive[v])
        .expect("genus one leaves a cycle");
    let mut order = vec![start];
    let mut used_edges: Vec<usize> = Vec::new();
    let mut prev_edge: Option<usize> = None;
    let mut cur = start;
    loop {
        let &(next, k) = adj[cur]
            .iter()
            .find(|&&(w, k)| alive[w] && Some(k) != prev_edge)
            .expect("cycle vertex has two cycle neighbours");
        used_edges.push(k);
        if next == start {
            break;
        }
        order.push(next);
        prev_edge = Some(k);
        cur = next;
    }

    let signed_area: Rational = (0..order.len())
        .map(|i| {
            let a = &c.vertices[order[i]].point;
            let b = &c.vertices[order[(i + 1) % order.len()]].point;
            &a.x * &b.y - &a.y * &b.x
        })
        .sum();
    if signed_area.is_negative() {
        order.reverse();
        order.rotate_right(1);
        used_edges.reverse();
    }
    let side_lengths: Vec<Rational> = used_edges
        .iter()
        .map(|&k| c.edges[k].length.clone())
        .collect();
    Ok(CycleData {
        present: true,
        side_count: order.len(),
        vertices_in_order: order,
        side_lengths,
    })
}

/// `x^2 y^2 f(1/x, 1/y)`: the same valuations on the support reflected
/// through `(1,1)`.
pub fn truncated_transform(v: &SymmetricCubicValuations) -> TropicalPolynomial {
    TropicalPolynomial::from_terms(
        SupportLabel::all().map(|l| (reflect_support_point(l.point()), v.height(l))),
    )
}

/// `p -> (2,2) - p`, the support map of [`truncated_transform`].
pub fn reflect_support_point(p: LatticePoint) -> LatticePoint {
    LatticePoint::new(2 - p.x, 2 - p.y)
}

/// Lengths of the bounded edges, keyed by dual edge.
pub fn edge_lengths_by_dual(c: &TropicalCurve) -> BTreeMap<(LatticePoint, LatticePoint), Rational> {
    c.edges
        .iter()
        .map(|e| {
            let key = if e.dual.0 <= e.dual.1 {
                e.dual
            } else {
                (e.dual.1, e.dual.0)
            };
            (key, e.length.clone())
        })
        .collect()
}
