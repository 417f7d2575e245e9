//! Brute-force verifiers: exact Fourier–Motzkin feasibility for mixed
//! strict/weak/equality systems, and attainment scans of tropical curves.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::curve::TropicalCurve;
use crate::error::{Error, Result};
use crate::numeric::{format_rational, int, rat, LatticePoint, Rational, RationalPoint};
use crate::tropical::TropicalPolynomial;

/// Fourier–Motzkin blowup bound.
pub const MAX_FM_VARIABLES: usize = 12;

/// Default seed for [`attainment_scan`].
pub const DEFAULT_SEED: u64 = 0x7C0B_1C5E;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "=")]
    Eq,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Eq => "=",
        })
    }
}

/// One row `coeffs . x  (rel)  rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRow {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl LinearRow {
    pub fn new(coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> Self {
        LinearRow {
            coeffs,
            relation,
            rhs,
        }
    }

    pub fn from_ints(coeffs: &[i64], relation: Relation, rhs: i64) -> Self {
        LinearRow::new(coeffs.iter().map(|&c| int(c)).collect(), relation, int(rhs))
    }

    pub fn lhs(&self, x: &[Rational]) -> Rational {
        self.coeffs.iter().zip(x).map(|(a, v)| a * v).sum()
    }

    pub fn satisfied_by(&self, x: &[Rational]) -> bool {
        let lhs = self.lhs(x);
        match self.relation {
            Relation::Lt => lhs < self.rhs,
            Relation::Le => lhs <= self.rhs,
            Relation::Eq => lhs == self.rhs,
        }
    }
}

/// A conjunction of linear rows over named variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MixedLinearSystem {
    pub variables: Vec<String>,
    pub rows: Vec<LinearRow>,
}

impl MixedLinearSystem {
    pub fn new(variables: Vec<String>) -> Self {
        MixedLinearSystem {
            variables,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: LinearRow) {
        self.rows.push(row);
    }

    pub fn satisfied_by(&self, x: &[Rational]) -> bool {
        self.rows.iter().all(|r| r.satisfied_by(x))
    }
}

impl fmt::Display for MixedLinearSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let mut terms = Vec::new();
            for (c, name) in row.coeffs.iter().zip(&self.variables) {
                if !c.is_zero() {
                    terms.push(format!("{}*{}", format_rational(c), name));
                }
            }
            if terms.is_empty() {
                terms.push("0".into());
            }
            writeln!(
                f,
                "{} {} {}",
                terms.join(" + "),
                row.relation,
                format_rational(&row.rhs)
            )?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FeasibilityResult {
    Feasible(Vec<Rational>),
    Infeasible,
}

impl FeasibilityResult {
    pub fn is_feasible(&self) -> bool {
        matches!(self, FeasibilityResult::Feasible(_))
    }

    pub fn witness(&self) -> Option<&[Rational]> {
        match self {
            FeasibilityResult::Feasible(w) => Some(w),
            FeasibilityResult::Infeasible => None,
        }
    }
}

/// An inequality `coeffs . x < rhs` (strict) or `<= rhs`.
#[derive(Clone, Debug)]
struct Ineq {
    coeffs: Vec<Rational>,
    strict: bool,
    rhs: Rational,
}

/// `x_var = constant + sum coeffs[k] x_k`, recorded while removing equalities.
struct Substitution {
    var: usize,
    coeffs: Vec<Rational>,
    constant: Rational,
}

/// Decides feasibility of a mixed `<`, `<=`, `=` system exactly.
///
/// Equalities are removed by substitution first; the remaining inequalities
/// go through Fourier–Motzkin with a strictness flag on every row (a
/// combination is strict iff either parent is). A witness is rebuilt by
/// back-substitution and re-checked against the input.
pub fn fm_feasible(sys: &MixedLinearSystem) -> Result<FeasibilityResult> {
    let n = sys.variables.len();
    if n > MAX_FM_VARIABLES {
        return Err(Error::TooManyVariables {
            found: n,
            max: MAX_FM_VARIABLES,
        });
    }
    if let Some(bad) = sys.rows.iter().find(|r| r.coeffs.len() != n) {
        return Err(Error::MalformedSystem(format!(
            "row has {} coefficients for {} variables",
            bad.coeffs.len(),
            n
        )));
    }

    let mut equalities: Vec<LinearRow> = Vec::new();
    let mut ineqs: Vec<Ineq> = Vec::new();
    for row in &sys.rows {
        match row.relation {
            Relation::Eq => equalities.push(row.clone()),
            Relation::Lt | Relation::Le => ineqs.push(Ineq {
                coeffs: row.coeffs.clone(),
                strict: row.relation == Relation::Lt,
                rhs: row.rhs.clone(),
            }),
        }
    }

    let mut subs: Vec<Substitution> = Vec::new();
    while let Some(eq) = equalities.pop() {
        let Some(j) = eq.coeffs.iter().position(|c| !c.is_zero()) else {
            if eq.rhs.is_zero() {
                continue;
            }
            return Ok(FeasibilityResult::Infeasible);
        };
        let pivot = eq.coeffs[j].clone();
        let mut coeffs: Vec<Rational> = eq.coeffs.iter().map(|a| -a / &pivot).collect();
        coeffs[j] = Rational::zero();
        let constant = &eq.rhs / &pivot;
        for other in equalities.iter_mut() {
            substitute(&mut other.coeffs, &mut other.rhs, j, &coeffs, &constant);
        }
        for ineq in ineqs.iter_mut() {
            substitute(&mut ineq.coeffs, &mut ineq.rhs, j, &coeffs, &constant);
        }
        subs.push(Substitution {
            var: j,
            coeffs,
            constant,
        });
    }

    let eliminated: BTreeSet<usize> = subs.iter().map(|s| s.var).collect();
    let order: Vec<usize> = (0..n).rev().filter(|j| !eliminated.contains(j)).collect();

    let mut rows = match tighten(ineqs) {
        Some(rows) => rows,
        None => return Ok(FeasibilityResult::Infeasible),
    };
    let mut levels: Vec<(usize, Vec<Ineq>)> = Vec::new();
    for &j in &order {
        let (involved, rest): (Vec<Ineq>, Vec<Ineq>) =
            rows.into_iter().partition(|r| !r.coeffs[j].is_zero());
        let mut next = rest;
        let (upper, lower): (Vec<&Ineq>, Vec<&Ineq>) =
            involved.iter().partition(|r| r.coeffs[j].is_positive());
        for u in &upper {
            for l in &lower {
                let cu = &u.coeffs[j];
                let cl = -&l.coeffs[j];
                let coeffs: Vec<Rational> = u
                    .coeffs
                    .iter()
                    .zip(&l.coeffs)
                    .map(|(a, b)| a * &cl + b * cu)
                    .collect();
                next.push(Ineq {
                    coeffs,
                    strict: u.strict || l.strict,
                    rhs: &u.rhs * &cl + &l.rhs * cu,
                });
            }
        }
        levels.push((j, involved));
        rows = match tighten(next) {
            Some(rows) => rows,
            None => return Ok(FeasibilityResult::Infeasible),
        };
    }

    let mut x = vec![Rational::zero(); n];
    for (j, involved) in levels.iter().rev() {
        x[*j] = choose_value(*j, involved, &x);
    }
    for s in subs.iter().rev() {
        let v = &s.constant
            + s.coeffs
                .iter()
                .zip(&x)
                .map(|(a, v)| a * v)
                .sum::<Rational>();
        x[s.var] = v;
    }
    if !sys.satisfied_by(&x) {
        return Err(Error::MalformedSystem(
            "back-substituted witness violates the system".into(),
        ));
    }
    Ok(FeasibilityResult::Feasible(x))
}

fn substitute(
    coeffs: &mut [Rational],
    rhs: &mut Rational,
    j: usize,
    expr: &[Rational],
    constant: &Rational,
) {
    let a = std::mem::take(&mut coeffs[j]);
    if a.is_zero() {
        return;
    }
    for (k, c) in expr.iter().enumerate() {
        if !c.is_zero() {
            coeffs[k] += &a * c;
        }
    }
    *rhs -= &a * constant;
}

/// Normalizes rows, drops constant rows (or reports a contradiction with
/// `None`) and keeps only the tightest row per left-hand side.
fn tighten(rows: Vec<Ineq>) -> Option<Vec<Ineq>> {
    let mut best: BTreeMap<Vec<Rational>, (Rational, bool)> = BTreeMap::new();
    for mut r in rows {
        let Some(lead) = r.coeffs.iter().find(|c| !c.is_zero()).map(|c| c.abs()) else {
            let ok = if r.strict {
                r.rhs.is_positive()
            } else {
                !r.rhs.is_negative()
            };
            if !ok {
                return None;
            }
            continue;
        };
        if !lead.is_one() {
            for c in r.coeffs.iter_mut() {
                *c /= &lead;
            }
            r.rhs /= &lead;
        }
        match best.get_mut(&r.coeffs) {
            Some((rhs, strict)) => {
                if r.rhs < *rhs || (r.rhs == *rhs && r.strict) {
                    *rhs = r.rhs;
                    *strict = r.strict;
                }
            }
            None => {
                best.insert(r.coeffs, (r.rhs, r.strict));
            }
        }
    }
    Some(
        best.into_iter()
            .map(|(coeffs, (rhs, strict))| Ineq {
                coeffs,
                strict,
                rhs,
            })
            .collect(),
    )
}

/// Picks a value for variable `j` inside the bounds implied by `rows` given
/// the already fixed variables, preferring integers.
fn choose_value(j: usize, rows: &[Ineq], x: &[Rational]) -> Rational {
    let mut lower: Option<(Rational, bool)> = None;
    let mut upper: Option<(Rational, bool)> = None;
    for r in rows {
        let rest: Rational = r
            .coeffs
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != j)
            .map(|(k, a)| a * &x[k])
            .sum();
        let a = &r.coeffs[j];
        let bound = (&r.rhs - rest) / a;
        if a.is_positive() {
            let tighter = match &upper {
                None => true,
                Some((u, s)) => bound < *u || (bound == *u && r.strict && !s),
            };
            if tighter {
                upper = Some((bound, r.strict));
            }
        } else {
            let tighter = match &lower {
                None => true,
                Some((l, s)) => bound > *l || (bound == *l && r.strict && !s),
            };
            if tighter {
                lower = Some((bound, r.strict));
            }
        }
    }
    let fits = |v: &Rational| {
        lower
            .as_ref()
            .is_none_or(|(l, s)| if *s { v > l } else { v >= l })
            && upper
                .as_ref()
                .is_none_or(|(u, s)| if *s { v < u } else { v <= u })
    };
    let zero = Rational::zero();
    if fits(&zero) {
        return zero;
    }
    match (&lower, &upper) {
        (Some((l, _)), Some((u, _))) => {
            let c = l.floor() + Rational::one();
            let c0 = l.ceil();
            for cand in [c0, c] {
                if fits(&cand) {
                    return cand;
                }
            }
            if l == u {
                return l.clone();
            }
            (l + u) / int(2)
        }
        (Some((l, _)), None) => {
            let c0 = l.ceil();
            if fits(&c0) {
                c0
            } else {
                c0 + Rational::one()
            }
        }
        (None, Some((u, _))) => {
            let c0 = u.floor();
            if fits(&c0) {
                c0
            } else {
                c0 - Rational::one()
            }
        }
        (None, None) => zero,
    }
}

/// One failed check from [`attainment_scan`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AttainmentViolation {
    pub location: RationalPoint,
    pub expected: Vec<LatticePoint>,
    pub found: Vec<LatticePoint>,
    pub what: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AttainmentReport {
    pub seed: u64,
    pub edge_probes: usize,
    pub generic_probes: usize,
    pub violations: Vec<AttainmentViolation>,
}

impl AttainmentReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks a curve against its polynomial by direct evaluation.
///
/// Every vertex must have argmin equal to its dual cell's touched points;
/// interior points of bounded edges and rays must attain the min on both
/// endpoints of the dual edge; `samples` random rational points off the
/// curve must have a unique minimizing term.
pub fn attainment_scan(
    p: &TropicalPolynomial,
    c: &TropicalCurve,
    samples: usize,
    seed: u64,
) -> AttainmentReport {
    let mut violations = Vec::new();
    let mut edge_probes = 0;

    for v in &c.vertices {
        edge_probes += 1;
        let expected: BTreeSet<LatticePoint> = v.cell.points.iter().copied().collect();
        match p.evaluate(&v.point) {
            Ok((_, arg)) if arg == expected => {}
            Ok((_, arg)) => violations.push(AttainmentViolation {
                location: v.point.clone(),
                expected: expected.into_iter().collect(),
                found: arg.into_iter().collect(),
                what: "vertex argmin differs from dual cell".into(),
            }),
            Err(e) => violations.push(AttainmentViolation {
                location: v.point.clone(),
                expected: expected.into_iter().collect(),
                found: vec![],
                what: e.to_string(),
            }),
        }
    }

    let mut probe = |pt: RationalPoint, dual: (LatticePoint, LatticePoint), what: &str| {
        edge_probes += 1;
        let ok = match p.evaluate(&pt) {
            Ok((_, arg)) => {
                if arg.contains(&dual.0) && arg.contains(&dual.1) && arg.len() >= 2 {
                    None
                } else {
                    Some(arg.into_iter().collect())
                }
            }
            Err(_) => Some(vec![]),
        };
        if let Some(found) = ok {
            violations.push(AttainmentViolation {
                location: pt,
                expected: vec![dual.0, dual.1],
                found,
                what: what.into(),
            });
        }
    };
    for e in &c.edges {
        let a = &c.vertices[e.ends.0].point;
        let b = &c.vertices[e.ends.1].point;
        for t in [rat(1, 2), rat(1, 3), rat(5, 7)] {
            let pt = a.add(&b.sub(a).scale(&t));
            probe(
                pt,
                e.dual,
                "bounded edge interior does not attain dual edge",
            );
        }
    }
    for r in &c.rays {
        let base = &c.vertices[r.base].point;
        for t in [rat(1, 2), int(1), int(17)] {
            let pt = base.add(&r.direction.to_rational().scale(&t));
            probe(pt, r.dual, "ray interior does not attain dual edge");
        }
    }

    let mut rng = StdRng::seed_from_u64(seed);
    let (lo, hi) = sampling_box(c);
    let mut generic_probes = 0;
    let mut attempts = 0;
    while generic_probes < samples && attempts < samples * 50 {
        attempts += 1;
        let pt = RationalPoint::new(
            random_rational(&mut rng, &lo, &hi),
            random_rational(&mut rng, &lo, &hi),
        );
        if c.contains_point(&pt) {
            continue;
        }
        generic_probes += 1;
        match p.evaluate(&pt) {
            Ok((_, arg)) if arg.len() == 1 => {}
            Ok((_, arg)) => violations.push(AttainmentViolation {
                location: pt,
                expected: vec![],
                found: arg.into_iter().collect(),
                what: "point off the curve has several minimizing terms".into(),
            }),
            Err(e) => violations.push(AttainmentViolation {
                location: pt,
                expected: vec![],
                found: vec![],
                what: e.to_string(),
            }),
        }
    }

    AttainmentReport {
        seed,
        edge_probes,
        generic_probes,
        violations,
    }
}

fn sampling_box(c: &TropicalCurve) -> (Rational, Rational) {
    let mut lo = int(-1);
    let mut hi = int(1);
    for v in &c.vertices {
        for coord in [&v.point.x, &v.point.y] {
            if *coord < lo {
                lo = coord.clone();
            }
            if *coord > hi {
                hi = coord.clone();
            }
        }
    }
    (lo - int(3), hi + int(3))
}

fn random_rational(rng: &mut StdRng, lo: &Rational, hi: &Rational) -> Rational {
    let denom: i64 = 997;
    let t = rat(rng.gen_range(0..=denom), denom);
    lo + (hi - lo) * t
}
