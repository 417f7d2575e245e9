//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use tropical_cubic::classify::{
    center_sweep, classify_by_cones, classify_by_subdivision, honeycomb_profile, shape_key,
    shape_points, Bound, CurveClass, CycleShape, Row, FORBIDDEN_SHAPES, SMOOTH_CONES,
};
use tropical_cubic::curve::{
    dual_curve, extract_cycle, reflect_support_point, truncated_transform, TropicalCurve,
};
use tropical_cubic::numeric::{int, rat, ExtRational, Rational, RationalPoint};
use tropical_cubic::oracle::{
    attainment_scan, fm_feasible, FeasibilityResult, LinearRow, MixedLinearSystem,
};
use tropical_cubic::series::{classify_edwards, LaurentPolynomial, SeriesValuation};
use tropical_cubic::subdivision::{
    is_regular_shape, regular_subdivision, subdivision_oracle, Slice,
};
use tropical_cubic::{build_symmetric_cubic, SymmetricCubicValuations};

const SEED: u64 = 20_241_015;

type Criterion = (&'static str, fn() -> Outcome, Option<u64>);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn curve_of(v: &SymmetricCubicValuations) -> TropicalCurve {
    let p = build_symmetric_cubic(v);
    dual_curve(&p, &regular_subdivision(&p).unwrap()).unwrap()
}

fn smooth_table() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for cone in &SMOOTH_CONES {
        let mut sys =
            MixedLinearSystem::new(["v12", "v34", "v5", "v67", "v8"].map(String::from).to_vec());
        for c in &cone.conditions {
            sys.push(LinearRow::from_ints(&c.form.0, c.relation, 0));
        }
        let want = CurveClass::from(cone.class);
        match fm_feasible(&sys).unwrap() {
            FeasibilityResult::Feasible(w) => {
                let v = SymmetricCubicValuations::from_ext(finite_five(w)).unwrap();
                let got = classify_by_subdivision(&v).unwrap();
                if got != want {
                    ok = false;
                    notes.push(format!("witness {v} of {want} gives {got}"));
                }
            }
            FeasibilityResult::Infeasible => {
                ok = false;
                notes.push(format!("{want} cone infeasible"));
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut disagreements = 0;
    let mut listed = 0;
    for v in common::suite(&mut rng, 1000) {
        let cones = classify_by_cones(&v).unwrap();
        if matches!(cones, CurveClass::Unlisted(_)) {
            continue;
        }
        listed += 1;
        if cones != classify_by_subdivision(&v).unwrap() {
            disagreements += 1;
            if disagreements <= 3 {
                notes.push(format!("disagreement at {v}"));
            }
        }
    }
    ok &= disagreements == 0;
    notes.insert(
        0,
        format!("5 witnesses; 1000 samples, {listed} in a cone, {disagreements} disagreements"),
    );
    outcome(ok, notes.join("; "))
}

fn finite_five(witness: Vec<Rational>) -> [ExtRational; 5] {
    let v: Vec<ExtRational> = witness.into_iter().map(ExtRational::Finite).collect();
    v.try_into().expect("five variables")
}

/// Vertex coordinates of the hexagon-cycle curve, cell by cell.
fn hexagon_table(v: &SymmetricCubicValuations) -> Vec<(Vec<u8>, RationalPoint)> {
    let (v12, v34, v5, v67) = (&v.v12, &v.v34, &v.v5, &v.v67);
    let v8 = v.v8.finite().expect("finite constant").clone();
    let pt = |x: Rational, y: Rational| RationalPoint::new(x, y);
    vec![
        (vec![1, 2, 5], pt(v5 - v12, v5 - v12)),
        (vec![1, 4, 5], pt(v34 - v12, v5 - v12)),
        (vec![2, 3, 5], pt(v5 - v12, v34 - v12)),
        (vec![4, 5, 7], pt(v67 - v5, v67 - v34)),
        (vec![3, 5, 6], pt(v67 - v34, v67 - v5)),
        (vec![5, 6, 7], pt(v67 - v5, v67 - v5)),
        (vec![6, 7, 8], pt(&v8 - v67, &v8 - v67)),
    ]
}

fn hexagon_coordinates() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED + 2);
    let hexagon = &SMOOTH_CONES[3];
    let mut checked = 0;
    let mut tries = 0;
    let mut bad = Vec::new();
    while checked < 100 && tries < 100_000 {
        tries += 1;
        let mut v = common::random_valuations(&mut rng);
        if v.v8.is_infinite() {
            v.v8 = ExtRational::Finite(common::wide_rational(&mut rng));
        }
        if !hexagon.contains(&v) {
            continue;
        }
        checked += 1;
        let curve = curve_of(&v);
        let got: BTreeSet<(Vec<u8>, RationalPoint)> = curve
            .vertices
            .iter()
            .map(|x| (x.cell.labels().unwrap(), x.point.clone()))
            .collect();
        let want: BTreeSet<(Vec<u8>, RationalPoint)> = hexagon_table(&v).into_iter().collect();
        if got != want {
            bad.push(v.to_string());
        }
    }
    outcome(
        checked == 100 && bad.is_empty(),
        format!(
            "{checked} samples in the hexagon cone, {} mismatches {:?}",
            bad.len(),
            bad.iter().take(3).collect::<Vec<_>>()
        ),
    )
}

fn forbidden_subdivisions() -> Outcome {
    let mut infeasible = 0;
    for shape in FORBIDDEN_SHAPES {
        if is_regular_shape(&shape_points(shape), Slice::Symmetric5)
            .unwrap()
            .is_none()
        {
            infeasible += 1;
        }
    }
    let keys: Vec<_> = FORBIDDEN_SHAPES.iter().map(|s| shape_key(s)).collect();
    let mut rng = StdRng::seed_from_u64(SEED + 3);
    let mut hits = 0;
    for v in common::suite(&mut rng, 1000) {
        let s = regular_subdivision(&build_symmetric_cubic(&v)).unwrap();
        if keys.contains(&s.shape()) {
            hits += 1;
        }
    }
    // negative control: a catalogued shape must be found regular
    let control = is_regular_shape(
        &shape_points(&[
            &[1, 2, 5],
            &[1, 4, 5],
            &[2, 3, 5],
            &[4, 5, 7],
            &[3, 5, 6],
            &[5, 6, 7],
            &[6, 7, 8],
        ]),
        Slice::Symmetric5,
    )
    .unwrap()
    .is_some();
    outcome(
        infeasible == 5 && hits == 0 && control,
        format!("{infeasible}/5 infeasible, {hits} occurrences in 1000 samples, control feasible: {control}"),
    )
}

fn non_smooth_spot_checks() -> Outcome {
    let cases = [
        (
            SymmetricCubicValuations::from_ints(0, 0, 0, 0, Some(0)),
            Row::I,
        ),
        (
            SymmetricCubicValuations::from_ints(-10, 0, -15, -5, Some(0)),
            Row::C,
        ),
        (
            SymmetricCubicValuations::from_ints(-10, 0, -10, -5, Some(0)),
            Row::B,
        ),
        (
            SymmetricCubicValuations::new(
                int(-10),
                int(0),
                rat(-15, 2),
                int(-5),
                ExtRational::from_int(0),
            ),
            Row::A,
        ),
    ];
    let mut bad = Vec::new();
    for (v, row) in &cases {
        let want = CurveClass::NonSmooth(*row);
        let cones = classify_by_cones(v).unwrap();
        let sub = classify_by_subdivision(v).unwrap();
        if cones != want || sub != want {
            bad.push(format!("{v}: cones {cones}, subdivision {sub}"));
        }
    }
    outcome(
        bad.is_empty(),
        if bad.is_empty() {
            "4/4 match".to_string()
        } else {
            bad.join("; ")
        },
    )
}

fn honeycomb() -> Outcome {
    let mut notes = Vec::new();
    let v = SymmetricCubicValuations::from_ints(3, 2, 0, 1, Some(3));
    let c = curve_of(&v);
    let cyc = extract_cycle(&c).unwrap();
    let on_cycle: BTreeSet<usize> = cyc.vertices_in_order.iter().copied().collect();
    let tails: Vec<&Rational> = c
        .edges
        .iter()
        .filter(|e| !(on_cycle.contains(&e.ends.0) && on_cycle.contains(&e.ends.1)))
        .map(|e| &e.length)
        .collect();
    let a_ok = cyc.side_count == 6
        && cyc.side_lengths.iter().all(|l| *l == int(2))
        && tails == vec![&int(1)];
    notes.push(format!(
        "(3,2,0,1,3): sides {:?}, tail {:?}",
        cyc.side_lengths
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>(),
        tails.iter().map(|t| t.to_string()).collect::<Vec<_>>()
    ));

    let v = SymmetricCubicValuations::from_ints(3, 2, 0, 1, None);
    let c = curve_of(&v);
    let cyc = extract_cycle(&c).unwrap();
    let prof = honeycomb_profile(&v);
    let b_ok = c.rays.len() == 6
        && c.edges.len() == 6
        && cyc.side_count == 6
        && cyc.side_lengths.iter().all(|l| *l == int(2))
        && prof.symmetric;
    notes.push(format!(
        "(3,2,0,1,inf): {} rays, {} bounded edges, symmetric {}",
        c.rays.len(),
        c.edges.len(),
        prof.symmetric
    ));
    outcome(a_ok && b_ok, notes.join("; "))
}

fn sweeps() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED + 6);
    let examples = [
        (
            SymmetricCubicValuations::from_ints(-10, 0, 0, -5, Some(0)),
            int(-20),
            int(5),
            vec![
                ExtRational::from_int(-15),
                ExtRational::from_int(-10),
                ExtRational::new(-15, 2),
            ],
            vec![
                CurveClass::Smooth(CycleShape::Heptagon),
                CurveClass::NonSmooth(Row::C),
                CurveClass::Smooth(CycleShape::Pentagon),
                CurveClass::NonSmooth(Row::B),
                CurveClass::Smooth(CycleShape::Square),
                CurveClass::NonSmooth(Row::A),
            ],
        ),
        (
            SymmetricCubicValuations::from_ints(0, 14, 0, 4, Some(0)),
            int(-15),
            int(2),
            vec![
                ExtRational::from_int(-10),
                ExtRational::from_int(-4),
                ExtRational::from_int(0),
            ],
            vec![
                CurveClass::Smooth(CycleShape::Heptagon),
                CurveClass::NonSmooth(Row::C),
                CurveClass::Smooth(CycleShape::Pentagon),
                CurveClass::NonSmooth(Row::E),
                CurveClass::Smooth(CycleShape::Triangle),
                CurveClass::NonSmooth(Row::D),
            ],
        ),
    ];
    let mut ok = true;
    let mut notes = Vec::new();
    for (fixed, lo, hi, breakpoints, classes) in examples {
        let r = center_sweep(&fixed, &lo, &ExtRational::Finite(hi.clone())).unwrap();
        let got: Vec<CurveClass> = r.intervals.iter().map(|i| i.class.clone()).collect();
        let mut probes = 0;
        let mut wrong = 0;
        for iv in &r.intervals {
            let (a, b) = match (&iv.lower, &iv.upper) {
                (Bound::Closed(a) | Bound::Open(a), Bound::Closed(b) | Bound::Open(b)) => {
                    (a.clone(), b.clone())
                }
                _ => unreachable!("finite range"),
            };
            let samples: Vec<Rational> = if a == b {
                vec![a.clone()]
            } else {
                (0..100)
                    .map(|_| common::between(&mut rng, &a, &b))
                    .collect()
            };
            for k in samples {
                probes += 1;
                if classify_by_subdivision(&fixed.with_v5(k)).unwrap() != iv.class {
                    wrong += 1;
                }
            }
        }
        let this = r.breakpoints == breakpoints && got == classes && wrong == 0;
        ok &= this;
        notes.push(format!(
            "breakpoints [{}], {} intervals, {probes} probes, {wrong} wrong",
            r.breakpoints
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", "),
            r.intervals.len()
        ));
    }
    outcome(ok, notes.join("; "))
}

fn transform_lemma() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED + 7);
    let mut bad = 0;
    for v in common::suite(&mut rng, 200) {
        let g = truncated_transform(&v);
        let cg = dual_curve(&g, &regular_subdivision(&g).unwrap()).unwrap();
        let cf = curve_of(&v).reflect();
        let relabelled = cg.map_dual(reflect_support_point).unwrap();
        if relabelled.signature() != cf.signature() {
            bad += 1;
        }
    }
    outcome(bad == 0, format!("200 samples, {bad} mismatches"))
}

fn duality_suite() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED + 8);
    let (mut unbalanced, mut counts, mut disconnected, mut violations, mut oracle_mismatch) =
        (0, 0, 0, 0, 0);
    let mut probes = 0;
    for v in common::suite(&mut rng, 1000) {
        let p = build_symmetric_cubic(&v);
        let s = regular_subdivision(&p).unwrap();
        if subdivision_oracle(&p).unwrap() != s {
            oracle_mismatch += 1;
        }
        let c = dual_curve(&p, &s).unwrap();
        if !c.is_balanced() {
            unbalanced += 1;
        }
        if !c.is_connected() {
            disconnected += 1;
        }
        if c.edges.len() != s.interior_edges().len() || c.rays.len() != s.boundary_edges().len() {
            counts += 1;
        }
        let scan = attainment_scan(&p, &c, 20, rng.gen());
        probes += scan.edge_probes + scan.generic_probes;
        violations += scan.violations.len();
    }
    outcome(
        unbalanced + counts + disconnected + violations + oracle_mismatch == 0,
        format!(
            "1000 curves: {unbalanced} unbalanced, {disconnected} disconnected, {counts} count mismatches, \
             {violations} attainment violations in {probes} probes, {oracle_mismatch} oracle mismatches"
        ),
    )
}

fn edwards_suite() -> Outcome {
    let order = 12;
    let mut rng = StdRng::seed_from_u64(SEED + 9);
    let mut determinate = 0;
    let mut outside = Vec::new();
    let mut seen = BTreeSet::new();
    let random_poly =
        |rng: &mut StdRng| LaurentPolynomial::new((0..=2).map(|e| (e, int(rng.gen_range(-2..=2)))));
    for _ in 0..200 {
        let r = random_poly(&mut rng);
        let s = random_poly(&mut rng);
        if let Ok(c) = classify_edwards(&r.to_series(order), &s.to_series(order), order) {
            determinate += 1;
            match c.shape {
                Some(t) => {
                    seen.insert(t.tag());
                }
                None => outside.push(format!("r={r} s={s}: {}", c.class)),
            }
        }
    }
    let one = LaurentPolynomial::constant(1);
    let zero = LaurentPolynomial::default();
    let base = classify_edwards(&one.to_series(order), &zero.to_series(order), order).unwrap();
    let u_ok = base.valuations.0 == [1, 1, 0, 0, 0].map(SeriesValuation::Finite);
    let curve = curve_of(&base.valuations.to_cubic().unwrap()).reflect();
    let cyc = extract_cycle(&curve).unwrap();
    let square_only = cyc.side_count == 4 && curve.edges.len() == 4;
    let base_ok = u_ok && base.class == CurveClass::NonSmooth(Row::F) && square_only;
    outcome(
        outside.is_empty() && base_ok,
        format!(
            "{determinate}/200 determinate, shapes seen {:?}, {} outside; r=1,s=0: u={} {} square-only {}",
            seen,
            outside.len(),
            base.valuations,
            base.class,
            square_only
        ),
    )
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("smooth cones and witnesses", smooth_table, Some(10)),
        ("hexagon vertex coordinates", hexagon_coordinates, None),
        ("forbidden subdivisions", forbidden_subdivisions, Some(30)),
        ("non-smooth spot checks", non_smooth_spot_checks, None),
        ("honeycomb lengths", honeycomb, None),
        ("v5 sweeps", sweeps, None),
        ("transform reflects the curve", transform_lemma, None),
        ("balancing and duality", duality_suite, None),
        ("edwards shapes", edwards_suite, Some(60)),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = check();
        let elapsed = start.elapsed();
        let in_time = limit.is_none_or(|s| elapsed < Duration::from_secs(s));
        let pass = out.pass && in_time;
        if !pass {
            failed += 1;
        }
        let limit_note = limit.map_or(String::new(), |s| format!(", limit {s} s"));
        println!(
            "criterion {}: {} {} ({:.2} s{}) {}",
            i + 1,
            if pass { "PASS" } else { "FAIL" },
            name,
            elapsed.as_secs_f64(),
            limit_note,
            out.detail
        );
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
