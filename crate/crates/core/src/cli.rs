//! The `tropcubic` command line.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::classify::{
    center_sweep, classification_report, classify_by_cones, classify_by_subdivision,
    honeycomb_profile, Bound, CurveClass, HoneycombType, SweepInterval,
};
use crate::curve::{dual_curve, extract_cycle, TropicalCurve};
use crate::error::{Error, Result};
use crate::numeric::{format_rational, int, parse_rational, ExtRational, Rational};
use crate::oracle::{attainment_scan, DEFAULT_SEED};
use crate::render::{ascii, svg, svg_stack, BoundingBox};
use crate::series::{classify_edwards_auto, LaurentPolynomial, DEFAULT_ORDER};
use crate::subdivision::{regular_subdivision, Subdivision};
use crate::tropical::{build_symmetric_cubic, SymmetricCubicValuations};

/// Exact tropical curves of symmetric truncated cubics.
#[derive(Debug, Parser)]
#[command(name = "tropcubic", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify the curve of one valuation vector.
    Classify(CurveArgs),
    /// Draw the curve and its dual subdivision.
    Plot(CurveArgs),
    /// Sweep v5 over a range with the other valuations fixed.
    Sweep(SweepArgs),
    /// Valuations and curve class of the Edwards-curve cubic for r, s.
    Edwards(EdwardsArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Ascii,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Convention {
    Min,
    Max,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    /// Valuations `v12,v34,v5,v67,v8`; `inf` drops the constant term.
    #[arg(long = "v", allow_hyphen_values = true)]
    pub v: String,
    #[arg(long, value_enum, default_value = "min")]
    pub convention: Convention,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Padding of the plot window around the vertices.
    #[arg(long, default_value_t = 2)]
    pub pad: i64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// `v12,v34,v67,v8`, or all five values with v5 ignored.
    #[arg(long = "v", allow_hyphen_values = true)]
    pub v: String,
    /// Range `kmin:kmax`; `kmax` may be `inf`.
    #[arg(long, allow_hyphen_values = true)]
    pub sweep: String,
    #[arg(long, default_value_t = 2)]
    pub pad: i64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct EdwardsArgs {
    /// Laurent polynomial in q, e.g. `1 - 2*q + 1/2*q^3`.
    #[arg(long, allow_hyphen_values = true)]
    pub r: String,
    #[arg(long, allow_hyphen_values = true)]
    pub s: String,
    /// Starting truncation order; doubled on indeterminate valuations.
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    pub order: i64,
    #[command(flatten)]
    pub output: Output,
}

/// Process exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::NonFiniteCoefficient(_) => 2,
        Error::IndeterminateValuation(_) | Error::InfiniteValuation(_) => 4,
        Error::Io(_) => 1,
        _ => 3,
    }
}

impl Cli {
    fn output(&self) -> &Output {
        match &self.command {
            Command::Classify(a) | Command::Plot(a) => &a.output,
            Command::Sweep(a) => &a.output,
            Command::Edwards(a) => &a.output,
        }
    }
}

/// Runs a parsed command and writes its output.
pub fn execute(cli: &Cli) -> Result<()> {
    let text = render(cli)?;
    match &cli.output().out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

/// The output of a command as text.
pub fn render(cli: &Cli) -> Result<String> {
    match &cli.command {
        Command::Classify(a) => classify_cmd(a),
        Command::Plot(a) => plot_cmd(a),
        Command::Sweep(a) => sweep_cmd(a),
        Command::Edwards(a) => edwards_cmd(a),
    }
}

fn pretty(v: &Value) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

/// Input valuations turned into the internal min convention.
fn min_convention(v: &SymmetricCubicValuations, conv: Convention) -> SymmetricCubicValuations {
    match conv {
        Convention::Min => v.clone(),
        Convention::Max => SymmetricCubicValuations::new(
            -&v.v12,
            -&v.v34,
            -&v.v5,
            -&v.v67,
            match &v.v8 {
                ExtRational::Finite(x) => ExtRational::Finite(-x),
                ExtRational::Infinity => ExtRational::Infinity,
            },
        ),
    }
}

struct Built {
    v: SymmetricCubicValuations,
    subdivision: Subdivision,
    curve: TropicalCurve,
    /// Curve in the requested convention.
    shown: TropicalCurve,
}

fn build(a: &CurveArgs) -> Result<Built> {
    let input: SymmetricCubicValuations = a.v.parse()?;
    let v = min_convention(&input, a.convention);
    let p = build_symmetric_cubic(&v);
    let subdivision = regular_subdivision(&p)?;
    let curve = dual_curve(&p, &subdivision)?;
    let shown = match a.convention {
        Convention::Min => curve.clone(),
        Convention::Max => curve.reflect(),
    };
    Ok(Built {
        v,
        subdivision,
        curve,
        shown,
    })
}

fn classify_cmd(a: &CurveArgs) -> Result<String> {
    let b = build(a)?;
    let by_cones = classify_by_cones(&b.v)?;
    let by_sub = classify_by_subdivision(&b.v)?;
    if !matches!(by_cones, CurveClass::Unlisted(_)) && by_cones != by_sub {
        return Err(Error::ClassMismatch {
            cones: by_cones.to_string(),
            subdivision: by_sub.to_string(),
        });
    }
    let report = classification_report(&b.v)?;
    let cycle = extract_cycle(&b.curve)?;
    let scan = attainment_scan(&build_symmetric_cubic(&b.v), &b.curve, 100, a.seed);
    let honey = honeycomb_profile(&b.v);

    if a.output.format == Some(Format::Ascii) {
        let mut out = format!("class: {}\n", report.class);
        if !report.cone.is_empty() {
            out += &format!("cone: {}\n", report.cone.join(", "));
        }
        out += &format!("subdivision: {}\n", b.subdivision);
        if cycle.present {
            let lens: Vec<String> = cycle.side_lengths.iter().map(format_rational).collect();
            out += &format!(
                "cycle: {} sides, lattice lengths {}\n",
                cycle.side_count,
                lens.join(",")
            );
        }
        out += &ascii(&b.shown, &BoundingBox::around(&b.shown, a.pad));
        return Ok(out);
    }
    if a.output.format == Some(Format::Svg) {
        return plot_cmd(a);
    }

    let mut out = json!({
        "class": report.class,
        "cone": report.cone,
        "subdivision": report.subdivision,
        "convention": match a.convention { Convention::Min => "min", Convention::Max => "max" },
        "curve": b.shown.to_json(),
        "attainment": { "seed": scan.seed, "probes": scan.edge_probes + scan.generic_probes, "violations": scan.violations.len() },
    });
    if cycle.present {
        out["cycle"] = json!({
            "sides": cycle.side_count,
            "lengths": cycle.side_lengths.iter().map(format_rational).collect::<Vec<_>>(),
        });
    }
    if honey.is_honeycomb {
        out["honeycomb"] = json!({
            "type": match honey.kind { HoneycombType::Tail => "tail", HoneycombType::SixRays => "six-rays" },
            "quasi_symmetric": honey.quasi_symmetric,
            "symmetric": honey.symmetric,
            "side_length": honey.side_length.to_string(),
            "tail_length": honey.tail_length.to_string(),
        });
    }
    pretty(&out)
}

fn plot_cmd(a: &CurveArgs) -> Result<String> {
    let b = build(a)?;
    let bbox = BoundingBox::around(&b.shown, a.pad);
    Ok(match a.output.format {
        Some(Format::Ascii) => ascii(&b.shown, &bbox),
        Some(Format::Json) => pretty(&serde_json::to_value(b.shown.to_json())?)?,
        Some(Format::Svg) | None => svg(
            &b.shown,
            Some(&b.subdivision),
            &bbox,
            &format!("v = {}", a.v),
        ),
    })
}

fn parse_fixed(s: &str) -> Result<SymmetricCubicValuations> {
    let parts: Vec<&str> = s.split(',').collect();
    let pick = match parts.len() {
        4 => [parts[0], parts[1], "0", parts[2], parts[3]],
        5 => [parts[0], parts[1], "0", parts[3], parts[4]],
        n => {
            return Err(Error::Parse(format!(
                "expected 4 or 5 comma-separated values, got {n}"
            )))
        }
    };
    pick.join(",").parse()
}

fn parse_range(s: &str) -> Result<(Rational, ExtRational)> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("range {s:?} is not of the form kmin:kmax")))?;
    Ok((parse_rational(lo)?, hi.parse()?))
}

fn bound_json(b: &Bound) -> Value {
    match b {
        Bound::Unbounded => json!({ "value": "inf", "closed": false }),
        Bound::Closed(x) => json!({ "value": format_rational(x), "closed": true }),
        Bound::Open(x) => json!({ "value": format_rational(x), "closed": false }),
    }
}

/// A value of `k` inside the interval.
fn representative(i: &SweepInterval) -> Rational {
    match (&i.lower, &i.upper) {
        (Bound::Closed(a), Bound::Closed(b)) if a == b => a.clone(),
        (lo, Bound::Unbounded) => lo_value(lo) + int(1),
        (lo, Bound::Closed(b) | Bound::Open(b)) => (lo_value(lo) + b) / int(2),
    }
}

fn lo_value(b: &Bound) -> Rational {
    match b {
        Bound::Closed(a) | Bound::Open(a) => a.clone(),
        Bound::Unbounded => int(0),
    }
}

fn sweep_cmd(a: &SweepArgs) -> Result<String> {
    let fixed = parse_fixed(&a.v)?;
    let (k_min, k_max) = parse_range(&a.sweep)?;
    let report = center_sweep(&fixed, &k_min, &k_max)?;
    match a.output.format {
        Some(Format::Ascii) => {
            let mut out = String::new();
            for i in &report.intervals {
                out += &format!("{i}\n");
            }
            Ok(out)
        }
        Some(Format::Svg) => {
            let mut panels = Vec::new();
            for i in &report.intervals {
                let k = representative(i);
                let p = build_symmetric_cubic(&fixed.with_v5(k.clone()));
                let curve = dual_curve(&p, &regular_subdivision(&p)?)?;
                panels.push((format!("{i} (k = {})", format_rational(&k)), curve));
            }
            Ok(svg_stack(&panels, a.pad))
        }
        Some(Format::Json) | None => pretty(&json!({
            "fixed": {
                "v12": format_rational(&fixed.v12),
                "v34": format_rational(&fixed.v34),
                "v67": format_rational(&fixed.v67),
                "v8": fixed.v8.to_string(),
            },
            "breakpoints": report.breakpoints.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "intervals": report.intervals.iter().map(|i| json!({
                "lower": bound_json(&i.lower),
                "upper": bound_json(&i.upper),
                "class": i.class.to_string(),
            })).collect::<Vec<_>>(),
        })),
    }
}

fn edwards_cmd(a: &EdwardsArgs) -> Result<String> {
    let r: LaurentPolynomial = a.r.parse()?;
    let s: LaurentPolynomial = a.s.parse()?;
    let c = classify_edwards_auto(&r, &s, a.order)?;
    let names = ["u12", "u34", "u5", "u67", "u8"];
    if a.output.format == Some(Format::Ascii) {
        return Ok(format!(
            "u = {}\norder = {}\nclass: {}\nshape: {}\n",
            c.valuations,
            c.order,
            c.class,
            c.shape
                .map_or("unknown".to_string(), |t| format!("({})", t.tag()))
        ));
    }
    let vals: serde_json::Map<String, Value> = names
        .iter()
        .zip(c.valuations.0)
        .map(|(n, u)| (n.to_string(), json!(u.to_string())))
        .collect();
    pretty(&json!({
        "r": r.to_string(),
        "s": s.to_string(),
        "order": c.order,
        "valuations": vals,
        "class": c.class.to_string(),
        "shape": c.shape.map(|t| t.tag().to_string()),
        "has_cycle": c.shape.map(|t| t.has_cycle()),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Result<String> {
        let cli = Cli::try_parse_from(std::iter::once("tropcubic").chain(args.iter().copied()))
            .map_err(|e| Error::Parse(e.to_string()))?;
        render(&cli)
    }

    fn class_of(args: &[&str]) -> String {
        let v: Value = serde_json::from_str(&run(args).unwrap()).unwrap();
        v["class"].as_str().unwrap().to_string()
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            class_of(&["classify", "--v", "3,2,0,1,3"]),
            "Smooth/Hexagon"
        );
        assert_eq!(class_of(&["classify", "--v", "0,0,0,0,0"]), "NonSmooth/I");
        let out: Value =
            serde_json::from_str(&run(&["classify", "--v", "3,2,0,1,inf"]).unwrap()).unwrap();
        assert_eq!(out["class"], "Smooth/Hexagon");
        assert_eq!(out["honeycomb"]["symmetric"], true);
        assert_eq!(out["attainment"]["violations"], 0);
        assert_eq!(
            class_of(&["classify", "--v", "-10,0,-15,-5,0"]),
            "NonSmooth/C"
        );
    }

    #[test]
    fn max_convention_reflects() {
        let min: Value =
            serde_json::from_str(&run(&["classify", "--v", "3,2,0,1,3"]).unwrap()).unwrap();
        let max: Value = serde_json::from_str(
            &run(&["classify", "--v", "-3,-2,0,-1,-3", "--convention", "max"]).unwrap(),
        )
        .unwrap();
        assert_eq!(min["class"], max["class"]);
        let flip = |s: &Value| format_rational(&-parse_rational(s.as_str().unwrap()).unwrap());
        assert_eq!(
            flip(&min["curve"]["vertices"][0]["x"]),
            max["curve"]["vertices"][0]["x"].as_str().unwrap()
        );
    }

    #[test]
    fn curve_json_round_trips() {
        let text = run(&["plot", "--v", "3,2,0,1,3", "--format", "json"]).unwrap();
        let parsed: crate::curve::CurveJson = serde_json::from_str(&text).unwrap();
        let curve = TropicalCurve::from_json(&parsed).unwrap();
        let p = build_symmetric_cubic(&"3,2,0,1,3".parse().unwrap());
        assert_eq!(
            curve,
            dual_curve(&p, &regular_subdivision(&p).unwrap()).unwrap()
        );
    }

    #[test]
    fn plot_is_byte_stable() {
        let a = run(&["plot", "--v", "0,14,-1,4,0"]).unwrap();
        assert_eq!(a, run(&["plot", "--v", "0,14,-1,4,0"]).unwrap());
        assert!(a.contains("<svg"));
        assert!(run(&["plot", "--v", "3,2,0,1,inf", "--format", "ascii"])
            .unwrap()
            .contains('o'));
    }

    #[test]
    fn sweep_breakpoints() {
        let out: Value = serde_json::from_str(
            &run(&["sweep", "--v", "-10,0,-5,0", "--sweep", "-20:5"]).unwrap(),
        )
        .unwrap();
        assert_eq!(out["breakpoints"], json!(["-15", "-10", "-15/2"]));
        let out: Value = serde_json::from_str(
            &run(&["sweep", "--v", "0,14,_,4,0", "--sweep", "-15:2"]).unwrap(),
        )
        .unwrap();
        assert_eq!(out["breakpoints"], json!(["-10", "-4", "0"]));
        let out: Value = serde_json::from_str(
            &run(&["sweep", "--v", "-10,0,-5,0", "--sweep", "-10:-10"]).unwrap(),
        )
        .unwrap();
        assert_eq!(out["intervals"][0]["class"], "NonSmooth/B");
        assert!(run(&[
            "sweep",
            "--v",
            "-10,0,-5,0",
            "--sweep",
            "-20:5",
            "--format",
            "svg"
        ])
        .unwrap()
        .contains("<svg"));
    }

    #[test]
    fn edwards_examples() {
        let out: Value = serde_json::from_str(
            &run(&["edwards", "--r", "1", "--s", "0", "--order", "6"]).unwrap(),
        )
        .unwrap();
        assert_eq!(out["class"], "NonSmooth/F");
        assert_eq!(out["shape"], "c");
        assert_eq!(out["valuations"]["u12"], "1");
        let err = run(&["edwards", "--r", "0", "--s", "0"]).unwrap_err();
        assert_eq!(exit_code(&err), 4);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(
            exit_code(&run(&["classify", "--v", "1,2,3"]).unwrap_err()),
            2
        );
        assert_eq!(
            exit_code(&run(&["classify", "--v", "inf,0,0,0,0"]).unwrap_err()),
            2
        );
        assert_eq!(
            exit_code(&Error::ClassMismatch {
                cones: "a".into(),
                subdivision: "b".into()
            }),
            3
        );
    }
}
