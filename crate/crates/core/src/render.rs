//! SVG and ASCII drawings of curves and subdivisions.

use std::fmt::Write as _;

use num_traits::ToPrimitive;

use crate::curve::TropicalCurve;
use crate::numeric::{convex_hull, int, lattice_points_in, LatticePoint, Rational, RationalPoint};
use crate::subdivision::Subdivision;
use crate::tropical::SupportLabel;

/// Axis-aligned drawing window in curve coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundingBox {
    pub min: RationalPoint,
    pub max: RationalPoint,
}

impl BoundingBox {
    /// Smallest box around the vertices, padded on every side.
    pub fn around(curve: &TropicalCurve, pad: i64) -> BoundingBox {
        let pad = int(pad);
        let mut it = curve.vertices.iter().map(|v| &v.point);
        let first = it
            .next()
            .cloned()
            .unwrap_or_else(|| RationalPoint::from_ints(0, 0));
        let (mut lo, mut hi) = (first.clone(), first);
        for p in it {
            lo = RationalPoint::new(lo.x.clone().min(p.x.clone()), lo.y.clone().min(p.y.clone()));
            hi = RationalPoint::new(hi.x.clone().max(p.x.clone()), hi.y.clone().max(p.y.clone()));
        }
        BoundingBox {
            min: RationalPoint::new(lo.x - &pad, lo.y - &pad),
            max: RationalPoint::new(hi.x + &pad, hi.y + &pad),
        }
    }

    pub fn contains(&self, p: &RationalPoint) -> bool {
        self.min.x <= p.x && p.x <= self.max.x && self.min.y <= p.y && p.y <= self.max.y
    }

    /// Where the ray from `base` along `dir` leaves the box.
    pub fn exit_point(&self, base: &RationalPoint, dir: LatticePoint) -> RationalPoint {
        let mut best: Option<Rational> = None;
        let mut consider = |t: Rational| {
            if best.as_ref().is_none_or(|b| t < *b) {
                best = Some(t);
            }
        };
        if dir.x > 0 {
            consider((&self.max.x - &base.x) / int(dir.x));
        } else if dir.x < 0 {
            consider((&self.min.x - &base.x) / int(dir.x));
        }
        if dir.y > 0 {
            consider((&self.max.y - &base.y) / int(dir.y));
        } else if dir.y < 0 {
            consider((&self.min.y - &base.y) / int(dir.y));
        }
        let t = best.unwrap_or_else(|| int(0));
        RationalPoint::new(&base.x + &t * int(dir.x), &base.y + &t * int(dir.y))
    }
}

/// Segments to draw: bounded edges and clipped rays, with weights.
fn segments(curve: &TropicalCurve, bbox: &BoundingBox) -> Vec<(RationalPoint, RationalPoint, u64)> {
    let mut out: Vec<(RationalPoint, RationalPoint, u64)> = curve
        .edges
        .iter()
        .map(|e| {
            (
                curve.vertices[e.ends.0].point.clone(),
                curve.vertices[e.ends.1].point.clone(),
                e.weight,
            )
        })
        .collect();
    for r in &curve.rays {
        let base = curve.vertices[r.base].point.clone();
        let end = bbox.exit_point(&base, r.direction);
        out.push((base, end, r.weight));
    }
    out
}

fn f(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(0.0)
}

fn num(x: f64) -> String {
    let s = format!("{x:.2}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

const CURVE_SCALE: f64 = 24.0;
const CELL_SCALE: f64 = 60.0;
const MARGIN: f64 = 16.0;

/// An SVG document with the curve on the left and, if given, the dual
/// subdivision on the right. Output is byte-stable for equal inputs.
pub fn svg(
    curve: &TropicalCurve,
    subdivision: Option<&Subdivision>,
    bbox: &BoundingBox,
    title: &str,
) -> String {
    let mut body = String::new();
    let (w, h) = write_curve_group(&mut body, curve, bbox, MARGIN, MARGIN);
    let mut width = w + 2.0 * MARGIN;
    let mut height = h + 2.0 * MARGIN;
    if let Some(s) = subdivision {
        let (sw, sh) = write_subdivision_group(&mut body, s, width, MARGIN);
        width += sw + MARGIN;
        height = height.max(sh + 2.0 * MARGIN);
    }
    document(width, height, title, &body)
}

/// Several curves stacked vertically, each with a caption.
pub fn svg_stack(panels: &[(String, TropicalCurve)], pad: i64) -> String {
    let mut body = String::new();
    let mut y = MARGIN;
    let mut width: f64 = 0.0;
    for (caption, curve) in panels {
        let bbox = BoundingBox::around(curve, pad);
        let _ = writeln!(
            body,
            r#"<text x="{}" y="{}" font-size="12">{}</text>"#,
            num(MARGIN),
            num(y + 12.0),
            escape(caption)
        );
        y += 18.0;
        let (w, h) = write_curve_group(&mut body, curve, &bbox, MARGIN, y);
        width = width.max(w);
        y += h + MARGIN;
    }
    document(width + 2.0 * MARGIN, y, "sweep", &body)
}

fn document(width: f64, height: f64, title: &str, body: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = num(width),
        h = num(height)
    );
    let _ = writeln!(out, "<title>{}</title>", escape(title));
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    out.push_str(body);
    out.push_str("</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

fn write_curve_group(
    out: &mut String,
    curve: &TropicalCurve,
    bbox: &BoundingBox,
    x0: f64,
    y0: f64,
) -> (f64, f64) {
    let w = (f(&bbox.max.x) - f(&bbox.min.x)) * CURVE_SCALE;
    let h = (f(&bbox.max.y) - f(&bbox.min.y)) * CURVE_SCALE;
    let px = |p: &RationalPoint| {
        (
            x0 + (f(&p.x) - f(&bbox.min.x)) * CURVE_SCALE,
            y0 + (f(&bbox.max.y) - f(&p.y)) * CURVE_SCALE,
        )
    };
    let _ = writeln!(out, r#"<g class="curve">"#);
    let _ = writeln!(
        out,
        r##"<rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="#ccc"/>"##,
        num(x0),
        num(y0),
        num(w),
        num(h)
    );
    // integer grid
    let (gx0, gx1) = (f(&bbox.min.x).ceil() as i64, f(&bbox.max.x).floor() as i64);
    let (gy0, gy1) = (f(&bbox.min.y).ceil() as i64, f(&bbox.max.y).floor() as i64);
    for gx in gx0..=gx1 {
        let (x, _) = px(&RationalPoint::from_ints(gx, 0));
        let stroke = if gx == 0 { "#999" } else { "#eee" };
        let _ = writeln!(
            out,
            r#"<line x1="{x}" y1="{}" x2="{x}" y2="{}" stroke="{stroke}"/>"#,
            num(y0),
            num(y0 + h),
            x = num(x)
        );
    }
    for gy in gy0..=gy1 {
        let (_, y) = px(&RationalPoint::from_ints(0, gy));
        let stroke = if gy == 0 { "#999" } else { "#eee" };
        let _ = writeln!(
            out,
            r#"<line x1="{}" y1="{y}" x2="{}" y2="{y}" stroke="{stroke}"/>"#,
            num(x0),
            num(x0 + w),
            y = num(y)
        );
    }
    for (a, b, weight) in segments(curve, bbox) {
        let (ax, ay) = px(&a);
        let (bx, by) = px(&b);
        let _ = writeln!(
            out,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="{}"/>"#,
            num(ax),
            num(ay),
            num(bx),
            num(by),
            num(1.5 * weight as f64)
        );
        if weight > 1 {
            let _ = writeln!(
                out,
                r#"<text x="{}" y="{}" font-size="10" fill="blue">{weight}</text>"#,
                num((ax + bx) / 2.0 + 3.0),
                num((ay + by) / 2.0 - 3.0)
            );
        }
    }
    for v in &curve.vertices {
        let (x, y) = px(&v.point);
        let _ = writeln!(
            out,
            r#"<circle cx="{}" cy="{}" r="3" fill="red"/>"#,
            num(x),
            num(y)
        );
    }
    let _ = writeln!(out, "</g>");
    (w, h)
}

fn write_subdivision_group(out: &mut String, s: &Subdivision, x0: f64, y0: f64) -> (f64, f64) {
    let pts: Vec<LatticePoint> = s
        .cells()
        .iter()
        .flat_map(|c| c.points.iter().copied())
        .collect();
    let hull = convex_hull(&pts);
    let max_x = pts.iter().map(|p| p.x).max().unwrap_or(0);
    let max_y = pts.iter().map(|p| p.y).max().unwrap_or(0);
    let min_x = pts.iter().map(|p| p.x).min().unwrap_or(0);
    let min_y = pts.iter().map(|p| p.y).min().unwrap_or(0);
    let px = |p: LatticePoint| {
        (
            x0 + MARGIN + (p.x - min_x) as f64 * CELL_SCALE,
            y0 + MARGIN + (max_y - p.y) as f64 * CELL_SCALE,
        )
    };
    let _ = writeln!(out, r#"<g class="subdivision">"#);
    for cell in s.cells() {
        let path: Vec<String> = cell
            .vertices
            .iter()
            .map(|&p| {
                let (x, y) = px(p);
                format!("{},{}", num(x), num(y))
            })
            .collect();
        let _ = writeln!(
            out,
            r##"<polygon points="{}" fill="#f4f4ff" stroke="black" stroke-width="1.5"/>"##,
            path.join(" ")
        );
    }
    let used: std::collections::BTreeSet<LatticePoint> = pts.iter().copied().collect();
    for p in lattice_points_in(&hull) {
        let (x, y) = px(p);
        let fill = if used.contains(&p) { "black" } else { "white" };
        let _ = writeln!(
            out,
            r#"<circle cx="{}" cy="{}" r="4" fill="{fill}" stroke="black"/>"#,
            num(x),
            num(y)
        );
        if let Some(l) = SupportLabel::from_point(p) {
            let _ = writeln!(
                out,
                r#"<text x="{}" y="{}" font-size="11">{l}</text>"#,
                num(x + 6.0),
                num(y - 6.0)
            );
        }
    }
    let _ = writeln!(out, "</g>");
    (
        (max_x - min_x) as f64 * CELL_SCALE + 2.0 * MARGIN,
        (max_y - min_y) as f64 * CELL_SCALE + 2.0 * MARGIN,
    )
}

/// A character plot of the curve: two columns and one row per half unit.
pub fn ascii(curve: &TropicalCurve, bbox: &BoundingBox) -> String {
    let (x0, x1) = (f(&bbox.min.x), f(&bbox.max.x));
    let (y0, y1) = (f(&bbox.min.y), f(&bbox.max.y));
    let cols = ((x1 - x0) * 4.0).round() as usize + 1;
    let rows = ((y1 - y0) * 2.0).round() as usize + 1;
    let mut grid = vec![vec![' '; cols]; rows];
    let cell_of = |x: f64, y: f64| {
        let c = ((x - x0) * 4.0).round();
        let r = ((y1 - y) * 2.0).round();
        (c >= 0.0 && r >= 0.0 && (c as usize) < cols && (r as usize) < rows)
            .then_some((r as usize, c as usize))
    };
    for (a, b, _) in segments(curve, bbox) {
        let (ax, ay, bx, by) = (f(&a.x), f(&a.y), f(&b.x), f(&b.y));
        let glyph = match ((bx - ax).abs() < 1e-9, (by - ay).abs() < 1e-9) {
            (true, _) => '|',
            (_, true) => '-',
            _ if (bx - ax) * (by - ay) > 0.0 => '/',
            _ => '\\',
        };
        let steps = (((bx - ax).abs() * 4.0).max((by - ay).abs() * 2.0) * 2.0)
            .ceil()
            .max(1.0) as usize;
        for i in 0..=steps {
            let t = i as f64 / steps as f64;
            if let Some((r, c)) = cell_of(ax + t * (bx - ax), ay + t * (by - ay)) {
                grid[r][c] = match grid[r][c] {
                    ' ' => glyph,
                    g if g == glyph => g,
                    _ => '+',
                };
            }
        }
    }
    for v in &curve.vertices {
        if let Some((r, c)) = cell_of(f(&v.point.x), f(&v.point.y)) {
            grid[r][c] = 'o';
        }
    }
    let mut out = String::new();
    for row in grid {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
