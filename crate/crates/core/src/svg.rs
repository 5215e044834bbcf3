//! SVG rendering of a mirror scenario and its solutions.

use std::fmt::Write as _;

use crate::mirror::{Classification, MirrorScenario, Point, ReflectionSolution};
use crate::rational::to_f64;

const SIZE: f64 = 600.0;
const MARGIN: f64 = 40.0;

struct Frame {
    min_x: f64,
    max_y: f64,
    scale: f64,
}

impl Frame {
    fn fit(points: &[Point]) -> Frame {
        let (mut min_x, mut max_x) = (f64::INFINITY, f64::NEG_INFINITY);
        let (mut min_y, mut max_y) = (f64::INFINITY, f64::NEG_INFINITY);
        for p in points {
            min_x = min_x.min(p.x);
            max_x = max_x.max(p.x);
            min_y = min_y.min(p.y);
            max_y = max_y.max(p.y);
        }
        let span = (max_x - min_x).max(max_y - min_y).max(1e-9);
        let scale = (SIZE - 2.0 * MARGIN) / span;
        // Center the shorter axis.
        let pad_x = (span - (max_x - min_x)) / 2.0;
        let pad_y = (span - (max_y - min_y)) / 2.0;
        Frame {
            min_x: min_x - pad_x,
            max_y: max_y + pad_y,
            scale,
        }
    }

    fn map(&self, p: Point) -> (f64, f64) {
        (
            MARGIN + (p.x - self.min_x) * self.scale,
            MARGIN + (self.max_y - p.y) * self.scale,
        )
    }
}

/// A standalone SVG 1.1 document: the circle, `A`, `B`, and for every
/// solution the path `A → I → B` plus the radius through `I`.
///
/// Reflections are drawn solid red, tangent-bisector solutions dashed blue.
/// Output is a pure function of the input.
pub fn render_svg(scenario: &MirrorScenario, solutions: &[ReflectionSolution]) -> String {
    let center = scenario.center.to_f64();
    let radius = to_f64(&scenario.radius);
    let a = scenario.a.to_f64();
    let b = scenario.b.to_f64();

    let mut extent = vec![
        Point::new(center.x - radius, center.y - radius),
        Point::new(center.x + radius, center.y + radius),
        a,
        b,
    ];
    extent.extend(solutions.iter().map(|s| s.point));
    let frame = Frame::fit(&extent);

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, r#"  <rect width="100%" height="100%" fill="white"/>"#);

    let (cx, cy) = frame.map(center);
    let _ = writeln!(
        out,
        r#"  <circle cx="{cx:.3}" cy="{cy:.3}" r="{:.3}" fill="none" stroke="black" stroke-width="1.5"/>"#,
        radius * frame.scale
    );
    let _ = writeln!(out, r#"  <circle cx="{cx:.3}" cy="{cy:.3}" r="2" fill="black"/>"#);
    let _ = writeln!(
        out,
        r#"  <text x="{:.3}" y="{:.3}" font-family="serif" font-size="14">O</text>"#,
        cx + 5.0,
        cy + 15.0
    );

    for (k, sol) in solutions.iter().enumerate() {
        let (ix, iy) = frame.map(sol.point);
        let (ax, ay) = frame.map(a);
        let (bx, by) = frame.map(b);
        let (stroke, dash) = match sol.classification {
            Classification::TrueReflection => ("#c0392b", ""),
            Classification::TangentBisector => ("#2471a3", r#" stroke-dasharray="6 4""#),
        };
        let _ = writeln!(
            out,
            r#"  <polyline class="{:?}" points="{ax:.3},{ay:.3} {ix:.3},{iy:.3} {bx:.3},{by:.3}" fill="none" stroke="{stroke}" stroke-width="1.2"{dash}/>"#,
            sol.classification
        );
        let _ = writeln!(
            out,
            r#"  <line x1="{cx:.3}" y1="{cy:.3}" x2="{ix:.3}" y2="{iy:.3}" stroke="gray" stroke-width="0.8" stroke-dasharray="2 3"/>"#
        );
        let _ = writeln!(out, r#"  <circle cx="{ix:.3}" cy="{iy:.3}" r="3" fill="{stroke}"/>"#);
        let _ = writeln!(
            out,
            r#"  <text x="{:.3}" y="{:.3}" font-family="serif" font-size="14">I{}</text>"#,
            ix + 6.0,
            iy - 6.0,
            k + 1
        );
    }

    for (label, p) in [("A", a), ("B", b)] {
        let (x, y) = frame.map(p);
        let _ = writeln!(out, r#"  <circle cx="{x:.3}" cy="{y:.3}" r="3.5" fill="black"/>"#);
        let _ = writeln!(
            out,
            r#"  <text x="{:.3}" y="{:.3}" font-family="serif" font-size="16">{label}</text>"#,
            x + 6.0,
            y - 6.0
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mirror::{solve_mirror, RatPoint};
    use crate::numerics::Tolerance;
    use crate::rational::{int, q};

    fn scenario() -> MirrorScenario {
        MirrorScenario::unit(
            RatPoint::new(q(1, 2), int(0)),
            RatPoint::new(int(0), q(1, 2)),
        )
        .unwrap()
    }

    #[test]
    fn empty_solutions_draw_circle_and_points() {
        let svg = render_svg(&scenario(), &[]);
        assert!(svg.starts_with("<?xml"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<polyline").count(), 0);
        assert!(svg.contains(">A</text>") && svg.contains(">B</text>"));
    }

    #[test]
    fn one_polyline_per_solution_and_deterministic() {
        let sc = scenario();
        let sols = solve_mirror(&sc, &Tolerance::default()).unwrap();
        let svg = render_svg(&sc, &sols);
        assert_eq!(svg.matches("<polyline").count(), 2);
        assert_eq!(svg.matches("TrueReflection").count(), 2);
        assert_eq!(svg, render_svg(&sc, &solve_mirror(&sc, &Tolerance::default()).unwrap()));
    }
}
