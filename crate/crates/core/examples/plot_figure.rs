//! Writes an SVG figure of a mirror scenario and its solutions.
//!
//!     cargo run --example plot_figure -- figure.svg

use stewart_alhazen::rational::q;
use stewart_alhazen::svg::render_svg;
use stewart_alhazen::{solve_mirror, MirrorScenario, RatPoint, Tolerance};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args().nth(1).unwrap_or_else(|| "mirror.svg".into());
    let scenario = MirrorScenario::new(
        RatPoint::new(q(1, 1), q(-1, 2)),
        q(3, 1),
        RatPoint::new(q(5, 2), q(1, 1)),
        RatPoint::new(q(-1, 1), q(-3, 2)),
    )?;
    let solutions = solve_mirror(&scenario, &Tolerance::default())?;
    std::fs::write(&path, render_svg(&scenario, &solutions))?;
    println!("{} solutions drawn to {path}", solutions.len());
    Ok(())
}
