//! The mirror scenario whose quartic is a multiple of X⁴ − rX − 1, and the
//! reflection points it produces.
//!
//!     cargo run --example stewart_embedding -- 1

use stewart_alhazen::{parse_rational, solve_mirror, stewart_scenario, Tolerance};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "1".into());
    let r = parse_rational(&arg)?;
    let emb = stewart_scenario(&r)?;
    println!("A = ({}, {})", emb.scenario.a.x, emb.scenario.a.y);
    println!("B = ({}, {})", emb.scenario.b.x, emb.scenario.b.y);
    println!("Q(z) = {}", emb.quartic.to_polynomial().display_in("z"));
    println!("     = ({}) · (z^4 - ({r})z - 1)", emb.lambda);
    for s in solve_mirror(&emb.scenario, &Tolerance::default())? {
        println!(
            "z = {:+.12}  I = ({:+.6}, {:+.6})  {:?}",
            s.z.unwrap_or(f64::INFINITY),
            s.point.x,
            s.point.y,
            s.classification
        );
    }
    Ok(())
}
