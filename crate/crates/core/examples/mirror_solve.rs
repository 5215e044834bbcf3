//! Reflection points on the unit circle for A and B given as `x,y`.
//!
//!     cargo run --example mirror_solve -- 1/2,0 0,1/2

use stewart_alhazen::rational::parse_rational_or_decimal;
use stewart_alhazen::{alhazen_quartic, solve_mirror, MirrorScenario, RatPoint, Tolerance};

fn point(text: &str) -> Result<RatPoint, Box<dyn std::error::Error>> {
    let (x, y) = text.split_once(',').ok_or("expected x,y")?;
    Ok(RatPoint::new(parse_rational_or_decimal(x)?, parse_rational_or_decimal(y)?))
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let a = point(args.first().map_or("1/2,0", String::as_str))?;
    let b = point(args.get(1).map_or("0,1/2", String::as_str))?;
    let scenario = MirrorScenario::unit(a.clone(), b.clone())?;

    let quartic = alhazen_quartic(&a, &b)?;
    println!("Q(z) = {}", quartic.to_polynomial().display_in("z"));
    for s in solve_mirror(&scenario, &Tolerance::default())? {
        let z = s.z.map_or("∞".to_string(), |z| format!("{z:.12}"));
        println!(
            "I = ({:+.12}, {:+.12})  z = {z}  {:?}  |H| = {:.1e}",
            s.point.x, s.point.y, s.classification, s.residual_h
        );
    }
    Ok(())
}
