//! Constructibility verdicts for every integer r in a range, and the few
//! integers where the roots are constructible.
//!
//!     cargo run --example constructibility_survey -- 500

use stewart_alhazen::rational::int;
use stewart_alhazen::{constructibility_verdict, galois_class, Constructibility};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let limit: i64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(200);
    let mut constructible = Vec::new();
    for r in 1..=limit {
        if constructibility_verdict(&int(r))? == Constructibility::Constructible {
            constructible.push((r, galois_class(&int(r))?.group));
        }
    }
    println!("1 <= r <= {limit}: {} constructible", constructible.len());
    for (r, group) in constructible {
        println!("  r = {r:<6} {group:?}");
    }
    Ok(())
}
