//! Primitive Pythagorean triples from (a, b) and an exhaustive search for
//! x⁴ + 4y⁴ = z².
//!
//!     cargo run --release --example diophantine_search -- 2000

use stewart_alhazen::diophantine::{diophante_triple, search_biquadratic};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let bound: u64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(500);

    println!("primitive triples with a <= 6:");
    for a in 2..=6u64 {
        for b in 1..a {
            if let Ok(t) = diophante_triple(a, b) {
                println!("  a={a} b={b}: ({}, {}, {})", t.x, t.y, t.z);
            }
        }
    }

    let search = search_biquadratic(bound)?;
    println!(
        "x^4 + 4y^4 = z^2 with x, y <= {bound}: {} pairs, {} solutions",
        search.checked_pairs,
        search.solutions.len()
    );
    Ok(())
}
