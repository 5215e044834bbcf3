//! Factorization and constructibility of X⁴ − rX − 1 for r given on the
//! command line (default 1).
//!
//!     cargo run --example stewart_analysis -- 7/2

use stewart_alhazen::{analyze, parse_rational, Tolerance};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "1".into());
    let r = parse_rational(&arg)?;
    let report = analyze(&r, &Tolerance::default())?;

    println!("S(X)  = {}", report.polynomial);
    println!("R(Y)  = {}", report.companion_cubic);
    println!("a²    = {:.12}", report.a_squared.approx);
    println!("a     = {:.12}", report.a.approx);
    println!("b, b̄  = {:.12}, {:.12}", report.b.approx, report.b_bar.approx);
    for x in &report.real_roots {
        match &x.exact {
            Some(q) => println!("root    {q}"),
            None => println!("root    {:.15} (± {:.1e})", x.approx, x.error_bound),
        }
    }
    println!(
        "complex {:.12} ± {:.12}i",
        report.complex_pair.re.approx, report.complex_pair.im.approx
    );
    println!("reducible: {}", report.reducible);
    println!("verdict:   {:?}", report.constructibility);
    println!("group:     {:?}", report.galois_class.group);
    Ok(())
}
