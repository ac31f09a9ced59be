//! Symbol algebras from root data, the full algebra as an oracle, and the
//! JSON round trip.

use superflag::build::{build_full, build_symbol, cross_check_symbol};
use superflag::geometry::growth_vector;
use superflag::roots::{Algebra, ParabolicId};
use superflag::GradedLieSuperalgebra;

fn main() -> superflag::Result<()> {
    let p = ParabolicId::parse(Algebra::F4, "III", "3")?;
    let s = build_symbol(&p)?;
    println!("symbol of {p}: {} with growth {}", s.superdim(), growth_vector(&s));
    s.check_jacobi().expect("symbol is a Lie superalgebra");

    let full = build_full(p.diagram)?;
    println!("full algebra {}: {}", p.diagram, full.superdim());
    for (k, d) in full.graded_dims_for(&p) {
        println!("  degree {k:>2}: {d}");
    }
    let cc = cross_check_symbol(&full, &s, &p)?;
    println!("symbol vs negative part: {}", if cc.passed() { "agree" } else { "DIFFER" });

    let json = full.to_json();
    let back = GradedLieSuperalgebra::from_json(&json)?;
    println!(
        "round trip: {} basis entries, jacobi {}",
        back.dim(),
        if back.check_jacobi().is_ok() { "ok" } else { "FAIL" }
    );
    Ok(())
}
