//! Tanaka prolongation of a few symbols, with and without the structure
//! reduction of the dark cases.

use superflag::cases::{run_case, CaseRequest, ReductionMode};
use superflag::prolong::prolong;
use superflag::build::build_symbol;
use superflag::roots::{Algebra, ParabolicId};

fn main() -> superflag::Result<()> {
    // the super Hilbert-Cartan symbol, computed by hand
    let p = ParabolicId::parse(Algebra::G3, "IV", "2")?;
    let (pr, status) = prolong(&*build_symbol(&p)?, None, 8)?;
    println!("{p}: {status}, levels {:?}", pr.level_dims().iter().map(|d| d.to_string()).collect::<Vec<_>>());
    let g = pr.assemble();
    println!("  total {}, transitive {}", g.superdim(), pr.is_transitive());

    // dark case: der_0 is gl(6|4), larger than the degree 0 part
    for reduce in [ReductionMode::None, ReductionMode::Auto] {
        let mut r = CaseRequest::new(ParabolicId::parse(Algebra::F4, "I", "4")?);
        r.reduce = reduce;
        println!("{}", run_case(&r)?.text());
    }
    Ok(())
}
