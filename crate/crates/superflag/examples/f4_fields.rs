//! F(4) as polynomial vector fields on (6|4).

use superflag::superfields::realize::{degree_zero_comparison, euler_field, f4_fields, grading_matches};
use superflag::superfields::{closure_check, span_at_origin};

fn main() -> superflag::Result<()> {
    let (coords, fields) = f4_fields()?;
    let g = closure_check("F(4)", &fields)?;
    for (k, d) in g.graded_dims() {
        println!("  degree {k:>2}: {d}");
    }
    println!("closure {} jacobi {}", g.superdim(), g.check_jacobi().is_ok());
    println!("grading field eigenvalues match: {}", grading_matches(&euler_field(&coords), &fields));
    let xs: Vec<_> = fields.iter().map(|f| f.value.clone()).collect();
    println!("values at the origin span {}", span_at_origin(&xs));
    let d = degree_zero_comparison()?;
    for (name, r) in [("degree 0 fields", &d.fields), ("printed matrices", &d.matrix)] {
        println!("{name}: {} closed {} derived {}", r.dim, r.closed, r.derived);
    }
    println!("same span {}", d.same_span);
    Ok(())
}
