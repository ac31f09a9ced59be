//! G(3) as contact vector fields on (1|7) and the cubic form in der_0.

use superflag::superfields::realize::{cubic_annihilator, g3_contact_functions};
use superflag::superfields::{function_closure, ContactForm};

fn main() -> superflag::Result<()> {
    let form = ContactForm::odd_seven();
    let funcs = g3_contact_functions(&form)?;
    let c = function_closure(&form, "G(3)", &funcs)?;
    for (k, d) in c.algebra.graded_dims() {
        println!("  degree {k:>2}: {d}");
    }
    println!("closure {}", c.algebra.superdim());
    println!("homomorphism {} contact {} jacobi {}", c.homomorphism, c.contact, c.algebra.check_jacobi().is_ok());
    let f = &funcs[funcs.len() - 1];
    println!("X_f for f = {}:\n  {}", f.value.display(&form.coords), form.contact_field(&f.value).display(&form.coords));

    let (r, _) = cubic_annihilator(&form)?;
    println!("der_0 {}  annihilator of the cubic {}  derived {}", r.der0, r.annihilator, r.derived);
    Ok(())
}
