//! Root systems of every Dynkin diagram of G(3) and F(4).
//!
//! cargo run --example roots [g3|f4]

use superflag::roots::{positive_roots, render_root_table, Algebra};

fn main() -> superflag::Result<()> {
    let which: Vec<Algebra> = match std::env::args().nth(1) {
        Some(a) => vec![a.parse()?],
        None => Algebra::ALL.to_vec(),
    };
    for a in which {
        println!("{a}: {} even + {} odd", a.superdim().even, a.superdim().odd);
        for d in a.diagrams() {
            let pos = positive_roots(d);
            let odd = pos.iter().filter(|r| r.parity.is_odd()).count();
            println!("\n{d}: {} positive roots, {odd} odd", pos.len());
            print!("{}", render_root_table(d));
        }
    }
    Ok(())
}
