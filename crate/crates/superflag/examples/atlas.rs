//! Distribution invariants: growth vectors, null spans, maximal integrals
//! and the graph of adjacent cases.

use superflag::geometry::{adjacency_graph, atlas, max_integral_rows, special_cases};
use superflag::roots::Algebra;

fn main() -> superflag::Result<()> {
    for a in Algebra::ALL {
        println!("# {a}\n{}", atlas(a)?);
        for (p, r) in special_cases(a)? {
            println!("null span of {p}: {} inside {}", r.span, r.ambient);
        }
        let g = adjacency_graph(a);
        println!("{} cases, {} adjacencies\n", g.nodes.len(), g.edge_list().len());
    }
    for row in max_integral_rows()? {
        let t: Vec<String> = row.found.iter().map(|(d, ok)| format!("{d}{}", if *ok { "" } else { "?" })).collect();
        println!("{}\tg-1 {}\tintegral {}", row.case, row.minus_one, t.join(", "));
    }
    Ok(())
}
