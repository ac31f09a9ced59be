//! Invariants of the distribution carried by a symbol: growth vectors, spans
//! of odd null directions, integral subspaces and the case graphs.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::build::{build_symbol, superdim_of};
use crate::error::Result;
use crate::linalg::{axpy, SparseEchelon};
use crate::ratfunc::Poly;
use crate::roots::{identification_classes, Algebra, ParabolicId};
use crate::scalar::Scalar;
use crate::superalg::{unit, GradedLieSuperalgebra, Parity, SuperDim, Vector};

/// Super-dimensions of `g_{-1}, g_{-2}, ...`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthVector(pub Vec<SuperDim>);

impl GrowthVector {
    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> SuperDim {
        self.0.iter().copied().sum()
    }
}

impl fmt::Display for GrowthVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| format!("{}|{}", d.even, d.odd)).collect();
        write!(f, "({})", parts.join(", "))
    }
}

pub fn growth_vector(m: &GradedLieSuperalgebra) -> GrowthVector {
    let dims = m.graded_dims();
    let low = dims.keys().next().copied().unwrap_or(0).min(0);
    GrowthVector((low..0).rev().map(|d| dims.get(&d).copied().unwrap_or(SuperDim::ZERO)).collect())
}

/// One atlas line: tag, dim M, depth, growth vector, tab separated.
pub fn atlas_row(p: &ParabolicId, m: &GradedLieSuperalgebra) -> String {
    let g = growth_vector(m);
    format!("{}\t{}\t{}\t{}", p.tag(), g.total(), g.depth(), g)
}

/// Atlas over one representative per identification class.
pub fn atlas(a: Algebra) -> Result<String> {
    let mut out = String::new();
    for class in identification_classes(a) {
        let s = build_symbol(&class[0])?;
        out += &atlas_row(&class[0], &s);
        out.push('\n');
    }
    Ok(out)
}

/// Span of the odd null directions of `g_{-1}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NullSpanReport {
    /// even part of `g_{-1}` together with the odd null span
    pub span: SuperDim,
    pub ambient: SuperDim,
    pub full: bool,
    /// the lower and upper bounds agree
    pub exact: bool,
    #[serde(skip)]
    pub witnesses: Vec<Vector>,
}

impl NullSpanReport {
    pub fn null_dim(&self) -> usize {
        self.span.odd
    }
}

fn square(m: &GradedLieSuperalgebra, v: &Vector) -> Vector {
    m.bracket(v, v).expect("vector in range")
}

/// All rational `x` with `a + x b + x^2 c = 0` componentwise, or `None` when
/// every `x` works.
fn quadratic_roots(a: &Vector, b: &Vector, c: &Vector) -> Option<Vec<Scalar>> {
    let keys: BTreeSet<usize> = a.keys().chain(b.keys()).chain(c.keys()).copied().collect();
    let mut g: Option<Poly> = None;
    for k in keys {
        let get = |v: &Vector| v.get(&k).cloned().unwrap_or_default();
        let p = Poly::from_coeffs(vec![get(a), get(b), get(c)]);
        if p.is_zero() {
            continue;
        }
        g = Some(match g {
            None => p,
            Some(q) => q.gcd(&p),
        });
    }
    g.map(|p| if p.degree() == Some(0) { Vec::new() } else { p.rational_roots() })
}

/// Odd null vectors of the form `e_c + x e_a (+ e_b)` over basis elements of
/// `g_{-1}`, with `x` solved exactly.
pub fn null_witnesses(m: &GradedLieSuperalgebra) -> Vec<Vector> {
    let odd: Vec<usize> =
        m.indices_of_degree(-1).into_iter().filter(|&i| m.parities()[i].is_odd()).collect();
    let mut out = Vec::new();
    let mut push = |v: Vector| {
        if !out.contains(&v) {
            out.push(v);
        }
    };
    for &c in &odd {
        if square(m, &unit(c)).is_empty() {
            push(unit(c));
        }
    }
    for &c in &odd {
        for &a in &odd {
            if a == c {
                continue;
            }
            for b in std::iter::once(None).chain(odd.iter().copied().map(Some)) {
                if b == Some(a) || b == Some(c) {
                    continue;
                }
                let mut base = unit(c);
                if let Some(b) = b {
                    base.insert(b, Scalar::one());
                }
                let ea = unit(a);
                let sa = square(m, &base);
                let sb = scaled(&m.bracket(&base, &ea).unwrap(), 2);
                let sc = square(m, &ea);
                if let Some(roots) = quadratic_roots(&sa, &sb, &sc) {
                    for x in roots.into_iter().filter(|x| !x.is_zero()) {
                        let mut v = base.clone();
                        v.insert(a, x);
                        push(v);
                    }
                }
            }
        }
    }
    out
}

fn scaled(v: &Vector, k: i64) -> Vector {
    crate::superalg::scaled(v, &Scalar::int(k))
}

/// Odd basis elements of `g_{-1}` whose square has a component reached by
/// no other pair. Every null vector has zero coefficient on them.
pub fn isolated_squares(m: &GradedLieSuperalgebra) -> Vec<usize> {
    let odd: Vec<usize> =
        m.indices_of_degree(-1).into_iter().filter(|&i| m.parities()[i].is_odd()).collect();
    odd.iter()
        .copied()
        .filter(|&c| {
            let sq = m.bracket_basis(c, c);
            sq.keys().any(|k| {
                odd.iter().all(|&a| {
                    odd.iter().filter(|&&b| b >= a).all(|&b| (a, b) == (c, c) || !m.bracket_basis(a, b).contains_key(k))
                })
            })
        })
        .collect()
}

pub fn null_span(m: &GradedLieSuperalgebra) -> NullSpanReport {
    let g1 = m.indices_of_degree(-1);
    let ambient = superdim_of(m.parities(), &g1);
    let witnesses = null_witnesses(m);
    let mut e = SparseEchelon::new(m.dim());
    let mut basis = Vec::new();
    for w in &witnesses {
        if e.push(w.clone()) {
            basis.push(w.clone());
        }
    }
    let upper = ambient.odd - isolated_squares(m).len();
    NullSpanReport {
        span: SuperDim::new(ambient.even, e.rank()),
        ambient,
        full: e.rank() == ambient.odd,
        exact: e.rank() == upper,
        witnesses: basis,
    }
}

/// Cases of `a` whose null span is not all of `(g_{-1})_1`.
pub fn special_cases(a: Algebra) -> Result<Vec<(ParabolicId, NullSpanReport)>> {
    let mut out = Vec::new();
    for class in identification_classes(a) {
        let r = null_span(&*build_symbol(&class[0])?);
        if !r.full {
            out.push((class[0].clone(), r));
        }
    }
    Ok(out)
}

/// Null span verdicts for every case, with the special cases required to
/// match `expected` exactly (tag, span) and all bounds to be tight.
pub fn special_cases_check(a: Algebra, expected: &[(&str, SuperDim)]) -> Result<bool> {
    let mut ok = true;
    let mut specials = Vec::new();
    for class in identification_classes(a) {
        let r = null_span(&*build_symbol(&class[0])?);
        ok &= r.exact;
        if !r.full {
            specials.push((class[0].tag(), r.span));
        }
    }
    let want: Vec<(String, SuperDim)> = expected.iter().map(|(t, d)| (t.to_string(), *d)).collect();
    Ok(ok && specials == want)
}

/// Whether the vectors span a graded-abelian subspace of `g_{-1}` of the
/// given super-dimension.
pub fn verify_integral(m: &GradedLieSuperalgebra, basis: &[Vector], target: SuperDim) -> bool {
    let mut d = SuperDim::ZERO;
    let mut e = SparseEchelon::new(m.dim());
    for v in basis {
        let mut par = None;
        for &k in v.keys() {
            if m.basis()[k].degree != -1 || par.is_some_and(|p| p != m.parities()[k]) {
                return false;
            }
            par = Some(m.parities()[k]);
        }
        let Some(p) = par else { return false };
        if !e.push(v.clone()) {
            return false;
        }
        d.count(p);
    }
    d == target && basis.iter().all(|x| basis.iter().all(|y| m.bracket(x, y).is_ok_and(|b| b.is_empty())))
}

/// Bounded search for a graded-abelian `V` in `g_{-1}` of dimension
/// `target`. Candidates are the even basis elements and the odd null
/// witnesses; `None` does not prove that no such `V` exists.
pub fn integral_witness(m: &GradedLieSuperalgebra, target: SuperDim) -> Option<Vec<Vector>> {
    let even: Vec<Vector> = m
        .indices_of_degree(-1)
        .into_iter()
        .filter(|&i| m.parities()[i] == Parity::Even)
        .map(unit)
        .collect();
    let odd = null_witnesses(m);
    let mut pool: Vec<(Parity, Vector)> = even.into_iter().map(|v| (Parity::Even, v)).collect();
    pool.extend(odd.into_iter().map(|v| (Parity::Odd, v)));
    let mut chosen = Vec::new();
    search(m, &pool, 0, target, &mut chosen).then(|| chosen.into_iter().map(|i| pool[i].1.clone()).collect())
}

/// (algebra, diagram, crossing, targets as (even, odd))
pub type IntegralTargets = (Algebra, &'static str, &'static str, &'static [(usize, usize)]);

/// Maximal integral dimensions listed for the maximal parabolics.
pub const MAX_INTEGRALS: &[IntegralTargets] = &[
    (Algebra::G3, "I", "1", &[(0, 3)]),
    (Algebra::G3, "I", "2", &[(1, 1), (0, 2)]),
    (Algebra::G3, "I", "3", &[(2, 1)]),
    (Algebra::G3, "II", "1", &[(1, 1)]),
    (Algebra::G3, "III", "1", &[(2, 2)]),
    (Algebra::G3, "IV", "2", &[(1, 2)]),
    (Algebra::F4, "I", "1", &[(0, 4)]),
    (Algebra::F4, "I", "2", &[(1, 1), (0, 3)]),
    (Algebra::F4, "I", "3", &[(3, 2)]),
    (Algebra::F4, "I", "4", &[(6, 4)]),
    (Algebra::F4, "II", "1", &[(1, 3), (2, 2)]),
    (Algebra::F4, "III", "3", &[(3, 2)]),
    (Algebra::F4, "IV", "3", &[(2, 2)]),
    (Algebra::F4, "V", "2", &[(0, 4)]),
    (Algebra::F4, "VI", "2", &[(0, 3)]),
];

#[derive(Clone, Debug)]
pub struct IntegralRow {
    pub case: ParabolicId,
    pub minus_one: SuperDim,
    /// target and whether a verified witness was found
    pub found: Vec<(SuperDim, bool)>,
}

/// Searches a witness for every listed maximal integral.
pub fn max_integral_rows() -> Result<Vec<IntegralRow>> {
    let mut out = Vec::new();
    for &(a, d, c, targets) in MAX_INTEGRALS {
        let case = ParabolicId::parse(a, d, c)?;
        let s = build_symbol(&case)?;
        let minus_one = superdim_of(s.parities(), &s.indices_of_degree(-1));
        let found = targets
            .iter()
            .map(|&(e, o)| {
                let t = SuperDim::new(e, o);
                (t, integral_witness(&s, t).is_some_and(|w| verify_integral(&s, &w, t)))
            })
            .collect();
        out.push(IntegralRow { case, minus_one, found });
    }
    Ok(out)
}

fn search(m: &GradedLieSuperalgebra, pool: &[(Parity, Vector)], from: usize, need: SuperDim, chosen: &mut Vec<usize>) -> bool {
    if need.is_zero() {
        return true;
    }
    for i in from..pool.len() {
        let (p, v) = &pool[i];
        if need.get(*p) == 0 {
            continue;
        }
        if !chosen.iter().all(|&j| m.bracket(v, &pool[j].1).unwrap().is_empty()) {
            continue;
        }
        let vecs: Vec<&Vector> = chosen.iter().map(|&j| &pool[j].1).chain([v]).collect();
        let mut e = SparseEchelon::new(m.dim());
        if !vecs.iter().all(|w| e.push((*w).clone())) {
            continue;
        }
        let mut rest = need;
        match p {
            Parity::Even => rest.even -= 1,
            Parity::Odd => rest.odd -= 1,
        }
        chosen.push(i);
        if search(m, pool, i + 1, rest, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Case graph: nodes are identification classes, with an edge whenever two
/// members on a common diagram differ by one crossed node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyGraph {
    pub nodes: Vec<ParabolicId>,
    pub edges: Vec<(usize, usize)>,
}

impl AdjacencyGraph {
    pub fn edge_list(&self) -> String {
        self.edges.iter().map(|&(a, b)| format!("{} {}\n", self.nodes[a].tag(), self.nodes[b].tag())).collect()
    }
}

pub fn adjacent(p: &ParabolicId, q: &ParabolicId) -> bool {
    if p.diagram != q.diagram {
        return false;
    }
    let a: BTreeSet<_> = p.crossing().iter().collect();
    let b: BTreeSet<_> = q.crossing().iter().collect();
    a.symmetric_difference(&b).count() == 1
}

pub fn adjacency_graph(a: Algebra) -> AdjacencyGraph {
    let classes = identification_classes(a);
    let class_of = |p: &ParabolicId| classes.iter().position(|c| c.contains(p)).expect("every parabolic is classified");
    let mut edges = BTreeSet::new();
    let all = a.parabolics();
    for (i, p) in all.iter().enumerate() {
        for q in &all[i + 1..] {
            if adjacent(p, q) {
                let (x, y) = (class_of(p), class_of(q));
                if x != y {
                    edges.insert((x.min(y), x.max(y)));
                }
            }
        }
    }
    AdjacencyGraph { nodes: classes.into_iter().map(|c| c[0].clone()).collect(), edges: edges.into_iter().collect() }
}

/// Growth vectors and bracket ranks agree.
pub fn symbols_agree(a: &GradedLieSuperalgebra, b: &GradedLieSuperalgebra) -> bool {
    growth_vector(a) == growth_vector(b) && a.bracket_ranks() == b.bracket_ranks()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub classes: Vec<(Vec<ParabolicId>, bool)>,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.classes.iter().all(|c| c.1)
    }
}

/// Checks every identification class for agreement of symbol invariants.
pub fn verify_equivalences(a: Algebra) -> Result<EquivalenceReport> {
    let mut classes = Vec::new();
    for c in identification_classes(a) {
        let first = build_symbol(&c[0])?;
        let mut ok = true;
        for q in &c[1..] {
            ok &= symbols_agree(&first, &*build_symbol(q)?);
        }
        classes.push((c, ok));
    }
    Ok(EquivalenceReport { classes })
}

/// Sum of the vectors, for assembling witnesses by hand.
pub fn combine(terms: &[(usize, Scalar)]) -> Vector {
    let mut v = Vector::new();
    for (i, c) in terms {
        axpy(&mut v, c, &unit(*i));
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(a: Algebra, d: &str, c: &str) -> GradedLieSuperalgebra {
        let s = build_symbol(&ParabolicId::parse(a, d, c).unwrap()).unwrap();
        (*s).clone()
    }

    #[test]
    fn growth_examples() {
        assert_eq!(growth_vector(&sym(Algebra::G3, "I", "1")).to_string(), "(0|7, 1|0)");
        assert_eq!(growth_vector(&sym(Algebra::F4, "I", "4")).to_string(), "(6|4)");
        assert_eq!(
            growth_vector(&sym(Algebra::F4, "VI", "1234")).to_string(),
            "(3|1, 1|2, 0|2, 1|1, 1|0, 1|0, 0|1, 0|1, 1|0, 1|0, 1|0)"
        );
    }

    #[test]
    fn null_span_examples() {
        let r = null_span(&sym(Algebra::G3, "IV", "123"));
        assert_eq!((r.span, r.ambient, r.exact), (SuperDim::new(1, 1), SuperDim::new(1, 2), true));
        let r = null_span(&sym(Algebra::G3, "II", "1"));
        assert_eq!(r.span, SuperDim::new(2, 1));
        assert!(null_span(&sym(Algebra::F4, "I", "1")).full);
    }

    #[test]
    fn witnesses() {
        let m = sym(Algebra::G3, "I", "2");
        for t in [SuperDim::new(1, 1), SuperDim::new(0, 2), SuperDim::new(1, 0)] {
            let w = integral_witness(&m, t).unwrap();
            assert!(verify_integral(&m, &w, t));
        }
        assert!(integral_witness(&m, SuperDim::new(1, 2)).is_none());
        let m = sym(Algebra::F4, "I", "4");
        assert_eq!(integral_witness(&m, SuperDim::new(6, 4)).unwrap().len(), 10);
        let rows = max_integral_rows().unwrap();
        assert_eq!(rows.len(), 15);
        assert!(rows.iter().all(|r| r.found.iter().all(|f| f.1)));
    }

    #[test]
    fn adjacency() {
        let p = |c| ParabolicId::parse(Algebra::G3, "I", c).unwrap();
        assert!(adjacent(&p("1"), &p("12")));
        assert!(!adjacent(&p("1"), &p("23")));
        assert_eq!(adjacency_graph(Algebra::G3).nodes.len(), 19);
        assert_eq!(adjacency_graph(Algebra::F4).nodes.len(), 55);
    }

    #[test]
    fn equivalences() {
        assert!(verify_equivalences(Algebra::G3).unwrap().passed());
        let a = sym(Algebra::G3, "III", "1");
        assert!(symbols_agree(&a, &sym(Algebra::G3, "IV", "1")));
        assert!(!symbols_agree(&a, &sym(Algebra::G3, "I", "1")));
    }
}
