//! Polynomial vector fields on a superspace `C^{n|m}`: super-polynomials in
//! commuting `x` and anticommuting `ξ`, derivations, their super brackets,
//! contact fields and the closure of explicit field lists.

mod parse;
pub mod realize;

pub use parse::{parse_expr, Fixture, Parsed};

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, SparseEchelon, SparseRow};
use crate::scalar::Scalar;
use crate::superalg::{BasisElement, GradedLieSuperalgebra, Parity, Provenance, SuperDim, Vector};

/// Names of the even and odd coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coordinates {
    pub even: Vec<String>,
    pub odd: Vec<String>,
}

impl Coordinates {
    pub fn new(even: &[&str], odd: &[&str]) -> Self {
        Coordinates { even: even.iter().map(|s| s.to_string()).collect(), odd: odd.iter().map(|s| s.to_string()).collect() }
    }

    pub fn lookup(&self, name: &str) -> Option<Coord> {
        if let Some(i) = self.even.iter().position(|n| n == name) {
            return Some(Coord::Even(i));
        }
        self.odd.iter().position(|n| n == name).map(Coord::Odd)
    }

    pub fn name(&self, c: Coord) -> &str {
        match c {
            Coord::Even(i) => &self.even[i],
            Coord::Odd(i) => &self.odd[i],
        }
    }

    pub fn all(&self) -> Vec<Coord> {
        (0..self.even.len()).map(Coord::Even).chain((0..self.odd.len()).map(Coord::Odd)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Coord {
    Even(usize),
    Odd(usize),
}

impl Coord {
    pub fn parity(self) -> Parity {
        match self {
            Coord::Even(_) => Parity::Even,
            Coord::Odd(_) => Parity::Odd,
        }
    }
}

/// `x^exps ξ_S` with `S` a bit set, factors in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub exps: Vec<u32>,
    pub odd: u32,
}

impl Monomial {
    pub fn one(nx: usize) -> Self {
        Monomial { exps: vec![0; nx], odd: 0 }
    }

    pub fn parity(&self) -> Parity {
        Parity::from_bit((self.odd.count_ones() % 2) as u8)
    }

    pub fn is_constant(&self) -> bool {
        self.odd == 0 && self.exps.iter().all(|&e| e == 0)
    }
}

/// Sign of `ξ_a ξ_b` once reordered, or `None` if a factor repeats.
fn odd_product_sign(a: u32, b: u32) -> Option<bool> {
    if a & b != 0 {
        return None;
    }
    let mut swaps = 0;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        swaps += (a >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    Some(swaps % 2 == 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SuperPolynomial {
    terms: BTreeMap<Monomial, Scalar>,
}

impl SuperPolynomial {
    pub fn zero() -> Self {
        SuperPolynomial::default()
    }

    pub fn constant(nx: usize, c: Scalar) -> Self {
        let mut p = SuperPolynomial::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nx), c);
        }
        p
    }

    pub fn var(nx: usize, c: Coord) -> Self {
        let mut m = Monomial::one(nx);
        match c {
            Coord::Even(i) => m.exps[i] = 1,
            Coord::Odd(i) => m.odd = 1 << i,
        }
        SuperPolynomial { terms: BTreeMap::from([(m, Scalar::one())]) }
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `None` for zero or mixed parity.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(Monomial::parity);
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x += &c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.axpy(&Scalar::one(), o)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.axpy(&Scalar::int(-1), o)
    }

    /// `self + c o`.
    pub fn axpy(&self, c: &Scalar, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, x) in &o.terms {
            r.add_term(m.clone(), x * c);
        }
        r
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SuperPolynomial { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let Some(neg) = odd_product_sign(a.odd, b.odd) else { continue };
                let exps = a.exps.iter().zip(&b.exps).map(|(p, q)| p + q).collect();
                let c = x * y;
                r.add_term(Monomial { exps, odd: a.odd | b.odd }, if neg { -c } else { c });
            }
        }
        r
    }

    /// Left derivative.
    pub fn diff(&self, c: Coord) -> Self {
        let mut r = Self::zero();
        for (m, x) in &self.terms {
            match c {
                Coord::Even(i) => {
                    if m.exps[i] == 0 {
                        continue;
                    }
                    let mut n = m.clone();
                    n.exps[i] -= 1;
                    r.add_term(n, x * &Scalar::int(m.exps[i] as i64));
                }
                Coord::Odd(i) => {
                    if m.odd & (1 << i) == 0 {
                        continue;
                    }
                    let below = (m.odd & ((1 << i) - 1)).count_ones();
                    let n = Monomial { exps: m.exps.clone(), odd: m.odd & !(1 << i) };
                    r.add_term(n, if below % 2 == 1 { -x.clone() } else { x.clone() });
                }
            }
        }
        r
    }

    /// Value at the origin.
    pub fn constant_term(&self) -> Scalar {
        self.terms.iter().find(|(m, _)| m.is_constant()).map(|(_, c)| c.clone()).unwrap_or_default()
    }

    /// Weighted degree, if homogeneous.
    pub fn weight(&self, even: &[i32], odd: &[i32]) -> Option<i32> {
        let w = |m: &Monomial| -> i32 {
            m.exps.iter().zip(even).map(|(&e, &w)| e as i32 * w).sum::<i32>()
                + (0..odd.len()).filter(|&i| m.odd & (1 << i) != 0).map(|i| odd[i]).sum::<i32>()
        };
        let mut it = self.terms.keys().map(w);
        let first = it.next()?;
        it.all(|x| x == first).then_some(first)
    }

    pub fn display<'a>(&'a self, c: &'a Coordinates) -> impl fmt::Display + 'a {
        PolyDisplay(self, c)
    }
}

struct PolyDisplay<'a>(&'a SuperPolynomial, &'a Coordinates);

fn monomial_text(m: &Monomial, c: &Coordinates) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(c.even[i].clone()),
            _ => parts.push(format!("{}^{}", c.even[i], e)),
        }
    }
    for (i, name) in c.odd.iter().enumerate() {
        if m.odd & (1 << i) != 0 {
            parts.push(name.clone());
        }
    }
    parts.join(" ")
}

/// Writes `Σ c_i w_i` with signs folded into the separators.
fn signed_sum(f: &mut fmt::Formatter<'_>, items: impl Iterator<Item = (Scalar, String)>) -> fmt::Result {
    let mut first = true;
    for (c, body) in items {
        let neg = c.is_negative();
        let a = c.abs();
        match (first, neg) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        if body.is_empty() {
            write!(f, "{a}")?;
        } else if a.is_one() {
            f.write_str(&body)?;
        } else {
            write!(f, "{a} {body}")?;
        }
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        signed_sum(f, self.0.terms.iter().map(|(m, c)| (c.clone(), monomial_text(m, self.1))))
    }
}

/// `Σ p_c ∂_c`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SuperVectorField {
    comps: BTreeMap<Coord, SuperPolynomial>,
}

impl SuperVectorField {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn partial(nx: usize, c: Coord) -> Self {
        SuperVectorField { comps: BTreeMap::from([(c, SuperPolynomial::constant(nx, Scalar::one()))]) }
    }

    pub fn components(&self) -> &BTreeMap<Coord, SuperPolynomial> {
        &self.comps
    }

    pub fn component(&self, c: Coord) -> SuperPolynomial {
        self.comps.get(&c).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn axpy(&self, k: &Scalar, o: &Self) -> Self {
        let mut r = self.clone();
        for (c, p) in &o.comps {
            let v = r.component(*c).axpy(k, p);
            if v.is_zero() {
                r.comps.remove(c);
            } else {
                r.comps.insert(*c, v);
            }
        }
        r
    }

    pub fn add(&self, o: &Self) -> Self {
        self.axpy(&Scalar::one(), o)
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        Self::zero().axpy(k, self)
    }

    /// `p X`.
    pub fn times(&self, p: &SuperPolynomial) -> Self {
        let mut r = Self::zero();
        for (c, q) in &self.comps {
            let v = p.mul(q);
            if !v.is_zero() {
                r.comps.insert(*c, v);
            }
        }
        r
    }

    pub fn apply(&self, f: &SuperPolynomial) -> SuperPolynomial {
        let mut r = SuperPolynomial::zero();
        for (c, p) in &self.comps {
            r = r.add(&p.mul(&f.diff(*c)));
        }
        r
    }

    /// `None` for zero or mixed parity.
    pub fn parity(&self) -> Option<Parity> {
        let mut ps = Vec::new();
        for (c, p) in &self.comps {
            for m in p.terms.keys() {
                ps.push(m.parity() + c.parity());
            }
        }
        let first = *ps.first()?;
        ps.iter().all(|&p| p == first).then_some(first)
    }

    /// Even and odd parts.
    pub fn split(&self) -> (Self, Self) {
        let mut e = Self::zero();
        let mut o = Self::zero();
        for (c, p) in &self.comps {
            for (m, x) in &p.terms {
                let dst = if (m.parity() + c.parity()).is_odd() { &mut o } else { &mut e };
                dst.comps.entry(*c).or_default().add_term(m.clone(), x.clone());
            }
        }
        (e, o)
    }

    /// Coefficients at the origin.
    pub fn at_origin(&self) -> BTreeMap<Coord, Scalar> {
        self.comps.iter().map(|(c, p)| (*c, p.constant_term())).filter(|(_, x)| !x.is_zero()).collect()
    }

    pub fn display<'a>(&'a self, c: &'a Coordinates) -> impl fmt::Display + 'a {
        FieldDisplay(self, c)
    }
}

struct FieldDisplay<'a>(&'a SuperVectorField, &'a Coordinates);

impl fmt::Display for FieldDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items = self.0.comps.iter().map(|(c, p)| {
            let d = format!("D[{}]", self.1.name(*c));
            if p.terms.len() == 1 {
                let (m, x) = p.terms.iter().next().unwrap();
                let body = monomial_text(m, self.1);
                (x.clone(), if body.is_empty() { d } else { format!("{body} {d}") })
            } else {
                (Scalar::one(), format!("({}) {d}", p.display(self.1)))
            }
        });
        signed_sum(f, items)
    }
}

/// `[X, Y] = X∘Y - (-1)^{|X||Y|} Y∘X`, by bilinearity over parity parts.
pub fn super_bracket(x: &SuperVectorField, y: &SuperVectorField) -> SuperVectorField {
    let (xe, xo) = x.split();
    let (ye, yo) = y.split();
    let mut r = SuperVectorField::zero();
    for (a, pa) in [(&xe, false), (&xo, true)] {
        for (b, pb) in [(&ye, false), (&yo, true)] {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let s = Scalar::sign(!(pa && pb));
            let coords: std::collections::BTreeSet<Coord> = a.comps.keys().chain(b.comps.keys()).copied().collect();
            for c in coords {
                let v = a.apply(&b.component(c)).axpy(&s, &b.apply(&a.component(c)));
                if !v.is_zero() {
                    let w = r.component(c).add(&v);
                    if w.is_zero() {
                        r.comps.remove(&c);
                    } else {
                        r.comps.insert(c, w);
                    }
                }
            }
        }
    }
    r
}

/// The contact form `du - Σ ξ_a dξ_b` on `C^{1|n}` with some pairs `(a, b)`
/// of distinct odd coordinates and possibly one self-paired coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContactForm {
    pub coords: Coordinates,
    pub pairs: Vec<(usize, usize)>,
    pub selfpaired: Option<usize>,
}

impl ContactForm {
    /// `du - ξ1 dξ4 - ξ2 dξ5 - ξ3 dξ6 - ξ7 dξ7` on `C^{1|7}`.
    pub fn odd_seven() -> Self {
        ContactForm {
            coords: Coordinates::new(&["u"], &["xi1", "xi2", "xi3", "xi4", "xi5", "xi6", "xi7"]),
            pairs: vec![(0, 3), (1, 4), (2, 5)],
            selfpaired: Some(6),
        }
    }

    fn nx(&self) -> usize {
        1
    }

    fn xi(&self, i: usize) -> SuperPolynomial {
        SuperPolynomial::var(self.nx(), Coord::Odd(i))
    }

    fn plain(&self, i: usize) -> SuperVectorField {
        SuperVectorField::partial(self.nx(), Coord::Odd(i))
    }

    /// `∂_{ξ_b} - ξ_a ∂_u` for the partner `a` of `b`.
    fn hat(&self, b: usize) -> SuperVectorField {
        let a = self.pairs.iter().find(|p| p.1 == b).map(|p| p.0).unwrap_or(b);
        let du = SuperVectorField::partial(self.nx(), Coord::Even(0));
        self.plain(b).axpy(&Scalar::int(-1), &du.times(&self.xi(a)))
    }

    /// Frame of the distribution.
    pub fn distribution(&self) -> Vec<SuperVectorField> {
        let mut v = Vec::new();
        for &(a, b) in &self.pairs {
            v.push(self.plain(a));
            v.push(self.hat(b));
        }
        if let Some(s) = self.selfpaired {
            v.push(self.hat(s));
        }
        v
    }

    /// `ω(Z)`, which recovers `f` from `X_f`.
    pub fn theta(&self, z: &SuperVectorField) -> SuperPolynomial {
        let mut r = z.component(Coord::Even(0));
        let mut pairs: Vec<(usize, usize)> = self.pairs.clone();
        if let Some(s) = self.selfpaired {
            pairs.push((s, s));
        }
        for (a, b) in pairs {
            r = r.add(&z.component(Coord::Odd(b)).mul(&self.xi(a)));
        }
        r
    }

    /// `X_f = f ∂_u - (-1)^{|f|} (Σ ∂̂_b(f) ∂_a + ∂_a(f) ∂̂_b + ½ ∂̂_s(f) ∂̂_s)`,
    /// applied to each parity part of `f`.
    pub fn contact_field(&self, f: &SuperPolynomial) -> SuperVectorField {
        let mut total = SuperVectorField::zero();
        for part in parity_parts(f) {
            let odd = part.parity() == Some(Parity::Odd);
            let mut inner = SuperVectorField::zero();
            for &(a, b) in &self.pairs {
                inner = inner.add(&self.plain(a).times(&self.hat(b).apply(&part)));
                inner = inner.add(&self.hat(b).times(&part.diff(Coord::Odd(a))));
            }
            if let Some(s) = self.selfpaired {
                let h = self.hat(s);
                inner = inner.axpy(&Scalar::new(1, 2), &h.times(&h.apply(&part)));
            }
            let mut x = SuperVectorField::partial(self.nx(), Coord::Even(0)).times(&part);
            x = x.axpy(&Scalar::sign(!odd), &inner);
            total = total.add(&x);
        }
        total
    }

    pub fn lagrange_bracket(&self, f: &SuperPolynomial, h: &SuperPolynomial) -> SuperPolynomial {
        self.theta(&super_bracket(&self.contact_field(f), &self.contact_field(h)))
    }

    /// The field maps the distribution into itself.
    pub fn preserves(&self, x: &SuperVectorField) -> bool {
        self.distribution().iter().all(|d| self.theta(&super_bracket(x, d)).is_zero())
    }

    /// Weighted degree of a generating function minus two.
    pub fn degree(&self, f: &SuperPolynomial) -> Option<i32> {
        let odd = vec![1; self.coords.odd.len()];
        f.weight(&[2], &odd).map(|w| w - 2)
    }
}

fn parity_parts(f: &SuperPolynomial) -> Vec<SuperPolynomial> {
    let mut e = SuperPolynomial::zero();
    let mut o = SuperPolynomial::zero();
    for (m, c) in &f.terms {
        if m.parity().is_odd() { &mut o } else { &mut e }.add_term(m.clone(), c.clone());
    }
    [e, o].into_iter().filter(|p| !p.is_zero()).collect()
}

/// Expresses vectors over a fixed family by elimination with tracked
/// combinations.
struct SpanSolver {
    ech: SparseEchelon<Scalar>,
    len: usize,
}

const TAG: usize = 1 << 40;

impl SpanSolver {
    fn new(family: &[SparseRow<Scalar>]) -> Self {
        let mut ech = SparseEchelon::new(TAG + family.len());
        for (i, v) in family.iter().enumerate() {
            let mut r = v.clone();
            r.insert(TAG + i, Scalar::one());
            ech.push(r);
        }
        SpanSolver { ech, len: family.len() }
    }

    /// Rank of the family itself.
    fn rank(&self) -> usize {
        self.ech.pivot_columns().iter().filter(|&&c| c < TAG).count()
    }

    fn solve(&self, v: &SparseRow<Scalar>) -> std::result::Result<Vector, SparseRow<Scalar>> {
        let r = self.ech.reduce(v.clone());
        let residual: SparseRow<Scalar> = r.range(..TAG).map(|(k, x)| (*k, x.clone())).collect();
        if !residual.is_empty() {
            return Err(residual);
        }
        Ok(r.range(TAG..TAG + self.len).map(|(k, x)| (k - TAG, -x)).collect())
    }
}

/// Interns `(coord, monomial)` keys as column indices.
#[derive(Default)]
struct Keys {
    map: HashMap<(Option<Coord>, Monomial), usize>,
}

impl Keys {
    fn field(&mut self, x: &SuperVectorField) -> SparseRow<Scalar> {
        let mut r = SparseRow::new();
        for (c, p) in &x.comps {
            for (m, v) in &p.terms {
                let n = self.map.len();
                let k = *self.map.entry((Some(*c), m.clone())).or_insert(n);
                r.insert(k, v.clone());
            }
        }
        r
    }

    fn poly(&mut self, p: &SuperPolynomial) -> SparseRow<Scalar> {
        let mut r = SparseRow::new();
        for (m, v) in &p.terms {
            let n = self.map.len();
            let k = *self.map.entry((None, m.clone())).or_insert(n);
            r.insert(k, v.clone());
        }
        r
    }
}

/// A labelled element of a realization.
#[derive(Clone, Debug, PartialEq)]
pub struct Generator<T> {
    pub label: String,
    pub degree: i32,
    pub value: T,
}

fn parity_of_field(x: &SuperVectorField) -> Result<Parity> {
    x.parity().ok_or_else(|| Error::Construction("field without a definite parity".into()))
}

/// Brackets every pair of fields and decomposes the result over the list.
/// Fails with the first pair whose bracket leaves the span.
pub fn closure_check(name: &str, fields: &[Generator<SuperVectorField>]) -> Result<GradedLieSuperalgebra> {
    let mut keys = Keys::default();
    let rows: Vec<SparseRow<Scalar>> = fields.iter().map(|g| keys.field(&g.value)).collect();
    let solver = SpanSolver::new(&rows);
    if solver.rank() != fields.len() {
        return Err(Error::Construction("fields are linearly dependent".into()));
    }
    let parity: Vec<Parity> = fields.iter().map(|g| parity_of_field(&g.value)).collect::<Result<_>>()?;
    let pairs: Vec<(usize, usize)> = (0..fields.len())
        .flat_map(|i| (i..fields.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j || parity[i].is_odd())
        .collect();
    use rayon::prelude::*;
    let brackets: Vec<_> = pairs
        .par_iter()
        .map(|&(i, j)| super_bracket(&fields[i].value, &fields[j].value))
        .collect();
    let mut out = Vec::new();
    for (&(i, j), b) in pairs.iter().zip(brackets) {
        let v = solver.solve(&keys.field(&b)).map_err(|_| Error::NotClosed(i, j))?;
        out.push((i, j, v));
    }
    let basis = fields
        .iter()
        .zip(&parity)
        .map(|(g, &p)| BasisElement { label: g.label.clone(), parity: p, degree: g.degree, multidegree: None })
        .collect();
    Ok(GradedLieSuperalgebra::from_brackets(basis, out, Provenance { name: name.into(), route: "vector fields".into() }))
}

/// Outcome of closing a list of generating functions.
#[derive(Clone, Debug)]
pub struct ContactClosure {
    pub algebra: GradedLieSuperalgebra,
    /// `X_{[f,h]} = [X_f, X_h]` on every pair
    pub homomorphism: bool,
    /// every `X_f` preserves the distribution
    pub contact: bool,
}

pub fn function_closure(form: &ContactForm, name: &str, funcs: &[Generator<SuperPolynomial>]) -> Result<ContactClosure> {
    let mut keys = Keys::default();
    let rows: Vec<SparseRow<Scalar>> = funcs.iter().map(|g| keys.poly(&g.value)).collect();
    let solver = SpanSolver::new(&rows);
    if solver.rank() != funcs.len() {
        return Err(Error::Construction("functions are linearly dependent".into()));
    }
    let parity: Vec<Parity> = funcs
        .iter()
        .map(|g| g.value.parity().ok_or_else(|| Error::Construction("function without a definite parity".into())))
        .collect::<Result<_>>()?;
    let fields: Vec<SuperVectorField> = funcs.iter().map(|g| form.contact_field(&g.value)).collect();
    let contact = fields.iter().all(|x| form.preserves(x));
    let pairs: Vec<(usize, usize)> = (0..funcs.len())
        .flat_map(|i| (i..funcs.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j || parity[i].is_odd())
        .collect();
    use rayon::prelude::*;
    let results: Vec<(SuperPolynomial, bool)> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let b = super_bracket(&fields[i], &fields[j]);
            let f = form.theta(&b);
            let hom = form.contact_field(&f) == b;
            (f, hom)
        })
        .collect();
    let mut homomorphism = true;
    let mut out = Vec::new();
    for (&(i, j), (f, hom)) in pairs.iter().zip(results) {
        homomorphism &= hom;
        let v = solver.solve(&keys.poly(&f)).map_err(|_| Error::NotClosed(i, j))?;
        out.push((i, j, v));
    }
    let basis = funcs
        .iter()
        .zip(&parity)
        .map(|(g, &p)| BasisElement { label: g.label.clone(), parity: p, degree: g.degree, multidegree: None })
        .collect();
    let algebra = GradedLieSuperalgebra::from_brackets(basis, out, Provenance { name: name.into(), route: "generating functions".into() });
    Ok(ContactClosure { algebra, homomorphism, contact })
}

/// Super-dimension of the span of the fields at the origin.
pub fn span_at_origin(fields: &[SuperVectorField]) -> SuperDim {
    let mut d = SuperDim::ZERO;
    for p in [Parity::Even, Parity::Odd] {
        let mut e = SparseEchelon::new(64);
        for x in fields {
            let row: SparseRow<Scalar> = x
                .at_origin()
                .into_iter()
                .filter(|(c, _)| c.parity() == p)
                .map(|(c, v)| (match c { Coord::Even(i) => i, Coord::Odd(i) => 32 + i }, v))
                .collect();
            e.push(row);
        }
        match p {
            Parity::Even => d.even = e.rank(),
            Parity::Odd => d.odd = e.rank(),
        }
    }
    d
}

pub fn fundamental_field_check(fields: &[SuperVectorField], expected: SuperDim) -> bool {
    span_at_origin(fields) == expected
}

/// Matrix of a field that is linear: `X = Σ_i (Σ_j M_ij z_j) ∂_i`, even
/// coordinates first.
pub fn linear_matrix(x: &SuperVectorField, c: &Coordinates) -> Option<Matrix<Scalar>> {
    let all = c.all();
    let n = all.len();
    let pos = |k: Coord| all.iter().position(|&q| q == k).unwrap();
    let mut m = Matrix::zeros(n, n);
    for (&row, p) in &x.comps {
        for (mono, v) in &p.terms {
            let deg: u32 = mono.exps.iter().sum::<u32>() + mono.odd.count_ones();
            if deg != 1 {
                return None;
            }
            let col = match mono.exps.iter().position(|&e| e == 1) {
                Some(i) => Coord::Even(i),
                None => Coord::Odd(mono.odd.trailing_zeros() as usize),
            };
            m[(pos(row), pos(col))] = v.clone();
        }
    }
    Some(m)
}

/// Super-commutator of homogeneous matrices.
pub fn supercommutator(a: &Matrix<Scalar>, pa: Parity, b: &Matrix<Scalar>, pb: Parity) -> Matrix<Scalar> {
    let ab = a.mul(b);
    let ba = b.mul(a);
    let s = Scalar::sign(!pa.koszul(pb));
    let mut c = Matrix::zeros(a.rows(), a.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            c[(i, j)] = &ab[(i, j)] + &(&s * &ba[(i, j)]);
        }
    }
    c
}

fn flatten(m: &Matrix<Scalar>) -> SparseRow<Scalar> {
    let mut r = SparseRow::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !m[(i, j)].is_zero() {
                r.insert(i * m.cols() + j, m[(i, j)].clone());
            }
        }
    }
    r
}

/// Dimension data of a matrix superalgebra given by homogeneous generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixAlgebraReport {
    pub dim: SuperDim,
    pub closed: bool,
    pub derived: SuperDim,
}

pub fn matrix_algebra(gens: &[(Matrix<Scalar>, Parity)]) -> MatrixAlgebraReport {
    let mut span = [SparseEchelon::new(usize::MAX), SparseEchelon::new(usize::MAX)];
    for (m, p) in gens {
        span[p.bit() as usize].push(flatten(m));
    }
    let mut derived = [SparseEchelon::new(usize::MAX), SparseEchelon::new(usize::MAX)];
    let mut closed = true;
    for (i, (a, pa)) in gens.iter().enumerate() {
        for (b, pb) in &gens[i..] {
            let c = flatten(&supercommutator(a, *pa, b, *pb));
            let p = (*pa + *pb).bit() as usize;
            closed &= span[p].contains(c.clone());
            derived[p].push(c);
        }
    }
    MatrixAlgebraReport {
        dim: SuperDim::new(span[0].rank(), span[1].rank()),
        closed,
        derived: SuperDim::new(derived[0].rank(), derived[1].rank()),
    }
}

/// An alternating trilinear form on an `n`-dimensional space, from terms
/// `c e_i ∧ e_j ∧ e_k` (0-based).
pub fn alternating_form(n: usize, terms: &[((usize, usize, usize), i64)]) -> Vec<Scalar> {
    let mut q = vec![Scalar::zero(); n * n * n];
    for &((i, j, k), c) in terms {
        for (p, s) in [([i, j, k], 1), ([j, k, i], 1), ([k, i, j], 1), ([j, i, k], -1), ([i, k, j], -1), ([k, j, i], -1)] {
            q[(p[0] * n + p[1]) * n + p[2]] = Scalar::int(c * s);
        }
    }
    q
}

/// `A·q = -(q(A·,·,·) + q(·,A·,·) + q(·,·,A·))`, with `A` acting on columns.
pub fn act_on_form(a: &Matrix<Scalar>, q: &[Scalar]) -> Vec<Scalar> {
    let n = a.rows();
    let idx = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
    let mut out = vec![Scalar::zero(); q.len()];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut s = Scalar::zero();
                for l in 0..n {
                    s += &a[(l, i)] * &q[idx(l, j, k)];
                    s += &a[(l, j)] * &q[idx(i, l, k)];
                    s += &a[(l, k)] * &q[idx(i, j, l)];
                }
                out[idx(i, j, k)] = -s;
            }
        }
    }
    out
}

/// Combinations of `maps` that rescale `q`: `A·q = c q` for some `c`.
pub fn form_annihilator(maps: &[Matrix<Scalar>], q: &[Scalar]) -> Vec<Matrix<Scalar>> {
    let n = maps.first().map_or(0, |m| m.rows());
    // columns: one per map, then one for the scalar
    let cols: Vec<Vec<Scalar>> = maps.iter().map(|m| act_on_form(m, q)).chain([q.iter().map(|x| -x).collect()]).collect();
    let rows: Vec<Vec<Scalar>> = (0..q.len()).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    let kernel = Matrix::from_rows(rows).nullspace();
    kernel
        .into_iter()
        .map(|v| {
            let mut m = Matrix::zeros(n, n);
            for (t, a) in v.iter().zip(maps) {
                for i in 0..n {
                    for j in 0..n {
                        if !t.is_zero() {
                            m[(i, j)] = &m[(i, j)] + &(t * &a[(i, j)]);
                        }
                    }
                }
            }
            m
        })
        .collect()
}

/// The odd cubic `dξ1dξ4dξ7 + dξ2dξ5dξ7 + dξ3dξ6dξ7 - dξ1dξ2dξ3 + dξ4dξ5dξ6`.
pub fn seven_cubic() -> Vec<Scalar> {
    alternating_form(7, &[((0, 3, 6), 1), ((1, 4, 6), 1), ((2, 5, 6), 1), ((0, 1, 2), -1), ((3, 4, 5), 1)])
}

/// Matrices of level-0 elements on `g_{-1}` in the given order.
pub fn level_maps(ad: &[Vec<Vector>], basis: &[usize]) -> Vec<Matrix<Scalar>> {
    let n = basis.len();
    ad.iter()
        .map(|a| {
            let mut m = Matrix::zeros(n, n);
            for (col, &u) in basis.iter().enumerate() {
                for (row, &w) in basis.iter().enumerate() {
                    if let Some(x) = a[u].get(&w) {
                        m[(row, col)] = x.clone();
                    }
                }
            }
            m
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::realize::*;
    use super::*;

    fn coords() -> Coordinates {
        Coordinates::new(&["x1", "x2"], &["xi1", "xi2"])
    }

    fn field(s: &str) -> SuperVectorField {
        parse_expr(s, &coords()).unwrap().into_field().unwrap()
    }

    #[test]
    fn grassmann_signs() {
        let c = coords();
        let a = SuperPolynomial::var(2, Coord::Odd(0));
        let b = SuperPolynomial::var(2, Coord::Odd(1));
        assert_eq!(a.mul(&b), b.mul(&a).scale(&Scalar::int(-1)));
        assert!(a.mul(&a).is_zero());
        // left derivative: ∂_{ξ2} (ξ1 ξ2) = -ξ1
        assert_eq!(a.mul(&b).diff(Coord::Odd(1)).display(&c).to_string(), "-xi1");
    }

    #[test]
    fn brackets() {
        assert!(super_bracket(&field("D[x1]"), &field("D[x2]")).is_zero());
        assert_eq!(super_bracket(&field("D[xi1]"), &field("xi1 D[x1]")), field("D[x1]"));
        let x = field("xi1 D[x2] + x2 D[xi2]");
        let y = field("x1 xi2 D[xi1]");
        let z = field("xi2 D[x1] - 1/2 x2^2 D[xi1]");
        // graded Jacobi on odd fields
        let p = |a: &SuperVectorField, b: &SuperVectorField| super_bracket(a, b);
        let j = p(&x, &p(&y, &z)).add(&p(&y, &p(&z, &x))).add(&p(&z, &p(&x, &y)));
        assert!(j.is_zero());
    }

    #[test]
    fn display_round_trip() {
        let c = coords();
        for s in ["2 x1 D[x1] + (xi1 xi2 - 1/2 x2^2) D[xi1]", "-D[x2]", "3 xi2 D[x1] - x1 D[xi2]"] {
            let x = field(s);
            assert_eq!(field(&x.display(&c).to_string()), x);
        }
        assert!(parse_expr("D[x1] x1", &c).is_err());
        assert!(parse_expr("x3", &c).is_err());
    }

    #[test]
    fn contact_basics() {
        let form = ContactForm::odd_seven();
        let one = SuperPolynomial::constant(1, Scalar::one());
        assert_eq!(form.contact_field(&one), SuperVectorField::partial(1, Coord::Even(0)));
        let xi7 = SuperPolynomial::var(1, Coord::Odd(6));
        let x = form.contact_field(&xi7);
        let sq = super_bracket(&x, &x);
        assert_eq!(form.contact_field(&form.theta(&sq)), sq);
        assert!(form.preserves(&x));
    }

    #[test]
    fn fixtures_parse() {
        let form = ContactForm::odd_seven();
        let f = g3_contact_functions(&form).unwrap();
        assert_eq!(f.len(), 31);
        let (_, x) = f4_fields().unwrap();
        let count = |d: i32| x.iter().filter(|g| g.degree == d).count();
        assert_eq!((count(-1), count(0), count(1)), (10, 20, 10));
        assert_eq!(cosp_generators().unwrap().len(), 20);
    }

    #[test]
    fn origin_spans() {
        let (_, x) = f4_fields().unwrap();
        let fields: Vec<_> = x.iter().map(|g| g.value.clone()).collect();
        assert!(fundamental_field_check(&fields, SuperDim::new(6, 4)));
        let top: Vec<_> = x.iter().filter(|g| g.degree == 1).map(|g| g.value.clone()).collect();
        assert!(fundamental_field_check(&top, SuperDim::ZERO));
    }
}
