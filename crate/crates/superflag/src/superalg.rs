//! Graded Lie superalgebras given by a sparse structure-constant table.
//!
//! Convention: `[x, y] = -(-1)^{|x||y|} [y, x]`, and the Jacobi identity is
//! checked in the graded cyclic form
//! `(-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]] = 0`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{axpy, Matrix, SparseEchelon};
use crate::scalar::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(b: u8) -> Self {
        if b.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u8 {
        self as u8
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// `(-1)^{|a||b|}` as a boolean: true means the sign is negative.
    pub fn koszul(self, o: Parity) -> bool {
        self.is_odd() && o.is_odd()
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, o: Parity) -> Parity {
        Parity::from_bit(self.bit() + o.bit())
    }
}

/// Super-dimension `(even|odd)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SuperDim {
    pub even: usize,
    pub odd: usize,
}

impl SuperDim {
    pub const ZERO: SuperDim = SuperDim { even: 0, odd: 0 };

    pub fn new(even: usize, odd: usize) -> Self {
        SuperDim { even, odd }
    }

    pub fn total(self) -> usize {
        self.even + self.odd
    }

    pub fn count(&mut self, p: Parity) {
        match p {
            Parity::Even => self.even += 1,
            Parity::Odd => self.odd += 1,
        }
    }

    pub fn get(self, p: Parity) -> usize {
        match p {
            Parity::Even => self.even,
            Parity::Odd => self.odd,
        }
    }

    /// Componentwise `<=`.
    pub fn fits_in(self, o: SuperDim) -> bool {
        self.even <= o.even && self.odd <= o.odd
    }

    pub fn is_zero(self) -> bool {
        self.total() == 0
    }
}

impl Add for SuperDim {
    type Output = SuperDim;
    fn add(self, o: SuperDim) -> SuperDim {
        SuperDim::new(self.even + o.even, self.odd + o.odd)
    }
}

impl std::iter::Sum for SuperDim {
    fn sum<I: Iterator<Item = SuperDim>>(it: I) -> SuperDim {
        it.fold(SuperDim::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for SuperDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.even, self.odd)
    }
}

impl FromStr for SuperDim {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Unknown { kind: "superdimension", value: s.to_string() };
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (a, b) = t.split_once('|').ok_or_else(bad)?;
        Ok(SuperDim::new(a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisElement {
    pub label: String,
    pub parity: Parity,
    pub degree: i32,
    pub multidegree: Option<Vec<i32>>,
}

/// Sparse coefficient vector over a basis.
pub type Vector = BTreeMap<usize, Scalar>;

pub fn unit(i: usize) -> Vector {
    Vector::from([(i, Scalar::one())])
}

pub fn scaled(v: &Vector, c: &Scalar) -> Vector {
    if c.is_zero() {
        return Vector::new();
    }
    v.iter().map(|(&k, x)| (k, x * c)).collect()
}

/// Structure constants for `i <= j`; `(i, i)` is only stored for odd `i`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct StructureTable {
    entries: HashMap<(usize, usize), Vector>,
}

impl StructureTable {
    pub fn new() -> Self {
        StructureTable::default()
    }

    /// Sets `[b_i, b_j] = v`, storing under the ordered key with the sign
    /// implied by super-antisymmetry.
    pub fn set(&mut self, i: usize, j: usize, v: Vector, parity: &[Parity]) {
        let (key, v) = if i <= j {
            ((i, j), v)
        } else {
            let flip = !parity[i].koszul(parity[j]);
            ((j, i), if flip { scaled(&v, &Scalar::int(-1)) } else { v })
        };
        if key.0 == key.1 && !parity[key.0].is_odd() {
            assert!(v.is_empty(), "nonzero self-bracket of an even element");
            return;
        }
        if v.is_empty() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, v);
        }
    }

    /// `[b_i, b_j]`.
    pub fn get(&self, i: usize, j: usize, parity: &[Parity]) -> Vector {
        if i <= j {
            return self.entries.get(&(i, j)).cloned().unwrap_or_default();
        }
        match self.entries.get(&(j, i)) {
            None => Vector::new(),
            Some(v) => {
                if parity[i].koszul(parity[j]) {
                    v.clone()
                } else {
                    scaled(v, &Scalar::int(-1))
                }
            }
        }
    }

    pub fn stored(&self) -> impl Iterator<Item = (&(usize, usize), &Vector)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Where an algebra came from.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub name: String,
    pub route: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GradedLieSuperalgebra {
    basis: Vec<BasisElement>,
    parity: Vec<Parity>,
    table: StructureTable,
    pub provenance: Provenance,
}

/// A failed Jacobi identity.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiFailure {
    pub triple: (usize, usize, usize),
    pub residual: Vector,
}

impl GradedLieSuperalgebra {
    pub fn new(basis: Vec<BasisElement>, table: StructureTable, provenance: Provenance) -> Self {
        let parity = basis.iter().map(|b| b.parity).collect();
        GradedLieSuperalgebra { basis, parity, table, provenance }
    }

    /// Builds from raw brackets `(i, j, [b_i, b_j])`.
    pub fn from_brackets(
        basis: Vec<BasisElement>,
        brackets: impl IntoIterator<Item = (usize, usize, Vector)>,
        provenance: Provenance,
    ) -> Self {
        let parity: Vec<Parity> = basis.iter().map(|b| b.parity).collect();
        let mut table = StructureTable::new();
        for (i, j, v) in brackets {
            table.set(i, j, v, &parity);
        }
        GradedLieSuperalgebra { basis, parity, table, provenance }
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parity
    }

    pub fn table(&self) -> &StructureTable {
        &self.table
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn superdim(&self) -> SuperDim {
        let mut d = SuperDim::ZERO;
        for b in &self.basis {
            d.count(b.parity);
        }
        d
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.label == label)
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        self.table.get(i, j, &self.parity)
    }

    /// `[b_i, v]`.
    pub fn ad(&self, i: usize, v: &Vector) -> Vector {
        let mut out = Vector::new();
        for (&k, c) in v {
            axpy(&mut out, c, &self.table.get(i, k, &self.parity));
        }
        out
    }

    /// Bilinear extension of the table.
    pub fn bracket(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        let n = self.dim();
        if let Some(&k) = x.keys().chain(y.keys()).find(|&&k| k >= n) {
            return Err(Error::Dimension { expected: n, got: k + 1 });
        }
        let mut out = Vector::new();
        for (&i, a) in x {
            for (&j, b) in y {
                axpy(&mut out, &(a * b), &self.table.get(i, j, &self.parity));
            }
        }
        Ok(out)
    }

    /// Dense input convenience.
    pub fn bracket_dense(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        let n = self.dim();
        for v in [x, y] {
            if v.len() != n {
                return Err(Error::Dimension { expected: n, got: v.len() });
            }
        }
        let sx = x.iter().cloned().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        let sy = y.iter().cloned().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        let r = self.bracket(&sx, &sy)?;
        Ok((0..n).map(|k| r.get(&k).cloned().unwrap_or_default()).collect())
    }

    fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vector {
        let p = &self.parity;
        let mut out = Vector::new();
        let terms = [
            (i, j, k, p[i].koszul(p[k])),
            (j, k, i, p[j].koszul(p[i])),
            (k, i, j, p[k].koszul(p[j])),
        ];
        for (a, b, c, neg) in terms {
            let inner = self.table.get(b, c, p);
            if inner.is_empty() {
                continue;
            }
            let s = Scalar::sign(neg);
            axpy(&mut out, &s, &self.ad(a, &inner));
        }
        out
    }

    /// Checks the graded Jacobi identity on all basis triples `i <= j <= k`.
    /// The Jacobiator is super-alternating, so this covers every triple.
    pub fn check_jacobi(&self) -> std::result::Result<(), JacobiFailure> {
        let n = self.dim();
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    let r = self.jacobiator(i, j, k);
                    if !r.is_empty() {
                        return Err(JacobiFailure { triple: (i, j, k), residual: r });
                    }
                }
            }
        }
        Ok(())
    }

    /// Every stored bracket respects degree and parity additivity.
    pub fn check_grading(&self) -> bool {
        self.table.stored().all(|(&(i, j), v)| {
            v.keys().all(|&k| {
                self.basis[k].degree == self.basis[i].degree + self.basis[j].degree
                    && self.parity[k] == self.parity[i] + self.parity[j]
            })
        })
    }

    pub fn graded_dims(&self) -> BTreeMap<i32, SuperDim> {
        let mut m = BTreeMap::new();
        for b in &self.basis {
            m.entry(b.degree).or_insert(SuperDim::ZERO).count(b.parity);
        }
        m
    }

    pub fn indices_of_degree(&self, d: i32) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].degree == d).collect()
    }

    /// Rank of the bracket map `g_i (x) g_j -> g_{i+j}`.
    pub fn bracket_rank(&self, di: i32, dj: i32) -> usize {
        let a = self.indices_of_degree(di);
        let b = self.indices_of_degree(dj);
        let mut e = SparseEchelon::new(self.dim());
        for &x in &a {
            for &y in &b {
                let v = self.bracket_basis(x, y);
                if !v.is_empty() {
                    e.push(v);
                }
            }
        }
        e.rank()
    }

    /// All bracket ranks between pairs of occurring degrees.
    pub fn bracket_ranks(&self) -> BTreeMap<(i32, i32), usize> {
        let degs: Vec<i32> = self.graded_dims().keys().copied().collect();
        let mut out = BTreeMap::new();
        for &a in &degs {
            for &b in &degs {
                if a <= b {
                    out.insert((a, b), self.bracket_rank(a, b));
                }
            }
        }
        out
    }

    /// Same table, degrees recomputed per basis element.
    pub fn regraded(&self, degree: impl Fn(&BasisElement) -> i32) -> Self {
        let mut c = self.clone();
        for b in &mut c.basis {
            b.degree = degree(b);
        }
        c
    }

    /// The subalgebra on the listed basis elements, in that order. Fails if
    /// some bracket leaves their span.
    pub fn restrict(&self, keep: &[usize]) -> Result<Self> {
        let mut pos = vec![None; self.dim()];
        for (new, &old) in keep.iter().enumerate() {
            pos[old] = Some(new);
        }
        let basis = keep.iter().map(|&i| self.basis[i].clone()).collect();
        let mut brackets = Vec::new();
        for (a, &i) in keep.iter().enumerate() {
            for &j in &keep[a..] {
                let v = self.bracket_basis(i, j);
                let mut w = Vector::new();
                for (k, c) in v {
                    let nk = pos[k].ok_or(Error::NotClosed(i, j))?;
                    w.insert(nk, c);
                }
                brackets.push((pos[i].unwrap(), pos[j].unwrap(), w));
            }
        }
        Ok(Self::from_brackets(basis, brackets, self.provenance.clone()))
    }

    /// Whether iterated brackets of degree -1 span every negative degree.
    pub fn is_fundamental(&self) -> bool {
        let dims = self.graded_dims();
        let lowest = dims.keys().next().copied().unwrap_or(0);
        let gens = self.indices_of_degree(-1);
        let mut layer: Vec<Vector> = gens.iter().map(|&i| unit(i)).collect();
        for d in (lowest..=-2).rev() {
            let mut e = SparseEchelon::new(self.dim());
            let mut next = Vec::new();
            for &g in &gens {
                for v in &layer {
                    let w = self.ad(g, v);
                    if e.push(w.clone()) {
                        next.push(w);
                    }
                }
            }
            if e.rank() != dims.get(&d).map_or(0, |s| s.total()) {
                return false;
            }
            layer = next;
        }
        true
    }

    /// Copy with one stored constant changed; for mutation tests.
    pub fn with_bracket(&self, i: usize, j: usize, v: Vector) -> Self {
        let mut c = self.clone();
        c.table.set(i, j, v, &self.parity);
        c
    }

    /// Structure constants serialized with the canonical basis order
    /// (degree descending, even before odd, then label).
    pub fn to_json(&self) -> Value {
        let mut order: Vec<usize> = (0..self.dim()).collect();
        order.sort_by(|&a, &b| {
            let (x, y) = (&self.basis[a], &self.basis[b]);
            y.degree.cmp(&x.degree).then(x.parity.cmp(&y.parity)).then(x.label.cmp(&y.label))
        });
        let mut pos = vec![0; self.dim()];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        let basis: Vec<Value> = order
            .iter()
            .map(|&i| {
                let b = &self.basis[i];
                json!({
                    "label": b.label,
                    "parity": b.parity.bit(),
                    "degree": b.degree,
                    "multidegree": b.multidegree,
                })
            })
            .collect();
        let mut rows = Vec::new();
        for (a, &i) in order.iter().enumerate() {
            for &j in &order[a..] {
                let v = self.bracket_basis(i, j);
                if v.is_empty() {
                    continue;
                }
                let mut terms: Vec<(usize, &Scalar)> = v.iter().map(|(&k, c)| (pos[k], c)).collect();
                terms.sort_by_key(|t| t.0);
                let terms: Vec<Value> = terms
                    .into_iter()
                    .map(|(k, c)| json!([k, json_int(c.numer()), json_int(c.denom())]))
                    .collect();
                rows.push((pos[i], pos[j], terms));
            }
        }
        rows.sort_by_key(|r| (r.0, r.1));
        let brackets: Vec<Value> = rows.into_iter().map(|(i, j, t)| json!([i, j, t])).collect();
        json!({
            "name": self.provenance.name,
            "route": self.provenance.route,
            "basis": basis,
            "brackets": brackets,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        #[derive(Deserialize)]
        struct RawBasis {
            label: String,
            parity: u8,
            degree: i32,
            multidegree: Option<Vec<i32>>,
        }
        let bad = |m: &str| Error::Parse { line: 0, msg: m.to_string() };
        let basis: Vec<RawBasis> = serde_json::from_value(v.get("basis").cloned().ok_or_else(|| bad("no basis"))?)?;
        let basis: Vec<BasisElement> = basis
            .into_iter()
            .map(|b| BasisElement {
                label: b.label,
                parity: Parity::from_bit(b.parity),
                degree: b.degree,
                multidegree: b.multidegree,
            })
            .collect();
        let mut brackets = Vec::new();
        for row in v.get("brackets").and_then(Value::as_array).ok_or_else(|| bad("no brackets"))? {
            let (i, j, terms): (usize, usize, Vec<(usize, Value, Value)>) = serde_json::from_value(row.clone())?;
            let mut vec = Vector::new();
            for (k, n, d) in terms {
                let n: num_bigint::BigInt = n.to_string().trim_matches('"').parse().map_err(|_| bad("numerator"))?;
                let d: num_bigint::BigInt = d.to_string().trim_matches('"').parse().map_err(|_| bad("denominator"))?;
                vec.insert(k, Scalar::from_bigs(n, d));
            }
            brackets.push((i, j, vec));
        }
        let prov = Provenance {
            name: v.get("name").and_then(Value::as_str).unwrap_or_default().to_string(),
            route: v.get("route").and_then(Value::as_str).unwrap_or_default().to_string(),
        };
        Ok(Self::from_brackets(basis, brackets, prov))
    }
}

fn json_int(n: &num_bigint::BigInt) -> Value {
    use num_traits::ToPrimitive;
    match n.to_i64() {
        Some(x) => json!(x),
        None => json!(n.to_string()),
    }
}

/// Linear map between two graded pieces. Rows and columns list the even
/// basis vectors first, then the odd ones.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedMap {
    pub source: SuperDim,
    pub target: SuperDim,
    pub matrix: Matrix<Scalar>,
}

impl GradedMap {
    pub fn new(source: SuperDim, target: SuperDim, matrix: Matrix<Scalar>) -> Result<Self> {
        if matrix.rows() != target.total() {
            return Err(Error::Dimension { expected: target.total(), got: matrix.rows() });
        }
        if matrix.cols() != source.total() {
            return Err(Error::Dimension { expected: source.total(), got: matrix.cols() });
        }
        Ok(GradedMap { source, target, matrix })
    }

    pub fn zero(source: SuperDim, target: SuperDim) -> Self {
        GradedMap { source, target, matrix: Matrix::zeros(target.total(), source.total()) }
    }

    fn row_parity(&self, i: usize) -> Parity {
        if i < self.target.even {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    fn col_parity(&self, j: usize) -> Parity {
        if j < self.source.even {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// `A = A_0 + A_1` with `A_0` parity preserving and `A_1` parity reversing.
    pub fn parity_split(&self) -> (GradedMap, GradedMap) {
        let mut even = Self::zero(self.source, self.target);
        let mut odd = Self::zero(self.source, self.target);
        for i in 0..self.matrix.rows() {
            for j in 0..self.matrix.cols() {
                let x = self.matrix[(i, j)].clone();
                if self.row_parity(i) == self.col_parity(j) {
                    even.matrix[(i, j)] = x;
                } else {
                    odd.matrix[(i, j)] = x;
                }
            }
        }
        (even, odd)
    }

    pub fn is_zero(&self) -> bool {
        (0..self.matrix.rows()).all(|i| self.matrix.row(i).iter().all(Scalar::is_zero))
    }

    /// Parity of a homogeneous map; the zero map reports even.
    pub fn parity(&self) -> Option<Parity> {
        let (e, o) = self.parity_split();
        match (e.is_zero(), o.is_zero()) {
            (_, true) => Some(Parity::Even),
            (true, false) => Some(Parity::Odd),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(label: &str, p: Parity, d: i32) -> BasisElement {
        BasisElement { label: label.into(), parity: p, degree: d, multidegree: None }
    }

    /// Odd Heisenberg algebra: [a, a] = z, [b, b] = z.
    fn heis() -> GradedLieSuperalgebra {
        let basis = vec![el("a", Parity::Odd, -1), el("b", Parity::Odd, -1), el("z", Parity::Even, -2)];
        GradedLieSuperalgebra::from_brackets(
            basis,
            [(0, 0, unit(2)), (1, 1, unit(2))],
            Provenance::default(),
        )
    }

    #[test]
    fn antisymmetry_storage() {
        let basis = [el("x", Parity::Even, -1), el("y", Parity::Odd, -1), el("w", Parity::Odd, -2)];
        let par: Vec<Parity> = basis.iter().map(|b| b.parity).collect();
        let mut t = StructureTable::new();
        t.set(1, 0, unit(2), &par);
        assert_eq!(t.get(0, 1, &par), scaled(&unit(2), &Scalar::int(-1)));
        assert_eq!(t.get(1, 0, &par), unit(2));
    }

    #[test]
    fn jacobi_and_mutation() {
        let h = heis();
        assert!(h.check_jacobi().is_ok());
        let abelian = GradedLieSuperalgebra::new(vec![el("x", Parity::Even, -1)], StructureTable::new(), Provenance::default());
        assert!(abelian.check_jacobi().is_ok());
        // sl2 with one sign flipped
        let basis = vec![el("e", Parity::Even, 1), el("h", Parity::Even, 0), el("f", Parity::Even, -1)];
        let good = GradedLieSuperalgebra::from_brackets(
            basis.clone(),
            [
                (1, 0, scaled(&unit(0), &Scalar::int(2))),
                (1, 2, scaled(&unit(2), &Scalar::int(-2))),
                (0, 2, unit(1)),
            ],
            Provenance::default(),
        );
        assert!(good.check_jacobi().is_ok());
        let bad = good.with_bracket(1, 0, scaled(&unit(0), &Scalar::int(3)));
        assert!(bad.check_jacobi().is_err());
    }

    #[test]
    fn even_self_bracket_vanishes() {
        let h = heis();
        let x = Vector::from([(2, Scalar::int(3))]);
        assert!(h.bracket(&x, &x).unwrap().is_empty());
        let bad = Vector::from([(7, Scalar::one())]);
        assert!(h.bracket(&bad, &x).is_err());
    }

    #[test]
    fn dims_and_json() {
        let h = heis();
        assert_eq!(h.graded_dims()[&-1], SuperDim::new(0, 2));
        assert_eq!(h.superdim().to_string(), "(1|2)");
        let j = h.to_json();
        let back = GradedLieSuperalgebra::from_json(&j).unwrap();
        assert!(back.check_jacobi().is_ok());
        assert_eq!(back.to_json(), j);
        assert_eq!(j["basis"][0]["label"], "a");
    }

    #[test]
    fn split_blocks() {
        let mut m = Matrix::zeros(3, 3);
        for i in 0..3 {
            for j in 0..3 {
                m[(i, j)] = Scalar::int((3 * i + j + 1) as i64);
            }
        }
        let a = GradedMap::new(SuperDim::new(2, 1), SuperDim::new(2, 1), m).unwrap();
        let (e, o) = a.parity_split();
        assert!(e.matrix[(0, 2)].is_zero() && e.matrix[(2, 0)].is_zero());
        assert!(o.matrix[(0, 0)].is_zero() && o.matrix[(2, 2)].is_zero());
        assert_eq!(o.matrix[(2, 1)], Scalar::int(8));
        let (ee, eo) = e.parity_split();
        assert_eq!(ee, e);
        assert!(eo.is_zero());
        assert_eq!(GradedMap::zero(SuperDim::new(1, 1), SuperDim::new(1, 1)).parity(), Some(Parity::Even));
    }
}
