//! Tanaka-Weisfeiler prolongation.
//!
//! Level `k >= 0` consists of degree-`k` maps `A: g_{-1} -> g_{k-1}` whose
//! Leibniz extension to all of `m` is consistent. Unknowns are grouped by
//! parity and by weight (the multidegree shift `wt(A(u)) - wt(u)`), which
//! splits every level into small independent systems. Compatibility is
//! imposed on every pair `(u, v)` with `u` in `g_{-1}` and `v` in `m`.
//!
//! Elements of `m` have global indices `0..dim m`; level elements follow,
//! level by level.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use crate::build::{FullAlgebra, SymbolAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{axpy, Matrix, SparseEchelon, SparseRow};
use crate::scalar::Scalar;
use crate::superalg::{BasisElement, GradedLieSuperalgebra, GradedMap, Parity, Provenance, SuperDim, Vector};

type Form = SparseRow<Scalar>;
/// Vector whose coefficients are linear forms in the unknowns.
type FVec = BTreeMap<usize, Form>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    InProgress,
    Finite,
    ThresholdExceeded,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::InProgress => "in progress",
            Status::Finite => "finite",
            Status::ThresholdExceeded => "threshold exceeded",
        })
    }
}

/// parity and weight of a block of unknowns
type BlockKey = (Parity, Option<Vec<i32>>);

/// A basis element of some level `k >= 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct LevelElement {
    pub degree: i32,
    pub parity: Parity,
    pub weight: Option<Vec<i32>>,
    /// `[E, b]` for every basis element `b` of `m`, in global indices.
    pub ad: Vec<Vector>,
}

/// Prescribed degree-0 part, as maps on `g_{-1}`. `basis` lists the symbol
/// indices of `g_{-1}` in the row/column order of the maps (even first).
#[derive(Clone, Debug, PartialEq)]
pub struct ReductionSpec {
    pub basis: Vec<usize>,
    pub maps: Vec<GradedMap>,
}

impl ReductionSpec {
    /// Order of `g_{-1}` used by reduction maps: even elements first, then by index.
    pub fn minus_one_order(m: &GradedLieSuperalgebra) -> Vec<usize> {
        let mut v = m.indices_of_degree(-1);
        v.sort_by_key(|&i| (m.parities()[i], i));
        v
    }

    pub fn new(m: &GradedLieSuperalgebra, maps: Vec<GradedMap>) -> Self {
        ReductionSpec { basis: Self::minus_one_order(m), maps }
    }

    /// The degree-0 part of the full algebra acting on the symbol, moved across
    /// the diagonal isomorphism `s_m -> λ_m f_m`.
    pub fn from_full(f: &FullAlgebra, s: &SymbolAlgebra) -> Result<Self> {
        let emb = f.symbol_embedding(s)?;
        let basis = Self::minus_one_order(s);
        let full_g1 = f.minus_one(&s.parabolic);
        let fpos: HashMap<usize, usize> = full_g1.iter().enumerate().map(|(a, &i)| (i, a)).collect();
        // column a of the symbol order sits at full position perm[a] with scale lambda
        let perm: Vec<(usize, Scalar)> = basis
            .iter()
            .map(|&i| {
                let (fi, l) = &emb[i];
                fpos.get(fi).map(|&p| (p, l.clone())).ok_or_else(|| Error::Construction("degree -1 mismatch".into()))
            })
            .collect::<Result<_>>()?;
        let n = basis.len();
        let maps = f
            .levi_action(&s.parabolic)
            .into_iter()
            .map(|g| {
                let mut m = Matrix::zeros(n, n);
                // A(s_a) = λ_a A(f_a) = Σ_b λ_a g[b][a] / λ_b s_b
                for a in 0..n {
                    for b in 0..n {
                        let x = &g.matrix[(perm[b].0, perm[a].0)];
                        if !x.is_zero() {
                            m[(b, a)] = x * &perm[a].1 / &perm[b].1;
                        }
                    }
                }
                GradedMap { source: g.source, target: g.target, matrix: m }
            })
            .collect();
        Ok(ReductionSpec { basis, maps })
    }

    pub fn superdim(&self) -> SuperDim {
        let mut d = SuperDim::ZERO;
        for m in &self.maps {
            d.count(m.parity().unwrap_or(Parity::Even));
        }
        d
    }
}

/// State and result of a prolongation run.
#[derive(Clone, Debug)]
pub struct Prolongation {
    pub symbol: GradedLieSuperalgebra,
    pub levels: Vec<Vec<LevelElement>>,
    pub status: Status,
    presentations: HashMap<i32, Presentation>,
    /// Brackets between level elements, keyed by ordered global index pairs.
    nonneg: HashMap<(usize, usize), Vector>,
}

/// Every basis element of `g_{-t}` (t >= 2) written as a combination of
/// brackets `[w, v]` with `w` in `g_{-1}`.
#[derive(Clone, Debug)]
struct Presentation {
    pairs: Vec<(usize, usize)>,
    /// `coeffs[b]` expresses element `b` over `pairs`
    coeffs: HashMap<usize, Vec<(usize, Scalar)>>,
}

impl Prolongation {
    pub fn new(symbol: GradedLieSuperalgebra) -> Result<Self> {
        if symbol.basis().iter().any(|b| b.degree >= 0) {
            return Err(Error::Construction("symbol has nonnegative degrees".into()));
        }
        let mut presentations = HashMap::new();
        let depth = -symbol.graded_dims().keys().next().copied().unwrap_or(-1);
        let g1 = symbol.indices_of_degree(-1);
        for t in 2..=depth {
            let target = symbol.indices_of_degree(-t);
            let prev = symbol.indices_of_degree(-t + 1);
            let mut e = SparseEchelon::new(symbol.dim());
            let mut pairs = Vec::new();
            let mut vecs = Vec::new();
            'outer: for &w in &g1 {
                for &v in &prev {
                    let x = symbol.bracket_basis(w, v);
                    if !x.is_empty() && e.push(x.clone()) {
                        pairs.push((w, v));
                        vecs.push(x);
                        if pairs.len() == target.len() {
                            break 'outer;
                        }
                    }
                }
            }
            if pairs.len() != target.len() {
                return Err(Error::Construction(format!("symbol is not generated in degree -1 (degree {})", -t)));
            }
            let pos: HashMap<usize, usize> = target.iter().enumerate().map(|(a, &i)| (i, a)).collect();
            let n = target.len();
            let mut m = Matrix::zeros(n, n);
            for (q, v) in vecs.iter().enumerate() {
                for (k, c) in v {
                    m[(pos[k], q)] = c.clone();
                }
            }
            let mut coeffs = HashMap::new();
            for (a, &b) in target.iter().enumerate() {
                let rhs: Vec<Scalar> = (0..n).map(|r| Scalar::int((r == a) as i64)).collect();
                let x = m.solve(&rhs).ok().ok_or_else(|| Error::Construction("singular presentation".into()))?;
                coeffs.insert(b, x.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect());
            }
            presentations.insert(-t, Presentation { pairs, coeffs });
        }
        Ok(Prolongation { symbol, levels: Vec::new(), status: Status::InProgress, presentations, nonneg: HashMap::new() })
    }

    pub fn depth(&self) -> i32 {
        -self.symbol.graded_dims().keys().next().copied().unwrap_or(-1)
    }

    fn n(&self) -> usize {
        self.symbol.dim()
    }

    fn offset(&self, k: usize) -> usize {
        self.n() + self.levels[..k].iter().map(Vec::len).sum::<usize>()
    }

    fn element(&self, g: usize) -> Option<&LevelElement> {
        let mut i = g.checked_sub(self.n())?;
        for l in &self.levels {
            if i < l.len() {
                return Some(&l[i]);
            }
            i -= l.len();
        }
        None
    }

    fn parity(&self, g: usize) -> Parity {
        match self.element(g) {
            Some(e) => e.parity,
            None => self.symbol.parities()[g],
        }
    }

    fn weight(&self, g: usize) -> Option<Vec<i32>> {
        match self.element(g) {
            Some(e) => e.weight.clone(),
            None => self.symbol.basis()[g].multidegree.clone(),
        }
    }

    /// Global indices of level `k` (or of `m` in degree `k` when negative).
    fn indices(&self, k: i32) -> Vec<usize> {
        if k < 0 {
            return self.symbol.indices_of_degree(k);
        }
        let k = k as usize;
        if k >= self.levels.len() {
            return Vec::new();
        }
        let o = self.offset(k);
        (o..o + self.levels[k].len()).collect()
    }

    /// Bracket of two global basis elements, at least one of them in `m` or
    /// the pair already recorded.
    fn br(&self, x: usize, y: usize) -> Vector {
        let n = self.n();
        match (x < n, y < n) {
            (true, true) => self.symbol.bracket_basis(x, y),
            (false, true) => self.element(x).unwrap().ad[y].clone(),
            (true, false) => {
                let s = Scalar::sign(!self.parity(x).koszul(self.parity(y)));
                let mut v = self.element(y).unwrap().ad[x].clone();
                for c in v.values_mut() {
                    *c = &*c * &s;
                }
                v
            }
            (false, false) => self.nonneg_get(x, y),
        }
    }

    fn nonneg_get(&self, x: usize, y: usize) -> Vector {
        if x <= y {
            return self.nonneg.get(&(x, y)).cloned().unwrap_or_default();
        }
        let s = Scalar::sign(!self.parity(x).koszul(self.parity(y)));
        let mut v = self.nonneg.get(&(y, x)).cloned().unwrap_or_default();
        for c in v.values_mut() {
            *c = &*c * &s;
        }
        v
    }

    fn add_form_times(dst: &mut FVec, f: &Form, v: &Vector) {
        for (k, c) in v {
            let e = dst.entry(*k).or_default();
            axpy(e, c, f);
            if e.is_empty() {
                dst.remove(k);
            }
        }
    }

    fn add_fvec(dst: &mut FVec, c: &Scalar, src: &FVec) {
        for (k, f) in src {
            let e = dst.entry(*k).or_default();
            axpy(e, c, f);
            if e.is_empty() {
                dst.remove(k);
            }
        }
    }

    /// `[A(w), v] + (-1)^{|A||w|} [w, A(v)]`.
    fn leibniz(&self, ext: &[FVec], odd: bool, w: usize, v: usize) -> FVec {
        let mut out = FVec::new();
        for (&x, f) in &ext[w] {
            Self::add_form_times(&mut out, f, &self.br(x, v));
        }
        let s = Scalar::sign(odd && self.parity(w).is_odd());
        let mut right = FVec::new();
        for (&y, f) in &ext[v] {
            Self::add_form_times(&mut right, f, &self.br(w, y));
        }
        Self::add_fvec(&mut out, &s, &right);
        out
    }

    /// Extends `A` from `g_{-1}` to all of `m` by the presentation.
    fn extend(&self, base: &HashMap<usize, FVec>, odd: bool) -> Vec<FVec> {
        let n = self.n();
        let mut ext = vec![FVec::new(); n];
        for (&u, f) in base {
            ext[u] = f.clone();
        }
        for t in 2..=self.depth() {
            let p = &self.presentations[&-t];
            let vals: Vec<FVec> = p.pairs.iter().map(|&(w, v)| self.leibniz(&ext, odd, w, v)).collect();
            for b in self.symbol.indices_of_degree(-t) {
                let mut acc = FVec::new();
                for (q, c) in &p.coeffs[&b] {
                    Self::add_fvec(&mut acc, c, &vals[*q]);
                }
                ext[b] = acc;
            }
        }
        ext
    }

    /// Compatibility rows for every `(u, v)`, `u` in `g_{-1}`.
    fn constraints(&self, ext: &[FVec], odd: bool, sink: &mut impl FnMut(Form) -> bool) {
        let g1 = self.symbol.indices_of_degree(-1);
        for &u in &g1 {
            for v in 0..self.n() {
                let mut d = FVec::new();
                for (b, c) in self.symbol.bracket_basis(u, v) {
                    Self::add_fvec(&mut d, &c, &ext[b]);
                }
                Self::add_fvec(&mut d, &Scalar::int(-1), &self.leibniz(ext, odd, u, v));
                for (_, row) in d {
                    if !sink(row) {
                        return;
                    }
                }
            }
        }
    }

    fn eval(f: &FVec, x: &SparseRow<Scalar>) -> Vector {
        let mut out = Vector::new();
        for (&k, form) in f {
            let mut s = Scalar::zero();
            for (v, c) in form {
                if let Some(a) = x.get(v) {
                    s += c * a;
                }
            }
            if !s.is_zero() {
                out.insert(k, s);
            }
        }
        out
    }

    fn shift(a: &Option<Vec<i32>>, b: &Option<Vec<i32>>) -> Option<Vec<i32>> {
        match (a, b) {
            (Some(x), Some(y)) if x.len() == y.len() => Some(x.iter().zip(y).map(|(p, q)| p - q).collect()),
            _ => None,
        }
    }

    /// Computes level `k` from the previous ones.
    pub fn prolong_step(&mut self) -> Result<usize> {
        let k = self.levels.len() as i32;
        let g1 = self.symbol.indices_of_degree(-1);
        let targets = self.indices(k - 1);
        // group unknowns (u, t) by parity and weight shift
        let mut blocks: BTreeMap<BlockKey, Vec<(usize, usize)>> = BTreeMap::new();
        for &u in &g1 {
            for &t in &targets {
                let p = self.parity(u) + self.parity(t);
                let w = Self::shift(&self.weight(t), &self.weight(u));
                blocks.entry((p, w)).or_default().push((u, t));
            }
        }
        let mut level = Vec::new();
        for ((p, w), vars) in blocks {
            let odd = p.is_odd();
            let mut base: HashMap<usize, FVec> = HashMap::new();
            for (i, &(u, t)) in vars.iter().enumerate() {
                base.entry(u).or_default().insert(t, Form::from([(i, Scalar::one())]));
            }
            let ext = self.extend(&base, odd);
            let mut ech = SparseEchelon::new(vars.len());
            let full = vars.len();
            self.constraints(&ext, odd, &mut |row| {
                ech.push(row);
                ech.rank() < full
            });
            for sol in ech.nullspace() {
                let ad: Vec<Vector> = ext.iter().map(|f| Self::eval(f, &sol)).collect();
                level.push(LevelElement { degree: k, parity: p, weight: w.clone(), ad });
            }
        }
        // keep even elements first within the level
        level.sort_by_key(|e| e.parity);
        let count = level.len();
        self.levels.push(level);
        Ok(count)
    }

    /// Installs a prescribed level 0 after checking it.
    pub fn set_level_zero(&mut self, red: &ReductionSpec) -> Result<()> {
        if !self.levels.is_empty() {
            return Err(Error::Construction("level 0 already present".into()));
        }
        let g1 = &red.basis;
        let n = g1.len();
        // split into parity parts and pick a basis of the span
        let mut parts = Vec::new();
        for m in &red.maps {
            let (e, o) = m.parity_split();
            for (part, par) in [(e, Parity::Even), (o, Parity::Odd)] {
                if !part.is_zero() {
                    parts.push((part, par));
                }
            }
        }
        let flat = |m: &GradedMap| -> SparseRow<Scalar> {
            let mut r = SparseRow::new();
            for a in 0..n {
                for b in 0..n {
                    let x = &m.matrix[(a, b)];
                    if !x.is_zero() {
                        r.insert(a * n + b, x.clone());
                    }
                }
            }
            r
        };
        let mut span = SparseEchelon::new(n * n);
        let mut chosen = Vec::new();
        for (m, p) in parts {
            if span.push(flat(&m)) {
                chosen.push((m, p));
            }
        }
        // grading element
        let mut id = SparseRow::new();
        for a in 0..n {
            id.insert(a * n + a, Scalar::int(-1));
        }
        if !span.contains(id) {
            return Err(Error::Construction("reduction misses the grading element".into()));
        }
        // closure
        for i in 0..chosen.len() {
            for j in i..chosen.len() {
                let (a, pa) = &chosen[i];
                let (b, pb) = &chosen[j];
                let s = Scalar::sign(!pa.koszul(*pb));
                let ab = a.matrix.mul(&b.matrix);
                let ba = b.matrix.mul(&a.matrix);
                let mut c = Matrix::zeros(n, n);
                for x in 0..n {
                    for y in 0..n {
                        c[(x, y)] = &ab[(x, y)] + &(&s * &ba[(x, y)]);
                    }
                }
                let cm = GradedMap { source: a.source, target: a.target, matrix: c };
                if !span.contains(flat(&cm)) {
                    return Err(Error::ReductionNotClosed);
                }
            }
        }
        let mut level = Vec::new();
        for (idx, (m, p)) in chosen.iter().enumerate() {
            let odd = p.is_odd();
            let mut base: HashMap<usize, FVec> = HashMap::new();
            let mut weight: Option<Option<Vec<i32>>> = None;
            for (a, &col) in g1.iter().enumerate() {
                let mut f = FVec::new();
                for (b, &row) in g1.iter().enumerate() {
                    let x = &m.matrix[(b, a)];
                    if !x.is_zero() {
                        f.insert(row, Form::from([(0usize, x.clone())]));
                        let w = Self::shift(&self.weight(row), &self.weight(col));
                        weight = match weight {
                            None => Some(w),
                            Some(prev) if prev == w => Some(prev),
                            Some(_) => Some(None),
                        };
                    }
                }
                base.insert(col, f);
            }
            let ext = self.extend(&base, odd);
            let mut bad = false;
            self.constraints(&ext, odd, &mut |row| {
                bad = !row.is_empty();
                !bad
            });
            if bad {
                return Err(Error::NotDerivation(idx));
            }
            let one = SparseRow::from([(0usize, Scalar::one())]);
            let ad: Vec<Vector> = ext.iter().map(|f| Self::eval(f, &one)).collect();
            level.push(LevelElement { degree: 0, parity: *p, weight: weight.flatten(), ad });
        }
        // a weight is only usable if every element has one
        if level.iter().any(|e| e.weight.is_none()) {
            for e in &mut level {
                e.weight = None;
            }
        }
        level.sort_by_key(|e| e.parity);
        self.levels.push(level);
        Ok(())
    }

    /// Runs to termination or to `threshold` (inclusive).
    pub fn run(&mut self, threshold: usize) -> Result<Status> {
        let min = self.depth() as usize + 1;
        if threshold < min {
            return Err(Error::Threshold { threshold, min });
        }
        while self.levels.len() <= threshold {
            if let Some(l) = self.levels.last() {
                if l.is_empty() {
                    break;
                }
            }
            self.prolong_step()?;
        }
        if self.levels.last().is_some_and(|l| l.is_empty()) {
            self.levels.pop();
            self.status = Status::Finite;
            self.nonneg_brackets()?;
        } else {
            self.status = Status::ThresholdExceeded;
        }
        Ok(self.status)
    }

    /// Map induced on `g_{-1}` by a global vector: `u -> [x, u]`.
    fn induced(&self, x: &Vector) -> BTreeMap<(usize, usize), Scalar> {
        let mut out = BTreeMap::new();
        for u in self.symbol.indices_of_degree(-1) {
            let mut acc = Vector::new();
            for (&g, c) in x {
                axpy(&mut acc, c, &self.br(g, u));
            }
            for (k, c) in acc {
                out.insert((u, k), c);
            }
        }
        out
    }

    /// Brackets among nonnegative levels, in increasing total degree.
    fn nonneg_brackets(&mut self) -> Result<()> {
        let top = self.levels.len() as i32 - 1;
        let g1 = self.symbol.indices_of_degree(-1);
        let all: Vec<usize> = (0..=top).flat_map(|k| self.indices(k)).collect();
        let degree = |s: &Self, g: usize| s.element(g).unwrap().degree;
        for total in 0..=2 * top {
            for (a, &x) in all.iter().enumerate() {
                for &y in &all[a..] {
                    if degree(self, x) + degree(self, y) != total {
                        continue;
                    }
                    if x == y && !self.parity(x).is_odd() {
                        continue;
                    }
                    // [[x,y],u] = [x,[y,u]] - (-1)^{|x||y|} [y,[x,u]]
                    let s = Scalar::sign(!self.parity(x).koszul(self.parity(y)));
                    let mut map: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
                    for &u in &g1 {
                        let mut acc = Vector::new();
                        for (g, c) in self.br(y, u) {
                            axpy(&mut acc, &c, &self.br(x, g));
                        }
                        for (g, c) in self.br(x, u) {
                            axpy(&mut acc, &(&c * &s), &self.br(y, g));
                        }
                        for (k, c) in acc {
                            map.insert((u, k), c);
                        }
                    }
                    if map.is_empty() {
                        continue;
                    }
                    if total > top {
                        return Err(Error::Decomposition(degree(self, x), degree(self, y)));
                    }
                    let par = self.parity(x) + self.parity(y);
                    let w = match (self.weight(x), self.weight(y)) {
                        (Some(p), Some(q)) => Some(p.iter().zip(&q).map(|(a, b)| a + b).collect::<Vec<_>>()),
                        _ => None,
                    };
                    let cands: Vec<usize> = self
                        .indices(total)
                        .into_iter()
                        .filter(|&g| self.parity(g) == par && (w.is_none() || self.weight(g) == w))
                        .collect();
                    let v = self.decompose(&map, &cands).ok_or(Error::Decomposition(degree(self, x), degree(self, y)))?;
                    self.nonneg.insert((x, y), v);
                }
            }
        }
        Ok(())
    }

    fn decompose(&self, map: &BTreeMap<(usize, usize), Scalar>, cands: &[usize]) -> Option<Vector> {
        let cols: Vec<BTreeMap<(usize, usize), Scalar>> = cands.iter().map(|&g| self.induced(&Vector::from([(g, Scalar::one())]))).collect();
        let mut keys: Vec<(usize, usize)> = map.keys().copied().collect();
        for c in &cols {
            keys.extend(c.keys().copied());
        }
        keys.sort();
        keys.dedup();
        let mut m = Matrix::zeros(keys.len(), cands.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, k) in keys.iter().enumerate() {
                if let Some(x) = c.get(k) {
                    m[(i, j)] = x.clone();
                }
            }
        }
        let rhs: Vec<Scalar> = keys.iter().map(|k| map.get(k).cloned().unwrap_or_default()).collect();
        let x = m.solve(&rhs).ok()?;
        Some(cands.iter().zip(x).filter(|(_, c)| !c.is_zero()).map(|(&g, c)| (g, c)).collect())
    }

    pub fn level_dims(&self) -> Vec<SuperDim> {
        self.levels
            .iter()
            .map(|l| {
                let mut d = SuperDim::ZERO;
                for e in l {
                    d.count(e.parity);
                }
                d
            })
            .collect()
    }

    /// `m` together with all levels as one graded algebra. Brackets between
    /// nonnegative levels are only available once the run is finite.
    pub fn assemble(&self) -> GradedLieSuperalgebra {
        let n = self.n();
        let mut basis: Vec<BasisElement> = self.symbol.basis().to_vec();
        for (k, l) in self.levels.iter().enumerate() {
            for (i, e) in l.iter().enumerate() {
                basis.push(BasisElement {
                    label: format!("g{k}.{i}"),
                    parity: e.parity,
                    degree: e.degree,
                    multidegree: e.weight.clone(),
                });
            }
        }
        let mut brackets = Vec::new();
        for (&(i, j), v) in self.symbol.table().stored() {
            brackets.push((i, j, v.clone()));
        }
        for g in n..basis.len() {
            for v in 0..n {
                brackets.push((g, v, self.element(g).unwrap().ad[v].clone()));
            }
        }
        for (&(i, j), v) in &self.nonneg {
            brackets.push((i, j, v.clone()));
        }
        let prov = Provenance { name: self.symbol.provenance.name.clone(), route: "prolongation".into() };
        GradedLieSuperalgebra::from_brackets(basis, brackets, prov)
    }

    /// No nonzero level element annihilates `g_{-1}`.
    pub fn is_transitive(&self) -> bool {
        let g1 = self.symbol.indices_of_degree(-1);
        self.levels.iter().flatten().all(|e| g1.iter().any(|&u| !e.ad[u].is_empty()))
    }
}

/// Full prolongation of `m`, optionally with a prescribed degree-0 part.
pub fn prolong(
    m: &GradedLieSuperalgebra,
    reduction: Option<&ReductionSpec>,
    threshold: usize,
) -> Result<(Prolongation, Status)> {
    let mut p = Prolongation::new(m.clone())?;
    if let Some(r) = reduction {
        p.set_level_zero(r)?;
    }
    let s = p.run(threshold)?;
    Ok((p, s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::{build_full, build_symbol};
    use crate::roots::{Algebra, ParabolicId};
    use crate::superalg::unit;

    fn el(label: &str, p: Parity, d: i32) -> BasisElement {
        BasisElement { label: label.into(), parity: p, degree: d, multidegree: None }
    }

    #[test]
    fn abelian_symbol() {
        // abelian (1|1) in degree -1: level 0 is gl(1|1)
        let m = GradedLieSuperalgebra::from_brackets(
            vec![el("x", Parity::Even, -1), el("y", Parity::Odd, -1)],
            [],
            Provenance::default(),
        );
        let mut p = Prolongation::new(m).unwrap();
        p.prolong_step().unwrap();
        assert_eq!(p.level_dims()[0], SuperDim::new(2, 2));
    }

    #[test]
    fn heisenberg_level_zero() {
        // [x, y] = z: der_0 is gl(2)
        let m = GradedLieSuperalgebra::from_brackets(
            vec![el("x", Parity::Even, -1), el("y", Parity::Even, -1), el("z", Parity::Even, -2)],
            [(0, 1, unit(2))],
            Provenance::default(),
        );
        let mut p = Prolongation::new(m).unwrap();
        p.prolong_step().unwrap();
        assert_eq!(p.level_dims()[0], SuperDim::new(4, 0));
        assert!(p.is_transitive());
    }

    #[test]
    fn g3_iv_2_is_finite() {
        let q = ParabolicId::parse(Algebra::G3, "IV", "2").unwrap();
        let s = build_symbol(&q).unwrap();
        let (p, st) = prolong(&s, None, s.depth() as usize + 2).unwrap();
        assert_eq!(st, Status::Finite);
        let g = p.assemble();
        assert_eq!(g.superdim(), SuperDim::new(17, 14));
        assert!(g.check_jacobi().is_ok());
        let f = build_full(q.diagram).unwrap();
        assert_eq!(g.graded_dims(), f.graded_dims_for(&q));
    }

    #[test]
    fn reduction_for_contact_case() {
        let q = ParabolicId::parse(Algebra::G3, "I", "1").unwrap();
        let s = build_symbol(&q).unwrap();
        let f = build_full(q.diagram).unwrap();
        let r = ReductionSpec::from_full(&f, &s).unwrap();
        assert_eq!(r.maps.len(), 15);
        let (p, st) = prolong(&s, Some(&r), 4).unwrap();
        assert_eq!(st, Status::Finite);
        assert_eq!(p.assemble().superdim(), SuperDim::new(17, 14));
    }

    #[test]
    fn threshold_guard() {
        let q = ParabolicId::parse(Algebra::G3, "I", "1").unwrap();
        let s = build_symbol(&q).unwrap();
        assert!(matches!(prolong(&s, None, 2), Err(Error::Threshold { .. })));
    }
}
