//! Construction of symbol algebras and of the full superalgebras from root data.
//!
//! The symbol of a diagram is solved once with every node crossed (the
//! nilradical of the Borel), then regraded for each crossing set. Constants
//! are found height by height from the Jacobi identity; the lexicographically
//! first pair producing each root is normalized to 1. A constant the identity
//! leaves free at its own height is carried as a parameter `t` until a higher
//! height pins it down.
//!
//! The full algebra is built as the contragredient superalgebra of the Cartan
//! matrix: root vectors are iterated brackets of simple ones, and every new
//! vector is identified by its images under the opposite simple generators.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::linalg::{axpy, Matrix};
use crate::ratfunc::{Poly, RatFunc};
use crate::roots::{cartan, grading_weight, positive_roots, Algebra, DiagramId, ParabolicId, RootVector};
use crate::scalar::{Field, Scalar};
use crate::superalg::{
    scaled, unit, BasisElement, GradedLieSuperalgebra, GradedMap, Parity, Provenance, SuperDim, Vector,
};

/// The negative part `m` of a parabolic grading.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolAlgebra {
    pub parabolic: ParabolicId,
    pub algebra: GradedLieSuperalgebra,
}

impl std::ops::Deref for SymbolAlgebra {
    type Target = GradedLieSuperalgebra;
    fn deref(&self) -> &GradedLieSuperalgebra {
        &self.algebra
    }
}

impl SymbolAlgebra {
    pub fn depth(&self) -> i32 {
        -self.graded_dims().keys().next().copied().unwrap_or(0)
    }

    /// Restriction to a smaller crossing set. Degrees are recomputed from
    /// multidegrees and elements of weight zero are dropped.
    pub fn regrade(&self, crossing: &ParabolicId) -> Result<SymbolAlgebra> {
        if crossing.diagram != self.parabolic.diagram
            || !crossing.crossing().iter().all(|&k| self.parabolic.crosses(k))
        {
            return Err(Error::Unknown { kind: "regrading", value: format!("{} from {}", crossing, self.parabolic) });
        }
        let weight = |b: &BasisElement| -> i32 {
            let m = b.multidegree.as_ref().expect("root elements carry multidegrees");
            crossing.crossing().iter().map(|&k| m[k - 1]).sum()
        };
        let keep: Vec<usize> = (0..self.dim()).filter(|&i| weight(&self.basis()[i]) < 0).collect();
        let mut alg = self.algebra.restrict(&keep)?.regraded(weight);
        alg.provenance = Provenance { name: crossing.to_string(), route: "symbol".into() };
        Ok(SymbolAlgebra { parabolic: crossing.clone(), algebra: alg })
    }

    /// Every pair of basis elements whose roots sum to a root has a nonzero
    /// bracket. Returns the first offending pair.
    pub fn root_sums_nonzero(&self) -> std::result::Result<(), (usize, usize)> {
        let md: Vec<&Vec<i32>> = self.basis().iter().map(|b| b.multidegree.as_ref().unwrap()).collect();
        let index: HashMap<&Vec<i32>, usize> = md.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        for i in 0..self.dim() {
            for j in i..self.dim() {
                if i == j && !self.parities()[i].is_odd() {
                    continue;
                }
                let s: Vec<i32> = md[i].iter().zip(md[j]).map(|(a, b)| a + b).collect();
                if index.contains_key(&s) && self.bracket_basis(i, j).is_empty() {
                    return Err((i, j));
                }
            }
        }
        Ok(())
    }
}

fn cache<K: std::hash::Hash + Eq + Copy, V>(
    cell: &'static OnceLock<Mutex<HashMap<K, Arc<V>>>>,
    key: K,
    make: impl FnOnce() -> Result<V>,
) -> Result<Arc<V>> {
    let m = cell.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = m.lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let v = Arc::new(make()?);
    m.lock().unwrap().insert(key, v.clone());
    Ok(v)
}

/// Symbol of the Borel grading (all nodes crossed); cached per diagram.
pub fn borel_symbol(d: DiagramId) -> Result<Arc<SymbolAlgebra>> {
    static CELL: OnceLock<Mutex<HashMap<DiagramId, Arc<SymbolAlgebra>>>> = OnceLock::new();
    cache(&CELL, d, || solve_borel(d))
}

pub fn build_symbol(p: &ParabolicId) -> Result<SymbolAlgebra> {
    borel_symbol(p.diagram)?.regrade(p)
}

/// Bracket constants of the Borel symbol on positive-root labels, `i <= j`.
struct Solver<'a> {
    roots: &'a [RootVector],
    index: HashMap<Vec<i32>, usize>,
    known: HashMap<(usize, usize), RatFunc>,
    pending: Option<(usize, usize)>,
}

impl Solver<'_> {
    fn par(&self, i: usize) -> Parity {
        self.roots[i].parity
    }

    fn sum(&self, i: usize, j: usize) -> Option<usize> {
        if i == j && !self.par(i).is_odd() {
            return None;
        }
        let s: Vec<i32> = self.roots[i].coeffs.iter().zip(&self.roots[j].coeffs).map(|(a, b)| a + b).collect();
        self.index.get(&s).copied()
    }

    /// Sign relating `[b_i, b_j]` to the stored `[b_j, b_i]`.
    fn swap_sign(&self, i: usize, j: usize) -> Scalar {
        Scalar::sign(!self.par(i).koszul(self.par(j)))
    }

    /// `(target, key, sign)` with `[b_i, b_j] = sign * c_key b_target`.
    fn slot(&self, i: usize, j: usize) -> Option<(usize, (usize, usize), Scalar)> {
        let t = self.sum(i, j)?;
        Some(if i <= j { (t, (i, j), Scalar::one()) } else { (t, (j, i), self.swap_sign(i, j)) })
    }

    fn height(&self, i: usize) -> i32 {
        self.roots[i].height()
    }

    fn solve_height(&mut self, h: i32) -> Result<()> {
        let n = self.roots.len();
        let unknowns: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.height(i) + self.height(j) == h && self.sum(i, j).is_some())
            .collect();
        if unknowns.is_empty() {
            return Ok(());
        }
        let col: HashMap<(usize, usize), usize> = unknowns.iter().enumerate().map(|(c, &u)| (u, c)).collect();
        let width = unknowns.len();
        let mut rows: Vec<Vec<RatFunc>> = Vec::new();
        let mut triples = Vec::new();
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    if self.height(i) + self.height(j) + self.height(k) != h {
                        continue;
                    }
                    let mut row = vec![RatFunc::zero(); width + 1];
                    let mut any = false;
                    let cyc = [(i, j, k, (i, k)), (j, k, i, (j, i)), (k, i, j, (k, j))];
                    for (a, b, c, (s1, s2)) in cyc {
                        let Some((t, key, sg)) = self.slot(b, c) else { continue };
                        let inner = self.known[&key].mul(&RatFunc::from_scalar(&sg));
                        let Some((_, okey, osg)) = self.slot(a, t) else { continue };
                        let sign = Scalar::sign(self.par(s1).koszul(self.par(s2))) * osg;
                        let term = inner.mul(&RatFunc::from_scalar(&sign));
                        let cidx = col[&okey];
                        row[cidx] = row[cidx].add(&term);
                        any = true;
                    }
                    if any && row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                        triples.push((i, j, k));
                    }
                }
            }
        }
        let mut first: BTreeMap<usize, usize> = BTreeMap::new();
        for (c, &(i, j)) in unknowns.iter().enumerate() {
            first.entry(self.sum(i, j).unwrap()).or_insert(c);
        }
        for &c in first.values() {
            let mut row = vec![RatFunc::zero(); width + 1];
            row[c] = RatFunc::one();
            row[width] = RatFunc::one();
            rows.push(row);
        }
        let mut param_col = None;
        loop {
            let mut all = rows.clone();
            if let Some(c) = param_col {
                let mut row = vec![RatFunc::zero(); width + 1];
                row[c] = RatFunc::one();
                row[width] = RatFunc::t();
                all.push(row);
            }
            let (r, pivots) = Matrix::from_rows(all).rref_upto(width);
            // rows past the pivots carry the consistency conditions
            let conds: Vec<Poly> =
                (pivots.len()..r.rows()).map(|i| r[(i, width)].numer().clone()).filter(|p| !p.is_zero()).collect();
            if !conds.is_empty() {
                let bad = triples.first().copied().unwrap_or((0, 0, 0));
                if self.pending.is_none() && param_col.is_none() {
                    return Err(Error::InconsistentJacobi { height: h as usize, triple: bad });
                }
                let g = conds.iter().skip(1).fold(conds[0].clone(), |a, b| a.gcd(b));
                let roots = g.rational_roots();
                if roots.len() != 1 {
                    return Err(Error::InconsistentJacobi { height: h as usize, triple: bad });
                }
                self.substitute(&roots[0])?;
                if param_col.is_some() {
                    return Err(Error::Underdetermined { height: h as usize, free: 1 });
                }
                // redo this height with the parameter fixed
                return self.solve_height(h);
            }
            let free: Vec<usize> = (0..width).filter(|c| !pivots.contains(c)).collect();
            if !free.is_empty() {
                if self.pending.is_some() || free.len() > 1 || param_col.is_some() {
                    return Err(Error::Underdetermined { height: h as usize, free: free.len() });
                }
                param_col = Some(free[0]);
                continue;
            }
            for (row, &c) in pivots.iter().enumerate() {
                self.known.insert(unknowns[c], r[(row, width)].clone());
            }
            if let Some(c) = param_col {
                self.pending = Some(unknowns[c]);
            }
            return Ok(());
        }
    }

    fn substitute(&mut self, x: &Scalar) -> Result<()> {
        for v in self.known.values_mut() {
            let s = v.eval(x).ok_or_else(|| Error::Construction("pole at the fixed parameter value".into()))?;
            *v = RatFunc::from_scalar(&s);
        }
        self.pending = None;
        Ok(())
    }
}

fn solve_borel(d: DiagramId) -> Result<SymbolAlgebra> {
    let roots = positive_roots(d);
    let index = roots.iter().enumerate().map(|(i, r)| (r.coeffs.clone(), i)).collect();
    let mut s = Solver { roots: &roots, index, known: HashMap::new(), pending: None };
    let top = roots.iter().map(RootVector::height).max().unwrap_or(1);
    for h in 2..=top {
        s.solve_height(h)?;
    }
    if s.pending.is_some() {
        return Err(Error::Underdetermined { height: top as usize, free: 1 });
    }
    let basis: Vec<BasisElement> = roots
        .iter()
        .map(|r| BasisElement {
            label: negate(r).label(),
            parity: r.parity,
            degree: -r.height(),
            multidegree: Some(r.coeffs.iter().map(|m| -m).collect()),
        })
        .collect();
    let mut brackets = Vec::new();
    for (&(i, j), c) in &s.known {
        let c = c.as_constant().ok_or_else(|| Error::Construction("unresolved parameter".into()))?;
        let t = s.sum(i, j).unwrap();
        brackets.push((i, j, scaled(&unit(t), &c)));
    }
    let all = ParabolicId::new(d, 1..=d.rank())?;
    let alg = GradedLieSuperalgebra::from_brackets(basis, brackets, Provenance { name: all.to_string(), route: "symbol".into() });
    Ok(SymbolAlgebra { parabolic: all, algebra: alg })
}

fn negate(r: &RootVector) -> RootVector {
    RootVector {
        diagram: r.diagram,
        coeffs: r.coeffs.iter().map(|m| -m).collect(),
        parity: r.parity,
        ambient: r.ambient.scale(&Scalar::int(-1)),
    }
}

/// The full simple superalgebra with basis `h_1..h_r`, `e_α`, `f_α`.
/// Degrees default to the height grading.
#[derive(Clone, Debug)]
pub struct FullAlgebra {
    pub diagram: DiagramId,
    pub algebra: GradedLieSuperalgebra,
    pub roots: Vec<RootVector>,
}

impl std::ops::Deref for FullAlgebra {
    type Target = GradedLieSuperalgebra;
    fn deref(&self) -> &GradedLieSuperalgebra {
        &self.algebra
    }
}

/// Index layout of the full basis.
#[derive(Clone, Copy)]
struct Layout {
    r: usize,
    n: usize,
}

impl Layout {
    fn h(self, i: usize) -> usize {
        i
    }
    fn e(self, m: usize) -> usize {
        self.r + m
    }
    fn f(self, m: usize) -> usize {
        self.r + self.n + m
    }
    fn dim(self) -> usize {
        self.r + 2 * self.n
    }
}

/// One side (`e` or `f`) of the contragredient construction.
struct Side {
    /// `[y_t, y_m] = c y_{m+α_t}` keyed by `(t, m)`
    y: HashMap<(usize, usize), Scalar>,
    /// `[x_j, y_m]` in the full basis
    x: Vec<HashMap<usize, Vector>>,
    /// chosen defining pair `m + α_t` for each non-simple root
    def: HashMap<usize, (usize, usize)>,
}

fn build_side(roots: &[RootVector], a: &[Vec<Scalar>], lay: Layout, positive: bool) -> Result<Side> {
    let r = lay.r;
    let index: HashMap<&Vec<i32>, usize> = roots.iter().enumerate().map(|(i, x)| (&x.coeffs, i)).collect();
    let simple: Vec<usize> = (0..r)
        .map(|i| {
            let c: Vec<i32> = (0..r).map(|j| (i == j) as i32).collect();
            index[&c]
        })
        .collect();
    let par = |m: usize| roots[m].parity;
    let sp = |t: usize| par(simple[t]);
    // α_m(h_i)
    let wt = |m: usize, i: usize| -> Scalar {
        roots[m].coeffs.iter().enumerate().map(|(j, &c)| Scalar::int(c as i64) * &a[i][j]).sum()
    };
    let ypos = |m: usize| if positive { lay.e(m) } else { lay.f(m) };
    // [h_i, y_m]
    let hy = |i: usize, m: usize| if positive { wt(m, i) } else { -wt(m, i) };
    // [x_t, y_t] = kappa_t h_t
    let kappa = |t: usize| if positive { -Scalar::sign(sp(t).is_odd()) } else { Scalar::one() };
    let mut side = Side { y: HashMap::new(), x: vec![HashMap::new(); r], def: HashMap::new() };
    for j in 0..r {
        for i in 0..r {
            let v = if i == j { scaled(&unit(lay.h(i)), &kappa(i)) } else { Vector::new() };
            side.x[j].insert(simple[i], v);
        }
    }
    let root_of_pos: HashMap<usize, usize> = (0..roots.len()).map(|m| (ypos(m), m)).collect();
    let top = roots.iter().map(RootVector::height).max().unwrap_or(1);
    for h in 2..=top {
        for t in 0..r {
            for m in (0..roots.len()).filter(|&m| roots[m].height() == h - 1) {
                // [y_t, v] for v in span{h} + lower y's
                let ybr = |side: &Side, v: &Vector| -> Vector {
                    let mut out = Vector::new();
                    for (&k, c) in v {
                        if k < r {
                            // [y_t, h_k] = -[h_k, y_t]
                            let w = scaled(&unit(ypos(simple[t])), &-hy(k, simple[t]));
                            axpy(&mut out, c, &w);
                        } else {
                            let mm = root_of_pos[&k];
                            if let Some(cc) = side.y.get(&(t, mm)) {
                                if let Some(tg) = plus(roots, &index, mm, t) {
                                    axpy(&mut out, c, &scaled(&unit(ypos(tg)), cc));
                                }
                            }
                        }
                    }
                    out
                };
                let images: Vec<Vector> = (0..r)
                    .map(|j| {
                        let mut v = Vector::new();
                        if j == t {
                            v = scaled(&unit(ypos(m)), &(kappa(t) * hy(t, m)));
                        }
                        let s = Scalar::sign(sp(j).koszul(sp(t)));
                        axpy(&mut v, &s, &ybr(&side, &side.x[j][&m]));
                        v
                    })
                    .collect();
                let nonzero = images.iter().any(|v| !v.is_empty());
                let Some(tgt) = plus(roots, &index, m, t) else {
                    if nonzero {
                        return Err(Error::Construction(format!("bracket of {} with simple {} leaves the roots", roots[m].label(), t + 1)));
                    }
                    continue;
                };
                if !side.x[0].contains_key(&tgt) {
                    if nonzero {
                        for (j, v) in images.into_iter().enumerate() {
                            side.x[j].insert(tgt, v);
                        }
                        side.y.insert((t, m), Scalar::one());
                        side.def.insert(tgt, (t, m));
                    }
                    continue;
                }
                // proportionality constant
                let mut c = None;
                for j in 0..r {
                    if let Some((k, v)) = side.x[j][&tgt].iter().next() {
                        c = Some(images[j].get(k).cloned().unwrap_or_default() / v);
                        break;
                    }
                }
                let c = c.ok_or_else(|| Error::Construction("root vector with no images".into()))?;
                for j in 0..r {
                    let mut d = images[j].clone();
                    axpy(&mut d, &-&c, &side.x[j][&tgt]);
                    if !d.is_empty() {
                        return Err(Error::Construction(format!("images not proportional at {}", roots[tgt].label())));
                    }
                }
                if !c.is_zero() {
                    side.y.insert((t, m), c);
                }
            }
        }
        for m in (0..roots.len()).filter(|&m| roots[m].height() == h) {
            if !side.x[0].contains_key(&m) {
                return Err(Error::Construction(format!("root {} not reached", roots[m].label())));
            }
        }
    }
    Ok(side)
}

fn plus(roots: &[RootVector], index: &HashMap<&Vec<i32>, usize>, m: usize, t: usize) -> Option<usize> {
    let mut c = roots[m].coeffs.clone();
    c[t] += 1;
    index.get(&c).copied()
}

/// Sparse operator: image of each basis vector.
type Operator = Vec<Vector>;

fn apply(op: &Operator, v: &Vector) -> Vector {
    let mut out = Vector::new();
    for (&k, c) in v {
        axpy(&mut out, c, &op[k]);
    }
    out
}

/// `[A, B] = AB - (-1)^{ab} BA`.
fn supercommutator(a: &Operator, b: &Operator, odd: bool) -> Operator {
    let s = Scalar::sign(!odd);
    (0..a.len())
        .map(|k| {
            let mut v = apply(a, &b[k]);
            axpy(&mut v, &s, &apply(b, &a[k]));
            v
        })
        .collect()
}

/// Full algebra of a diagram; cached.
pub fn build_full(d: DiagramId) -> Result<Arc<FullAlgebra>> {
    static CELL: OnceLock<Mutex<HashMap<DiagramId, Arc<FullAlgebra>>>> = OnceLock::new();
    cache(&CELL, d, || construct_full(d))
}

fn construct_full(d: DiagramId) -> Result<FullAlgebra> {
    let roots = positive_roots(d);
    let a = cartan(d);
    let r = d.rank();
    let n = roots.len();
    let lay = Layout { r, n };
    let es = build_side(&roots, &a, lay, true)?;
    let fs = build_side(&roots, &a, lay, false)?;
    let index: HashMap<&Vec<i32>, usize> = roots.iter().enumerate().map(|(i, x)| (&x.coeffs, i)).collect();
    let simple: Vec<usize> = (0..r)
        .map(|i| index[&(0..r).map(|j| (i == j) as i32).collect::<Vec<_>>()])
        .collect();
    let wt = |m: usize, i: usize| -> Scalar {
        roots[m].coeffs.iter().enumerate().map(|(j, &c)| Scalar::int(c as i64) * &a[i][j]).sum()
    };
    let dim = lay.dim();
    let mut parity = vec![Parity::Even; dim];
    for m in 0..n {
        parity[lay.e(m)] = roots[m].parity;
        parity[lay.f(m)] = roots[m].parity;
    }
    // ad of the generators
    let mut ad: Vec<Option<Operator>> = vec![None; dim];
    for i in 0..r {
        let mut op = vec![Vector::new(); dim];
        for m in 0..n {
            op[lay.e(m)] = scaled(&unit(lay.e(m)), &wt(m, i));
            op[lay.f(m)] = scaled(&unit(lay.f(m)), &-wt(m, i));
        }
        ad[lay.h(i)] = Some(op);
    }
    for (t, &st) in simple.iter().enumerate() {
        for (positive, own, other) in [(true, &es, &fs), (false, &fs, &es)] {
            let ypos = |m: usize| if positive { lay.e(m) } else { lay.f(m) };
            let mut op = vec![Vector::new(); dim];
            for k in 0..r {
                // [y_t, h_k] = -[h_k, y_t]
                let hv = if positive { wt(st, k) } else { -wt(st, k) };
                op[lay.h(k)] = scaled(&unit(ypos(st)), &-hv);
            }
            for m in 0..n {
                if let Some(c) = own.y.get(&(t, m)) {
                    let tg = plus(&roots, &index, m, t).unwrap();
                    op[ypos(m)] = scaled(&unit(ypos(tg)), c);
                }
                let opp = if positive { lay.f(m) } else { lay.e(m) };
                op[opp] = other.x[t][&m].clone();
            }
            ad[ypos(st)] = Some(op);
        }
    }
    // composite root vectors, by height
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&m| roots[m].height());
    for &m in &order {
        for (positive, side) in [(true, &es), (false, &fs)] {
            let ypos = |m: usize| if positive { lay.e(m) } else { lay.f(m) };
            if ad[ypos(m)].is_some() {
                continue;
            }
            let (t, base) = side.def[&m];
            let odd = roots[simple[t]].parity.koszul(roots[base].parity);
            let op = supercommutator(
                ad[ypos(simple[t])].as_ref().unwrap(),
                ad[ypos(base)].as_ref().unwrap(),
                odd,
            );
            ad[ypos(m)] = Some(op);
        }
    }
    let mut basis = Vec::with_capacity(dim);
    for i in 0..r {
        basis.push(BasisElement { label: format!("h{}", i + 1), parity: Parity::Even, degree: 0, multidegree: Some(vec![0; r]) });
    }
    for sign in [1, -1] {
        for x in &roots {
            let rv = if sign == 1 { x.clone() } else { negate(x) };
            basis.push(BasisElement {
                label: rv.label(),
                parity: x.parity,
                degree: sign * x.height(),
                multidegree: Some(rv.coeffs.clone()),
            });
        }
    }
    let mut brackets = Vec::new();
    for (i, op) in ad.iter().enumerate() {
        let op = op.as_ref().unwrap();
        for j in i..dim {
            brackets.push((i, j, op[j].clone()));
        }
    }
    let alg = GradedLieSuperalgebra::from_brackets(basis, brackets, Provenance { name: d.to_string(), route: "full".into() });
    Ok(FullAlgebra { diagram: d, algebra: alg, roots })
}

impl FullAlgebra {
    fn weight(&self, b: &BasisElement, p: &ParabolicId) -> i32 {
        let m = b.multidegree.as_ref().unwrap();
        p.crossing().iter().map(|&k| m[k - 1]).sum()
    }

    /// The algebra with the grading of `p`.
    pub fn graded(&self, p: &ParabolicId) -> GradedLieSuperalgebra {
        let mut g = self.algebra.regraded(|b| self.weight(b, p));
        g.provenance.name = p.to_string();
        g
    }

    pub fn graded_parts(&self, p: &ParabolicId) -> BTreeMap<i32, Vec<usize>> {
        let mut m: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
        for (i, b) in self.basis().iter().enumerate() {
            m.entry(self.weight(b, p)).or_default().push(i);
        }
        m
    }

    pub fn graded_dims_for(&self, p: &ParabolicId) -> BTreeMap<i32, SuperDim> {
        self.graded(p).graded_dims()
    }

    /// Negative part as its own algebra.
    pub fn negative_part(&self, p: &ParabolicId) -> Result<GradedLieSuperalgebra> {
        let g = self.graded(p);
        let keep: Vec<usize> = (0..g.dim()).filter(|&i| g.basis()[i].degree < 0).collect();
        g.restrict(&keep)
    }

    /// Degree -1 basis of `p`, even elements first.
    pub fn minus_one(&self, p: &ParabolicId) -> Vec<usize> {
        let mut v = self.graded_parts(p).remove(&-1).unwrap_or_default();
        v.sort_by_key(|&i| (self.parities()[i], i));
        v
    }

    /// Action of each degree-0 basis element on `g_{-1}`; rows and columns
    /// follow [`FullAlgebra::minus_one`]. Elements acting trivially are
    /// dropped (there are none for a transitive grading).
    pub fn levi_action(&self, p: &ParabolicId) -> Vec<GradedMap> {
        let g1 = self.minus_one(p);
        let sd = superdim_of(self.parities(), &g1);
        let pos: HashMap<usize, usize> = g1.iter().enumerate().map(|(a, &i)| (i, a)).collect();
        let zero = self.graded_parts(p).remove(&0).unwrap_or_default();
        let mut maps: Vec<GradedMap> = zero
            .iter()
            .map(|&z| {
                let mut m = Matrix::zeros(g1.len(), g1.len());
                for (col, &v) in g1.iter().enumerate() {
                    for (k, c) in self.bracket_basis(z, v) {
                        m[(pos[&k], col)] = c;
                    }
                }
                GradedMap { source: sd, target: sd, matrix: m }
            })
            .collect();
        maps.retain(|m| !m.is_zero());
        maps
    }

    /// Diagonal isomorphism from the symbol onto the negative part:
    /// `s_m -> λ_m f_m`. Returns, per symbol basis element, the full index and
    /// `λ`. The scalars are fixed on the Borel symbol, where every non-simple
    /// root has a producing pair, and every bracket of `s` is verified.
    pub fn symbol_embedding(&self, s: &SymbolAlgebra) -> Result<Vec<(usize, Scalar)>> {
        let fail = || Error::Construction(format!("symbol of {} does not embed", s.parabolic));
        let borel = borel_symbol(self.diagram)?;
        let by_label: HashMap<&str, usize> = self.basis().iter().enumerate().map(|(i, b)| (b.label.as_str(), i)).collect();
        let target: Vec<usize> = borel
            .basis()
            .iter()
            .map(|b| by_label.get(b.label.as_str()).copied().ok_or_else(fail))
            .collect::<Result<_>>()?;
        let mut lambda: Vec<Option<Scalar>> = vec![None; borel.dim()];
        // first pair producing each element; the basis is ordered by height
        let mut producer: HashMap<usize, (usize, usize, Scalar)> = HashMap::new();
        for i in 0..borel.dim() {
            for j in i..borel.dim() {
                if let Some((&k, c)) = borel.bracket_basis(i, j).iter().next() {
                    producer.entry(k).or_insert((i, j, c.clone()));
                }
            }
        }
        for k in 0..borel.dim() {
            let l = match producer.get(&k) {
                None => Scalar::one(),
                Some((i, j, c)) => {
                    let (li, lj) = (lambda[*i].clone().ok_or_else(fail)?, lambda[*j].clone().ok_or_else(fail)?);
                    let n = self.bracket_basis(target[*i], target[*j]).get(&target[k]).cloned().ok_or_else(fail)?;
                    li * lj * n / c
                }
            };
            lambda[k] = Some(l);
        }
        let borel_index: HashMap<&str, usize> = borel.basis().iter().enumerate().map(|(i, b)| (b.label.as_str(), i)).collect();
        let emb: Vec<(usize, Scalar)> = s
            .basis()
            .iter()
            .map(|b| {
                let k = *borel_index.get(b.label.as_str()).ok_or_else(fail)?;
                Ok((target[k], lambda[k].clone().ok_or_else(fail)?))
            })
            .collect::<Result<_>>()?;
        for i in 0..s.dim() {
            for j in i..s.dim() {
                let mut lhs = Vector::new();
                for (k, c) in s.bracket_basis(i, j) {
                    lhs.insert(emb[k].0, c * &emb[k].1);
                }
                let rhs = scaled(&self.bracket_basis(emb[i].0, emb[j].0), &(&emb[i].1 * &emb[j].1));
                if lhs != rhs {
                    return Err(Error::Construction(format!(
                        "symbol of {} does not embed at [{}, {}]",
                        s.parabolic,
                        s.basis()[i].label,
                        s.basis()[j].label
                    )));
                }
            }
        }
        Ok(emb)
    }
}

pub fn superdim_of(parity: &[Parity], idx: &[usize]) -> SuperDim {
    let mut d = SuperDim::ZERO;
    for &i in idx {
        d.count(parity[i]);
    }
    d
}

/// Outcome of comparing a symbol with the negative part of the full algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub dims_match: bool,
    /// First degree pair whose bracket ranks differ.
    pub rank_mismatch: Option<(i32, i32)>,
}

impl CrossCheck {
    pub fn passed(&self) -> bool {
        self.dims_match && self.rank_mismatch.is_none()
    }
}

pub fn cross_check_symbol(f: &FullAlgebra, s: &SymbolAlgebra, p: &ParabolicId) -> Result<CrossCheck> {
    let neg = f.negative_part(p)?;
    let dims_match = neg.graded_dims() == s.graded_dims();
    let a = neg.bracket_ranks();
    let b = s.bracket_ranks();
    let rank_mismatch = a.keys().chain(b.keys()).find(|k| a.get(k) != b.get(k)).copied();
    Ok(CrossCheck { dims_match, rank_mismatch })
}

/// Degree of every positive root under `p`; convenience for reports.
pub fn root_degrees(p: &ParabolicId) -> Vec<(String, i32)> {
    positive_roots(p.diagram).iter().map(|r| (r.label(), grading_weight(r, p))).collect()
}

/// All diagrams of both algebras.
pub fn all_diagrams() -> Vec<DiagramId> {
    Algebra::ALL.iter().flat_map(|a| a.diagrams()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: Algebra, d: &str, c: &str) -> ParabolicId {
        ParabolicId::parse(a, d, c).unwrap()
    }

    #[test]
    fn symbol_g3_iv_2() {
        let s = build_symbol(&p(Algebra::G3, "IV", "2")).unwrap();
        let dims = s.graded_dims();
        assert_eq!(dims[&-1], SuperDim::new(2, 4));
        assert_eq!(dims[&-2], SuperDim::new(1, 2));
        assert_eq!(dims[&-3], SuperDim::new(2, 0));
        assert!(s.check_jacobi().is_ok());
    }

    #[test]
    fn every_borel_symbol() {
        for d in all_diagrams() {
            let s = borel_symbol(d).unwrap();
            assert!(s.check_jacobi().is_ok(), "{d}");
            assert!(s.root_sums_nonzero().is_ok(), "{d}");
            assert!(s.is_fundamental(), "{d}");
        }
    }

    #[test]
    fn full_dims_and_jacobi() {
        for d in all_diagrams() {
            let f = build_full(d).unwrap();
            assert_eq!(f.superdim(), d.algebra.superdim(), "{d}");
            assert!(f.check_jacobi().is_ok(), "{d}");
            assert!(f.check_grading());
        }
    }

    #[test]
    fn grading_element_acts_by_minus_one() {
        let f = build_full(DiagramId::new(Algebra::F4, 1).unwrap()).unwrap();
        let q = p(Algebra::F4, "I", "4");
        let maps = f.levi_action(&q);
        assert_eq!(maps.len(), 12 + 8);
        assert_eq!(maps[0].source, SuperDim::new(6, 4));
    }
}

#[cfg(test)]
mod cross {
    use super::*;

    #[test]
    fn symbols_match_full() {
        for a in Algebra::ALL {
            for q in a.parabolics() {
                let f = build_full(q.diagram).unwrap();
                let s = build_symbol(&q).unwrap();
                assert!(cross_check_symbol(&f, &s, &q).unwrap().passed(), "{q}");
                f.symbol_embedding(&s).unwrap();
            }
        }
    }
}
