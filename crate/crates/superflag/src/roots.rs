//! Root data of G(3) and F(4): simple systems, root enumeration, parabolic
//! gradings and the odd-reflection identifications between parabolics.
//!
//! Ambient coordinates are `(δ, ε1, ε2, ε3)`. For G(3) the relation
//! `ε1 + ε2 + ε3 = 0` is applied by eliminating `ε3`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::superalg::Parity;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algebra {
    G3,
    F4,
}

impl Algebra {
    pub const ALL: [Algebra; 2] = [Algebra::G3, Algebra::F4];

    pub fn rank(self) -> usize {
        match self {
            Algebra::G3 => 3,
            Algebra::F4 => 4,
        }
    }

    pub fn diagram_count(self) -> u8 {
        match self {
            Algebra::G3 => 4,
            Algebra::F4 => 6,
        }
    }

    pub fn diagrams(self) -> impl Iterator<Item = DiagramId> {
        (1..=self.diagram_count()).map(move |xi| DiagramId { algebra: self, xi })
    }

    /// Every parabolic `(Ξ, χ)` with `χ` nonempty, diagram by diagram.
    pub fn parabolics(self) -> Vec<ParabolicId> {
        self.diagrams().flat_map(|d| d.parabolics()).collect()
    }

    pub fn superdim(self) -> crate::superalg::SuperDim {
        match self {
            Algebra::G3 => crate::superalg::SuperDim::new(17, 14),
            Algebra::F4 => crate::superalg::SuperDim::new(24, 16),
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algebra::G3 => "G3",
            Algebra::F4 => "F4",
        })
    }
}

impl FromStr for Algebra {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "g3" | "g(3)" => Ok(Algebra::G3),
            "f4" | "f(4)" => Ok(Algebra::F4),
            _ => Err(Error::Unknown { kind: "algebra", value: s.into() }),
        }
    }
}

const ROMAN: [&str; 6] = ["I", "II", "III", "IV", "V", "VI"];

/// A Dynkin diagram, numbered 1.. in the usual roman order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramId {
    pub algebra: Algebra,
    pub xi: u8,
}

impl DiagramId {
    pub fn new(algebra: Algebra, xi: u8) -> Result<Self> {
        if xi == 0 || xi > algebra.diagram_count() {
            return Err(Error::Unknown { kind: "diagram", value: format!("{algebra} {xi}") });
        }
        Ok(DiagramId { algebra, xi })
    }

    pub fn parse(algebra: Algebra, s: &str) -> Result<Self> {
        let xi = ROMAN
            .iter()
            .position(|r| r.eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Unknown { kind: "diagram", value: s.into() })?;
        DiagramId::new(algebra, xi as u8 + 1)
    }

    pub fn roman(self) -> &'static str {
        ROMAN[self.xi as usize - 1]
    }

    pub fn rank(self) -> usize {
        self.algebra.rank()
    }

    pub fn parabolics(self) -> Vec<ParabolicId> {
        let r = self.rank();
        let mut out: Vec<ParabolicId> = (1u32..1 << r)
            .map(|mask| ParabolicId {
                diagram: self,
                crossing: (0..r).filter(|k| mask & (1 << k) != 0).map(|k| k + 1).collect(),
            })
            .collect();
        out.sort();
        out
    }
}

impl fmt::Display for DiagramId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.algebra, self.roman())
    }
}

/// A parabolic: a diagram together with its nonempty crossing set
/// (1-based node numbers, sorted).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParabolicId {
    pub diagram: DiagramId,
    crossing: Vec<usize>,
}

impl ParabolicId {
    pub fn new(diagram: DiagramId, crossing: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = crossing.into_iter().collect();
        if set.is_empty() || set.iter().any(|&k| k == 0 || k > diagram.rank()) {
            return Err(Error::Unknown { kind: "crossing", value: format!("{set:?}") });
        }
        Ok(ParabolicId { diagram, crossing: set.into_iter().collect() })
    }

    /// `"III"` and `"1,3"` (or `"13"`).
    pub fn parse(algebra: Algebra, diagram: &str, crossing: &str) -> Result<Self> {
        let d = DiagramId::parse(algebra, diagram)?;
        let nodes: Vec<usize> = if crossing.contains(',') {
            crossing
                .split(',')
                .map(|s| s.trim().parse().map_err(|_| Error::Unknown { kind: "crossing", value: crossing.into() }))
                .collect::<Result<_>>()?
        } else {
            crossing
                .trim()
                .chars()
                .map(|c| c.to_digit(10).map(|x| x as usize).ok_or(Error::Unknown { kind: "crossing", value: crossing.into() }))
                .collect::<Result<_>>()?
        };
        ParabolicId::new(d, nodes)
    }

    pub fn crossing(&self) -> &[usize] {
        &self.crossing
    }

    pub fn algebra(&self) -> Algebra {
        self.diagram.algebra
    }

    /// Compact tag such as `III_13`.
    pub fn tag(&self) -> String {
        let c: String = self.crossing.iter().map(|k| k.to_string()).collect();
        format!("{}_{}", self.diagram.roman(), c)
    }

    /// Whether node `k` (1-based) is crossed.
    pub fn crosses(&self, k: usize) -> bool {
        self.crossing.contains(&k)
    }
}

impl PartialOrd for ParabolicId {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for ParabolicId {
    /// Diagram, then crossing size, then lexicographic: the order of the
    /// growth tables.
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        (self.diagram, self.crossing.len(), &self.crossing).cmp(&(o.diagram, o.crossing.len(), &o.crossing))
    }
}

impl fmt::Display for ParabolicId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.diagram.algebra, self.tag())
    }
}

/// Weight `c0 δ + c1 ε1 + c2 ε2 + c3 ε3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AmbientWeight {
    pub algebra: Algebra,
    pub coeffs: [Scalar; 4],
}

impl AmbientWeight {
    pub fn new(algebra: Algebra, c: [Scalar; 4]) -> Self {
        AmbientWeight { algebra, coeffs: c }.canonical()
    }

    pub fn zero(algebra: Algebra) -> Self {
        AmbientWeight { algebra, coeffs: Default::default() }
    }

    fn ints(algebra: Algebra, c: [i64; 4], den: i64) -> Self {
        AmbientWeight::new(algebra, c.map(|x| Scalar::new(x, den)))
    }

    /// For G(3), eliminates `ε3` using `ε1 + ε2 + ε3 = 0`.
    fn canonical(mut self) -> Self {
        if self.algebra == Algebra::G3 {
            let e3 = self.coeffs[3].clone();
            self.coeffs[1] -= &e3;
            self.coeffs[2] -= &e3;
            self.coeffs[3] = Scalar::zero();
        }
        self
    }

    pub fn add(&self, o: &AmbientWeight) -> AmbientWeight {
        let mut c = self.coeffs.clone();
        for (a, b) in c.iter_mut().zip(&o.coeffs) {
            *a += b;
        }
        AmbientWeight { algebra: self.algebra, coeffs: c }
    }

    pub fn scale(&self, s: &Scalar) -> AmbientWeight {
        AmbientWeight { algebra: self.algebra, coeffs: self.coeffs.clone().map(|x| x * s) }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }
}

impl fmt::Display for AmbientWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["δ", "ε1", "ε2", "ε3"];
        let mut first = true;
        for (c, n) in self.coeffs.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            let sign = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            if a.is_one() {
                write!(f, "{sign}{n}")?;
            } else {
                write!(f, "{sign}{a}{n}")?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Simple roots `α1..αr` of a diagram.
pub fn simple_system(d: DiagramId) -> Vec<AmbientWeight> {
    let a = d.algebra;
    let g: &[[i64; 4]] = match (a, d.xi) {
        (Algebra::G3, 1) => &[[1, -1, -1, 0], [0, 1, 0, 0], [0, -1, 1, 0]],
        (Algebra::G3, 2) => &[[-1, 1, 1, 0], [1, 0, -1, 0], [0, -1, 1, 0]],
        (Algebra::G3, 3) => &[[-1, 0, 1, 0], [1, -1, 0, 0], [0, 1, 0, 0]],
        (Algebra::G3, 4) => &[[0, -1, 1, 0], [-1, 1, 0, 0], [1, 0, 0, 0]],
        // F(4) entries are twice the weight
        (Algebra::F4, 1) => &[[1, -1, -1, -1], [0, 0, 0, 2], [0, 0, 2, -2], [0, 2, -2, 0]],
        (Algebra::F4, 2) => &[[-1, 1, 1, 1], [1, -1, -1, 1], [0, 0, 2, -2], [0, 2, -2, 0]],
        (Algebra::F4, 3) => &[[0, 2, -2, 0], [1, -1, 1, -1], [-1, 1, 1, -1], [0, 0, 0, 2]],
        (Algebra::F4, 4) => &[[1, 1, -1, -1], [1, -1, 1, 1], [-1, 1, -1, 1], [0, 0, 2, -2]],
        (Algebra::F4, 5) => &[[2, 0, 0, 0], [-1, 1, -1, -1], [0, 0, 0, 2], [0, 0, 2, -2]],
        (Algebra::F4, 6) => &[[2, 0, 0, 0], [-1, -1, 1, 1], [0, 2, -2, 0], [0, 0, 2, -2]],
        _ => unreachable!("diagram ids are validated"),
    };
    let den = if a == Algebra::F4 { 2 } else { 1 };
    g.iter().map(|&c| AmbientWeight::ints(a, c, den)).collect()
}

/// The invariant form on weights.
pub fn killing_pairing(a: &AmbientWeight, b: &AmbientWeight) -> Result<Scalar> {
    if a.algebra != b.algebra {
        return Err(Error::Construction(format!("pairing of {} and {} weights", a.algebra, b.algebra)));
    }
    let (x, y) = (&a.coeffs, &b.coeffs);
    Ok(match a.algebra {
        Algebra::G3 => {
            // <δ,δ> = 2, <εi,εj> = 1 - 3δij; this form kills ε1+ε2+ε3
            let mut s = Scalar::int(2) * &x[0] * &y[0];
            for i in 1..4 {
                for j in 1..4 {
                    let g = if i == j { -2 } else { 1 };
                    s += Scalar::int(g) * &x[i] * &y[j];
                }
            }
            s
        }
        Algebra::F4 => {
            let mut s = Scalar::int(-3) * &x[0] * &y[0];
            for i in 1..4 {
                s += &x[i] * &y[i];
            }
            s
        }
    })
}

/// The roots of the algebra as ambient weights, with parity.
pub fn ambient_roots(a: Algebra) -> BTreeMap<AmbientWeight, Parity> {
    let mut out = BTreeMap::new();
    let e = |i: usize| {
        let mut c = [0i64; 4];
        c[i] = 1;
        c
    };
    let comb = |terms: &[(i64, [i64; 4])]| {
        let mut c = [0i64; 4];
        for (s, v) in terms {
            for k in 0..4 {
                c[k] += s * v[k];
            }
        }
        c
    };
    match a {
        Algebra::G3 => {
            for s in [1, -1] {
                out.insert(AmbientWeight::ints(a, comb(&[(2 * s, e(0))]), 1), Parity::Even);
                out.insert(AmbientWeight::ints(a, comb(&[(s, e(0))]), 1), Parity::Odd);
                for i in 1..4 {
                    out.insert(AmbientWeight::ints(a, comb(&[(s, e(i))]), 1), Parity::Even);
                    for t in [1, -1] {
                        out.insert(AmbientWeight::ints(a, comb(&[(s, e(0)), (t, e(i))]), 1), Parity::Odd);
                    }
                }
            }
            for i in 1..4 {
                for j in 1..4 {
                    if i != j {
                        out.insert(AmbientWeight::ints(a, comb(&[(1, e(i)), (-1, e(j))]), 1), Parity::Even);
                    }
                }
            }
        }
        Algebra::F4 => {
            for s in [1, -1] {
                for i in 0..4 {
                    out.insert(AmbientWeight::ints(a, comb(&[(s, e(i))]), 1), Parity::Even);
                }
                for i in 1..4 {
                    for j in i + 1..4 {
                        for t in [1, -1] {
                            out.insert(AmbientWeight::ints(a, comb(&[(s, e(i)), (t, e(j))]), 1), Parity::Even);
                        }
                    }
                }
            }
            for mask in 0..16 {
                let c = [0, 1, 2, 3].map(|k| if mask & (1 << k) != 0 { -1 } else { 1 });
                out.insert(AmbientWeight::ints(a, c, 2), Parity::Odd);
            }
        }
    }
    out
}

/// A root `Σ m_i α_i` of a diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootVector {
    pub diagram: DiagramId,
    pub coeffs: Vec<i32>,
    pub parity: Parity,
    pub ambient: AmbientWeight,
}

impl RootVector {
    pub fn height(&self) -> i32 {
        self.coeffs.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&m| m >= 0)
    }

    /// Digits of `|m_i|` with a sign, e.g. `-121`.
    pub fn label(&self) -> String {
        let s = if self.is_positive() { '+' } else { '-' };
        let d: String = self.coeffs.iter().map(|m| char::from_digit(m.unsigned_abs(), 10).unwrap_or('?')).collect();
        format!("{s}{d}")
    }
}

/// All roots of a diagram: positive roots ordered by (height, parity,
/// coefficients), followed by their negatives in the same order.
pub fn enumerate_roots(d: DiagramId) -> Vec<RootVector> {
    let pos = positive_roots(d);
    let neg: Vec<RootVector> = pos
        .iter()
        .map(|r| RootVector {
            diagram: d,
            coeffs: r.coeffs.iter().map(|m| -m).collect(),
            parity: r.parity,
            ambient: r.ambient.scale(&Scalar::int(-1)),
        })
        .collect();
    pos.into_iter().chain(neg).collect()
}

/// Positive roots by bounded search: each coefficient ranges over 0..=4.
pub fn positive_roots(d: DiagramId) -> Vec<RootVector> {
    let simple = simple_system(d);
    let all = ambient_roots(d.algebra);
    let r = d.rank();
    let mut out = Vec::new();
    let mut m = vec![0i32; r];
    loop {
        // odometer
        let mut k = 0;
        while k < r {
            m[k] += 1;
            if m[k] <= 4 {
                break;
            }
            m[k] = 0;
            k += 1;
        }
        if k == r {
            break;
        }
        let mut w = AmbientWeight::zero(d.algebra);
        for (mi, a) in m.iter().zip(&simple) {
            w = w.add(&a.scale(&Scalar::int(*mi as i64)));
        }
        if let Some(&p) = all.get(&w) {
            out.push(RootVector { diagram: d, coeffs: m.clone(), parity: p, ambient: w });
        }
    }
    out.sort_by(|a, b| (a.height(), a.parity, &a.coeffs).cmp(&(b.height(), b.parity, &b.coeffs)));
    out
}

/// `Σ_{k∈χ} m_k`.
pub fn grading_weight(r: &RootVector, p: &ParabolicId) -> i32 {
    p.crossing().iter().map(|&k| r.coeffs[k - 1]).sum()
}

/// Depth `μ` of the grading.
pub fn depth(p: &ParabolicId) -> i32 {
    positive_roots(p.diagram).iter().map(|r| grading_weight(r, p)).max().unwrap_or(0)
}

/// Cartan matrix: `a_ij = 2<αi,αj>/<αi,αi>`, or `<αi,αj>` for isotropic `αi`.
pub fn cartan(d: DiagramId) -> Vec<Vec<Scalar>> {
    let s = simple_system(d);
    s.iter()
        .map(|ai| {
            let n = killing_pairing(ai, ai).expect("same algebra");
            s.iter()
                .map(|aj| {
                    let p = killing_pairing(ai, aj).expect("same algebra");
                    if n.is_zero() {
                        p
                    } else {
                        Scalar::int(2) * p / &n
                    }
                })
                .collect()
        })
        .collect()
}

/// Plain-text table of negative roots: one column per root, row `i`
/// holding `m_i`, even block first.
pub fn render_root_table(d: DiagramId) -> String {
    let pos = positive_roots(d);
    let mut s = format!("{d}\n");
    for par in [Parity::Even, Parity::Odd] {
        let cols: Vec<&RootVector> = pos.iter().filter(|r| r.parity == par).collect();
        s += if par == Parity::Even { "even\n" } else { "odd\n" };
        for i in 0..d.rank() {
            let row: Vec<String> = cols.iter().map(|r| format!("{:>2}", -r.coeffs[i])).collect();
            s += &format!("  a{} {}\n", i + 1, row.join(" "));
        }
    }
    s
}

/// The identifications recorded for dark cases, as listed in the reduction
/// tables. The complete identification is computed by
/// [`identification_classes`].
pub fn equivalence_chains(a: Algebra) -> Vec<Vec<ParabolicId>> {
    let raw: &[&[(&str, &str)]] = match a {
        Algebra::G3 => &[&[("III", "1"), ("IV", "1")]],
        Algebra::F4 => &[
            &[("I", "4"), ("II", "4"), ("III", "1"), ("IV", "1"), ("V", "1")],
            &[("III", "3"), ("IV", "4"), ("V", "4"), ("VI", "4")],
        ],
    };
    raw.iter()
        .map(|c| c.iter().map(|(d, x)| ParabolicId::parse(a, d, x).expect("valid table entry")).collect())
        .collect()
}

/// Grading element of a parabolic as a functional on `(δ, ε1, ε2, ε3)`,
/// taking 1 on crossed simple roots and 0 on the others.
pub fn grading_functional(p: &ParabolicId) -> [Scalar; 4] {
    use crate::linalg::Matrix;
    let s = simple_system(p.diagram);
    let a = p.algebra();
    let mut rows: Vec<Vec<Scalar>> = s.iter().map(|w| w.coeffs.to_vec()).collect();
    let mut rhs: Vec<Scalar> = (1..=s.len()).map(|k| Scalar::int(p.crosses(k) as i64)).collect();
    if a == Algebra::G3 {
        // z(ε1 + ε2 + ε3) = 0
        rows.push(vec![Scalar::zero(), Scalar::one(), Scalar::one(), Scalar::one()]);
        rhs.push(Scalar::zero());
    }
    let z = Matrix::from_rows(rows).solve(&rhs).ok().expect("simple roots are a basis");
    [z[0].clone(), z[1].clone(), z[2].clone(), z[3].clone()]
}

/// Orbit representative of a grading functional under the even Weyl group.
pub fn canonical_functional(a: Algebra, z: &[Scalar; 4]) -> [Scalar; 4] {
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut best: Option<[Scalar; 4]> = None;
    for d in [1i64, -1] {
        for p in perms {
            for mask in 0..8u8 {
                let sign = |k: usize| -> Scalar {
                    match a {
                        // the ε-part of W(G2) is S3 times a global sign
                        Algebra::G3 => Scalar::int(if mask & 1 != 0 { -1 } else { 1 }),
                        Algebra::F4 => Scalar::int(if mask & (1 << k) != 0 { -1 } else { 1 }),
                    }
                };
                if a == Algebra::G3 && mask > 1 {
                    continue;
                }
                let c = [
                    &z[0] * Scalar::int(d),
                    &z[1 + p[0]] * sign(0),
                    &z[1 + p[1]] * sign(1),
                    &z[1 + p[2]] * sign(2),
                ];
                if best.as_ref().is_none_or(|b| c < *b) {
                    best = Some(c);
                }
            }
        }
    }
    best.expect("nonempty group")
}

/// Parabolics grouped into conjugacy classes of their grading elements.
/// Classes are ordered by their first member, members in table order.
pub fn identification_classes(a: Algebra) -> Vec<Vec<ParabolicId>> {
    let mut m: BTreeMap<[Scalar; 4], Vec<ParabolicId>> = BTreeMap::new();
    for p in a.parabolics() {
        m.entry(canonical_functional(a, &grading_functional(&p))).or_default().push(p);
    }
    let mut v: Vec<Vec<ParabolicId>> = m.into_values().collect();
    for c in &mut v {
        c.sort();
    }
    v.sort();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g3(xi: u8) -> DiagramId {
        DiagramId::new(Algebra::G3, xi).unwrap()
    }

    #[test]
    fn simple_roots_print() {
        let s: Vec<String> = simple_system(g3(1)).iter().map(|w| w.to_string()).collect();
        assert_eq!(s, ["δ - ε1 - ε2", "ε1", "-ε1 + ε2"]);
        let f5 = simple_system(DiagramId::new(Algebra::F4, 5).unwrap());
        assert_eq!(f5[1].to_string(), "-1/2δ + 1/2ε1 - 1/2ε2 - 1/2ε3");
    }

    #[test]
    fn pairings() {
        let a = Algebra::G3;
        let d = AmbientWeight::ints(a, [1, 0, 0, 0], 1);
        assert_eq!(killing_pairing(&d, &d).unwrap(), Scalar::int(2));
        // the relation is killed by the form on raw coordinates
        let rel = AmbientWeight { algebra: a, coeffs: [0, 1, 1, 1].map(Scalar::int) };
        let x = AmbientWeight { algebra: a, coeffs: [3, -1, 2, 5].map(Scalar::int) };
        assert!(killing_pairing(&rel, &x).unwrap().is_zero());
        let f = Algebra::F4;
        let e1 = AmbientWeight::ints(f, [0, 1, 0, 0], 1);
        let e2 = AmbientWeight::ints(f, [0, 0, 1, 0], 1);
        assert!(killing_pairing(&e1, &e2).unwrap().is_zero());
        assert!(killing_pairing(&e1, &e1).unwrap().is_one());
        assert!(killing_pairing(&e1, &d).is_err());
    }

    #[test]
    fn root_counts() {
        for a in Algebra::ALL {
            for d in a.diagrams() {
                let pos = positive_roots(d);
                let odd = pos.iter().filter(|r| r.parity.is_odd()).count();
                let want = if a == Algebra::G3 { (7, 7) } else { (10, 8) };
                assert_eq!((pos.len() - odd, odd), want, "{d}");
                assert_eq!(enumerate_roots(d).len(), 2 * pos.len());
            }
        }
    }

    #[test]
    fn weights_and_depth() {
        let p = ParabolicId::parse(Algebra::G3, "I", "1").unwrap();
        let top = enumerate_roots(g3(1)).into_iter().find(|r| r.coeffs == [-2, -4, -2]).unwrap();
        assert_eq!(grading_weight(&top, &p), -2);
        assert_eq!(depth(&p), 2);
        let q = ParabolicId::parse(Algebra::F4, "VI", "1234").unwrap();
        assert_eq!(depth(&q), 11);
        assert_eq!(depth(&ParabolicId::parse(Algebra::F4, "I", "4").unwrap()), 1);
    }

    #[test]
    fn classes() {
        assert_eq!(identification_classes(Algebra::G3).len(), 19);
        assert_eq!(identification_classes(Algebra::F4).len(), 55);
    }

    #[test]
    fn parse_ids() {
        let p = ParabolicId::parse(Algebra::F4, "iv", "3,1").unwrap();
        assert_eq!(p.tag(), "IV_13");
        assert!(ParabolicId::parse(Algebra::G3, "V", "1").is_err());
        assert!(ParabolicId::parse(Algebra::G3, "I", "4").is_err());
        assert_eq!(Algebra::G3.parabolics().len(), 28);
    }
}
