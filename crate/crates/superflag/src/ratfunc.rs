//! Polynomials and rational functions in one parameter over the rationals.
//! Used while a structure constant is not yet pinned down by the Jacobi
//! identity.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::{Field, Scalar};

/// Dense polynomial, coefficients from the constant term up, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly(Vec<Scalar>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn constant(c: Scalar) -> Self {
        Poly(vec![c]).trimmed()
    }

    /// The parameter itself.
    pub fn t() -> Self {
        Poly(vec![Scalar::zero(), Scalar::one()])
    }

    pub fn from_coeffs(c: Vec<Scalar>) -> Self {
        Poly(c).trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.0
    }

    pub fn lead(&self) -> Scalar {
        self.0.last().cloned().unwrap_or_default()
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        match self.0.len() {
            0 => Some(Scalar::zero()),
            1 => Some(self.0[0].clone()),
            _ => None,
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        let z = Scalar::zero();
        Poly((0..n).map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z)).collect()).trimmed()
    }

    pub fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut r = vec![Scalar::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                r[i + j] += a * b;
            }
        }
        Poly(r).trimmed()
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly(self.0.iter().map(|x| x * c).collect()).trimmed()
    }

    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.lead();
        let mut rem = self.clone();
        let mut q = vec![Scalar::zero(); self.0.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = &rem.lead() / &lead;
            let shift = rd - dd;
            for (i, b) in d.0.iter().enumerate() {
                rem.0[shift + i] -= &c * b;
            }
            q[shift] = c;
            rem = rem.trimmed();
        }
        (Poly(q).trimmed(), rem)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&self.lead().recip())
    }

    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.0.iter().rev().fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    /// All rational roots, by the rational root theorem on the integer
    /// primitive part. Only sensible for the small coefficients that occur here.
    pub fn rational_roots(&self) -> Vec<Scalar> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut p = self.clone();
        let mut roots = Vec::new();
        // factor out t
        while p.0.first().is_some_and(|c| c.is_zero()) {
            p.0.remove(0);
            if !roots.contains(&Scalar::zero()) {
                roots.push(Scalar::zero());
            }
        }
        if p.degree() == Some(1) {
            roots.push(-(&p.0[0] / &p.0[1]));
            roots.sort();
            return roots;
        }
        let l = p.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = p.0.iter().map(|c| (c.numer() * &l) / c.denom()).collect();
        let (a0, an) = (ints[0].abs(), ints.last().unwrap().abs());
        for num in divisors(&a0) {
            for den in divisors(&an) {
                for s in [1i64, -1] {
                    let x = Scalar::from_bigs(num.clone() * s, den.clone());
                    if p.eval(&x).is_zero() && !roots.contains(&x) {
                        roots.push(x);
                    }
                }
            }
        }
        roots.sort();
        roots
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &(&d * &d) <= n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            let e = n / &d;
            if e != d {
                out.push(e);
            }
        }
        d += 1;
    }
    out
}

/// Rational function `num / den` in lowest terms with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc { num, den: Poly::constant(Scalar::one()) };
        }
        let g = num.gcd(&den);
        let (mut n, _) = num.div_rem(&g);
        let (mut d, _) = den.div_rem(&g);
        let l = d.lead().recip();
        n = n.scale(&l);
        d = d.scale(&l);
        RatFunc { num: n, den: d }
    }

    pub fn poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::constant(Scalar::one()) }
    }

    pub fn t() -> Self {
        RatFunc::poly(Poly::t())
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    /// Value at `t = x`, or `None` if the denominator vanishes there.
    pub fn eval(&self, x: &Scalar) -> Option<Scalar> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::poly(Poly::zero())
    }
    fn one() -> Self {
        RatFunc::poly(Poly::constant(Scalar::one()))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return RatFunc::new(self.num.add(&o.num), self.den.clone());
        }
        RatFunc::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        RatFunc::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }
    fn div(&self, o: &Self) -> Self {
        assert!(!o.is_zero(), "division by zero");
        RatFunc::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }
    fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
    fn from_scalar(s: &Scalar) -> Self {
        RatFunc::poly(Poly::constant(s.clone()))
    }
    fn weight(&self) -> usize {
        let d = |p: &Poly| p.degree().map_or(0, |x| x + 1);
        16 * (d(&self.num) + d(&self.den)) + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_coeffs(c.iter().map(|&x| Scalar::int(x)).collect())
    }

    #[test]
    fn gcd_and_division() {
        let a = p(&[-1, 0, 1]); // t^2 - 1
        let b = p(&[1, 1]); // t + 1
        assert_eq!(a.gcd(&b), b);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, p(&[-1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn roots() {
        // (3t - 2)(t + 5)
        let f = p(&[-2, 3]).mul(&p(&[5, 1]));
        assert_eq!(f.rational_roots(), vec![Scalar::int(-5), Scalar::new(2, 3)]);
        assert!(p(&[1, 0, 1]).rational_roots().is_empty());
    }

    #[test]
    fn fractions_reduce() {
        let f = RatFunc::new(p(&[-1, 0, 1]), p(&[2, 2]));
        assert_eq!(f.numer(), &p(&[-1, 1]).scale(&Scalar::new(1, 2)));
        assert_eq!(f.denom(), &p(&[1]));
        let g = f.div(&f);
        assert_eq!(g, RatFunc::one());
    }
}
