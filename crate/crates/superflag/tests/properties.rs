use proptest::prelude::*;

use superflag::linalg::Matrix;
use superflag::superfields::{parse_expr, super_bracket, Coord, Coordinates, SuperPolynomial, SuperVectorField};
use superflag::{Parity, Scalar};

fn scalar() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Scalar::new(n, d))
}

fn nonzero() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("nonzero", |s| !s.is_zero())
}

fn coords() -> Coordinates {
    Coordinates::new(&["x", "y"], &["a", "b", "c"])
}

const NX: usize = 2;

/// A polynomial in x, y | a, b, c whose odd monomials all have parity `p`.
fn poly(p: Parity) -> impl Strategy<Value = SuperPolynomial> {
    let masks: Vec<u32> = (0u32..8).filter(|m| (m.count_ones() % 2 == 1) == p.is_odd()).collect();
    prop::collection::vec((-3i64..=3, 0u32..3, 0u32..3, prop::sample::select(masks)), 0..4).prop_map(|terms| {
        let mut f = SuperPolynomial::zero();
        for (c, ex, ey, mask) in terms {
            let mut m = SuperPolynomial::constant(NX, Scalar::int(c));
            for _ in 0..ex {
                m = m.mul(&SuperPolynomial::var(NX, Coord::Even(0)));
            }
            for _ in 0..ey {
                m = m.mul(&SuperPolynomial::var(NX, Coord::Even(1)));
            }
            for k in 0..3 {
                if mask & (1 << k) != 0 {
                    m = m.mul(&SuperPolynomial::var(NX, Coord::Odd(k)));
                }
            }
            f = f.add(&m);
        }
        f
    })
}

fn any_poly() -> impl Strategy<Value = SuperPolynomial> {
    (poly(Parity::Even), poly(Parity::Odd)).prop_map(|(a, b)| a.add(&b))
}

/// A homogeneous field of parity `p`.
fn field(p: Parity) -> impl Strategy<Value = SuperVectorField> {
    let all = coords().all();
    (poly(Parity::Even), poly(Parity::Odd), poly(Parity::Even), poly(Parity::Odd), poly(Parity::Even)).prop_map(
        move |(e0, o0, e1, o1, e2)| {
            let mut x = SuperVectorField::zero();
            let pick = |c: Coord| {
                // component parity is p + |c|
                let odd = p.is_odd() != c.parity().is_odd();
                match (c, odd) {
                    (Coord::Even(0), false) => e0.clone(),
                    (Coord::Even(_), false) => e1.clone(),
                    (Coord::Even(0), true) => o0.clone(),
                    (Coord::Even(_), true) => o1.clone(),
                    (_, false) => e2.clone(),
                    (_, true) => o1.clone(),
                }
            };
            for &c in &all {
                x = x.add(&SuperVectorField::partial(NX, c).times(&pick(c)));
            }
            x
        },
    )
}

fn parity() -> impl Strategy<Value = Parity> {
    prop_oneof![Just(Parity::Even), Just(Parity::Odd)]
}

fn sign(a: Parity, b: Parity) -> Scalar {
    Scalar::int(if a.is_odd() && b.is_odd() { -1 } else { 1 })
}

proptest! {
    #[test]
    fn scalar_field_laws(a in scalar(), b in scalar(), c in nonzero()) {
        prop_assert_eq!((&a + &b) * &c, &a * &c + &b * &c);
        prop_assert_eq!(&a / &c * &c, a.clone());
        prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a.clone());
        let j = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Scalar>(&j).unwrap(), a);
    }

    #[test]
    fn rank_nullity(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 1..5)) {
        let m = Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::int(x)).collect()).collect());
        let ns = m.nullspace();
        prop_assert_eq!(m.rank() + ns.len(), 4);
        for v in ns {
            prop_assert!(m.mul_vec(&v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn supercommutative_ring(f in any_poly(), g in any_poly(), h in any_poly()) {
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
    }

    #[test]
    fn graded_commutativity(p in parity(), q in parity(), fg in (poly(Parity::Even), poly(Parity::Odd), poly(Parity::Even), poly(Parity::Odd))) {
        let f = if p.is_odd() { fg.1 } else { fg.0 };
        let g = if q.is_odd() { fg.3 } else { fg.2 };
        prop_assert_eq!(f.mul(&g), g.mul(&f).scale(&sign(p, q)));
    }

    #[test]
    fn leibniz(p in parity(), fe in poly(Parity::Even), fo in poly(Parity::Odd), g in any_poly(), k in 0usize..5) {
        let f = if p.is_odd() { fo } else { fe };
        let c = coords().all()[k];
        let lhs = f.mul(&g).diff(c);
        let rhs = f.diff(c).mul(&g).add(&f.mul(&g.diff(c)).scale(&sign(c.parity(), p)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_laws(p in parity(), q in parity(), r in parity(), seeds in (field(Parity::Even), field(Parity::Odd), field(Parity::Even), field(Parity::Odd), field(Parity::Even), field(Parity::Odd))) {
        let x = if p.is_odd() { seeds.1 } else { seeds.0 };
        let y = if q.is_odd() { seeds.3 } else { seeds.2 };
        let z = if r.is_odd() { seeds.5 } else { seeds.4 };
        // graded antisymmetry
        prop_assert_eq!(super_bracket(&x, &y), super_bracket(&y, &x).scale(&-sign(p, q)));
        // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
        let lhs = super_bracket(&x, &super_bracket(&y, &z));
        let rhs = super_bracket(&super_bracket(&x, &y), &z)
            .add(&super_bracket(&y, &super_bracket(&x, &z)).scale(&sign(p, q)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn display_parses_back(x in field(Parity::Odd), f in any_poly()) {
        let c = coords();
        let back = parse_expr(&x.display(&c).to_string(), &c).unwrap().into_field().unwrap();
        prop_assert_eq!(back, x);
        let back = parse_expr(&f.display(&c).to_string(), &c).unwrap().into_function().unwrap();
        prop_assert_eq!(back, f);
    }
}
