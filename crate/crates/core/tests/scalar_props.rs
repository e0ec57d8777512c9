use bmw_core::{Poly, RatFunc, Scalar, Q};
use proptest::prelude::*;

fn q() -> impl Strategy<Value = Q> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| Q::new(n, d))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(q(), 0..4).prop_map(Poly::from_coeffs)
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), prop::collection::vec(q(), 0..2)).prop_map(|(num, extra)| {
        // denominators are products of (m - a) with a != 0, so they stay away from the sample points
        let den = extra.into_iter().fold(Poly::one(), |acc, a| {
            let a = if a.is_zero() { Q::new(7, 3) } else { a };
            acc.mul(&Poly::from_coeffs(vec![a.neg(), Q::one()]))
        });
        RatFunc::new(num, den).unwrap()
    })
}

fn scalar() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-2i32..=2, ratfunc()), 0..3).prop_map(Scalar::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn q_field_axioms(a in q(), b in q(), c in q()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        if !b.is_zero() {
            prop_assert_eq!(a.div(&b).unwrap().mul(&b), a.clone());
        }
        prop_assert_eq!(a.to_string().parse::<Q>().unwrap(), a);
    }

    #[test]
    fn scalar_ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.mul(&Scalar::one()), a.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in scalar(), b in scalar(), l in q(), m in q()) {
        prop_assume!(!l.is_zero());
        let (Ok(ea), Ok(eb)) = (a.eval_at(&l, &m), b.eval_at(&l, &m)) else {
            // a pole at this point
            return Ok(());
        };
        prop_assert_eq!(a.add(&b).eval_at(&l, &m).unwrap(), ea.add(&eb));
        prop_assert_eq!(a.mul(&b).eval_at(&l, &m).unwrap(), ea.mul(&eb));
    }

    #[test]
    fn division_inverts_multiplication(a in scalar(), f in ratfunc(), k in -2i32..=2) {
        prop_assume!(!f.num().is_zero());
        let b = Scalar::monomial(f, k);
        prop_assert_eq!(a.mul(&b).div(&b).unwrap(), a);
    }
}
