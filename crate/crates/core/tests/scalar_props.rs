use num_rational::BigRational;
use proptest::prelude::*;
use qtsym_core::{PolyQT, RatQT};

fn poly() -> impl Strategy<Value = PolyQT> {
    prop::collection::vec((0usize..3, 0usize..3, -3i64..=3), 1..4).prop_map(PolyQT::from_terms)
}

fn ratqt() -> impl Strategy<Value = RatQT> {
    (poly(), poly())
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| RatQT::new(n, d).unwrap())
}

fn cross_equal(a: &RatQT, b: &RatQT) -> bool {
    a.numer().mul(b.denom()) == b.numer().mul(a.denom())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in ratqt(), b in ratqt(), c in ratqt()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a / &a).is_one());
        }
    }

    #[test]
    fn canonical_form_is_unique(n in poly(), d in poly(), k in poly()) {
        prop_assume!(!d.is_zero() && !k.is_zero());
        let a = RatQT::new(n.clone(), d.clone()).unwrap();
        let b = RatQT::new(n.mul(&k), d.mul(&k)).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert!(cross_equal(&a, &b));
    }

    #[test]
    fn equality_agrees_with_cross_multiplication(a in ratqt(), b in ratqt()) {
        prop_assert_eq!(a == b, cross_equal(&a, &b));
    }

    #[test]
    fn t_inversion_is_an_involution(a in ratqt()) {
        prop_assert_eq!(a.subst_t_inv().subst_t_inv(), a);
    }

    #[test]
    fn q0_evaluation_is_multiplicative(a in ratqt(), b in ratqt()) {
        if let (Ok(x), Ok(y)) = (a.eval_q0(), b.eval_q0()) {
            prop_assert_eq!((&a * &b).eval_q0().unwrap(), &x * &y);
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in ratqt(), b in ratqt()) {
        let q = BigRational::new(3.into(), 7.into());
        let t = BigRational::new((-5).into(), 2.into());
        if let (Some(x), Some(y)) = (a.eval(&q, &t), b.eval(&q, &t)) {
            prop_assert_eq!((&a * &b).eval(&q, &t), Some(&x * &y));
            prop_assert_eq!((&a + &b).eval(&q, &t), Some(&x + &y));
        }
    }
}
