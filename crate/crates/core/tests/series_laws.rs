use num_bigint::BigInt;
use proptest::prelude::*;
use qpart_core::qfactory::{pochhammer, JtpSpec, PochSpec};
use qpart_core::series::{Series, Sign};

const N: usize = 24;

fn series() -> impl Strategy<Value = Series> {
    prop::collection::vec(-50i64..50, N + 1).prop_map(|c| Series::from_i64s(&c))
}

/// A series with constant term 1 or -1.
fn unit() -> impl Strategy<Value = Series> {
    (series(), any::<bool>()).prop_map(|(s, neg)| {
        let mut c = s.into_coeffs();
        c[0] = BigInt::from(if neg { -1 } else { 1 });
        Series::from_coeffs(c)
    })
}

fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn ring_laws(a in series(), b in series(), c in series()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!(&a * &Series::one(N), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn invert_round_trips(u in unit(), a in series()) {
        let inv = u.invert().unwrap();
        prop_assert_eq!(&u * &inv, Series::one(N));
        prop_assert_eq!(inv.invert().unwrap(), u.clone());
        prop_assert_eq!((&a * &u).checked_div(&u).unwrap(), a.clone());
        prop_assert_eq!(u.pow(-3).unwrap(), inv.pow(3).unwrap());
    }

    #[test]
    fn dilate_and_shift_are_ring_maps(a in series(), b in series(), k in 1usize..4, s in 0usize..6) {
        prop_assert_eq!((&a * &b).dilate(k), &a.dilate(k) * &b.dilate(k));
        prop_assert_eq!((&a * &b).shift(s), &a.shift(s) * &b);
    }

    #[test]
    fn binomial_factors_cancel(a in series(), k in 1usize..10, sg in sign()) {
        let mut b = a.clone();
        b.mul_binomial(k, sg);
        b.div_binomial(k, sg);
        prop_assert_eq!(b, a);
    }

    #[test]
    fn triple_product_sides_agree(qscale in 1i64..12, x in 1i64..12, sg in sign()) {
        prop_assume!(x < qscale);
        let spec = JtpSpec::new(qscale, -x, sg);
        prop_assert_eq!(spec.product_side(80).unwrap(), spec.sum_side(80).unwrap());
    }

    #[test]
    fn pochhammer_inverse(offset in 1i64..6, step in 1i64..6, sg in sign(), e in 1i64..4) {
        let p = pochhammer(&PochSpec::new(sg, offset, step, e).unwrap(), 40);
        let m = pochhammer(&PochSpec::new(sg, offset, step, -e).unwrap(), 40);
        prop_assert_eq!(&p * &m, Series::one(40));
    }
}
