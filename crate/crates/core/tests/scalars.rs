use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use skeinwrt::scalars::{
    cyclotomic_poly, quantum_factorial, quantum_integer, specialize, CycScalar, IntPoly,
    LaurentPoly, RatFn, Scalar, ScalarError, ScalarRing,
};

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..6, -4i64..5), 0..5).prop_map(|t| LaurentPoly::from_terms(&t))
}

fn ratfn() -> impl Strategy<Value = RatFn> {
    (laurent(), laurent())
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| RatFn::from_laurent(&n).checked_div(&RatFn::from_laurent(&d)).unwrap())
}

fn cyc(n: u32) -> impl Strategy<Value = CycScalar> {
    let deg = cyclotomic_poly(2 * n).degree().unwrap();
    prop::collection::vec((-5i64..6, 1i64..4), deg).prop_map(move |cs| {
        let cs = cs
            .into_iter()
            .map(|(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
            .collect();
        CycScalar::from_coeffs(n, cs)
    })
}

proptest! {
    #[test]
    fn ratfn_field_axioms(x in ratfn(), y in ratfn(), z in ratfn()) {
        prop_assert_eq!(x.add(&y), y.add(&x));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        prop_assert!(x.sub(&x).is_zero());
        if !x.is_zero() {
            prop_assert!(x.mul(&x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn ratfn_is_reduced(x in ratfn()) {
        let g = x.numer().gcd(x.denom());
        prop_assert!(g.degree() == Some(0));
        let rebuilt = RatFn::new(x.numer().clone(), x.denom().clone());
        prop_assert_eq!(rebuilt, x);
    }

    #[test]
    fn cyclotomic_field_axioms(x in cyc(7), y in cyc(7), z in cyc(7)) {
        prop_assert_eq!(x.add(&y), y.add(&x));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        if !x.is_zero() {
            prop_assert!(x.mul(&x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn specialization_is_a_ring_map(x in laurent(), y in laurent(), n in 3u32..10) {
        let (fx, fy) = (RatFn::from_laurent(&x), RatFn::from_laurent(&y));
        let sx = specialize(&fx, n).unwrap();
        let sy = specialize(&fy, n).unwrap();
        prop_assert_eq!(specialize(&fx.add(&fy), n).unwrap(), sx.add(&sy));
        prop_assert_eq!(specialize(&fx.mul(&fy), n).unwrap(), sx.mul(&sy));
        prop_assert_eq!(CycScalar::from_laurent(n, &x), sx);
    }

    #[test]
    fn a_powers_are_periodic(k in -40i64..40, n in 3u32..10) {
        let ring = ScalarRing::Cyclotomic(n);
        prop_assert_eq!(Scalar::a_power(k, ring), Scalar::a_power(k + 2 * n as i64, ring));
        prop_assert_eq!(Scalar::a_power(k + n as i64, ring), -Scalar::a_power(k, ring));
    }
}

#[test]
fn cyclotomic_polynomials() {
    assert_eq!(cyclotomic_poly(1), IntPoly::from_i64s(&[-1, 1]));
    assert_eq!(cyclotomic_poly(10), IntPoly::from_i64s(&[1, -1, 1, -1, 1]));
    assert_eq!(cyclotomic_poly(8), IntPoly::from_i64s(&[1, 0, 0, 0, 1]));
    for m in 1..40 {
        // prod_{d | m} Phi_d = x^m - 1
        let mut prod = IntPoly::one();
        for d in (1..=m).filter(|d| m % d == 0) {
            prod = prod.mul(&cyclotomic_poly(d));
        }
        let mut target = vec![0i64; m as usize + 1];
        target[0] = -1;
        target[m as usize] = 1;
        assert_eq!(prod, IntPoly::from_i64s(&target), "m={m}");
    }
}

#[test]
fn quantum_integers_vanish_exactly_when_a_to_the_4k_is_one() {
    // A^{4k} = 1 for a primitive 2N-th root A iff N divides 2k
    for n in 3u32..10 {
        let ring = ScalarRing::Cyclotomic(n);
        for k in 1..3 * n {
            assert_eq!(quantum_integer(k, ring).is_zero(), (2 * k) % n == 0, "[{k}] at N={n}");
        }
    }
}

#[test]
fn quantum_factorial_at_roots() {
    let ring = ScalarRing::Cyclotomic(5);
    assert!(!quantum_factorial(4, ring).is_zero());
    assert!(quantum_factorial(5, ring).is_zero());
}

#[test]
fn poles_are_reported() {
    let one_over_q5 = quantum_integer(5, ScalarRing::Generic).inv().unwrap();
    assert_eq!(
        one_over_q5.to_ring(ScalarRing::Cyclotomic(5)),
        Err(ScalarError::DenominatorVanishes(5))
    );
    assert!(Scalar::zero(ScalarRing::Cyclotomic(5)).inv().is_err());
}

#[test]
#[should_panic(expected = "scalar ring mismatch")]
fn mixing_rings_panics() {
    let _ = &Scalar::one(ScalarRing::Generic) + &Scalar::one(ScalarRing::Cyclotomic(5));
}

#[test]
fn canonical_text() {
    let g = quantum_integer(2, ScalarRing::Generic);
    assert_eq!(g.to_string(), "1*A^4 + 1*A^0 / 1*A^2");
    let c = Scalar::from_int(-2, ScalarRing::Cyclotomic(5));
    assert_eq!(c.to_string(), "cyc(N=5)[-2, 0, 0, 0]");
}
