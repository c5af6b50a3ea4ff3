use hq_euler::arith::parse_qrat;
use hq_euler::euler::{
    composition_count, compositions, euler_number, euler_number_higher, multinomial_coeff,
};
use hq_euler::verify::classical_higher;
use hq_euler::{BigRat, EgfSeries, QPoly, QRat};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Pow, Zero};
use proptest::prelude::*;

fn small_poly(max_deg: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-6i64..=6, 0..=max_deg + 1).prop_map(|c| QPoly::from_ints(&c))
}

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = QPoly> {
    small_poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

fn qrat() -> impl Strategy<Value = QRat> {
    (small_poly(3), nonzero_poly(3)).prop_map(|(n, d)| QRat::new(n, d).unwrap())
}

fn small_rat() -> impl Strategy<Value = BigRat> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| BigRat::new(BigInt::from(n), BigInt::from(d)))
}

fn rat_series(order: usize) -> impl Strategy<Value = EgfSeries<BigRat>> {
    prop::collection::vec(small_rat(), order + 1).prop_map(EgfSeries::new)
}

fn factorial(n: u32) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn results_are_canonical(a in qrat(), b in qrat()) {
        for x in [a.add(&b), a.sub(&b), a.mul(&b), a.neg()] {
            prop_assert!(x.is_canonical());
        }
        if let Ok(x) = a.checked_div(&b) {
            prop_assert!(x.is_canonical());
            prop_assert_eq!(x.mul(&b), a.clone());
        }
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in qrat(), b in qrat(), q0 in small_rat()) {
        if let (Ok(x), Ok(y)) = (a.eval(&q0), b.eval(&q0)) {
            prop_assert_eq!(a.add(&b).eval(&q0).unwrap(), &x + &y);
            prop_assert_eq!(a.mul(&b).eval(&q0).unwrap(), &x * &y);
        }
    }

    #[test]
    fn q_power_substitution_is_a_homomorphism(a in qrat(), b in qrat(), d in 1u32..=4) {
        prop_assert_eq!(a.mul(&b).subst_qpow(d), a.subst_qpow(d).mul(&b.subst_qpow(d)));
        prop_assert_eq!(a.add(&b).subst_qpow(d), a.subst_qpow(d).add(&b.subst_qpow(d)));
    }

    #[test]
    fn gcd_divides_and_is_greatest(a in nonzero_poly(4), b in nonzero_poly(4), c in nonzero_poly(2)) {
        let g = QPoly::gcd(&a, &b);
        prop_assert!(g.is_monic());
        prop_assert!(a.div_rem(&g).unwrap().1.is_zero());
        prop_assert!(b.div_rem(&g).unwrap().1.is_zero());
        let ac = &a * &c;
        let bc = &b * &c;
        prop_assert_eq!(QPoly::gcd(&ac, &bc), (&g * &c).monic());
    }

    #[test]
    fn series_ring_laws(a in rat_series(6), b in rat_series(6), c in rat_series(6)) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        let cube = a.mul(&a).unwrap().mul(&a).unwrap();
        prop_assert_eq!(a.pow(3), cube);
        match a.inv() {
            Ok(ai) => prop_assert_eq!(a.mul(&ai).unwrap(), EgfSeries::one(6)),
            Err(_) => prop_assert!(a.coeffs()[0].is_zero()),
        }
    }

    #[test]
    fn specialization_commutes(n in 0u32..=8, h in -2i64..=3, q0 in small_rat()) {
        // Recurrence run directly over Q with q replaced by q0.
        let Ok(qh) = QRat::q_pow(h).eval(&q0) else { return Ok(()) };
        let denom = &qh + BigRat::one();
        prop_assume!(!denom.is_zero());
        let mut e: Vec<BigRat> = vec![BigRat::from_integer(2.into()) / &denom];
        for m in 1..=n as u64 {
            let mut s = BigRat::zero();
            for (l, el) in e.iter().enumerate() {
                s += el * BigRat::from_integer(num_integer::binomial(BigInt::from(m), BigInt::from(l as u64)));
            }
            e.push(-&qh * s / &denom);
        }
        prop_assert_eq!(euler_number(n, h).eval(&q0).unwrap(), e[n as usize].clone());
    }

    #[test]
    fn multinomial_weights_sum_to_power(n in 0u32..=10, v in 1u32..=4) {
        let total: BigUint = compositions(n, v).map(|c| multinomial_coeff(&c)).sum();
        prop_assert_eq!(total, BigUint::from(v).pow(n));
        prop_assert_eq!(BigUint::from(compositions(n, v).count()), composition_count(n, v));
    }

    #[test]
    fn telescoping_matches_factorials(n in 0u32..=12, v in 1u32..=5) {
        for c in compositions(n, v) {
            let denom: BigUint = c.parts().iter().map(|&l| factorial(l)).product();
            prop_assert_eq!(multinomial_coeff(&c), factorial(n) / denom);
        }
    }

    #[test]
    fn zero_q_degenerates(n in 0u32..=8, h in 1i64..=3, v in 1u32..=3) {
        let at_zero = euler_number_higher(n, h, v).eval(&BigRat::zero()).unwrap();
        let want = if n == 0 { BigRat::from_integer(BigInt::from(2).pow(v)) } else { BigRat::zero() };
        prop_assert_eq!(at_zero, want);
    }

    #[test]
    fn denominator_divides_power_of_q_h_plus_one(n in 0u32..=8, h in 1i64..=3, v in 1u32..=3) {
        let e = euler_number_higher(n, h, v);
        let mut base = vec![0i64; h as usize + 1];
        base[0] = 1;
        base[h as usize] = 1;
        let bound = QPoly::from_ints(&base).pow(n + v);
        prop_assert!(bound.div_rem(e.den()).unwrap().1.is_zero());
    }

    #[test]
    fn h_zero_reduces_to_classical(n in 0u32..=10, v in 1u32..=3) {
        let e = euler_number_higher(n, 0, v);
        let c = e.as_constant();
        prop_assert!(c.is_some());
        prop_assert_eq!(c.unwrap(), classical_higher(n as usize, v)[n as usize].clone());
    }

    #[test]
    fn renderings_parse_back(a in qrat()) {
        prop_assert_eq!(parse_qrat(&a.render("q")).unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<QRat>(&json).unwrap(), a);
    }
}

#[test]
fn non_canonical_json_is_rejected() {
    for bad in [
        r#"{"num":["2","2"],"den":["2"]}"#,
        r#"{"num":["1","1"],"den":["1","1"]}"#,
        r#"{"num":["1","0"],"den":["1"]}"#,
        r#"{"num":["1"],"den":["0"]}"#,
        r#"{"num":["x"],"den":["1"]}"#,
    ] {
        assert!(serde_json::from_str::<QRat>(bad).is_err(), "{bad}");
    }
}
