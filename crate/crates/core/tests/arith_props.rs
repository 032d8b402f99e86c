use lgp_core::arith::{
    int, modpoly_root_exists, rat, resultant, MPoly, QuadExtElem, Rational, RationalFunction,
    ResultantStrategy,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

mod common;
use common::{brute_root, small_primes, sylvester_resultant};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

/// Polynomial in `c, x` with up to `terms` terms of degree ≤ `deg` in each variable.
fn poly_cx(terms: usize, deg: u32) -> impl Strategy<Value = MPoly> {
    prop::collection::vec((0..=deg, 0..=deg, small_rational()), 0..=terms).prop_map(|ts| {
        MPoly::from_terms(
            &["c", "x"],
            ts.into_iter().map(|(i, j, k)| (vec![i, j], k)),
        )
    })
}

fn poly_x(max_deg: usize) -> impl Strategy<Value = MPoly> {
    prop::collection::vec(-6i64..=6, 1..=max_deg + 1).prop_map(|cs| {
        MPoly::from_terms(
            &["x"],
            cs.into_iter()
                .enumerate()
                .map(|(i, k)| (vec![i as u32], int(k))),
        )
    })
}

fn constant(p: &MPoly) -> Rational {
    p.constant_value().expect("constant resultant")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(a in poly_cx(5, 3), b in poly_cx(5, 3), c in poly_cx(5, 3)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &a), &MPoly::zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn divrem_round_trip(a in poly_cx(8, 4), b in poly_cx(4, 2), k in 1u32..=3) {
        // monic in x of degree k, lower terms from b
        let lower = MPoly::from_coefficients_in("x", &b.coefficients_in("x").into_iter().take(k as usize).collect::<Vec<_>>());
        let d = &MPoly::var("x").pow(k) + &lower;
        let (q, r) = a.div_rem(&d, "x").unwrap();
        prop_assert_eq!(&(&q * &d) + &r, a);
        prop_assert!(r.is_zero() || r.degree_in("x") < k);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn resultant_matches_sylvester(f in poly_x(4), g in poly_x(4)) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let r = resultant(&f, &g, "x", ResultantStrategy::Subresultant).unwrap();
        prop_assert_eq!(constant(&r), sylvester_resultant(&f, &g));
    }

    #[test]
    fn resultant_is_multiplicative(f in poly_x(4), g in poly_x(4), h in poly_x(4)) {
        prop_assume!(!f.is_zero() && !g.is_zero() && !h.is_zero());
        let s = ResultantStrategy::Subresultant;
        let lhs = resultant(&f, &(&g * &h), "x", s).unwrap();
        let rhs = &resultant(&f, &g, "x", s).unwrap() * &resultant(&f, &h, "x", s).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn resultant_strategies_agree(a in poly_cx(6, 3), b in poly_cx(6, 3)) {
        prop_assume!(a.degree_in("x") >= 1 && b.degree_in("x") >= 1);
        let sub = resultant(&a, &b, "x", ResultantStrategy::Subresultant).unwrap();
        let int = resultant(&a, &b, "x", ResultantStrategy::Interpolation).unwrap();
        prop_assert_eq!(sub, int);
    }
}

#[test]
fn modpoly_root_test_matches_exhaustive_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let primes = small_primes(100);
    for _ in 0..20 {
        let deg = rng.gen_range(1..=8);
        let mut coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-50..=50)).collect();
        if coeffs[deg] == 0 {
            coeffs[deg] = 1;
        }
        let f = MPoly::from_terms(
            &["x"],
            coeffs.iter().enumerate().map(|(i, &k)| (vec![i as u32], int(k))),
        );
        for &p in &primes {
            let got = modpoly_root_exists(&f, p);
            if coeffs[deg] % p as i64 == 0 {
                assert!(got.is_err(), "{f} mod {p} should be rejected");
            } else {
                assert_eq!(got.unwrap(), brute_root(&coeffs, p), "{f} mod {p}");
            }
        }
    }
}

#[test]
fn modpoly_p_at_two() {
    let p = MPoly::parse("x^8 - 4x^7 - 16x^6 + 84x^5 - 6x^4 - 364x^3 + 584x^2 - 836x + 1021").unwrap();
    let coeffs = [1021, -836, 584, -364, -6, 84, -16, -4, 1];
    // P(1) = 460 is even, so 1 is a root mod 2
    assert!(brute_root(&coeffs, 2));
    assert!(modpoly_root_exists(&p, 2).unwrap());
}

fn rf_strategy() -> impl Strategy<Value = RationalFunction> {
    (
        prop::collection::vec(-5i64..=5, 1..=3),
        prop::collection::vec(-5i64..=5, 0..=2),
    )
        .prop_map(|(n, d)| {
            let num = MPoly::from_terms(&["u"], n.into_iter().enumerate().map(|(i, k)| (vec![i as u32], int(k))));
            // monic denominator u^k + ..., never zero
            let k = d.len() as u32;
            let den = &MPoly::var("u").pow(k)
                + &MPoly::from_terms(&["u"], d.into_iter().enumerate().map(|(i, c)| (vec![i as u32], int(c))));
            RationalFunction::new(&num, &den, "u").unwrap()
        })
}

fn ext_modulus() -> RationalFunction {
    RationalFunction::parse("u^3 + u + 1", "1", "u").unwrap()
}

fn ext_elem() -> impl Strategy<Value = QuadExtElem> {
    (rf_strategy(), rf_strategy())
        .prop_map(|(a, b)| QuadExtElem::new(a, b, ext_modulus()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn quadext_inverse_and_conjugation(a in ext_elem(), b in ext_elem()) {
        prop_assume!(!a.is_zero());
        let back = a.mul(&b).mul(&a.inv().unwrap());
        prop_assert_eq!(back, b.clone());
        prop_assert_eq!(a.mul(&b).conjugate(), a.conjugate().mul(&b.conjugate()));
        prop_assert_eq!(a.mul(&b).norm(), a.norm().mul(&b.norm()));
    }

    #[test]
    fn rational_function_field_laws(a in rf_strategy(), b in rf_strategy(), c in rf_strategy()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        if !b.is_zero() {
            prop_assert_eq!(a.div(&b).unwrap().mul(&b), a);
        }
    }
}

#[test]
fn divrem_example_second_iterate() {
    let num = MPoly::parse("(x^2 + c)^2 + c - x").unwrap();
    let den = MPoly::parse("x^2 + c - x").unwrap();
    let (q, r) = num.div_rem(&den, "x").unwrap();
    assert_eq!(q, MPoly::parse("x^2 + x + c + 1").unwrap());
    assert!(r.is_zero());
}

#[test]
fn divrem_rejects_non_unit_leading_coefficient() {
    let err = MPoly::parse("x^3").unwrap().div_rem(&MPoly::parse("c*x + 1").unwrap(), "x");
    assert!(err.unwrap_err().to_string().contains("non-unit leading coefficient"));
}
