use lgp_core::arith::{rat, MPoly};
use lgp_core::density::{
    exact_density, prime_sieve, sampled_density, sampled_density_partitioned,
    within_standard_errors, GaloisData, SamplerPoly, EXACT_DENSITY_BOUND,
};
use lgp_core::perm::centralizer_of_pi;
use lgp_core::{Error, PermGroup};
use proptest::prelude::*;

fn poly(s: &str) -> MPoly {
    MPoly::parse(s).unwrap()
}

#[test]
fn gaussian_quadratic_near_one_half() {
    let s = sampled_density(&poly("x^2 + 1"), 1_000_000).unwrap();
    assert_eq!(s.excluded_primes, vec![2]);
    assert!(within_standard_errors(&s, 0.5, 3.0), "{} +- {}", s.estimate(), s.standard_error());
}

#[test]
fn cyclic_cubic_near_one_third() {
    let s = sampled_density(&poly("x^3 + x^2 - 2x - 1"), 1_000_000).unwrap();
    assert_eq!(s.excluded_primes, vec![7]);
    assert!((s.estimate() - 1.0 / 3.0).abs() < 0.01, "{}", s.estimate());
}

#[test]
fn repeated_factors_do_not_change_the_tally() {
    let a = sampled_density(&poly("(x^2 + 1)(x^2 - 3)"), 50_000).unwrap();
    let b = sampled_density(&poly("(x^2 + 1)^3 (x^2 - 3)^2"), 50_000).unwrap();
    assert_eq!(a, b);
}

#[test]
fn sampler_rejects_bad_input() {
    assert!(matches!(sampled_density(&poly("5"), 100), Err(Error::ConstantInVariable(_))));
    assert!(sampled_density(&poly("x^2 + 1"), 2).is_err());
    assert!(SamplerPoly::parse("x*y + 1").is_err());
}

#[test]
fn exact_density_properties() {
    // transitive with proper point stabilizers: strictly below 1
    for (n, r) in [(2, 2), (3, 2), (4, 2)] {
        let w = centralizer_of_pi(n, r);
        let d = exact_density(&GaloisData::new(w, vec![1]).unwrap()).unwrap();
        assert!(d > rat(0, 1) && d < rat(1, 1), "{d}");
    }
    // a global fixed point gives density 1
    let g = PermGroup::from_cycle_strings(4, &["(1,2,3)"]).unwrap();
    assert_eq!(exact_density(&GaloisData::new(g, vec![4]).unwrap()).unwrap(), rat(1, 1));
    // S3 with one point stabilizer: identity and three transpositions
    let s3 = PermGroup::symmetric(3);
    assert_eq!(exact_density(&GaloisData::new(s3, vec![2]).unwrap()).unwrap(), rat(2, 3));
    // regular cyclic actions give 1/deg
    for n in 2..=9usize {
        let cycle = format!("({})", (1..=n).map(|i| i.to_string()).collect::<Vec<_>>().join(","));
        let g = PermGroup::from_cycle_strings(n, &[cycle]).unwrap();
        assert_eq!(exact_density(&GaloisData::new(g, vec![1]).unwrap()).unwrap(), rat(1, n as i64));
    }
    let big = PermGroup::symmetric(9);
    assert!(big.order_u64().unwrap() > EXACT_DENSITY_BOUND);
    assert!(matches!(
        exact_density(&GaloisData::new(big, vec![1]).unwrap()),
        Err(Error::OrderBound { .. })
    ));
}

#[test]
fn two_factor_union_uses_every_stabilizer() {
    // x^2 + 1 and x^2 - 2 with group V4 on roots {1,2} u {3,4}
    let g = PermGroup::from_cycle_strings(4, &["(1,2)", "(3,4)"]).unwrap();
    let d = exact_density(&GaloisData::new(g, vec![1, 3]).unwrap()).unwrap();
    assert_eq!(d, rat(3, 4));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sampler_is_independent_of_partitioning(
        coeffs in prop::collection::vec(-20i64..=20, 2..=6),
        parts in 1usize..=17,
    ) {
        let mut coeffs = coeffs;
        if *coeffs.last().unwrap() == 0 {
            *coeffs.last_mut().unwrap() = 1;
        }
        let f = MPoly::from_terms(
            &["x"],
            coeffs.iter().enumerate().map(|(i, &k)| (vec![i as u32], rat(k, 1))),
        );
        prop_assume!(f.degree_in("x") >= 1);
        let whole = sampled_density_partitioned(&f, 5_000, 1).unwrap();
        let split = sampled_density_partitioned(&f, 5_000, parts).unwrap();
        prop_assert_eq!(&whole, &split);
        prop_assert_eq!(whole.total as usize + whole.excluded_primes.len(), prime_sieve(5_000).unwrap().len());
    }
}
