use std::collections::BTreeSet;

use lgp_core::perm::{centralizer_of_pi, make_pi, subgroup_conjugacy_classes};
use lgp_core::{Perm, PermGroup};
use proptest::prelude::*;

mod common;
use common::{all_perms, all_subgroups, closure, conjugacy_class_count, product};

#[test]
fn centralizer_in_s6_matches_brute_force() {
    let pi = make_pi(3, 2);
    let brute: BTreeSet<Perm> = all_perms(6).into_iter().filter(|g| g.commutes_with(&pi)).collect();
    let w: BTreeSet<Perm> = centralizer_of_pi(3, 2).elements().unwrap().into_iter().collect();
    assert_eq!(brute.len(), 18);
    assert_eq!(w, brute);
}

#[test]
fn centralizer_generators_commute_and_orders_match() {
    for n in 1..=12usize {
        for r in 1..=12 / n {
            let pi = make_pi(n, r);
            let w = centralizer_of_pi(n, r);
            assert!(w.generators().iter().all(|g| g.commutes_with(&pi)));
            let expected = (n as u64).pow(r as u32) * (1..=r as u64).product::<u64>();
            assert_eq!(w.order_u64(), Some(expected), "n = {n}, r = {r}");
        }
    }
}

#[test]
fn subgroup_classes_match_undeduplicated_enumeration() {
    for (n, r) in [(2, 2), (3, 2), (1, 4), (2, 3), (4, 1), (6, 1), (1, 3)] {
        let w = centralizer_of_pi(n, r);
        let order = w.order_u64().unwrap() as usize;
        assert!(order <= 48);
        let elems = w.elements().unwrap();
        let subgroups = all_subgroups(&elems, n * r);
        let classes = subgroup_conjugacy_classes(&w).unwrap();
        let total: usize = classes.iter().map(|c| order / c.normalizer_order).sum();
        assert_eq!(total, subgroups.len(), "n = {n}, r = {r}");

        let class_count = conjugacy_class_count(&subgroups, &elems);
        assert_eq!(class_count, classes.len(), "n = {n}, r = {r}");
        for c in &classes {
            let as_set: BTreeSet<Perm> = c.elements.iter().cloned().collect();
            assert!(subgroups.contains(&as_set));
        }
    }
}

#[test]
fn orbit_stabilizer_on_encountered_subgroups() {
    for (n, r) in [(3, 2), (4, 3)] {
        for class in subgroup_conjugacy_classes(&centralizer_of_pi(n, r)).unwrap() {
            if class.order > 100 {
                continue;
            }
            let h = &class.representative;
            for p in 1..=(n * r) as u32 {
                let orbit = h.orbit(p).unwrap();
                let stab = class.elements.iter().filter(|e| e.fixes(p)).count();
                assert_eq!(orbit.len() * stab, class.order);
                assert_eq!(h.stabilizer_index(p).unwrap(), orbit.len());
            }
        }
    }
}

#[test]
fn class_lists_are_deterministic() {
    let w = centralizer_of_pi(4, 3);
    let a: Vec<Vec<u32>> = subgroup_conjugacy_classes(&w).unwrap().into_iter().map(|c| c.canonical_key).collect();
    let b: Vec<Vec<u32>> = subgroup_conjugacy_classes(&w).unwrap().into_iter().map(|c| c.canonical_key).collect();
    assert_eq!(a.len(), 164);
    assert_eq!(a, b);
}

fn perm_strategy(n: usize) -> impl Strategy<Value = Perm> {
    Just((1..=n as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(&v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn group_order_and_membership(gens in prop::collection::vec(perm_strategy(7), 1..=3), x in perm_strategy(7)) {
        let g = PermGroup::new(7, gens.clone()).unwrap();
        let elems = closure(&gens.iter().cloned().collect(), 7);
        prop_assert_eq!(g.order_u64(), Some(elems.len() as u64));
        prop_assert_eq!(g.contains(&x).unwrap(), elems.contains(&x));
        for p in 1..=7u32 {
            let orbit: BTreeSet<u32> = elems.iter().map(|e| e.apply(p)).collect();
            let stab = elems.iter().filter(|e| e.fixes(p)).count();
            prop_assert_eq!(orbit.len() * stab, elems.len());
            prop_assert_eq!(g.orbit(p).unwrap().into_iter().collect::<BTreeSet<_>>(), orbit);
        }
    }

    #[test]
    fn perm_algebra(a in perm_strategy(9), b in perm_strategy(9), k in -20i64..20) {
        prop_assert!(product(&a, &a.inverse()).is_identity());
        prop_assert_eq!(product(&a, &b).inverse(), product(&b.inverse(), &a.inverse()));
        prop_assert_eq!(Perm::parse(&a.to_string(), 9).unwrap(), a.clone());
        prop_assert_eq!(product(&a.pow(k), &a.pow(-k)), Perm::identity(9));
        let ord = a.order();
        prop_assert!(a.pow(i64::try_from(ord).unwrap()).is_identity());
    }
}
