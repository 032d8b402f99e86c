//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use lgp_core::arith::{int, rat, MPoly, Rational};
use lgp_core::Perm;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;

pub fn all_perms(n: usize) -> Vec<Perm> {
    fn rec(prefix: &mut Vec<u32>, left: &mut Vec<u32>, out: &mut Vec<Perm>) {
        if left.is_empty() {
            out.push(Perm::from_images(prefix).unwrap());
            return;
        }
        for i in 0..left.len() {
            let v = left.remove(i);
            prefix.push(v);
            rec(prefix, left, out);
            prefix.pop();
            left.insert(i, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut (1..=n as u32).collect(), &mut out);
    out
}

pub fn product(a: &Perm, b: &Perm) -> Perm {
    a.compose(b).unwrap()
}

/// Closure of a set of elements under multiplication.
pub fn closure(gens: &BTreeSet<Perm>, degree: usize) -> BTreeSet<Perm> {
    let mut set: BTreeSet<Perm> = BTreeSet::from([Perm::identity(degree)]);
    let mut frontier: Vec<Perm> = set.iter().cloned().collect();
    while let Some(e) = frontier.pop() {
        for g in gens {
            let p = product(&e, g);
            if set.insert(p.clone()) {
                frontier.push(p);
            }
        }
    }
    set
}

/// Every subgroup, by repeatedly adjoining single elements to known subgroups.
pub fn all_subgroups(elems: &[Perm], degree: usize) -> HashSet<BTreeSet<Perm>> {
    let trivial = BTreeSet::from([Perm::identity(degree)]);
    let mut found: HashSet<BTreeSet<Perm>> = HashSet::from([trivial.clone()]);
    let mut queue = vec![trivial];
    while let Some(h) = queue.pop() {
        for x in elems {
            if h.contains(x) {
                continue;
            }
            let mut gens = h.clone();
            gens.insert(x.clone());
            let k = closure(&gens, degree);
            if found.insert(k.clone()) {
                queue.push(k);
            }
        }
    }
    found
}

/// Number of conjugacy classes among `subgroups` under conjugation by `elems`.
pub fn conjugacy_class_count(subgroups: &HashSet<BTreeSet<Perm>>, elems: &[Perm]) -> usize {
    let mut seen: HashSet<BTreeSet<Perm>> = HashSet::new();
    let mut count = 0;
    for h in subgroups {
        if seen.contains(h) {
            continue;
        }
        count += 1;
        for g in elems {
            seen.insert(h.iter().map(|x| x.conjugate_by(g)).collect());
        }
    }
    count
}

/// Whether the integer polynomial (constant term first) has a root mod `p`.
pub fn brute_root(coeffs: &[i64], p: u64) -> bool {
    (0..p as i64).any(|x| {
        coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, &c| (acc * x + c).mod_floor(&BigInt::from(p)))
            .is_zero()
    })
}

pub fn small_primes(below: u64) -> Vec<u64> {
    (2..below).filter(|&n| (2..n).all(|d| n % d != 0)).collect()
}

/// Determinant by Gaussian elimination over ℚ.
pub fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut acc = Rational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if piv != col {
            m.swap(piv, col);
            acc = -acc;
        }
        let p = m[col][col].clone();
        acc *= &p;
        for r in col + 1..n {
            let f = &m[r][col] / &p;
            for k in col..n {
                let v = &f * &m[col][k];
                m[r][k] -= v;
            }
        }
    }
    acc
}

/// Resultant of univariate polynomials in `x` from the Sylvester matrix.
pub fn sylvester_resultant(a: &MPoly, b: &MPoly) -> Rational {
    let coeffs = |f: &MPoly| -> Vec<Rational> {
        f.coefficients_in("x").iter().map(|c| c.constant_value().unwrap()).collect()
    };
    let (ca, cb) = (coeffs(a), coeffs(b));
    let (m, n) = (ca.len() - 1, cb.len() - 1);
    let size = m + n;
    if size == 0 {
        return Rational::one();
    }
    let mut rows = Vec::new();
    for (src, count) in [(&ca, n), (&cb, m)] {
        for i in 0..count {
            let mut row = vec![Rational::zero(); size];
            for (j, c) in src.iter().rev().enumerate() {
                row[i + j] = c.clone();
            }
            rows.push(row);
        }
    }
    det(rows)
}

/// Random polynomial in `c, x` with small rational coefficients.
pub fn random_poly_cx<R: Rng>(rng: &mut R, terms: usize, deg: u32) -> MPoly {
    let n = rng.gen_range(0..=terms);
    MPoly::from_terms(
        &["c", "x"],
        (0..n).map(|_| {
            (
                vec![rng.gen_range(0..=deg), rng.gen_range(0..=deg)],
                rat(rng.gen_range(-9..=9), rng.gen_range(1..=4)),
            )
        }),
    )
}

/// Random univariate integer polynomial in `x` of exact degree `deg`.
pub fn random_int_poly<R: Rng>(rng: &mut R, deg: usize, bound: i64) -> (MPoly, Vec<i64>) {
    let mut coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-bound..=bound)).collect();
    if coeffs[deg] == 0 {
        coeffs[deg] = 1;
    }
    let f = MPoly::from_terms(
        &["x"],
        coeffs.iter().enumerate().map(|(i, &k)| (vec![i as u32], int(k))),
    );
    (f, coeffs)
}
