//! Subgroup search constraining the Galois group of a dynatomic polynomial
//! when every completion has a point of period `n` but the base field has none.
//!
//! For input `(n, s)` the search works in `S_N`, `N` the number of points of
//! period `n` of a degree-`s` map, with `π` the product of `r = N/n` disjoint
//! `n`-cycles and `W` its centralizer. A subgroup `H ≤ W` qualifies when
//!
//! 1. every element of `H` fixes at least one of `n, 2n, …, rn`, and
//! 2. for each `i`, some generator of `H` moves `n·i`.
//!
//! Each qualifying class representative is reported with its index set
//! `I = { |H : Stab_H(n·i)| }`.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::fixtures::{parse_blocks, parse_index_set};
use crate::perm::{
    centralizer_of_pi, iso_fingerprint, make_pi, subgroup_conjugacy_classes, Fingerprint, Perm,
    PermGroup, StructureTag, CLASS_ENUMERATION_BOUND,
};

/// Largest candidate order for which condition 1 is settled by enumeration.
pub const CONDITION_ENUMERATION_BOUND: u64 = 1_000_000;

/// Möbius function by trial division.
pub fn mobius(m: u64) -> i64 {
    assert!(m >= 1, "mobius is defined for m >= 1");
    let mut m = m;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

/// `Σ_{d | n} μ(n/d) s^d`, the number of points of period `n` for a generic
/// degree-`s` map.
pub fn periodic_point_count(n: u64, s: u64) -> Result<u64> {
    if n == 0 || s < 2 {
        return Err(Error::InvalidArgument(format!(
            "need n >= 1 and s >= 2, got n = {n}, s = {s}"
        )));
    }
    let overflow = || Error::InvalidArgument(format!("s^n overflows for n = {n}, s = {s}"));
    let mut total: i128 = 0;
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        let term = s.checked_pow(d as u32).ok_or_else(overflow)? as i128;
        total += mobius(n / d) as i128 * term;
    }
    u64::try_from(total).map_err(|_| overflow())
}

/// Outcome of the two step-6 conditions for one subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step6 {
    /// Condition 1; `None` if it could not be settled without enumerating a
    /// group above [`CONDITION_ENUMERATION_BOUND`].
    pub within_union: Option<bool>,
    /// An element moving every `n·i`, when condition 1 fails.
    pub witness: Option<Perm>,
    /// Condition 2: the points `n·i` fixed by every generator.
    pub fixed_by_all: Vec<u32>,
}

impl Step6 {
    pub fn passes(&self) -> bool {
        self.within_union == Some(true) && self.fixed_by_all.is_empty()
    }
}

fn marked_points(n: usize, r: usize) -> Vec<u32> {
    (1..=r).map(|i| (n * i) as u32).collect()
}

fn moves_all(g: &Perm, points: &[u32]) -> bool {
    points.iter().all(|&p| !g.fixes(p))
}

/// Evaluates both conditions; `elements` may be supplied when already known.
pub fn step6(h: &PermGroup, n: usize, r: usize, elements: Option<&[Perm]>) -> Result<Step6> {
    let points = marked_points(n, r);
    let fixed_by_all = points
        .iter()
        .copied()
        .filter(|&p| h.generators().iter().all(|g| g.fixes(p)))
        .collect();
    let gens = h.generators();
    let mut quick: Vec<Perm> = gens.to_vec();
    for a in gens {
        for b in gens {
            quick.push(a.mul(b));
        }
    }
    if let Some(prod) = gens.iter().cloned().reduce(|a, b| a.mul(&b)) {
        quick.push(prod);
    }
    let (within_union, witness) = match quick.into_iter().find(|g| moves_all(g, &points)) {
        Some(w) => (Some(false), Some(w)),
        None => {
            let owned;
            let elems = match elements {
                Some(e) => Some(e),
                None if h
                    .order()
                    .to_u64()
                    .is_some_and(|o| o <= CONDITION_ENUMERATION_BOUND) =>
                {
                    owned = h.elements()?;
                    Some(owned.as_slice())
                }
                None => None,
            };
            match elems {
                Some(e) => match e.iter().find(|g| moves_all(g, &points)) {
                    Some(w) => (Some(false), Some(w.clone())),
                    None => (Some(true), None),
                },
                None => (None, None),
            }
        }
    };
    Ok(Step6 {
        within_union,
        witness,
        fixed_by_all,
    })
}

/// `{ |H : Stab_H(n·i)| : 1 ≤ i ≤ r }` via orbit lengths.
pub fn index_set(h: &PermGroup, n: usize, r: usize) -> Result<BTreeSet<usize>> {
    marked_points(n, r)
        .into_iter()
        .map(|p| h.stabilizer_index(p))
        .collect()
}

/// One output pair `(H, I)`.
#[derive(Clone, Debug)]
pub struct AlgorithmOnePair {
    pub group: PermGroup,
    pub index_set: BTreeSet<usize>,
    pub fingerprint: Fingerprint,
    pub structure: StructureTag,
    pub canonical_key: Vec<u32>,
}

/// Full record of one enumeration run.
#[derive(Clone, Debug)]
pub struct AlgorithmOneRun {
    pub n: usize,
    pub s: u64,
    pub degree: usize,
    pub r: usize,
    pub pi: Perm,
    pub ambient_order: BigUint,
    pub class_count: usize,
    pub pairs: Vec<AlgorithmOnePair>,
}

/// Degree `N`, cycle count `r`, `π` and the centralizer `W` for input `(n, s)`.
pub fn setup(n: usize, s: u64) -> Result<(usize, usize, Perm, PermGroup)> {
    let big_n = periodic_point_count(n as u64, s)? as usize;
    assert_eq!(big_n % n, 0, "N must be divisible by n");
    let r = big_n / n;
    Ok((big_n, r, make_pi(n, r), centralizer_of_pi(n, r)))
}

/// Enumeration mode: every conjugacy class of subgroups of `W` is tested.
pub fn run_algorithm1(n: usize, s: u64) -> Result<AlgorithmOneRun> {
    let (degree, r, pi, w) = setup(n, s)?;
    let ambient_order = w.order();
    if ambient_order
        .to_u64()
        .is_none_or(|o| o > CLASS_ENUMERATION_BOUND)
    {
        return Err(Error::AmbientTooLarge(format!("{ambient_order} (input ({n}, {s}))")));
    }
    let classes = subgroup_conjugacy_classes(&w)?;
    let mut pairs = Vec::new();
    for class in &classes {
        let h = &class.representative;
        if !step6(h, n, r, Some(&class.elements))?.passes() {
            continue;
        }
        let fingerprint = iso_fingerprint(h)?;
        pairs.push(AlgorithmOnePair {
            group: h.clone(),
            index_set: index_set(h, n, r)?,
            structure: fingerprint.tag(),
            fingerprint,
            canonical_key: class.canonical_key.clone(),
        });
    }
    Ok(AlgorithmOneRun {
        n,
        s,
        degree,
        r,
        pi,
        ambient_order,
        class_count: classes.len(),
        pairs,
    })
}

/// A supplied subgroup with optional expectations.
#[derive(Clone, Debug)]
pub struct Candidate {
    pub name: String,
    pub generators: Vec<Perm>,
    pub expected_index_set: Option<BTreeSet<usize>>,
    pub expected_structure: Option<StructureTag>,
}

/// Reads candidate blocks (generators, optional `I` and `structure` fields).
pub fn parse_candidates(text: &str, degree: usize) -> Result<Vec<Candidate>> {
    parse_blocks(text)?
        .into_iter()
        .map(|b| {
            if b.permutations.is_empty() {
                return Err(Error::InvalidArgument(format!(
                    "candidate [{}] has no generators",
                    b.name
                )));
            }
            Ok(Candidate {
                generators: b.parse_permutations(degree)?,
                expected_index_set: b.field("I").map(parse_index_set).transpose()?,
                expected_structure: b.field("structure").map(str::parse).transpose()?,
                name: b.name,
            })
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct CandidateReport {
    pub name: String,
    pub order: BigUint,
    pub commutes_with_pi: bool,
    pub step6: Step6,
    pub index_set: BTreeSet<usize>,
    pub structure: StructureTag,
    pub matches_expected: bool,
    pub passed: bool,
    pub detail: String,
}

/// Verify mode: checks each candidate against `π` and the step-6 conditions
/// without touching the subgroup lattice of `W`.
pub fn verify_candidates(n: usize, s: u64, candidates: &[Candidate]) -> Result<Vec<CandidateReport>> {
    let (degree, r, pi, _) = setup(n, s)?;
    let mut out = Vec::with_capacity(candidates.len());
    for cand in candidates {
        if let Some(g) = cand.generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
        let h = PermGroup::new(degree, cand.generators.clone())?;
        let commutes = cand.generators.iter().all(|g| g.commutes_with(&pi));
        let cond = step6(&h, n, r, None)?;
        let iset = index_set(&h, n, r)?;
        let structure = match iso_fingerprint(&h) {
            Ok(fp) => fp.tag(),
            Err(Error::OrderBound { .. }) => StructureTag::Undecided,
            Err(e) => return Err(e),
        };
        let mut problems = Vec::new();
        if !commutes {
            problems.push("a generator does not commute with pi".to_string());
        }
        match (&cond.within_union, &cond.witness) {
            (Some(false), Some(w)) => problems.push(format!(
                "condition 1 fails: {w} moves every marked point"
            )),
            (None, _) => problems.push("condition 1 undecided: group too large".into()),
            _ => {}
        }
        if !cond.fixed_by_all.is_empty() {
            problems.push(format!(
                "condition 2 fails: every generator fixes {:?}",
                cond.fixed_by_all
            ));
        }
        let mut matches = true;
        if let Some(expected) = &cand.expected_index_set {
            if *expected != iset {
                matches = false;
                problems.push(format!("index set {iset:?}, expected {expected:?}"));
            }
        }
        if let Some(expected) = cand.expected_structure {
            if expected != structure {
                matches = false;
                problems.push(format!("structure {structure}, expected {expected}"));
            }
        }
        let passed = problems.is_empty();
        out.push(CandidateReport {
            name: cand.name.clone(),
            order: h.order(),
            commutes_with_pi: commutes,
            step6: cond,
            index_set: iset,
            structure,
            matches_expected: matches,
            passed,
            detail: problems.join("; "),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_values() {
        let expected = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (m, &mu) in (1..=12).zip(&expected) {
            assert_eq!(mobius(m), mu, "mu({m})");
        }
    }

    #[test]
    fn point_counts() {
        assert_eq!(periodic_point_count(1, 2).unwrap(), 2);
        assert_eq!(periodic_point_count(3, 2).unwrap(), 6);
        assert_eq!(periodic_point_count(4, 2).unwrap(), 12);
        assert_eq!(periodic_point_count(5, 2).unwrap(), 30);
        assert_eq!(periodic_point_count(6, 3).unwrap(), 696);
        assert!(periodic_point_count(0, 2).is_err());
        assert!(periodic_point_count(80, 2).is_err());
    }

    #[test]
    fn small_inputs_are_empty() {
        for n in 1..=3 {
            assert!(run_algorithm1(n, 2).unwrap().pairs.is_empty());
        }
    }

    #[test]
    fn large_ambient_is_refused() {
        assert!(matches!(run_algorithm1(5, 2), Err(Error::AmbientTooLarge(_))));
    }
}
