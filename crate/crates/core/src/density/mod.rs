//! Densities of sets of primes `p` for which an integer polynomial has a
//! root in `ℚ_p`.
//!
//! Two routes are offered. [`exact_density`] evaluates the group-theoretic
//! formula from a Galois group and one root index per irreducible factor.
//! [`sampled_density`] counts primes up to a bound; it estimates natural
//! density, which agrees with Dirichlet density for the Chebotarev sets that
//! arise here. Primes dividing the leading coefficient or the discriminant of
//! the squarefree part are skipped and reported. At every other prime a root
//! modulo `p` is simple and lifts to `ℚ_p` by Hensel's lemma.

pub mod sieve;

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::arith::{
    discriminant, MPoly, ModPoly, QPoly, Rational, ResultantStrategy, UPoly,
};
use crate::check::IdentityCheck;
use crate::error::{Error, Result};
use crate::perm::{Perm, PermGroup};

pub use sieve::{prime_sieve, primes_in_range, SIEVE_MAX};

/// Largest group order accepted by [`exact_density`].
pub const EXACT_DENSITY_BOUND: u64 = 100_000;

/// Absolute tolerance for sampled estimates against their exact targets.
pub const DENSITY_TOLERANCE: f64 = 0.01;

/// Degree-8 factor of `Φ₄` at `c = −5/4`.
pub const P_POLY: &str = "x^8 - 4x^7 - 16x^6 + 84x^5 - 6x^4 - 364x^3 + 584x^2 - 836x + 1021";
/// Quadratic factor of `Φ₄` at `c = −5/4`.
pub const Q_POLY: &str = "x^2 + 2x - 1";

/// A Galois group acting on root indices, with one chosen root per factor.
#[derive(Clone, Debug)]
pub struct GaloisData {
    group: PermGroup,
    stabilizer_points: Vec<u32>,
}

impl GaloisData {
    /// Points are 1-based root indices.
    pub fn new(group: PermGroup, stabilizer_points: Vec<u32>) -> Result<Self> {
        let n = group.degree() as u32;
        if stabilizer_points.is_empty() {
            return Err(Error::InvalidArgument("no stabilizer points given".into()));
        }
        if let Some(&p) = stabilizer_points.iter().find(|&&p| p == 0 || p > n) {
            return Err(Error::InvalidArgument(format!(
                "point {p} outside 1..={n}"
            )));
        }
        Ok(Self {
            group,
            stabilizer_points,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn stabilizer_points(&self) -> &[u32] {
        &self.stabilizer_points
    }
}

/// `|⋃_σ σUσ⁻¹| / |G|` where `U` is the union of the point stabilizers.
pub fn exact_density(data: &GaloisData) -> Result<Rational> {
    let g = &data.group;
    let order = g.order();
    if order.to_u64().is_none_or(|o| o > EXACT_DENSITY_BOUND) {
        return Err(Error::OrderBound {
            order: order.to_string(),
            bound: EXACT_DENSITY_BOUND,
        });
    }
    let elems = g.elements()?;
    let mut closed: HashSet<Perm> = elems
        .iter()
        .filter(|e| data.stabilizer_points.iter().any(|&p| e.fixes(p)))
        .cloned()
        .collect();
    let mut frontier: Vec<Perm> = closed.iter().cloned().collect();
    while let Some(e) = frontier.pop() {
        for s in g.generators() {
            let c = e.conjugate_by(s);
            if closed.insert(c.clone()) {
                frontier.push(c);
            }
        }
    }
    Ok(Rational::new(
        BigInt::from(closed.len()),
        BigInt::from(elems.len()),
    ))
}

/// Prime tally from [`sampled_density`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampledDensity {
    pub hits: u64,
    pub total: u64,
    pub bound: u64,
    /// Primes `≤ bound` left out of `total`.
    pub excluded_primes: Vec<u64>,
}

impl SampledDensity {
    pub fn estimate(&self) -> f64 {
        if self.total == 0 {
            return 0.0;
        }
        self.hits as f64 / self.total as f64
    }

    /// Binomial standard error of [`estimate`](Self::estimate).
    pub fn standard_error(&self) -> f64 {
        if self.total == 0 {
            return 0.0;
        }
        let p = self.estimate();
        (p * (1.0 - p) / self.total as f64).sqrt()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        (self.total > 0).then(|| Rational::new(self.hits.into(), self.total.into()))
    }

    fn merge(mut self, other: Self) -> Self {
        self.hits += other.hits;
        self.total += other.total;
        self.excluded_primes.extend(other.excluded_primes);
        self
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum DensityEstimate {
    Exact(Rational),
    Sampled(SampledDensity),
}

impl DensityEstimate {
    pub fn value(&self) -> f64 {
        match self {
            DensityEstimate::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            DensityEstimate::Sampled(s) => s.estimate(),
        }
    }
}

/// Squarefree primitive integer polynomial prepared for root tests mod `p`.
#[derive(Clone, Debug)]
pub struct SamplerPoly {
    coeffs: Vec<BigInt>,
    /// `lc · disc`; a prime is bad iff it divides this.
    bad: BigInt,
}

/// Fast-path limit on the degree for the allocation-free kernel.
const KERNEL_DEGREE: usize = 32;

impl SamplerPoly {
    /// `f` must be univariate and nonconstant.
    pub fn new(f: &MPoly) -> Result<Self> {
        let var = match f.vars() {
            [v] => v.clone(),
            [] => return Err(Error::ConstantInVariable("x".into())),
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "expected a univariate polynomial, got {f}"
                )))
            }
        };
        if f.degree_in(&var) == 0 {
            return Err(Error::ConstantInVariable(var));
        }
        let q: QPoly = UPoly::new(
            f.coefficients_in(&var)
                .iter()
                .map(|c| c.constant_value().unwrap())
                .collect(),
        );
        let sf = q.squarefree_part().primitive_integer();
        let coeffs = sf.coeffs().to_vec();
        let lc = coeffs.last().unwrap().clone();
        let as_mpoly = MPoly::from_coefficients_in(
            &var,
            &coeffs
                .iter()
                .map(|c| MPoly::constant(Rational::from_integer(c.clone())))
                .collect::<Vec<_>>(),
        );
        let disc = if coeffs.len() == 2 {
            BigInt::from(1)
        } else {
            discriminant(&as_mpoly, &var, ResultantStrategy::Subresultant)?
                .constant_value()
                .expect("univariate discriminant is a constant")
                .to_integer()
        };
        Ok(Self {
            coeffs,
            bad: lc * disc,
        })
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::new(&MPoly::parse(s)?)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Integer coefficients of the squarefree part, constant term first.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_good(&self, p: u64) -> bool {
        !self.bad.is_multiple_of(&BigInt::from(p))
    }

    /// `None` at bad primes, else whether a root exists mod `p`.
    pub fn classify(&self, p: u64) -> Option<bool> {
        self.is_good(p).then(|| self.has_root_mod(p))
    }

    /// Whether the polynomial has a root mod the prime `p`.
    pub fn has_root_mod(&self, p: u64) -> bool {
        let residues: Vec<u64> = self
            .coeffs
            .iter()
            .map(|c| c.mod_floor(&BigInt::from(p)).to_u64().unwrap())
            .collect();
        if p < 1 << 32 && self.degree() <= KERNEL_DEGREE {
            if let Some(r) = kernel_has_root(&residues, p) {
                return r;
            }
        }
        ModPoly::new(p, residues).is_ok_and(|f| f.has_root())
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Root test mod `p < 2³²` via `gcd(x^p − x, f)` on fixed-size buffers.
/// Returns `None` when the leading coefficient vanishes mod `p`.
fn kernel_has_root(residues: &[u64], p: u64) -> Option<bool> {
    let d = residues.len() - 1;
    let lc = residues[d];
    if lc == 0 {
        return None;
    }
    if d == 1 {
        return Some(true);
    }
    let lc_inv = pow_mod(lc, p - 2, p);
    let mut f = [0u64; KERNEL_DEGREE + 1];
    for (slot, &c) in f.iter_mut().zip(residues) {
        *slot = c * lc_inv % p;
    }

    // r = x^p mod f by left-to-right binary powering
    let mut r = [0u64; KERNEL_DEGREE];
    r[0] = 1;
    let mut prod = [0u64; 2 * KERNEL_DEGREE];
    for bit in (0..64 - p.leading_zeros()).rev() {
        prod[..2 * d].fill(0);
        for i in 0..d {
            if r[i] == 0 {
                continue;
            }
            for j in 0..d {
                prod[i + j] = (prod[i + j] + r[i] * r[j]) % p;
            }
        }
        let top = if (p >> bit) & 1 == 1 {
            prod.copy_within(0..2 * d - 1, 1);
            prod[0] = 0;
            2 * d - 1
        } else {
            2 * d - 2
        };
        for k in (d..=top).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for j in 0..d {
                let idx = k - d + j;
                prod[idx] = (prod[idx] + (p - c) * f[j]) % p;
            }
        }
        r[..d].copy_from_slice(&prod[..d]);
    }
    r[1] = (r[1] + p - 1) % p;
    let h = ModPoly::new(p, r[..d].to_vec()).ok()?;
    let fm = ModPoly::new(p, f[..=d].to_vec()).ok()?;
    Some(h.gcd(&fm).degree().is_some_and(|g| g > 0))
}

fn tally(poly: &SamplerPoly, primes: &[u64], bound: u64) -> SampledDensity {
    let mut t = Tally::default();
    for &p in primes {
        t.record(p, poly.classify(p));
    }
    t.finish(bound)
}

fn split<T>(items: &[T], parts: usize) -> Vec<&[T]> {
    let parts = parts.max(1);
    let size = items.len().div_ceil(parts).max(1);
    items.chunks(size).collect()
}

/// Tally over primes `≤ bound`, using the rayon pool's thread count as the
/// number of parts.
pub fn sampled_density(f: &MPoly, bound: u64) -> Result<SampledDensity> {
    sampled_density_partitioned(f, bound, rayon::current_num_threads())
}

/// Tally over primes `≤ bound`, split into `parts` contiguous ranges that
/// are processed in parallel and merged in order. The result does not
/// depend on `parts`.
pub fn sampled_density_partitioned(f: &MPoly, bound: u64, parts: usize) -> Result<SampledDensity> {
    if bound < 3 {
        return Err(Error::InvalidArgument(format!("bound must be at least 3, got {bound}")));
    }
    let poly = SamplerPoly::new(f)?;
    let primes = prime_sieve(bound)?;
    let empty = SampledDensity {
        hits: 0,
        total: 0,
        bound,
        excluded_primes: Vec::new(),
    };
    Ok(split(&primes, parts)
        .into_par_iter()
        .map(|chunk| tally(&poly, chunk, bound))
        .collect::<Vec<_>>()
        .into_iter()
        .fold(empty, SampledDensity::merge))
}

/// Outcome of comparing sampled densities of `P`, `Q` and `PQ`.
#[derive(Clone, Debug)]
pub struct CombinedBound {
    pub bound: u64,
    /// `7/32 + 1/2`.
    pub exact_sum: Rational,
    pub p: SampledDensity,
    pub q: SampledDensity,
    /// Tally for `PQ` over primes good for `PQ`.
    pub pq: SampledDensity,
    /// Primes good for `PQ` where both `P` and `Q` have roots.
    pub overlap: u64,
    /// Over primes good for `PQ`: hits of `P`, of `Q`.
    pub p_hits_common: u64,
    pub q_hits_common: u64,
    /// First prime where a root of `PQ` is not a root of `P` or `Q`.
    pub per_prime_violation: Option<u64>,
}

impl CombinedBound {
    pub fn exact_ok(&self) -> bool {
        self.exact_sum == Rational::new(23.into(), 32.into()) && self.exact_sum < Rational::from_integer(1.into())
    }

    pub fn p_ok(&self) -> bool {
        (self.p.estimate() - 7.0 / 32.0).abs() < DENSITY_TOLERANCE
    }

    pub fn q_ok(&self) -> bool {
        (self.q.estimate() - 0.5).abs() < DENSITY_TOLERANCE
    }

    /// `hits(PQ) = hits(P) + hits(Q) − overlap ≤ hits(P) + hits(Q)`.
    pub fn tally_ok(&self) -> bool {
        self.per_prime_violation.is_none()
            && self.pq.hits + self.overlap == self.p_hits_common + self.q_hits_common
    }

    pub fn passed(&self) -> bool {
        self.exact_ok() && self.p_ok() && self.q_ok() && self.tally_ok()
    }
}

#[derive(Default)]
struct Joint {
    p: Tally,
    q: Tally,
    pq: Tally,
    p_common: u64,
    q_common: u64,
    both: u64,
    violation: Option<u64>,
}

#[derive(Default)]
struct Tally {
    hits: u64,
    total: u64,
    excluded: Vec<u64>,
}

impl Tally {
    fn record(&mut self, prime: u64, outcome: Option<bool>) {
        match outcome {
            None => self.excluded.push(prime),
            Some(h) => {
                self.total += 1;
                self.hits += h as u64;
            }
        }
    }

    fn absorb(&mut self, other: Tally) {
        self.hits += other.hits;
        self.total += other.total;
        self.excluded.extend(other.excluded);
    }

    fn finish(self, bound: u64) -> SampledDensity {
        SampledDensity {
            hits: self.hits,
            total: self.total,
            bound,
            excluded_primes: self.excluded,
        }
    }
}

/// One pass over the primes tallying `P`, `Q` and `PQ`, each with its own
/// bad primes, and checking every prime good for `PQ` individually.
pub fn combined_bound_check(bound: u64) -> Result<CombinedBound> {
    let p_mp = MPoly::parse(P_POLY)?;
    let q_mp = MPoly::parse(Q_POLY)?;
    let (p, q, pq) = (
        SamplerPoly::new(&p_mp)?,
        SamplerPoly::new(&q_mp)?,
        SamplerPoly::new(&(&p_mp * &q_mp))?,
    );
    let primes = prime_sieve(bound)?;
    let joints: Vec<Joint> = split(&primes, rayon::current_num_threads())
        .into_par_iter()
        .map(|chunk| {
            let mut j = Joint::default();
            for &pr in chunk {
                let (hp, hq) = (p.classify(pr), q.classify(pr));
                j.p.record(pr, hp);
                j.q.record(pr, hq);
                let h = pq.classify(pr);
                j.pq.record(pr, h);
                let Some(h) = h else { continue };
                // good for PQ implies good for both factors
                let (hp, hq) = (hp == Some(true), hq == Some(true));
                j.p_common += hp as u64;
                j.q_common += hq as u64;
                j.both += (hp && hq) as u64;
                if h != (hp || hq) && j.violation.is_none() {
                    j.violation = Some(pr);
                }
            }
            j
        })
        .collect();
    let mut acc = Joint::default();
    for j in joints {
        acc.p.absorb(j.p);
        acc.q.absorb(j.q);
        acc.pq.absorb(j.pq);
        acc.p_common += j.p_common;
        acc.q_common += j.q_common;
        acc.both += j.both;
        acc.violation = acc.violation.or(j.violation);
    }
    Ok(CombinedBound {
        bound,
        exact_sum: Rational::new(7.into(), 32.into()) + Rational::new(1.into(), 2.into()),
        p: acc.p.finish(bound),
        q: acc.q.finish(bound),
        pq: acc.pq.finish(bound),
        overlap: acc.both,
        p_hits_common: acc.p_common,
        q_hits_common: acc.q_common,
        per_prime_violation: acc.violation,
    })
}

/// Exact densities for small groups with known answers.
pub fn exact_corollary_checks() -> Result<Vec<IdentityCheck>> {
    let cases: [(&str, usize, &[&str], &[u32], (i64, i64)); 5] = [
        ("exact-regular-c5", 5, &["(1,2,3,4,5)"], &[1], (1, 5)),
        ("exact-regular-v4", 4, &["(1,2)(3,4)", "(1,3)(2,4)"], &[1], (1, 4)),
        ("exact-s3-natural", 3, &["(1,2,3)", "(1,2)"], &[1], (2, 3)),
        ("exact-trivial", 1, &[], &[1], (1, 1)),
        ("exact-s4-natural", 4, &["(1,2,3,4)", "(1,2)"], &[1], (5, 8)),
    ];
    cases
        .iter()
        .map(|(name, deg, gens, pts, (n, d))| {
            let g = PermGroup::from_cycle_strings(*deg, gens)?;
            let got = exact_density(&GaloisData::new(g, pts.to_vec())?)?;
            let want = Rational::new((*n).into(), (*d).into());
            Ok(IdentityCheck::new(*name, got == want, format!("{got} (expected {want})")))
        })
        .collect()
}

/// `hits / total` is within `k` standard errors of `target`.
pub fn within_standard_errors(s: &SampledDensity, target: f64, k: f64) -> bool {
    s.total > 0 && (s.estimate() - target).abs() <= k * s.standard_error().max(f64::EPSILON)
}
