//! Dynatomic polynomials `Φ_{n,f} = ∏_{d | n} (f^d(x) − x)^{μ(n/d)}` and the
//! identities they satisfy.
//!
//! Maps are polynomials in `x`, possibly with parameters such as `c`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::algorithm1::mobius;
use crate::arith::{
    bit_height, discriminant, format_rational, int, resultant, MPoly, Rational, ResultantStrategy,
};
use crate::check::IdentityCheck;
use crate::error::{Error, Result};

/// The dynamical variable.
pub const X: &str = "x";
/// The family parameter of `x² + c`.
pub const C: &str = "c";
/// Largest `x`-degree [`PolyMap::iterate`] will build.
pub const MAX_ITERATE_DEGREE: u32 = 1 << 10;
/// Orbit iteration gives up once a numerator or denominator exceeds this many bits.
pub const HEIGHT_GUARD_BITS: u64 = 1_000_000;
/// Upper limit for `max_steps` in [`orbit_of_point`].
pub const MAX_ORBIT_STEPS: usize = 10_000;

/// A polynomial self-map in `x` of degree at least 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMap {
    f: MPoly,
}

impl PolyMap {
    pub fn new(f: MPoly) -> Result<Self> {
        let d = f.degree_in(X);
        if d < 2 {
            return Err(Error::InvalidArgument(format!(
                "map must have degree >= 2 in x, got {f}"
            )));
        }
        Ok(Self { f })
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::new(MPoly::parse(s)?)
    }

    /// `x² + c` with `c` symbolic.
    pub fn quadratic_family() -> Self {
        Self {
            f: MPoly::parse("x^2 + c").unwrap(),
        }
    }

    /// `x² + c` for a given rational `c`.
    pub fn quadratic(c: &Rational) -> Self {
        Self {
            f: &MPoly::parse("x^2").unwrap() + &MPoly::constant(c.clone()),
        }
    }

    pub fn poly(&self) -> &MPoly {
        &self.f
    }

    pub fn degree(&self) -> u32 {
        self.f.degree_in(X)
    }

    /// `f(p)`.
    pub fn apply(&self, p: &MPoly) -> MPoly {
        self.f.compose(X, p)
    }

    /// The `k`-fold composite `f^k(x)`.
    pub fn iterate(&self, k: u32) -> Result<MPoly> {
        let deg = (self.degree() as u64).checked_pow(k);
        if deg.is_none_or(|d| d > MAX_ITERATE_DEGREE as u64) {
            return Err(Error::DegreeOverflow(deg.map_or(usize::MAX, |d| d as usize)));
        }
        let mut acc = MPoly::var(X);
        for _ in 0..k {
            acc = self.apply(&acc);
        }
        Ok(acc)
    }

    /// `ℓ⁻¹ ∘ f ∘ ℓ` for `ℓ(x) = a·x + b`.
    pub fn conjugate(&self, a: &Rational, b: &Rational) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::InvalidArgument("conjugating map needs a != 0".into()));
        }
        let ell = linear(a, b);
        let shifted = &self.apply(&ell) - &MPoly::constant(b.clone());
        Self::new(shifted.scale(&a.recip()))
    }
}

fn linear(a: &Rational, b: &Rational) -> MPoly {
    &MPoly::var(X).scale(a) + &MPoly::constant(b.clone())
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// `Σ_{d | n} μ(n/d)·deg^d`.
pub fn dynatomic_degree(deg: u32, n: u32) -> i128 {
    divisors(n)
        .into_iter()
        .map(|d| mobius((n / d) as u64) as i128 * (deg as i128).pow(d))
        .sum()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynatomicPoly {
    pub n: u32,
    pub phi: MPoly,
    pub expected_degree: u64,
}

/// `Φ_{n,f}`, as the product of the `μ = +1` factors divided exactly by the
/// product of the `μ = −1` factors.
pub fn dynatomic(f: &PolyMap, n: u32) -> Result<DynatomicPoly> {
    if n == 0 {
        return Err(Error::InvalidArgument("period must be >= 1".into()));
    }
    let x = MPoly::var(X);
    let mut num = MPoly::one();
    let mut den = MPoly::one();
    for d in divisors(n) {
        match mobius((n / d) as u64) {
            1 => num = &num * &(&f.iterate(d)? - &x),
            -1 => den = &den * &(&f.iterate(d)? - &x),
            _ => {}
        }
    }
    let (phi, rem) = num.div_rem(&den, X)?;
    if !rem.is_zero() {
        return Err(Error::InexactDivision(format!(
            "dynatomic quotient for n = {n} left remainder {rem}"
        )));
    }
    let expected_degree = dynatomic_degree(f.degree(), n) as u64;
    debug_assert_eq!(phi.degree_in(X) as u64, expected_degree);
    Ok(DynatomicPoly {
        n,
        phi,
        expected_degree,
    })
}

/// `f^n(x) − x = ∏_{d | n} Φ_{d,f}(x)`.
pub fn product_identity_check(f: &PolyMap, n: u32) -> Result<bool> {
    let lhs = &f.iterate(n)? - &MPoly::var(X);
    let mut rhs = MPoly::one();
    for d in divisors(n) {
        rhs = &rhs * &dynatomic(f, d)?.phi;
    }
    Ok(lhs == rhs)
}

/// `Φ_{n,f}(a·x + b) = a^{δ_{1n}}·Φ_{n,g}(x)` with `g = ℓ⁻¹ ∘ f ∘ ℓ`.
pub fn conjugation_identity_check(f: &PolyMap, a: &Rational, b: &Rational, n: u32) -> Result<bool> {
    let g = f.conjugate(a, b)?;
    let lhs = dynatomic(f, n)?.phi.compose(X, &linear(a, b));
    let mut rhs = dynatomic(&g, n)?.phi;
    if n == 1 {
        rhs = rhs.scale(a);
    }
    Ok(lhs == rhs)
}

/// Trace polynomial `θ_n = x + f(x) + ⋯ + f^{n−1}(x)`.
pub fn theta(f: &PolyMap, n: u32) -> Result<MPoly> {
    if f.degree().checked_pow(n.saturating_sub(1)).is_none_or(|d| d > MAX_ITERATE_DEGREE) {
        return Err(Error::DegreeOverflow(usize::MAX));
    }
    let mut acc = MPoly::zero();
    let mut it = MPoly::var(X);
    for k in 0..n {
        acc = &acc + &it;
        if k + 1 < n {
            it = f.apply(&it);
        }
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrbitOutcome {
    /// `x_{preperiod + period} = x_{preperiod}` with both minimal.
    Cycle { preperiod: usize, period: usize },
    /// The orbit left every bounded set or exceeded [`HEIGHT_GUARD_BITS`].
    Escaping { steps: usize },
    /// No repeat within `max_steps`.
    Undetermined { steps: usize },
}

/// Exact orbit of `x0` under `x² + c`.
///
/// Once `|x| > 1 + |c|` the absolute values increase strictly, so the orbit
/// cannot cycle and is reported as escaping.
pub fn orbit_of_point(c: &Rational, x0: &Rational, max_steps: usize) -> Result<OrbitOutcome> {
    if max_steps > MAX_ORBIT_STEPS {
        return Err(Error::InvalidArgument(format!(
            "max_steps {max_steps} exceeds {MAX_ORBIT_STEPS}"
        )));
    }
    let escape = Rational::one() + c.abs();
    let mut seen: HashMap<Rational, usize> = HashMap::new();
    let mut x = x0.clone();
    for k in 0..=max_steps {
        if let Some(&j) = seen.get(&x) {
            return Ok(OrbitOutcome::Cycle {
                preperiod: j,
                period: k - j,
            });
        }
        if x.abs() > escape || bit_height(&x) > HEIGHT_GUARD_BITS {
            return Ok(OrbitOutcome::Escaping { steps: k });
        }
        seen.insert(x.clone(), k);
        x = &x * &x + c;
    }
    Ok(OrbitOutcome::Undetermined { steps: max_steps })
}

fn p(s: &str) -> MPoly {
    MPoly::parse(s).expect("built-in polynomial")
}

fn phi_at(n: u32, c: &Rational) -> Result<MPoly> {
    Ok(dynatomic(&PolyMap::quadratic(c), n)?.phi)
}

fn scaled_x2(q: &MPoly) -> MPoly {
    q.compose(X, &p("2x"))
}

/// Factorizations of `Φ_3` and `Φ_4` at special parameters, checked by
/// multiplying out both sides.
pub fn special_c_factorization_checks() -> Result<Vec<IdentityCheck>> {
    let mut out = Vec::new();

    let phi3 = phi_at(3, &Rational::new((-7).into(), 4.into()))?;
    let f = p("x^3 + x^2 - 9x - 1");
    let diff = &phi3.scale(&int(64)) - &scaled_x2(&f).pow(2);
    out.push(IdentityCheck::new(
        "phi3-c=-7/4",
        diff.is_zero(),
        format!("2^6*Phi3 - F(2x)^2 = {diff}"),
    ));

    let phi3 = dynatomic(&PolyMap::quadratic_family(), 3)?.phi;
    let pp = p("3x - 4c + 1");
    let q = p("x^3 + (4c+1)x^2 + (12c-2)x - 8c - 15");
    let diff = &phi3.scale(&int(27 * 64)) - &(&scaled_x2(&pp).pow(3) * &scaled_x2(&q));
    let modulus = p("16c^2 + 4c + 7");
    let mut residues = Vec::new();
    for coeff in diff.coefficients_in(X) {
        residues.push(coeff.div_rem(&modulus, C)?.1);
    }
    let ok = residues.iter().all(MPoly::is_zero);
    out.push(IdentityCheck::new(
        "phi3-16c^2+4c+7",
        ok,
        if ok {
            "every x-coefficient vanishes modulo 16c^2 + 4c + 7".to_string()
        } else {
            format!("nonzero residues: {residues:?}")
        },
    ));

    let phi4 = phi_at(4, &Rational::new((-5).into(), 4.into()))?;
    let pp = p("x^8 - 4x^7 - 16x^6 + 84x^5 - 6x^4 - 364x^3 + 584x^2 - 836x + 1021");
    let q = p("x^2 + 2x - 1");
    let diff = &phi4.scale(&int(4096)) - &(&scaled_x2(&pp) * &scaled_x2(&q).pow(2));
    out.push(IdentityCheck::new(
        "phi4-c=-5/4",
        diff.is_zero(),
        format!("2^12*Phi4 - P(2x)*Q(2x)^2 = {diff}"),
    ));
    Ok(out)
}

/// The two resultants used to rule out fixed points among special roots.
pub fn resultant_checks(strategy: ResultantStrategy) -> Result<Vec<IdentityCheck>> {
    let phi3 = phi_at(3, &Rational::new((-7).into(), 4.into()))?;
    let r1 = resultant(&phi3, &p("x^2 - x - 7/4"), X, strategy)?;
    let q = scaled_x2(&p("x^3 + (4c+1)x^2 + (12c-2)x - 8c - 15"));
    let r2 = resultant(&q, &p("x^2 - x + c"), X, strategy)?;
    // Q only arises when 16c^2 + 4c + 7 = 0, so the value is taken in that quotient ring.
    let r2_reduced = r2.div_rem(&p("16c^2 + 4c + 7"), C)?.1;
    Ok(vec![
        IdentityCheck::new("res-phi3-c=-7/4", r1 == MPoly::from_i64(49), format!("{r1}")),
        IdentityCheck::new(
            "res-Q(2x)",
            r2_reduced == p("-512c"),
            format!("{r2} = {r2_reduced} mod 16c^2 + 4c + 7"),
        ),
    ])
}

/// Discriminants of `Φ_3` and `Φ_4` over `ℚ[c]` against their closed forms.
pub fn discriminant_checks(strategy: ResultantStrategy) -> Result<Vec<IdentityCheck>> {
    let fam = PolyMap::quadratic_family();
    let d3 = discriminant(&dynatomic(&fam, 3)?.phi, X, strategy)?;
    let e3 = -(&p("7 + 4c").pow(3) * &p("7 + 4c + 16c^2").pow(2));
    let d4 = discriminant(&dynatomic(&fam, 4)?.phi, X, strategy)?;
    let e4 = &(&p("5 + 4c").pow(2) * &p("5 - 8c + 16c^2").pow(3))
        * &p("135 + 108c + 144c^2 + 64c^3").pow(4);
    Ok(vec![
        IdentityCheck::new("disc-phi3", d3 == e3, format!("{d3}")),
        IdentityCheck::new("disc-phi4", d4 == e4, format!("{d4}")),
    ])
}

/// `A(c) = 31 − 36c + 16c² + 64c³ + 256c⁴`.
pub fn phi5_a_poly() -> MPoly {
    p("31 - 36c + 16c^2 + 64c^3 + 256c^4")
}

/// Rational roots of a univariate polynomial, by the rational root test.
pub fn rational_roots(f: &MPoly) -> Result<Vec<Rational>> {
    let var = match f.vars() {
        [] => return Ok(Vec::new()),
        [v] => v.clone(),
        _ => return Err(Error::InvalidArgument(format!("{f} is not univariate"))),
    };
    let coeffs = f.coefficients_in(&var);
    let denom_lcm = coeffs.iter().fold(BigInt::one(), |acc, c| {
        acc.lcm(c.constant_value().unwrap().denom())
    });
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c.constant_value().unwrap() * Rational::from_integer(denom_lcm.clone())).to_integer())
        .collect();
    let mut roots = Vec::new();
    let lowest = ints.iter().position(|c| !c.is_zero()).unwrap();
    if lowest > 0 {
        roots.push(Rational::zero());
    }
    let divs = |n: &BigInt| -> Result<Vec<BigInt>> {
        let n = n.abs();
        if n.bits() > 40 {
            return Err(Error::InvalidArgument(format!("coefficient {n} too large to factor")));
        }
        let mut out = Vec::new();
        let mut d = BigInt::one();
        while &d * &d <= n {
            if (&n % &d).is_zero() {
                out.push(d.clone());
                out.push(&n / &d);
            }
            d += 1;
        }
        Ok(out)
    };
    let ps = divs(&ints[lowest])?;
    let qs = divs(ints.last().unwrap())?;
    let mut candidates: Vec<Rational> = Vec::new();
    for pn in &ps {
        for qd in &qs {
            for s in [1, -1] {
                candidates.push(Rational::new(pn * s, qd.clone()));
            }
        }
    }
    candidates.sort();
    candidates.dedup();
    for r in candidates {
        if f.substitute(&var, &r).is_zero() {
            roots.push(r);
        }
    }
    roots.sort();
    Ok(roots)
}

/// One sample of the `disc Φ_5 = −A(c)⁴·Ψ(c)⁵` structure test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Phi5DiscSample {
    pub c: i64,
    pub disc: BigInt,
    pub a_value: BigInt,
    /// `−disc / A(c)⁴` when the division is exact.
    pub cofactor: Option<BigInt>,
    /// Integer fifth root of the cofactor, when it is a fifth power.
    pub fifth_root: Option<BigInt>,
    pub passed: bool,
}

/// Checks the structure of `disc_x Φ_5(c₀, x)` at one integer `c₀`.
pub fn disc_phi5_sample(c0: i64, strategy: ResultantStrategy) -> Result<Phi5DiscSample> {
    let a_value = phi5_a_poly()
        .substitute(C, &int(c0))
        .constant_value()
        .unwrap()
        .to_integer();
    if a_value.is_zero() {
        return Err(Error::InvalidArgument(format!("A({c0}) = 0")));
    }
    let phi5 = phi_at(5, &int(c0))?;
    let d = discriminant(&phi5, X, strategy)?.constant_value().unwrap();
    if !d.is_integer() {
        return Err(Error::InexactDivision(format!(
            "discriminant {} is not an integer",
            format_rational(&d)
        )));
    }
    let disc = d.to_integer();
    let a4 = a_value.pow(4);
    let (q, r) = (-&disc).div_rem(&a4);
    let cofactor = r.is_zero().then_some(q);
    let fifth_root = cofactor.as_ref().and_then(|q| {
        let root = q.nth_root(5);
        (root.pow(5) == *q).then_some(root)
    });
    let passed = !disc.is_zero() && fifth_root.is_some();
    Ok(Phi5DiscSample {
        c: c0,
        disc,
        a_value,
        cofactor,
        fifth_root,
        passed,
    })
}

/// Runs [`disc_phi5_sample`] over `cs` in parallel; results keep input order.
pub fn disc_phi5_structure_check(cs: &[i64], strategy: ResultantStrategy) -> Result<Vec<Phi5DiscSample>> {
    cs.par_iter()
        .map(|&c| disc_phi5_sample(c, strategy))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn small_iterates_and_dynatomics() {
        let f = PolyMap::quadratic_family();
        assert_eq!(f.iterate(0).unwrap(), p("x"));
        assert_eq!(f.iterate(2).unwrap(), p("(x^2 + c)^2 + c"));
        assert_eq!(f.iterate(5).unwrap().degree_in(X), 32);
        assert!(matches!(f.iterate(11), Err(Error::DegreeOverflow(_))));
        assert_eq!(dynatomic(&f, 1).unwrap().phi, p("x^2 - x + c"));
        assert_eq!(dynatomic(&f, 2).unwrap().phi, p("x^2 + x + c + 1"));
    }

    #[test]
    fn degree_formula() {
        assert_eq!(dynatomic_degree(2, 4), 12);
        assert_eq!(dynatomic_degree(2, 5), 30);
        assert_eq!(dynatomic_degree(3, 2), 6);
    }

    #[test]
    fn orbits() {
        assert_eq!(
            orbit_of_point(&rat(0, 1), &rat(0, 1), 100).unwrap(),
            OrbitOutcome::Cycle { preperiod: 0, period: 1 }
        );
        assert_eq!(
            orbit_of_point(&rat(-1, 1), &rat(0, 1), 100).unwrap(),
            OrbitOutcome::Cycle { preperiod: 0, period: 2 }
        );
        // 1/4 -> -7/4 -> 5/4 -> -1/4 -> -7/4
        assert_eq!(
            orbit_of_point(&rat(-29, 16), &rat(1, 4), 100).unwrap(),
            OrbitOutcome::Cycle { preperiod: 1, period: 3 }
        );
        assert!(matches!(
            orbit_of_point(&rat(1, 1), &rat(0, 1), 100).unwrap(),
            OrbitOutcome::Escaping { .. }
        ));
        assert!(orbit_of_point(&rat(0, 1), &rat(0, 1), MAX_ORBIT_STEPS + 1).is_err());
    }

    #[test]
    fn theta_small() {
        let f = PolyMap::quadratic_family();
        assert_eq!(theta(&f, 1).unwrap(), p("x"));
        assert_eq!(theta(&f, 2).unwrap(), p("x^2 + x + c"));
        assert_eq!(theta(&f, 5).unwrap().degree_in(X), 16);
    }

    #[test]
    fn rational_root_test() {
        assert_eq!(
            rational_roots(&p("2x^2 - 3x + 1")).unwrap(),
            vec![rat(1, 2), rat(1, 1)]
        );
        assert!(rational_roots(&phi5_a_poly()).unwrap().is_empty());
    }
}
