use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{format_rational, Rational};
use super::upoly::ExactRing;
use crate::error::{Error, Result};

/// Exponent vector aligned with the variable list of its polynomial.
///
/// Ordered graded-lexicographically: total degree first, then exponents
/// compared left to right (variables are kept sorted by name).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with rational coefficients and named variables.
///
/// The representation is canonical: variables are sorted and only those that
/// actually occur are kept, and no stored coefficient is zero. Structural
/// equality is therefore mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Rational>,
}

fn union_vars(a: &[String], b: &[String]) -> Vec<String> {
    let mut v: Vec<String> = a.iter().chain(b.iter()).cloned().collect();
    v.sort();
    v.dedup();
    v
}

impl MPoly {
    pub fn zero() -> Self {
        Self {
            vars: Vec::new(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(Vec::new()), c);
        }
        Self {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn from_i64(n: i64) -> Self {
        Self::constant(Rational::from_integer(n.into()))
    }

    pub fn var(name: &str) -> Self {
        Self {
            vars: vec![name.to_string()],
            terms: BTreeMap::from([(Monomial(vec![1]), Rational::one())]),
        }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs over `vars`.
    ///
    /// `vars` may be in any order; like terms are combined.
    pub fn from_terms<I>(vars: &[&str], terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut order: Vec<usize> = (0..vars.len()).collect();
        order.sort_by(|&i, &j| vars[i].cmp(vars[j]));
        let sorted: Vec<String> = order.iter().map(|&i| vars[i].to_string()).collect();
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (exps, c) in terms {
            assert_eq!(exps.len(), vars.len(), "exponent vector length");
            let m = Monomial(order.iter().map(|&i| exps[i]).collect());
            *map.entry(m).or_insert_with(Rational::zero) += c;
        }
        Self::from_parts(sorted, map)
    }

    fn from_parts(vars: Vec<String>, terms: BTreeMap<Monomial, Rational>) -> Self {
        let mut terms: BTreeMap<Monomial, Rational> =
            terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let used: Vec<bool> = (0..vars.len())
            .map(|i| terms.keys().any(|m| m.0[i] > 0))
            .collect();
        if used.iter().all(|&u| u) {
            return Self { vars, terms };
        }
        let keep: Vec<usize> = (0..vars.len()).filter(|&i| used[i]).collect();
        let vars = keep.iter().map(|&i| vars[i].clone()).collect();
        terms = terms
            .into_iter()
            .map(|(m, c)| (Monomial(keep.iter().map(|&i| m.0[i]).collect()), c))
            .collect();
        Self { vars, terms }
    }

    /// Terms re-expressed over the (sorted, superset) variable list `vars`.
    fn aligned(&self, vars: &[String]) -> BTreeMap<Monomial, Rational> {
        if self.vars == vars {
            return self.terms.clone();
        }
        let pos: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("variable missing"))
            .collect();
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; vars.len()];
                for (i, &p) in pos.iter().enumerate() {
                    e[p] = m.0[i];
                }
                (Monomial(e), c.clone())
            })
            .collect()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        self.is_constant().then(|| {
            self.terms
                .values()
                .next()
                .cloned()
                .unwrap_or_else(Rational::zero)
        })
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Coefficient of the monomial given as `(variable, exponent)` pairs.
    pub fn coeff(&self, monomial: &[(&str, u32)]) -> Rational {
        let mut e = vec![0u32; self.vars.len()];
        for &(v, k) in monomial {
            match self.vars.iter().position(|w| w == v) {
                Some(i) => e[i] = k,
                None if k == 0 => {}
                None => return Rational::zero(),
            }
        }
        self.terms
            .get(&Monomial(e))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    fn var_index(&self, var: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == var)
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        match self.var_index(var) {
            Some(i) => self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// View as a polynomial in `var`: entry `k` is the coefficient of `var^k`.
    pub fn coefficients_in(&self, var: &str) -> Vec<MPoly> {
        let Some(i) = self.var_index(var) else {
            return if self.is_zero() {
                Vec::new()
            } else {
                vec![self.clone()]
            };
        };
        let deg = self.degree_in(var) as usize;
        let mut parts: Vec<BTreeMap<Monomial, Rational>> = vec![BTreeMap::new(); deg + 1];
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = e[i] as usize;
            e[i] = 0;
            parts[k].insert(Monomial(e), c.clone());
        }
        parts
            .into_iter()
            .map(|t| Self::from_parts(self.vars.clone(), t))
            .collect()
    }

    /// Inverse of [`coefficients_in`](Self::coefficients_in).
    pub fn from_coefficients_in(var: &str, coeffs: &[MPoly]) -> Self {
        let x = Self::var(var);
        coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &x) + c)
    }

    pub fn leading_coeff_in(&self, var: &str) -> MPoly {
        self.coefficients_in(var).pop().unwrap_or_else(Self::zero)
    }

    /// Replaces `var` by the polynomial `value`.
    pub fn compose(&self, var: &str, value: &MPoly) -> Self {
        self.coefficients_in(var)
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * value) + c)
    }

    /// Replaces `var` by a rational number.
    pub fn substitute(&self, var: &str, value: &Rational) -> Self {
        let Some(i) = self.var_index(var) else {
            return self.clone();
        };
        let mut out: BTreeMap<Monomial, Rational> = BTreeMap::new();
        let mut powers: Vec<Rational> = vec![Rational::one()];
        for (m, c) in &self.terms {
            let k = m.0[i] as usize;
            while powers.len() <= k {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut e = m.0.clone();
            e[i] = 0;
            *out.entry(Monomial(e)).or_insert_with(Rational::zero) += c * &powers[k];
        }
        Self::from_parts(self.vars.clone(), out)
    }

    /// Substitutes every listed variable; returns a rational if nothing remains.
    pub fn eval(&self, assignment: &[(&str, Rational)]) -> Option<Rational> {
        let mut p = self.clone();
        for (v, x) in assignment {
            p = p.substitute(v, x);
        }
        p.constant_value()
    }

    pub fn derivative(&self, var: &str) -> Self {
        let Some(i) = self.var_index(var) else {
            return Self::zero();
        };
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[i] > 0)
            .map(|(m, c)| {
                let mut e = m.0.clone();
                let k = e[i];
                e[i] -= 1;
                (Monomial(e), c * Rational::from_integer(k.into()))
            })
            .collect();
        Self::from_parts(self.vars.clone(), terms)
    }

    /// Division with remainder in `var`.
    ///
    /// The leading coefficient of `divisor` in `var` must be a nonzero
    /// rational constant. Returns `(q, r)` with `self = q * divisor + r` and
    /// `deg_var(r) < deg_var(divisor)`.
    pub fn div_rem(&self, divisor: &MPoly, var: &str) -> Result<(MPoly, MPoly)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dc = divisor.coefficients_in(var);
        let dd = dc.len() - 1;
        let lc = dc[dd]
            .constant_value()
            .ok_or_else(|| Error::NonUnitLeadingCoefficient(var.to_string()))?;
        let inv = lc.recip();
        let mut rc = self.coefficients_in(var);
        if rc.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![Self::zero(); rc.len() - dd];
        for k in (dd..rc.len()).rev() {
            if rc[k].is_zero() {
                continue;
            }
            let t = rc[k].scale(&inv);
            for (j, d) in dc.iter().enumerate() {
                if !d.is_zero() {
                    rc[k - dd + j] = &rc[k - dd + j] - &(&t * d);
                }
            }
            q[k - dd] = t;
        }
        rc.truncate(dd);
        Ok((
            Self::from_coefficients_in(var, &q),
            Self::from_coefficients_in(var, &rc),
        ))
    }

    /// Exact quotient `self / divisor` in the polynomial ring, if it exists.
    pub fn div_exact(&self, divisor: &MPoly) -> Option<MPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some(c) = divisor.constant_value() {
            return Some(self.scale(&c.recip()));
        }
        let var = divisor.vars[0].clone();
        let dc = divisor.coefficients_in(&var);
        let dd = dc.len() - 1;
        let mut rc = self.coefficients_in(&var);
        if rc.len() <= dd {
            return None;
        }
        let mut q = vec![Self::zero(); rc.len() - dd];
        for k in (dd..rc.len()).rev() {
            if rc[k].is_zero() {
                continue;
            }
            let t = rc[k].div_exact(&dc[dd])?;
            for (j, d) in dc.iter().enumerate() {
                if !d.is_zero() {
                    rc[k - dd + j] = &rc[k - dd + j] - &(&t * d);
                }
            }
            q[k - dd] = t;
        }
        if rc[..dd].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coefficients_in(&var, &q))
    }

    /// Parses the text syntax accepted by the CLI and fixtures.
    pub fn parse(s: &str) -> Result<MPoly> {
        super::parse::parse_mpoly(s)
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let vars = union_vars(&self.vars, &rhs.vars);
        let mut terms = self.aligned(&vars);
        for (m, c) in rhs.aligned(&vars) {
            *terms.entry(m).or_insert_with(Rational::zero) += c;
        }
        MPoly::from_parts(vars, terms)
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self + &(-rhs)
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        if self.is_zero() || rhs.is_zero() {
            return MPoly::zero();
        }
        let vars = union_vars(&self.vars, &rhs.vars);
        let a = self.aligned(&vars);
        let b = rhs.aligned(&vars);
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &a {
            for (mb, cb) in &b {
                let e: Vec<u32> = ma.0.iter().zip(&mb.0).map(|(x, y)| x + y).collect();
                let prod = ca * cb;
                match terms.entry(Monomial(e)) {
                    std::collections::btree_map::Entry::Occupied(mut o) => *o.get_mut() += prod,
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(prod);
                    }
                }
            }
        }
        MPoly::from_parts(vars, terms)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: MPoly) -> MPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: &MPoly) -> MPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl ExactRing for MPoly {
    fn zero_elem() -> Self {
        MPoly::zero()
    }
    fn one_elem() -> Self {
        MPoly::one()
    }
    fn is_zero_elem(&self) -> bool {
        MPoly::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn from_i64(n: i64) -> Self {
        MPoly::from_i64(n)
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        MPoly::div_exact(self, other)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = self
                .vars
                .iter()
                .zip(&m.0)
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
            let negative = *c < Rational::zero();
            let abs = if negative { -c } else { c.clone() };
            let body = if mono.is_empty() {
                format_rational(&abs)
            } else if abs.is_one() {
                mono.join("*")
            } else {
                format!("{}*{}", format_rational(&abs), mono.join("*"))
            };
            match (idx, negative) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}
