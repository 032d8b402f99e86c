use std::fmt;

use num_traits::{One, Zero};

use super::mpoly::MPoly;
use super::rational::Rational;
use super::upoly::QPoly;
use crate::error::{Error, Result};

/// Element of ℚ(var) kept in lowest terms with a monic denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    var: String,
    num: QPoly,
    den: QPoly,
}

pub(crate) fn mpoly_to_qpoly(p: &MPoly, var: &str) -> Result<QPoly> {
    if p.vars().iter().any(|v| v != var) {
        return Err(Error::InvalidArgument(format!(
            "expected a polynomial in `{var}` only, got {p}"
        )));
    }
    Ok(QPoly::new(
        p.coefficients_in(var)
            .iter()
            .map(|c| c.constant_value().unwrap())
            .collect(),
    ))
}

pub(crate) fn qpoly_to_mpoly(p: &QPoly, var: &str) -> MPoly {
    let coeffs: Vec<MPoly> = p.coeffs().iter().cloned().map(MPoly::constant).collect();
    MPoly::from_coefficients_in(var, &coeffs)
}

impl RationalFunction {
    /// `num / den`, both univariate in `var`.
    pub fn new(num: &MPoly, den: &MPoly, var: &str) -> Result<Self> {
        let n = mpoly_to_qpoly(num, var)?;
        let d = mpoly_to_qpoly(den, var)?;
        Self::from_qpolys(n, d, var)
    }

    pub fn from_qpolys(num: QPoly, den: QPoly, var: &str) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den, var))
    }

    /// Parses numerator and denominator given as separate strings.
    pub fn parse(num: &str, den: &str, var: &str) -> Result<Self> {
        Self::new(&MPoly::parse(num)?, &MPoly::parse(den)?, var)
    }

    pub fn from_poly(p: &MPoly, var: &str) -> Result<Self> {
        Self::new(p, &MPoly::one(), var)
    }

    pub fn constant(c: Rational, var: &str) -> Self {
        Self::normalized(QPoly::constant(c), QPoly::constant(Rational::one()), var)
    }

    pub fn zero(var: &str) -> Self {
        Self::constant(Rational::zero(), var)
    }

    pub fn one(var: &str) -> Self {
        Self::constant(Rational::one(), var)
    }

    fn normalized(num: QPoly, den: QPoly, var: &str) -> Self {
        let var = var.to_string();
        if num.is_zero() {
            return Self {
                var,
                num,
                den: QPoly::constant(Rational::one()),
            };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num.div_rem(&g).0, den.div_rem(&g).0);
        let lc = den.leading_coeff().unwrap().recip();
        num = num.scale(&lc);
        den = den.scale(&lc);
        Self { var, num, den }
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn numerator(&self) -> MPoly {
        qpoly_to_mpoly(&self.num, &self.var)
    }

    pub fn denominator(&self) -> MPoly {
        qpoly_to_mpoly(&self.den, &self.var)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::normalized(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
            &self.var,
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            var: self.var.clone(),
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::normalized(
            self.num.mul(&other.num),
            self.den.mul(&other.den),
            &self.var,
        )
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone(), &self.var))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::normalized(self.num.scale(c), self.den.clone(), &self.var)
    }

    pub fn mul_poly(&self, p: &QPoly) -> Self {
        Self::normalized(self.num.mul(p), self.den.clone(), &self.var)
    }

    /// Value at a rational point; `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }

    /// Substitutes another rational function for the variable.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        let horner = |p: &QPoly| {
            p.coeffs().iter().rev().fold(Self::zero(&inner.var), |acc, c| {
                acc.mul(inner).add(&Self::constant(c.clone(), &inner.var))
            })
        };
        horner(&self.num).div(&horner(&self.den))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.numerator();
        if self.den.degree() == Some(0) {
            write!(f, "{n}")
        } else {
            write!(f, "({n})/({})", self.denominator())
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;

    fn rf(n: &str, d: &str) -> RationalFunction {
        RationalFunction::parse(n, d, "u").unwrap()
    }

    #[test]
    fn reduces_to_lowest_terms_with_monic_denominator() {
        let a = rf("u^2 - 1", "2u + 2");
        assert_eq!(a, rf("u - 1", "2"));
        assert_eq!(a.denominator(), MPoly::one());
        assert_eq!(a.numerator(), MPoly::parse("1/2 u - 1/2").unwrap());
    }

    #[test]
    fn field_operations() {
        let a = rf("u - 1", "u + 1");
        let b = rf("u", "u^2 + 1");
        let q = a.mul(&b).div(&b).unwrap();
        assert_eq!(q, a);
        assert_eq!(a.sub(&a), RationalFunction::zero("u"));
        assert_eq!(a.eval(&rat(3, 1)), Some(rat(1, 2)));
        assert_eq!(a.eval(&rat(-1, 1)), None);
        assert!(RationalFunction::zero("u").inv().is_err());
    }

    #[test]
    fn rejects_zero_denominator_and_foreign_variables() {
        assert_eq!(
            RationalFunction::parse("u", "0", "u").unwrap_err(),
            Error::DivisionByZero
        );
        assert!(RationalFunction::parse("u + t", "1", "u").is_err());
    }
}
