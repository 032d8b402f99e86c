use std::fmt;

use super::ratfunc::RationalFunction;
use super::upoly::QPoly;
use crate::error::{Error, Result};

/// Element `a0 + a1·v` of ℚ(u)[v]/(v² − g(u)).
///
/// `g` must not be a square in ℚ(u) for this to be a field; callers choose it.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadExtElem {
    a0: RationalFunction,
    a1: RationalFunction,
    modulus: RationalFunction,
}

impl QuadExtElem {
    pub fn new(a0: RationalFunction, a1: RationalFunction, modulus: RationalFunction) -> Result<Self> {
        if a0.var() != a1.var() || a0.var() != modulus.var() {
            return Err(Error::InvalidArgument(
                "components must share one base variable".into(),
            ));
        }
        if modulus.is_zero() {
            return Err(Error::InvalidArgument("modulus must be nonzero".into()));
        }
        Ok(Self { a0, a1, modulus })
    }

    /// Embeds a base-field element.
    pub fn from_base(a0: RationalFunction, modulus: &RationalFunction) -> Self {
        let zero = RationalFunction::zero(modulus.var());
        Self {
            a0,
            a1: zero,
            modulus: modulus.clone(),
        }
    }

    /// The generator `v`.
    pub fn generator(modulus: &RationalFunction) -> Self {
        let var = modulus.var();
        Self {
            a0: RationalFunction::zero(var),
            a1: RationalFunction::one(var),
            modulus: modulus.clone(),
        }
    }

    pub fn a0(&self) -> &RationalFunction {
        &self.a0
    }

    pub fn a1(&self) -> &RationalFunction {
        &self.a1
    }

    pub fn modulus(&self) -> &RationalFunction {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.a0.is_zero() && self.a1.is_zero()
    }

    fn with(&self, a0: RationalFunction, a1: RationalFunction) -> Self {
        Self {
            a0,
            a1,
            modulus: self.modulus.clone(),
        }
    }

    fn check(&self, other: &Self) {
        assert!(
            self.modulus == other.modulus,
            "quadratic extension elements over different moduli"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        self.with(self.a0.add(&other.a0), self.a1.add(&other.a1))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        self.with(self.a0.sub(&other.a0), self.a1.sub(&other.a1))
    }

    pub fn neg(&self) -> Self {
        self.with(self.a0.neg(), self.a1.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let a0 = self
            .a0
            .mul(&other.a0)
            .add(&self.a1.mul(&other.a1).mul(&self.modulus));
        let a1 = self.a0.mul(&other.a1).add(&self.a1.mul(&other.a0));
        self.with(a0, a1)
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    /// `a0 − a1·v`.
    pub fn conjugate(&self) -> Self {
        self.with(self.a0.clone(), self.a1.neg())
    }

    /// `a0² − g·a1²`.
    pub fn norm(&self) -> RationalFunction {
        self.a0
            .mul(&self.a0)
            .sub(&self.a1.mul(&self.a1).mul(&self.modulus))
    }

    /// `2·a0`.
    pub fn trace(&self) -> RationalFunction {
        self.a0.add(&self.a0)
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ninv = n.inv()?;
        let c = self.conjugate();
        Ok(self.with(c.a0.mul(&ninv), c.a1.mul(&ninv)))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// Evaluates a polynomial with coefficients in ℚ at this element.
    pub fn eval_qpoly(&self, p: &QPoly) -> Self {
        let var = self.modulus.var();
        p.coeffs().iter().rev().fold(
            Self::from_base(RationalFunction::zero(var), &self.modulus),
            |acc, c| {
                acc.mul(self).add(&Self::from_base(
                    RationalFunction::constant(c.clone(), var),
                    &self.modulus,
                ))
            },
        )
    }
}

impl fmt::Display for QuadExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + ({})*v", self.a0, self.a1)
    }
}

impl fmt::Debug for QuadExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadExtElem({self})")
    }
}
