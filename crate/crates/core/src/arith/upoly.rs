use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;

/// Commutative ring with exact division, the coefficient domain of [`UPoly`].
///
/// `div_exact` returns `None` when the quotient does not exist in the ring.
pub trait ExactRing: Clone + PartialEq + fmt::Debug {
    fn zero_elem() -> Self;
    fn one_elem() -> Self;
    fn is_zero_elem(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    fn from_i64(n: i64) -> Self;
    fn div_exact(&self, other: &Self) -> Option<Self>;

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one_elem();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

impl ExactRing for BigInt {
    fn zero_elem() -> Self {
        Zero::zero()
    }
    fn one_elem() -> Self {
        One::one()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
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
        BigInt::from(n)
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            return None;
        }
        let (q, r) = self.div_rem(other);
        Zero::is_zero(&r).then_some(q)
    }
}

impl ExactRing for Rational {
    fn zero_elem() -> Self {
        Zero::zero()
    }
    fn one_elem() -> Self {
        One::one()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
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
        Rational::from_integer(BigInt::from(n))
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        (!Zero::is_zero(other)).then(|| self / other)
    }
}

/// Dense univariate polynomial, coefficients in ascending degree order.
///
/// The coefficient vector never ends in a zero; the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UPoly<R> {
    coeffs: Vec<R>,
}

/// Univariate polynomials over the rationals.
pub type QPoly = UPoly<Rational>;

impl<R: ExactRing> UPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero_elem()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero_elem(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero_elem)
    }

    pub fn leading_coeff(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).plus(&other.coeff(k))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).minus(&other.coeff(k))).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(R::negate).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero_elem(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_elem() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.times(c)).collect())
    }

    /// Coefficientwise exact division by a scalar.
    pub fn div_scalar_exact(&self, c: &R) -> Option<Self> {
        self.coeffs
            .iter()
            .map(|a| a.div_exact(c))
            .collect::<Option<Vec<_>>>()
            .map(Self::new)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero_elem(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.times(&R::from_i64(k as i64)))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(R::one_elem());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluates by Horner's rule.
    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero_elem(), |acc, c| acc.times(x).plus(c))
    }

    /// Pseudo-remainder: the remainder of `lc(d)^(deg self - deg d + 1) * self` by `d`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo-remainder by zero polynomial");
        let Some(ds) = self.degree() else {
            return Self::zero();
        };
        if ds < dd {
            return self.clone();
        }
        let lb = d.leading_coeff().unwrap().clone();
        let mut e = (ds - dd + 1) as u32;
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let t = r.leading_coeff().unwrap().clone();
            r = r.scale(&lb).sub(&d.scale(&t).shift(dr - dd));
            e -= 1;
        }
        r.scale(&lb.pow(e))
    }
}

impl UPoly<Rational> {
    /// Euclidean division over the rationals.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.leading_coeff().unwrap().recip();
        let mut q = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let t = r.leading_coeff().unwrap() * &inv;
            r = r.sub(&d.scale(&t).shift(dr - dd));
            q[dr - dd] = t;
        }
        (Self::new(q), r)
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self / gcd(self, self')`, made monic.
    pub fn squarefree_part(&self) -> Self {
        let g = self.gcd(&self.derivative());
        if g.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        self.div_rem(&g).0.monic()
    }

    /// Scales to a primitive integer polynomial with positive leading coefficient.
    pub fn primitive_integer(&self) -> UPoly<BigInt> {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() {
            return UPoly::zero();
        }
        let sign = if ints.last().unwrap().is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        UPoly::new(ints.into_iter().map(|c| c / &g * &sign).collect())
    }
}

impl UPoly<BigInt> {
    pub fn to_rational(&self) -> QPoly {
        UPoly::new(
            self.coeffs
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }
}

impl<R: fmt::Debug> fmt::Debug for UPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

/// Resultant by the subresultant pseudo-remainder sequence.
///
/// Uses the convention `Res(a, b) = lc(a)^deg(b) * prod b(root_i(a))`, which
/// coincides with the Sylvester determinant. Either argument zero gives zero.
pub fn subresultant<R: ExactRing>(a: &UPoly<R>, b: &UPoly<R>) -> R {
    let (Some(da0), Some(db0)) = (a.degree(), b.degree()) else {
        return R::zero_elem();
    };
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut negate = false;
    if da0 < db0 {
        std::mem::swap(&mut a, &mut b);
        if da0 % 2 == 1 && db0 % 2 == 1 {
            negate = true;
        }
    }
    let mut g = R::one_elem();
    let mut h = R::one_elem();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        if db == 0 {
            let lb = b.leading_coeff().unwrap().clone();
            let res = if da == 0 {
                R::one_elem()
            } else {
                lb.pow(da as u32)
                    .div_exact(&h.pow(da as u32 - 1))
                    .expect("subresultant: inexact final division")
            };
            return if negate { res.negate() } else { res };
        }
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return R::zero_elem();
        }
        let divisor = g.times(&h.pow(delta as u32));
        a = b;
        b = r
            .div_scalar_exact(&divisor)
            .expect("subresultant: inexact coefficient division");
        g = a.leading_coeff().unwrap().clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            d => g
                .pow(d as u32)
                .div_exact(&h.pow(d as u32 - 1))
                .expect("subresultant: inexact h update"),
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;

    fn zpoly(c: &[i64]) -> UPoly<BigInt> {
        UPoly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    fn sylvester_det(a: &[i64], b: &[i64]) -> Rational {
        // a, b ascending; Sylvester matrix rows use descending coefficients.
        let m = a.len() - 1;
        let n = b.len() - 1;
        let size = m + n;
        let mut mat = vec![vec![Rational::zero(); size]; size];
        for i in 0..n {
            for (j, c) in a.iter().rev().enumerate() {
                mat[i][i + j] = int(*c);
            }
        }
        for i in 0..m {
            for (j, c) in b.iter().rev().enumerate() {
                mat[n + i][i + j] = int(*c);
            }
        }
        let mut det = Rational::one();
        for col in 0..size {
            let Some(piv) = (col..size).find(|&r| !mat[r][col].is_zero_elem()) else {
                return Rational::zero();
            };
            if piv != col {
                mat.swap(piv, col);
                det = -det;
            }
            let p = mat[col][col].clone();
            det *= &p;
            for r in col + 1..size {
                let f = &mat[r][col] / &p;
                for c in col..size {
                    let v = &mat[col][c] * &f;
                    mat[r][c] -= v;
                }
            }
        }
        det
    }

    #[test]
    fn subresultant_matches_sylvester_determinant() {
        let cases: &[(&[i64], &[i64])] = &[
            (&[1, 2, 3], &[4, 5]),
            (&[-1, 0, 0, 2], &[3, 1, 1]),
            (&[5, -3, 0, 1, 2], &[1, 0, 7]),
            (&[2, 2], &[1, 1, 1, 1]),
            (&[0, 1], &[-1, 1]),
        ];
        for (a, b) in cases {
            let got = subresultant(&zpoly(a), &zpoly(b));
            assert_eq!(Rational::from_integer(got), sylvester_det(a, b), "{a:?} {b:?}");
        }
    }

    #[test]
    fn resultant_of_x_and_x_minus_one() {
        assert_eq!(subresultant(&zpoly(&[0, 1]), &zpoly(&[-1, 1])), BigInt::from(-1));
    }

    #[test]
    fn gcd_and_squarefree_part() {
        let q = |c: &[i64]| QPoly::new(c.iter().map(|&x| int(x)).collect());
        // (x-1)^2 (x+2)
        let f = q(&[1, -2, 1]).mul(&q(&[2, 1]));
        assert_eq!(f.squarefree_part(), q(&[-1, 1]).mul(&q(&[2, 1])));
        assert_eq!(f.gcd(&q(&[-1, 1])), q(&[-1, 1]));
    }
}
