use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::mpoly::MPoly;
use crate::error::{Error, Result};

/// Largest accepted modulus (exclusive). Products are formed in `u128`.
pub const MAX_MODULUS: u64 = 1 << 62;

/// Deterministic Miller–Rabin for all `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Dense univariate polynomial over 𝔽_p, ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl ModPoly {
    /// `p` must be prime and below [`MAX_MODULUS`].
    pub fn new(p: u64, coeffs: Vec<u64>) -> Result<Self> {
        if p >= MAX_MODULUS {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self::raw(p, coeffs.into_iter().map(|c| c % p).collect()))
    }

    fn raw(p: u64, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { p, coeffs }
    }

    /// Reduces integer coefficients mod `p`.
    pub fn from_integers(p: u64, coeffs: &[BigInt]) -> Result<Self> {
        let pb = BigInt::from(p);
        let v = coeffs
            .iter()
            .map(|c| c.mod_floor(&pb).to_u64().unwrap())
            .collect();
        Self::new(p, v)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let x = x % self.p;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| (mul_mod(acc, x, self.p) + c) % self.p)
    }

    fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let p = self.p;
        let v = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                (a + p - b) % p
            })
            .collect();
        Self::raw(p, v)
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::raw(self.p, vec![]);
        }
        let p = self.p as u128;
        let mut out = vec![0u128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u128 * b as u128) % p;
            }
        }
        Self::raw(self.p, out.into_iter().map(|c| c as u64).collect())
    }

    /// Remainder modulo `m` (nonzero).
    pub fn rem(&self, m: &Self) -> Self {
        let dm = m.degree().expect("nonzero divisor");
        let p = self.p;
        let lc_inv = inv_mod(m.coeffs[dm], p);
        let mut r = self.coeffs.clone();
        while r.len() > dm {
            let top = r.len() - 1;
            let q = mul_mod(r[top], lc_inv, p);
            if q != 0 {
                let shift = top - dm;
                for (k, &mc) in m.coeffs.iter().enumerate() {
                    r[shift + k] = (r[shift + k] + p - mul_mod(q, mc, p)) % p;
                }
            }
            r.pop();
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        Self::raw(p, r)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lc) => {
                let inv = inv_mod(lc, self.p);
                Self::raw(
                    self.p,
                    self.coeffs.iter().map(|&c| mul_mod(c, inv, self.p)).collect(),
                )
            }
        }
    }

    /// `x^e mod self` by repeated squaring.
    pub fn x_pow_mod(&self, mut e: u64) -> Self {
        let mut result = Self::raw(self.p, vec![1]).rem(self);
        let mut base = Self::raw(self.p, vec![0, 1]).rem(self);
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).rem(self);
            }
            base = base.mul(&base).rem(self);
            e >>= 1;
        }
        result
    }

    /// Whether the polynomial has a root in 𝔽_p, via `gcd(x^p − x, f)`.
    pub fn has_root(&self) -> bool {
        match self.degree() {
            None => true,
            Some(0) => false,
            Some(_) => {
                if self.coeffs[0] == 0 {
                    return true;
                }
                let xp = self.x_pow_mod(self.p);
                let x = Self::raw(self.p, vec![0, 1]);
                let g = self.gcd(&xp.sub(&x));
                g.degree().is_some_and(|d| d >= 1)
            }
        }
    }
}

/// Whether a univariate integer polynomial has a root modulo the prime `p`.
///
/// Errors when `p` is not prime, too large, or divides the leading coefficient.
pub fn modpoly_root_exists(f: &MPoly, p: u64) -> Result<bool> {
    if p >= MAX_MODULUS {
        return Err(Error::ModulusTooLarge(p));
    }
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    let var = match f.vars() {
        [] => return Err(Error::ConstantInVariable("x".into())),
        [v] => v.clone(),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "expected a univariate polynomial, got {f}"
            )))
        }
    };
    if !f.has_integer_coefficients() {
        return Err(Error::InvalidArgument(format!(
            "expected integer coefficients, got {f}"
        )));
    }
    let coeffs: Vec<BigInt> = f
        .coefficients_in(&var)
        .iter()
        .map(|c| c.constant_value().unwrap().to_integer())
        .collect();
    if (coeffs.last().unwrap() % BigInt::from(p)).is_zero() {
        return Err(Error::BadPrime(p));
    }
    Ok(ModPoly::from_integers(p, &coeffs)?.has_root())
}
