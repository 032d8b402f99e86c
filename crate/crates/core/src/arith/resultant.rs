use num_bigint::BigInt;
use num_traits::One;

use super::mpoly::MPoly;
use super::rational::Rational;
use super::upoly::{subresultant, ExactRing, UPoly};
use crate::error::{Error, Result};

/// How [`resultant`] eliminates the variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResultantStrategy {
    /// Subresultant pseudo-remainder sequence over the coefficient ring.
    Subresultant,
    /// Specialize the remaining variables at integer points and interpolate.
    Interpolation,
}

fn other_vars(a: &MPoly, b: &MPoly, var: &str) -> Vec<String> {
    let mut v: Vec<String> = a
        .vars()
        .iter()
        .chain(b.vars())
        .filter(|w| *w != var)
        .cloned()
        .collect();
    v.sort();
    v.dedup();
    v
}

/// Integer-coefficient univariate resultant for polynomials free of other variables.
fn univariate_resultant(a: &MPoly, b: &MPoly, var: &str) -> Rational {
    let to_q = |p: &MPoly| {
        UPoly::new(
            p.coefficients_in(var)
                .iter()
                .map(|c| c.constant_value().expect("univariate input"))
                .collect::<Vec<Rational>>(),
        )
    };
    let (qa, qb) = (to_q(a), to_q(b));
    let (ia, ka) = scale_to_integer(&qa);
    let (ib, kb) = scale_to_integer(&qb);
    // Res(ka*a, kb*b) = ka^deg(b) * kb^deg(a) * Res(a, b)
    let r = Rational::from_integer(subresultant(&ia, &ib));
    let da = qa.degree().unwrap_or(0) as i32;
    let db = qb.degree().unwrap_or(0) as i32;
    r / (Rational::from_integer(ka).pow(db) * Rational::from_integer(kb).pow(da))
}

/// Returns `(k * p, k)` with `k` the least common denominator of the coefficients.
fn scale_to_integer(p: &UPoly<Rational>) -> (UPoly<BigInt>, BigInt) {
    use num_integer::Integer;
    let k = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let kq = Rational::from_integer(k.clone());
    let ints = p.coeffs().iter().map(|c| (c * &kq).to_integer()).collect();
    (UPoly::new(ints), k)
}

/// Resultant with respect to `var` by the subresultant sequence over ℚ[other vars].
pub fn resultant_subresultant(a: &MPoly, b: &MPoly, var: &str) -> Result<MPoly> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if other_vars(a, b, var).is_empty() {
        return Ok(MPoly::constant(univariate_resultant(a, b, var)));
    }
    let ua = UPoly::new(a.coefficients_in(var));
    let ub = UPoly::new(b.coefficients_in(var));
    Ok(subresultant(&ua, &ub))
}

/// Resultant with respect to `var` by evaluation at integer points and
/// Newton interpolation, one remaining variable at a time.
///
/// Evaluation points run 0, 1, -1, 2, -2, ... skipping those where either
/// leading coefficient in `var` vanishes. The number of points comes from the
/// Sylvester-matrix degree bound `deg_var(b)·deg_y(a) + deg_var(a)·deg_y(b)`.
pub fn resultant_interpolation(a: &MPoly, b: &MPoly, var: &str) -> Result<MPoly> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let others = other_vars(a, b, var);
    let Some(y) = others.first() else {
        return Ok(MPoly::constant(univariate_resultant(a, b, var)));
    };
    let m = a.degree_in(var) as u64;
    let n = b.degree_in(var) as u64;
    let bound = n * a.degree_in(y) as u64 + m * b.degree_in(y) as u64;
    let lca = a.leading_coeff_in(var);
    let lcb = b.leading_coeff_in(var);

    let mut xs: Vec<Rational> = Vec::new();
    let mut ys: Vec<MPoly> = Vec::new();
    let mut k: i64 = 0;
    while xs.len() as u64 <= bound {
        let pt = Rational::from_integer(k.into());
        k = if k > 0 { -k } else { -k + 1 };
        if lca.substitute(y, &pt).is_zero() || lcb.substitute(y, &pt).is_zero() {
            continue;
        }
        let v = resultant_interpolation(&a.substitute(y, &pt), &b.substitute(y, &pt), var)?;
        xs.push(pt);
        ys.push(v);
    }
    Ok(newton_interpolate(y, &xs, &ys))
}

fn newton_interpolate(var: &str, xs: &[Rational], ys: &[MPoly]) -> MPoly {
    let mut coef: Vec<MPoly> = ys.to_vec();
    for j in 1..xs.len() {
        for i in (j..xs.len()).rev() {
            let denom = (&xs[i] - &xs[i - j]).recip();
            coef[i] = (&coef[i] - &coef[i - 1]).scale(&denom);
        }
    }
    let y = MPoly::var(var);
    let mut acc = MPoly::zero();
    for i in (0..xs.len()).rev() {
        acc = &(&acc * &(&y - &MPoly::constant(xs[i].clone()))) + &coef[i];
    }
    acc
}

/// Resultant of `a` and `b` with respect to `var`.
///
/// Sign convention: `Res(a, b) = lc(a)^deg(b) · ∏ b(αᵢ)` over the roots `αᵢ` of `a`.
pub fn resultant(a: &MPoly, b: &MPoly, var: &str, strategy: ResultantStrategy) -> Result<MPoly> {
    match strategy {
        ResultantStrategy::Subresultant => resultant_subresultant(a, b, var),
        ResultantStrategy::Interpolation => resultant_interpolation(a, b, var),
    }
}

/// `disc(a) = (-1)^(d(d-1)/2) · Res(a, ∂a/∂var) / lc(a)` with `d = deg_var(a) ≥ 1`.
pub fn discriminant(a: &MPoly, var: &str, strategy: ResultantStrategy) -> Result<MPoly> {
    let d = a.degree_in(var);
    if d == 0 {
        return Err(Error::ConstantInVariable(var.to_string()));
    }
    let r = resultant(a, &a.derivative(var), var, strategy)?;
    let lc = a.leading_coeff_in(var);
    let q = r
        .div_exact(&lc)
        .ok_or_else(|| Error::InexactDivision("discriminant by leading coefficient".into()))?;
    let d = d as u64;
    Ok(if (d * (d - 1) / 2) % 2 == 1 { -q } else { q })
}

impl ExactRing for UPoly<Rational> {
    fn zero_elem() -> Self {
        UPoly::zero()
    }
    fn one_elem() -> Self {
        UPoly::constant(Rational::one())
    }
    fn is_zero_elem(&self) -> bool {
        UPoly::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn minus(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn from_i64(n: i64) -> Self {
        UPoly::constant(Rational::from_integer(n.into()))
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(other);
        r.is_zero().then_some(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;
    use ResultantStrategy::*;

    fn p(s: &str) -> MPoly {
        MPoly::parse(s).unwrap()
    }

    #[test]
    fn lc_sign_convention() {
        for s in [Subresultant, Interpolation] {
            assert_eq!(resultant(&p("x"), &p("x - 1"), "x", s).unwrap(), MPoly::from_i64(-1));
        }
    }

    #[test]
    fn quadratic_discriminant() {
        for s in [Subresultant, Interpolation] {
            assert_eq!(
                discriminant(&p("x^2 + b*x + c"), "x", s).unwrap(),
                p("b^2 - 4c")
            );
        }
    }

    #[test]
    fn zero_and_constant_inputs_are_errors() {
        assert_eq!(
            resultant(&MPoly::zero(), &p("x"), "x", Subresultant),
            Err(Error::ZeroPolynomial)
        );
        assert_eq!(
            discriminant(&p("c + 1"), "x", Subresultant),
            Err(Error::ConstantInVariable("x".into()))
        );
    }

    #[test]
    fn strategies_agree_on_bivariate_input() {
        let a = p("x^3 + c*x^2 - 2x + c^2 + 1");
        let b = p("(c-1)x^2 + 3x - c");
        let r1 = resultant(&a, &b, "x", Subresultant).unwrap();
        let r2 = resultant(&a, &b, "x", Interpolation).unwrap();
        assert_eq!(r1, r2);
        assert_eq!(r1.eval(&[("c", int(2))]), resultant(
            &a.substitute("c", &int(2)),
            &b.substitute("c", &int(2)),
            "x",
            Subresultant
        ).unwrap().constant_value());
    }

    #[test]
    fn rational_coefficients() {
        // Res(2x - 1, x^2 + 1/4) = 2^2 * ((1/2)^2 + 1/4) = 2
        let r = resultant(&p("2x - 1"), &p("x^2 + 1/4"), "x", Subresultant).unwrap();
        assert_eq!(r, MPoly::from_i64(2));
    }
}
