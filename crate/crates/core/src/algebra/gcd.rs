//! GCD machinery for form (iii): univariate Euclid in k[x] and the content
//! of a k[x, y] polynomial along y.

use super::monomial::{X, Y};
use super::poly::Polynomial;
use super::AlgebraError;

/// Output of [`gcd_form_iii`]: `d = gcd(alpha, beta)`, `a = alpha / d`,
/// `b = beta / d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdSplit {
    pub d: Polynomial,
    pub a: Polynomial,
    pub b: Polynomial,
}

fn require_univariate_x(p: &Polynomial) -> Result<(), AlgebraError> {
    if p.lives_in(1) {
        Ok(())
    } else {
        Err(AlgebraError::WrongSubring { expected: "k[x]" })
    }
}

/// Remainder of `a` modulo `b` in k[x]. Both must live in k[x].
pub fn rem_x(a: &Polynomial, b: &Polynomial) -> Result<Polynomial, AlgebraError> {
    require_univariate_x(a)?;
    require_univariate_x(b)?;
    let (lb_m, lb_c) = b.leading_term().ok_or(AlgebraError::DivisionByZero)?;
    let lb_inv = lb_c.inv()?;
    let db = lb_m.exponent(X);
    let mut r = a.clone();
    while let Some((lm, lc)) = r.leading_term() {
        let dr = lm.exponent(X);
        if dr < db {
            break;
        }
        let shift = super::Monomial::var(X, dr - db);
        let step = b.mul_monomial(&shift)?.scale(lc.mul(&lb_inv)?)?;
        r = r.sub(&step)?;
    }
    Ok(r)
}

/// Scales a nonzero polynomial to leading coefficient 1.
pub fn monic(p: &Polynomial) -> Result<Polynomial, AlgebraError> {
    let (_, lc) = p.leading_term().ok_or(AlgebraError::ZeroInput)?;
    p.scale(lc.inv()?)
}

/// Monic GCD in k[x]; `gcd(0, 0) = 0`.
pub fn gcd_x(a: &Polynomial, b: &Polynomial) -> Result<Polynomial, AlgebraError> {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let r = rem_x(&a, &b)?;
        a = b;
        b = r;
    }
    if a.is_zero() {
        Ok(a)
    } else {
        monic(&a)
    }
}

/// GCD in k[x] of the coefficients of `p` viewed as a polynomial in y.
pub fn content_y(p: &Polynomial) -> Result<Polynomial, AlgebraError> {
    if !p.lives_in(2) {
        return Err(AlgebraError::WrongSubring { expected: "k[x, y]" });
    }
    let mut g = Polynomial::zero(p.spec());
    for c in p.coeffs_in(Y) {
        g = gcd_x(&g, &c)?;
        if g.is_one() {
            break;
        }
    }
    Ok(g)
}

/// `d := gcd(alpha, beta)` in k[x, y] with `alpha` in k[x]: every divisor of
/// a nonzero element of k[x] lies in k[x], so `d = gcd_x(alpha, content_y(beta))`.
pub fn gcd_form_iii(alpha: &Polynomial, beta: &Polynomial) -> Result<GcdSplit, AlgebraError> {
    if alpha.is_zero() || beta.is_zero() {
        return Err(AlgebraError::ZeroInput);
    }
    if alpha.spec() != beta.spec() {
        return Err(AlgebraError::MixedFields);
    }
    if !alpha.lives_in(1) {
        return Err(AlgebraError::WrongSubring { expected: "k[x]" });
    }
    if !beta.lives_in(2) {
        return Err(AlgebraError::WrongSubring { expected: "k[x, y]" });
    }
    let d = gcd_x(alpha, &content_y(beta)?)?;
    let a = alpha.exact_div(&d)?;
    let b = beta.exact_div(&d)?;
    Ok(GcdSplit { d, a, b })
}
