//! Fixed-ring decompositions by z-degree (or t-degree) reduction.

use crate::algebra::{AlgebraError, Degree, Monomial, Polynomial, VarNames, Y, Z};

use super::forms::FormIii;
use super::CanonError;

/// Writes `f`, fixed by `t ↦ t + xi`, as `eta(lower variables, t^2 + xi t)`.
///
/// The returned `eta` uses position `t` for the slot `t^2 + xi t`; the
/// positions below `t` keep their meaning. An odd leading degree in `t` is the
/// obstruction: the `t^(deg-1)` coefficient of the image minus `f` is then
/// `lambda * xi != 0`.
pub fn decompose_even(f: &Polynomial, t: usize, xi: &Polynomial) -> Result<Polynomial, CanonError> {
    if f.spec() != xi.spec() {
        return Err(AlgebraError::MixedFields.into());
    }
    if xi.is_zero() {
        return Err(CanonError::ZeroXi);
    }
    if !xi.lives_in(t) {
        return Err(CanonError::WrongSubring { expected: "variables below t" });
    }
    if !f.lives_in(t + 1) {
        return Err(CanonError::WrongSubring { expected: "variables up to t" });
    }
    let spec = f.spec();
    let tv = Polynomial::var(spec, t);
    let slot = tv.square()?.add(&xi.mul(&tv)?)?;
    // slot^k, grown on demand
    let mut slot_powers = vec![Polynomial::one(spec)];

    let mut rem = f.clone();
    let mut eta = Polynomial::zero(spec);
    loop {
        let deg = match rem.degree_in(t) {
            Degree::MinusInfinity => break,
            Degree::Finite(0) => {
                eta = eta.add(&rem)?;
                break;
            }
            Degree::Finite(d) => d,
        };
        if deg % 2 == 1 {
            return Err(CanonError::NotInvariant);
        }
        let half = (deg / 2) as usize;
        while slot_powers.len() <= half {
            let next = slot_powers.last().unwrap().mul(&slot)?;
            slot_powers.push(next);
        }
        let lead = rem.coeffs_in(t).swap_remove(deg as usize);
        eta = eta.add(&lead.mul_monomial(&Monomial::var(t, half as u32))?)?;
        rem = rem.sub(&lead.mul(&slot_powers[half])?)?;
        debug_assert!(rem.degree_in(t) < Degree::Finite(deg));
    }
    Ok(eta)
}

/// Result of [`decompose_fixed_iii`]: `gamma` and the pieces that were
/// emitted, in reduction order, summing to `gamma`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedDecomposition {
    pub gamma: Polynomial,
    pub steps: Vec<Polynomial>,
}

impl FixedDecomposition {
    /// The emitted pieces joined by `+` in reduction order.
    pub fn trace(&self) -> String {
        if self.steps.is_empty() {
            return "0".into();
        }
        self.steps
            .iter()
            .map(|p| p.render(&VarNames::GAMMA))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn not_fixed(reason: &str) -> CanonError {
    CanonError::NotInFixedRing {
        reason: reason.to_string(),
    }
}

impl FormIii {
    /// Writes `f` in k[x, y, z], fixed by this form's base map, as
    /// `gamma(f1, f2, f3, f4)`.
    ///
    /// With `f = sum lambda_i(x, y) z^i` of z-degree `n`: for odd `n = 2l - 1`
    /// the top coefficient is `a * mu` and `mu * f3^(l-1) * f4` is removed; for
    /// even `n = 2m` the term `lambda_n * f3^m` is removed. Coefficients in
    /// k[x, y]^T are rewritten in (f1, f2) with [`decompose_even`].
    pub fn decompose_fixed(&self, f: &Polynomial) -> Result<FixedDecomposition, CanonError> {
        if f.spec() != self.alpha().spec() {
            return Err(AlgebraError::MixedFields.into());
        }
        if !f.lives_in(3) {
            return Err(CanonError::WrongSubring { expected: "k[x, y, z]" });
        }
        let spec = f.spec();
        let [_, _, f3, f4] = self.generators();
        let mut f3_powers = vec![Polynomial::one(spec)];
        let in_f1_f2 = |c: &Polynomial| match decompose_even(c, Y, self.alpha()) {
            Ok(nu) => Ok(nu),
            Err(CanonError::NotInvariant) => Err(not_fixed("coefficient is not fixed by y -> y + alpha")),
            Err(e) => Err(e),
        };

        let mut rem = f.clone();
        let mut steps = Vec::new();
        loop {
            let deg = match rem.degree_in(Z) {
                Degree::MinusInfinity => break,
                Degree::Finite(0) => {
                    steps.push(in_f1_f2(&rem)?);
                    break;
                }
                Degree::Finite(d) => d,
            };
            let lead = rem.coeffs_in(Z).swap_remove(deg as usize);
            let f3_exp = (deg / 2) as usize;
            while f3_powers.len() <= f3_exp {
                let next = f3_powers.last().unwrap().mul(f3)?;
                f3_powers.push(next);
            }
            let (step, removed) = if deg % 2 == 1 {
                let mu = match lead.exact_div(self.a()) {
                    Ok(mu) => mu,
                    Err(AlgebraError::NotDivisible) => {
                        return Err(not_fixed("odd-degree leading coefficient is not divisible by a"))
                    }
                    Err(e) => return Err(e.into()),
                };
                let nu = in_f1_f2(&mu)?;
                let step = nu.mul_monomial(&Monomial::new([0, 0, f3_exp as u32, 1]))?;
                (step, mu.mul(&f3_powers[f3_exp])?.mul(f4)?)
            } else {
                let nu = in_f1_f2(&lead)?;
                let step = nu.mul_monomial(&Monomial::new([0, 0, f3_exp as u32, 0]))?;
                (step, lead.mul(&f3_powers[f3_exp])?)
            };
            rem = rem.sub(&removed)?;
            if rem.degree_in(Z) >= Degree::Finite(deg) {
                return Err(CanonError::InternalInvariantViolation(format!(
                    "z-degree did not drop below {deg} during fixed-ring reduction"
                )));
            }
            steps.push(step);
        }
        let mut gamma = Polynomial::zero(spec);
        for s in &steps {
            gamma = gamma.add(s)?;
        }
        Ok(FixedDecomposition { gamma, steps })
    }
}

/// Writes `f` in k[x, y, z]^T, T the form-(iii) map for `alpha`, `beta`,
/// as `gamma(f1, f2, f3, f4)`.
pub fn decompose_fixed_iii(
    f: &Polynomial,
    alpha: &Polynomial,
    beta: &Polynomial,
) -> Result<FixedDecomposition, CanonError> {
    let form = FormIii::new(alpha, beta, &Polynomial::zero(f.spec()))?;
    form.decompose_fixed(f)
}
