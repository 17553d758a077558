use std::fmt;

use crate::algebra::{FieldElement, Polynomial, W, X, Y, Z};
use crate::autmap::{Conjugator, PolyMap, TriangularParts};

use super::CanonError;

/// Which of phi2', phi3' vanish after normalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    /// phi2' = phi3' = 0
    One,
    /// phi2' = 0, phi3' != 0
    Two,
    /// phi2' != 0, phi3' != 0
    Three,
}

impl Condition {
    pub fn number(self) -> u8 {
        match self {
            Condition::One => 1,
            Condition::Two => 2,
            Condition::Three => 3,
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalization {
    pub conjugator: Conjugator,
    /// `conjugator^{-1} ∘ tau ∘ conjugator`
    pub tau_prime: PolyMap,
    pub parts: TriangularParts,
    pub condition: Condition,
}

fn internal(msg: impl Into<String>) -> CanonError {
    CanonError::InternalInvariantViolation(msg.into())
}

/// Checks that `tau` is a triangular involution and returns its parts.
pub fn require_triangular_involution(tau: &PolyMap) -> Result<TriangularParts, CanonError> {
    let parts = tau.triangular_parts()?;
    if !tau.is_involution()? {
        return Err(CanonError::NotInvolution);
    }
    // lambda^2 = 1 forces lambda = 1 in characteristic two
    if !parts.is_unitriangular() {
        return Err(internal("triangular involution with a scalar different from 1"));
    }
    Ok(parts)
}

/// `psi: x ↦ y + (phi2/phi1) x, y ↦ x/phi1` with inverse
/// `x ↦ phi1 y, y ↦ x + phi2(phi1 y) y`.
fn psi(phi1: FieldElement, phi2: &Polynomial) -> Result<Conjugator, CanonError> {
    let spec = phi1.spec();
    let x = Polynomial::var(spec, X);
    let y = Polynomial::var(spec, Y);
    let inv1 = phi1.inv()?;
    let map = PolyMap::new([
        y.add(&phi2.mul(&x)?.scale(inv1)?)?,
        x.scale(inv1)?,
        Polynomial::var(spec, Z),
        Polynomial::var(spec, W),
    ])?;
    let phi1_y = y.scale(phi1)?;
    let phi2_at = phi2.substitute(&[phi1_y.clone(), y.clone(), Polynomial::var(spec, Z), Polynomial::var(spec, W)])?;
    let inverse = PolyMap::new([
        phi1_y,
        x.add(&phi2_at.mul(&y)?)?,
        Polynomial::var(spec, Z),
        Polynomial::var(spec, W),
    ])?;
    Conjugator::new(map, inverse).map_err(|e| internal(format!("psi is not invertible: {e}")))
}

/// Conjugates a triangular involution into the shape
/// `x ↦ x, y ↦ y + phi2', z ↦ z + phi3', w ↦ w + phi4'` with
/// `phi2' in k[x]`, `phi3' in k[x, y]`, `phi4' in k[x, y, z]`, and
/// `(phi2', phi3')` in one of the three [`Condition`]s.
pub fn normalize(tau: &PolyMap) -> Result<Normalization, CanonError> {
    let spec = tau.spec();
    let parts = require_triangular_involution(tau)?;

    let mut conjugator = Conjugator::identity(spec);
    let mut current = tau.clone();
    let phi1 = parts.phis[0]
        .as_constant()
        .ok_or_else(|| internal("phi1 is not a constant"))?;
    if !phi1.is_zero() {
        conjugator = psi(phi1, &parts.phis[1])?;
        current = conjugator.conjugate_inverse(tau)?;
    }

    let mid = current
        .triangular_parts()
        .map_err(|e| internal(format!("conjugated map lost triangularity: {e}")))?;
    if !mid.phis[1].is_zero() && mid.phis[2].is_zero() {
        let swap = Conjugator::swap(spec, Y, Z);
        current = swap.conjugate_inverse(&current)?;
        conjugator = conjugator.then(&swap)?;
    }

    let parts = current
        .triangular_parts()
        .map_err(|e| internal(format!("normalized map is not triangular: {e}")))?;
    if !current.is_involution()? || !parts.is_unitriangular() {
        return Err(internal("normalized map is not a unitriangular involution"));
    }
    if !parts.phis[0].is_zero() {
        return Err(internal("normalized map moves x"));
    }
    let condition = match (parts.phis[1].is_zero(), parts.phis[2].is_zero()) {
        (true, true) => Condition::One,
        (true, false) => Condition::Two,
        (false, false) => Condition::Three,
        (false, true) => return Err(internal("phi2' != 0 with phi3' = 0 after normalization")),
    };
    if conjugator.conjugate(&current)? != *tau {
        return Err(internal("conjugation does not reproduce the input"));
    }
    Ok(Normalization {
        conjugator,
        tau_prime: current,
        parts,
        condition,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FieldSpec;
    use crate::autmap::MapError;

    fn f() -> FieldSpec {
        FieldSpec::gf2()
    }

    fn v(i: usize) -> Polynomial {
        Polynomial::var(f(), i)
    }

    fn one() -> Polynomial {
        Polynomial::one(f())
    }

    fn s(ps: &[&Polynomial]) -> Polynomial {
        ps.iter().fold(Polynomial::zero(f()), |a, b| a.add(b).unwrap())
    }

    #[test]
    fn identity_is_condition_one() {
        let n = normalize(&PolyMap::identity(f())).unwrap();
        assert_eq!(n.condition, Condition::One);
        assert!(n.conjugator.map().is_identity());
    }

    #[test]
    fn translation_of_x() {
        let tau = PolyMap::translation(f(), X, &one()).unwrap();
        let n = normalize(&tau).unwrap();
        assert_eq!(n.condition, Condition::Two);
        assert_eq!(n.tau_prime, PolyMap::translation(f(), Z, &one()).unwrap());
        // psi = (x ↔ y) followed by (y ↔ z): x ↦ y, y ↦ z, z ↦ x
        assert_eq!(n.conjugator.map().images(), &[v(Y), v(Z), v(X), v(W)]);
        assert_eq!(n.conjugator.conjugate(&n.tau_prime).unwrap(), tau);
    }

    #[test]
    fn already_condition_three() {
        let phi3 = s(&[&v(Y).square().unwrap(), &v(X).mul(&v(Y)).unwrap()]);
        let tau = PolyMap::new([v(X), s(&[&v(Y), &v(X)]), s(&[&v(Z), &phi3]), v(W)]).unwrap();
        let n = normalize(&tau).unwrap();
        assert_eq!(n.condition, Condition::Three);
        assert!(n.conjugator.map().is_identity());
        assert_eq!(n.tau_prime, tau);
    }

    #[test]
    fn case_c_swaps_y_and_z() {
        // y ↦ y + x, w ↦ w + y z + x
        let shift = s(&[&v(Y).mul(&v(Z)).unwrap(), &v(X)]);
        let tau = PolyMap::new([v(X), s(&[&v(Y), &v(X)]), v(Z), s(&[&v(W), &shift])]).unwrap();
        // τ²(w) = w + yz + (y + x) z = w + xz, not an involution; drop z from w
        assert_eq!(normalize(&tau).unwrap_err(), CanonError::NotInvolution);
        let tau = PolyMap::new([v(X), s(&[&v(Y), &v(X)]), v(Z), s(&[&v(W), &v(Z)])]).unwrap();
        let n = normalize(&tau).unwrap();
        assert_eq!(n.condition, Condition::Two);
        assert_eq!(n.parts.phis[2], v(X));
        assert_eq!(n.parts.phis[3], v(Y));
    }

    #[test]
    fn psi_over_gf4_with_nonconstant_phi2() {
        let f4 = FieldSpec::gf4();
        let g = f4.generator();
        let x = Polynomial::var(f4, X);
        // phi2(x) = x^2 + g x is invariant under x ↦ x + g
        let phi2 = x.square().unwrap().add(&x.scale(g).unwrap()).unwrap();
        let tau = PolyMap::new([
            x.add(&Polynomial::constant(g)).unwrap(),
            Polynomial::var(f4, Y).add(&phi2).unwrap(),
            Polynomial::var(f4, Z),
            Polynomial::var(f4, W),
        ])
        .unwrap();
        assert!(tau.is_involution().unwrap());
        let n = normalize(&tau).unwrap();
        assert_eq!(n.condition, Condition::Two);
        assert_eq!(n.conjugator.conjugate(&n.tau_prime).unwrap(), tau);
    }

    #[test]
    fn rejects_bad_input() {
        let swap = PolyMap::swap(f(), X, Y);
        assert_eq!(
            normalize(&swap).unwrap_err(),
            CanonError::Map(MapError::NotTriangular { index: 1 })
        );
        let tau = PolyMap::translation(f(), X, &one())
            .unwrap()
            .compose(&PolyMap::translation(f(), Y, &v(X)).unwrap())
            .unwrap();
        assert_eq!(normalize(&tau).unwrap_err(), CanonError::NotInvolution);
    }
}
