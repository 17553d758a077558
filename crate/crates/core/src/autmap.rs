//! Ring endomorphisms of k[x, y, z, w] given by the images of the variables.
//!
//! Composition convention: `(s ∘ t)(p) = s(t(p))`. The images of `s ∘ t` are
//! therefore `s.apply(t.images[i])`.

use std::fmt;

use thiserror::Error;

use crate::algebra::{AlgebraError, FieldElement, FieldSpec, Polynomial, VarNames, NVARS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    /// `index` is 1-based: x = 1, ..., w = 4.
    #[error("map is not triangular at variable {index}")]
    NotTriangular { index: usize },
    #[error("map is not invertible by the supplied inverse")]
    NotInvertible,
}

/// Endomorphism determined by the images of x, y, z, w.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyMap {
    spec: FieldSpec,
    images: [Polynomial; NVARS],
}

/// `sigma(x_i) = lambdas[i] * x_i + phis[i]` with `phis[i]` in the earlier variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularParts {
    pub lambdas: [FieldElement; NVARS],
    pub phis: [Polynomial; NVARS],
}

impl TriangularParts {
    pub fn is_unitriangular(&self) -> bool {
        self.lambdas.iter().all(FieldElement::is_one)
    }
}

impl PolyMap {
    pub fn new(images: [Polynomial; NVARS]) -> Result<Self, AlgebraError> {
        let spec = images[0].spec();
        if images.iter().any(|p| p.spec() != spec) {
            return Err(AlgebraError::MixedFields);
        }
        Ok(PolyMap { spec, images })
    }

    pub fn identity(spec: FieldSpec) -> Self {
        PolyMap {
            spec,
            images: std::array::from_fn(|i| Polynomial::var(spec, i)),
        }
    }

    /// Identity except `x_i ↦ x_i + shift`.
    pub fn translation(spec: FieldSpec, index: usize, shift: &Polynomial) -> Result<Self, AlgebraError> {
        let mut map = Self::identity(spec);
        map.images[index] = map.images[index].add(shift)?;
        Ok(map)
    }

    /// Exchanges two variables.
    pub fn swap(spec: FieldSpec, i: usize, j: usize) -> Self {
        let mut map = Self::identity(spec);
        map.images.swap(i, j);
        map
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn images(&self) -> &[Polynomial; NVARS] {
        &self.images
    }

    pub fn image(&self, index: usize) -> &Polynomial {
        &self.images[index]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, p)| p.is_var(i))
    }

    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial, AlgebraError> {
        p.substitute(&self.images)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &PolyMap) -> Result<PolyMap, AlgebraError> {
        if self.spec != other.spec {
            return Err(AlgebraError::MixedFields);
        }
        let mut images: [Polynomial; NVARS] = std::array::from_fn(|_| Polynomial::zero(self.spec));
        for (slot, img) in images.iter_mut().zip(&other.images) {
            *slot = self.apply(img)?;
        }
        Ok(PolyMap {
            spec: self.spec,
            images,
        })
    }

    pub fn triangular_parts(&self) -> Result<TriangularParts, MapError> {
        let mut lambdas = [self.spec.zero(); NVARS];
        let mut phis: [Polynomial; NVARS] = std::array::from_fn(|_| Polynomial::zero(self.spec));
        for (i, img) in self.images.iter().enumerate() {
            let not_triangular = MapError::NotTriangular { index: i + 1 };
            if !img.lives_in(i + 1) {
                return Err(not_triangular);
            }
            let mut coeffs = img.coeffs_in(i);
            if coeffs.len() != 2 {
                return Err(not_triangular);
            }
            let lambda = coeffs[1].as_constant().ok_or(not_triangular)?;
            lambdas[i] = lambda;
            phis[i] = coeffs.swap_remove(0);
        }
        Ok(TriangularParts { lambdas, phis })
    }

    pub fn is_triangular(&self) -> bool {
        self.triangular_parts().is_ok()
    }

    /// `self ∘ self == id`.
    pub fn is_involution(&self) -> Result<bool, AlgebraError> {
        Ok(self.compose(self)?.is_identity())
    }

    /// Inverse by back-substitution:
    /// `x_i ↦ lambda_i^{-1} (x_i - phi_i(inverse images of x_1..x_{i-1}))`.
    pub fn invert_triangular(&self) -> Result<PolyMap, MapError> {
        let parts = self.triangular_parts()?;
        let mut inv = PolyMap::identity(self.spec);
        for i in 0..NVARS {
            // phi_i only involves variables < i, whose inverse images are final.
            let shifted = inv.apply(&parts.phis[i])?;
            let lambda_inv = parts.lambdas[i].inv()?;
            inv.images[i] = Polynomial::var(self.spec, i)
                .sub(&shifted)?
                .scale(lambda_inv)?;
        }
        Ok(inv)
    }

    /// Text form `x -> ...; y -> ...; z -> ...; w -> ...`.
    pub fn render(&self) -> String {
        let names = VarNames::STANDARD;
        self.images
            .iter()
            .enumerate()
            .map(|(i, p)| format!("{} -> {}", names.0[i], p))
            .collect::<Vec<_>>()
            .join("; ")
    }
}

impl fmt::Display for PolyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `phi ∘ t ∘ phi^{-1}` for a triangular `phi`.
pub fn conjugate(phi: &PolyMap, t: &PolyMap) -> Result<PolyMap, MapError> {
    Conjugator::triangular(phi.clone())?.conjugate(t)
}

/// An automorphism together with an explicit, verified inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conjugator {
    map: PolyMap,
    inverse: PolyMap,
}

impl Conjugator {
    /// Pairs `map` with `inverse`, checking both composition orders.
    pub fn new(map: PolyMap, inverse: PolyMap) -> Result<Self, MapError> {
        if !map.compose(&inverse)?.is_identity() || !inverse.compose(&map)?.is_identity() {
            return Err(MapError::NotInvertible);
        }
        Ok(Conjugator { map, inverse })
    }

    pub fn identity(spec: FieldSpec) -> Self {
        Conjugator {
            map: PolyMap::identity(spec),
            inverse: PolyMap::identity(spec),
        }
    }

    pub fn triangular(map: PolyMap) -> Result<Self, MapError> {
        let inverse = match map.invert_triangular() {
            Ok(inv) => inv,
            Err(MapError::NotTriangular { .. }) => return Err(MapError::NotInvertible),
            Err(e) => return Err(e),
        };
        Ok(Conjugator { map, inverse })
    }

    /// The swap of two variables, which is its own inverse.
    pub fn swap(spec: FieldSpec, i: usize, j: usize) -> Self {
        let map = PolyMap::swap(spec, i, j);
        Conjugator {
            inverse: map.clone(),
            map,
        }
    }

    pub fn map(&self) -> &PolyMap {
        &self.map
    }

    pub fn inverse(&self) -> &PolyMap {
        &self.inverse
    }

    /// `(self ∘ other, other^{-1} ∘ self^{-1})`.
    pub fn then(&self, other: &Conjugator) -> Result<Conjugator, MapError> {
        Ok(Conjugator {
            map: self.map.compose(&other.map)?,
            inverse: other.inverse.compose(&self.inverse)?,
        })
    }

    /// `phi ∘ t ∘ phi^{-1}`.
    pub fn conjugate(&self, t: &PolyMap) -> Result<PolyMap, MapError> {
        Ok(self.map.compose(&t.compose(&self.inverse)?)?)
    }

    /// `phi^{-1} ∘ t ∘ phi`.
    pub fn conjugate_inverse(&self, t: &PolyMap) -> Result<PolyMap, MapError> {
        Ok(self.inverse.compose(&t.compose(&self.map)?)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{W, X, Y, Z};

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

    fn m(a: &Polynomial, b: &Polynomial) -> Polynomial {
        a.mul(b).unwrap()
    }

    fn map(images: [Polynomial; 4]) -> PolyMap {
        PolyMap::new(images).unwrap()
    }

    /// x ↦ x, y ↦ y + x^2, z ↦ z + xy, w ↦ w
    fn sample_triangular() -> PolyMap {
        map([
            v(X),
            s(&[&v(Y), &v(X).pow(2).unwrap()]),
            s(&[&v(Z), &m(&v(X), &v(Y))]),
            v(W),
        ])
    }

    #[test]
    fn apply_examples() {
        let id = PolyMap::identity(f());
        let p = s(&[&m(&v(X), &v(W)), &one()]);
        assert_eq!(id.apply(&p).unwrap(), p);

        let sigma = PolyMap::translation(f(), Z, &v(X)).unwrap();
        let inv = s(&[&v(Z).pow(2).unwrap(), &m(&v(X), &v(Z))]);
        assert_eq!(sigma.apply(&inv).unwrap(), inv);

        let sigma = PolyMap::translation(f(), Y, &one()).unwrap();
        let f2 = s(&[&v(Y).pow(2).unwrap(), &v(Y)]);
        assert_eq!(sigma.apply(&f2).unwrap(), f2);
    }

    #[test]
    fn compose_examples() {
        let tau = sample_triangular();
        assert_eq!(PolyMap::identity(f()).compose(&tau).unwrap(), tau);

        let sq = PolyMap::translation(f(), Y, &v(X).pow(2).unwrap()).unwrap();
        assert!(sq.compose(&sq).unwrap().is_identity());

        let sigma = PolyMap::translation(f(), X, &one()).unwrap();
        let tau = PolyMap::translation(f(), Y, &v(X)).unwrap();
        let st = sigma.compose(&tau).unwrap();
        assert_eq!(st.image(X), &s(&[&v(X), &one()]));
        assert_eq!(st.image(Y), &s(&[&v(Y), &v(X), &one()]));
        assert_eq!(st.image(Z), &v(Z));
    }

    #[test]
    fn triangular_parts_examples() {
        let parts = PolyMap::identity(f()).triangular_parts().unwrap();
        assert!(parts.is_unitriangular());
        assert!(parts.phis.iter().all(Polynomial::is_zero));

        let parts = sample_triangular().triangular_parts().unwrap();
        assert_eq!(parts.phis, [Polynomial::zero(f()), v(X).pow(2).unwrap(), m(&v(X), &v(Y)), Polynomial::zero(f())]);

        let swap = PolyMap::swap(f(), X, Y);
        assert_eq!(swap.triangular_parts(), Err(MapError::NotTriangular { index: 1 }));
        // z ↦ z^2 is not of the form λz + φ
        let bad = map([v(X), v(Y), v(Z).pow(2).unwrap(), v(W)]);
        assert_eq!(bad.triangular_parts(), Err(MapError::NotTriangular { index: 3 }));
        // z ↦ xz: the coefficient of z must be a constant
        let bad = map([v(X), v(Y), m(&v(X), &v(Z)), v(W)]);
        assert_eq!(bad.triangular_parts(), Err(MapError::NotTriangular { index: 3 }));
    }

    #[test]
    fn triangular_parts_with_scalars() {
        let f4 = FieldSpec::gf4();
        let g = f4.generator();
        let sigma = PolyMap::new([
            Polynomial::var(f4, X).scale(g).unwrap().add(&Polynomial::one(f4)).unwrap(),
            Polynomial::var(f4, Y),
            Polynomial::var(f4, Z),
            Polynomial::var(f4, W).scale(g).unwrap(),
        ])
        .unwrap();
        let parts = sigma.triangular_parts().unwrap();
        assert_eq!(parts.lambdas[0], g);
        assert_eq!(parts.lambdas[3], g);
        assert!(parts.phis[0].is_one());
        let inv = sigma.invert_triangular().unwrap();
        assert!(sigma.compose(&inv).unwrap().is_identity());
        assert!(inv.compose(&sigma).unwrap().is_identity());
    }

    #[test]
    fn involution_examples() {
        let t = PolyMap::translation(f(), X, &one()).unwrap();
        assert!(t.is_involution().unwrap());

        let t = PolyMap::translation(f(), X, &one())
            .unwrap()
            .compose(&PolyMap::translation(f(), Y, &v(X)).unwrap())
            .unwrap();
        assert_eq!(t.image(Y), &s(&[&v(Y), &v(X), &one()]));
        assert!(!t.is_involution().unwrap());
        assert_eq!(t.compose(&t).unwrap().image(Y), &s(&[&v(Y), &one()]));

        // form (iii) with alpha = beta = 1, gamma = g4: w ↦ w + z + y
        let t = map([
            v(X),
            s(&[&v(Y), &one()]),
            s(&[&v(Z), &one()]),
            s(&[&v(W), &v(Z), &v(Y)]),
        ]);
        assert!(t.is_involution().unwrap());
    }

    #[test]
    fn inversion_examples() {
        let sigma = sample_triangular();
        let inv = sigma.invert_triangular().unwrap();
        assert_eq!(
            inv.image(Z),
            &s(&[&v(Z), &m(&v(X), &v(Y)), &v(X).pow(3).unwrap()])
        );
        assert!(sigma.compose(&inv).unwrap().is_identity());
        assert!(inv.compose(&sigma).unwrap().is_identity());

        let t = PolyMap::translation(f(), W, &m(&v(X), &v(Z))).unwrap();
        assert_eq!(t.invert_triangular().unwrap(), t);
        assert!(PolyMap::identity(f()).invert_triangular().unwrap().is_identity());
        assert!(matches!(
            PolyMap::swap(f(), X, Y).invert_triangular(),
            Err(MapError::NotTriangular { .. })
        ));
    }

    #[test]
    fn conjugation_examples() {
        let t = sample_triangular();
        assert_eq!(conjugate(&PolyMap::identity(f()), &t).unwrap(), t);

        let inv = PolyMap::translation(f(), W, &v(X)).unwrap();
        let phi = sample_triangular();
        let c = conjugate(&phi, &inv).unwrap();
        assert!(c.is_involution().unwrap());

        let swap = Conjugator::swap(f(), Y, Z);
        let t = PolyMap::translation(f(), Y, &one()).unwrap();
        let c = swap.conjugate(&t).unwrap();
        assert_eq!(c, PolyMap::translation(f(), Z, &one()).unwrap());

        assert_eq!(conjugate(&PolyMap::swap(f(), Y, Z), &t), Err(MapError::NotInvertible));
    }

    #[test]
    fn conjugator_rejects_wrong_inverse() {
        let phi = sample_triangular();
        assert_eq!(
            Conjugator::new(phi.clone(), phi.clone()).unwrap_err(),
            MapError::NotInvertible
        );
        let c = Conjugator::new(phi.clone(), phi.invert_triangular().unwrap()).unwrap();
        let both = c.then(&Conjugator::swap(f(), Y, Z)).unwrap();
        assert!(both.map().compose(both.inverse()).unwrap().is_identity());
    }
}
