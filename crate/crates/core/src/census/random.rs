//! Seeded random parameters, canonical forms and conjugators.

use rand::Rng;

use crate::algebra::{FieldElement, FieldSpec, Polynomial, NVARS};
use crate::autmap::{Conjugator, PolyMap};
use crate::canon::CanonicalForm;

use super::monomials_up_to;

pub fn random_element<R: Rng>(rng: &mut R, spec: FieldSpec) -> FieldElement {
    spec.element(rng.gen_range(0..spec.order()))
}

pub fn random_nonzero_element<R: Rng>(rng: &mut R, spec: FieldSpec) -> FieldElement {
    spec.element(rng.gen_range(1..spec.order()))
}

/// Up to `max_terms` random terms of total degree `<= max_degree` in the
/// first `nvars` variables.
pub fn random_poly<R: Rng>(
    rng: &mut R,
    spec: FieldSpec,
    nvars: usize,
    max_degree: u32,
    max_terms: usize,
) -> Polynomial {
    let monomials = monomials_up_to(nvars, max_degree);
    let count = rng.gen_range(0..=max_terms);
    let terms = (0..count).map(|_| {
        let m = monomials[rng.gen_range(0..monomials.len())];
        (m, random_nonzero_element(rng, spec))
    });
    Polynomial::from_terms(spec, terms.collect::<Vec<_>>()).expect("single field")
}

pub fn random_nonzero_poly<R: Rng>(
    rng: &mut R,
    spec: FieldSpec,
    nvars: usize,
    max_degree: u32,
    max_terms: usize,
) -> Polynomial {
    loop {
        let p = random_poly(rng, spec, nvars, max_degree, max_terms.max(1));
        if !p.is_zero() {
            return p;
        }
    }
}

/// A random form (i), (ii) or (iii) with parameter degrees `<= max_degree`.
pub fn random_canonical_form<R: Rng>(
    rng: &mut R,
    spec: FieldSpec,
    max_degree: u32,
    max_terms: usize,
) -> CanonicalForm {
    match rng.gen_range(0..3) {
        0 => random_form_i(rng, spec, max_degree, max_terms),
        1 => random_form_ii(rng, spec, max_degree, max_terms),
        _ => random_form_iii(rng, spec, max_degree, max_terms),
    }
}

pub fn random_form_i<R: Rng>(rng: &mut R, spec: FieldSpec, max_degree: u32, max_terms: usize) -> CanonicalForm {
    let f = random_poly(rng, spec, 3, max_degree, max_terms);
    CanonicalForm::form_i(&f).expect("valid form (i) parameters")
}

pub fn random_form_ii<R: Rng>(rng: &mut R, spec: FieldSpec, max_degree: u32, max_terms: usize) -> CanonicalForm {
    let xi = random_nonzero_poly(rng, spec, 2, max_degree, max_terms);
    let eta = random_poly(rng, spec, 3, max_degree, max_terms);
    CanonicalForm::form_ii(&xi, &eta).expect("valid form (ii) parameters")
}

pub fn random_form_iii<R: Rng>(rng: &mut R, spec: FieldSpec, max_degree: u32, max_terms: usize) -> CanonicalForm {
    let alpha = random_nonzero_poly(rng, spec, 1, max_degree, max_terms);
    let beta = random_nonzero_poly(rng, spec, 2, max_degree, max_terms);
    let gamma = random_poly(rng, spec, 4, max_degree, max_terms);
    CanonicalForm::form_iii(&alpha, &beta, &gamma).expect("valid form (iii) parameters")
}

/// A random triangular automorphism with its inverse.
pub fn random_triangular<R: Rng>(
    rng: &mut R,
    spec: FieldSpec,
    max_degree: u32,
    max_terms: usize,
) -> Conjugator {
    let images: [Polynomial; NVARS] = std::array::from_fn(|i| {
        let lambda = random_nonzero_element(rng, spec);
        let phi = if i == 0 {
            Polynomial::constant(random_element(rng, spec))
        } else {
            random_poly(rng, spec, i, max_degree, max_terms)
        };
        Polynomial::var(spec, i).scale(lambda).unwrap().add(&phi).unwrap()
    });
    let map = PolyMap::new(images).expect("single field");
    Conjugator::triangular(map).expect("triangular maps are invertible")
}
