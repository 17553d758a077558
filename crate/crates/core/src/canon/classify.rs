use crate::algebra::{Y, Z};
use crate::autmap::{Conjugator, PolyMap};

use super::decompose::decompose_even;
use super::forms::{CanonicalForm, FormIii};
use super::normalize::{normalize, Condition};
use super::CanonError;

/// `tau = conjugator ∘ canonical ∘ conjugator^{-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub conjugator: Conjugator,
    pub canonical: CanonicalForm,
    pub condition: Condition,
}

impl Classification {
    /// `conjugator ∘ T ∘ conjugator^{-1}` for the canonical map `T`.
    pub fn reconstruct(&self) -> Result<PolyMap, CanonError> {
        Ok(self.conjugator.conjugate(&self.canonical.to_map()?)?)
    }
}

fn invariant_violation(what: &str, err: CanonError) -> CanonError {
    match err {
        CanonError::InternalInvariantViolation(_) => err,
        other => CanonError::InternalInvariantViolation(format!("{what}: {other}")),
    }
}

/// Conjugates a triangular involution to one of the three canonical forms.
///
/// The reconstruction `conjugator ∘ T ∘ conjugator^{-1} == tau` is checked
/// before returning.
pub fn classify(tau: &PolyMap) -> Result<Classification, CanonError> {
    let norm = normalize(tau)?;
    let [_, phi2, phi3, phi4] = &norm.parts.phis;
    let canonical = match norm.condition {
        Condition::One => CanonicalForm::form_i(phi4),
        Condition::Two => decompose_even(phi4, Z, phi3)
            .map_err(|e| invariant_violation("phi4' is not in k[x, y, z^2 + phi3' z]", e))
            .and_then(|eta| CanonicalForm::form_ii(phi3, &eta)),
        Condition::Three => {
            let beta = decompose_even(phi3, Y, phi2)
                .map_err(|e| invariant_violation("phi3' is not in k[x, y^2 + phi2' y]", e))?;
            let base = FormIii::new(phi2, &beta, &crate::algebra::Polynomial::zero(tau.spec()))?;
            let gamma = base
                .decompose_fixed(phi4)
                .map_err(|e| invariant_violation("phi4' is not in k[f1, f2, f3, f4]", e))?
                .gamma;
            CanonicalForm::form_iii(phi2, &beta, &gamma)
        }
    }?;
    let classification = Classification {
        conjugator: norm.conjugator,
        canonical,
        condition: norm.condition,
    };
    if classification.reconstruct()? != *tau {
        return Err(CanonError::InternalInvariantViolation(
            "reconstruction differs from the input".into(),
        ));
    }
    Ok(classification)
}
