//! Canonical forms (i), (ii), (iii) of triangular involutions, the
//! normalization by conjugation, fixed-ring decompositions and the classifier.

mod classify;
mod decompose;
mod forms;
mod normalize;

pub use classify::{classify, Classification};
pub use decompose::{decompose_even, decompose_fixed_iii, FixedDecomposition};
pub use forms::{make_form_i, make_form_ii, make_form_iii, CanonicalForm, FormIii};
pub use normalize::{normalize, require_triangular_involution, Condition, Normalization};

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::autmap::MapError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Map(MapError),
    #[error("map is not an involution")]
    NotInvolution,
    #[error("xi must be nonzero")]
    ZeroXi,
    #[error("parameter does not lie in {expected}")]
    WrongSubring { expected: &'static str },
    #[error("polynomial is not fixed by the translation")]
    NotInvariant,
    #[error("polynomial is not in the fixed ring: {reason}")]
    NotInFixedRing { reason: String },
    /// A decomposition failed on a verified triangular involution.
    #[error("internal invariant violation: {0}")]
    InternalInvariantViolation(String),
}

impl From<MapError> for CanonError {
    fn from(e: MapError) -> Self {
        match e {
            MapError::Algebra(a) => CanonError::Algebra(a),
            other => CanonError::Map(other),
        }
    }
}
