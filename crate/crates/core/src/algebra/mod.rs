//! Exact arithmetic: GF(2^m) and sparse polynomials in k[x, y, z, w].

mod display;
mod field;
mod gcd;
mod monomial;
mod poly;

pub use display::{format_element, VarNames};
pub use field::{FieldElement, FieldSpec, MAX_DEGREE};
pub use gcd::{content_y, gcd_form_iii, gcd_x, monic, rem_x, GcdSplit};
pub use monomial::{Degree, Monomial, NVARS, W, X, Y, Z};
pub use poly::Polynomial;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("operands live over different coefficient fields")]
    MixedFields,
    #[error("polynomial is not divisible")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero input where a nonzero polynomial is required")]
    ZeroInput,
    #[error("polynomial does not lie in {expected}")]
    WrongSubring { expected: &'static str },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("unsupported extension degree {0} (expected 1..=16)")]
    UnsupportedDegree(u32),
    #[error("modulus {modulus:#b} is not an irreducible polynomial of degree {m}")]
    ReducibleModulus { m: u32, modulus: u32 },
}
