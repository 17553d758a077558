//! Binary extension fields GF(2^m) for 1 <= m <= 16.
//!
//! An element is stored as the bit-vector of its residue modulo the
//! configured irreducible polynomial: bit `i` is the coefficient of `t^i`.

use std::fmt;

use super::AlgebraError;

/// Largest supported extension degree.
pub const MAX_DEGREE: u32 = 16;

/// The field GF(2^m) = GF(2)[t] / (modulus).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    m: u32,
    modulus: u32,
}

/// Degree of a GF(2)[t] polynomial stored as bits; `None` for zero.
fn bit_degree(p: u32) -> Option<u32> {
    if p == 0 {
        None
    } else {
        Some(31 - p.leading_zeros())
    }
}

fn bit_rem(mut a: u32, m: u32) -> u32 {
    let dm = bit_degree(m).expect("nonzero divisor");
    while let Some(da) = bit_degree(a) {
        if da < dm {
            break;
        }
        a ^= m << (da - dm);
    }
    a
}

/// Trial division by every polynomial of degree 1..=deg/2.
fn is_irreducible(modulus: u32) -> bool {
    let deg = match bit_degree(modulus) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    for divisor in 2u32..(1u32 << (deg / 2 + 1)) {
        if bit_rem(modulus, divisor) == 0 {
            return false;
        }
    }
    true
}

impl FieldSpec {
    /// Builds GF(2^m) from the bits of a degree-`m` irreducible modulus.
    pub fn new(m: u32, modulus: u32) -> Result<Self, AlgebraError> {
        if m == 0 || m > MAX_DEGREE {
            return Err(AlgebraError::UnsupportedDegree(m));
        }
        if bit_degree(modulus) != Some(m) || !is_irreducible(modulus) {
            return Err(AlgebraError::ReducibleModulus { m, modulus });
        }
        Ok(FieldSpec { m, modulus })
    }

    /// The prime field, represented as GF(2)[t] / (t + 1).
    pub const fn gf2() -> Self {
        FieldSpec { m: 1, modulus: 0b11 }
    }

    /// GF(4) = GF(2)[t] / (t^2 + t + 1).
    pub const fn gf4() -> Self {
        FieldSpec { m: 2, modulus: 0b111 }
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.m == 1
    }

    /// Number of elements, 2^m.
    pub fn order(&self) -> u32 {
        1 << self.m
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { spec: *self, bits: 0 }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { spec: *self, bits: 1 }
    }

    /// Residue class of `t`.
    pub fn generator(&self) -> FieldElement {
        self.element(0b10)
    }

    /// Reduces arbitrary bits modulo the field polynomial.
    pub fn element(&self, bits: u32) -> FieldElement {
        FieldElement {
            spec: *self,
            bits: bit_rem(bits, self.modulus),
        }
    }

    /// All elements in increasing bit order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(move |bits| FieldElement { spec: *self, bits })
    }

    pub(crate) fn add_bits(a: u32, b: u32) -> u32 {
        a ^ b
    }

    pub(crate) fn mul_bits(&self, a: u32, b: u32) -> u32 {
        let mut acc: u64 = 0;
        let mut a = a as u64;
        let mut b = b;
        while b != 0 {
            if b & 1 != 0 {
                acc ^= a;
            }
            a <<= 1;
            b >>= 1;
        }
        let dm = self.m;
        let modulus = self.modulus as u64;
        for shift in (0..=(2 * dm)).rev() {
            if shift >= dm && acc & (1 << shift) != 0 {
                acc ^= modulus << (shift - dm);
            }
        }
        acc as u32
    }

    pub(crate) fn pow_bits(&self, base: u32, mut exp: u64) -> u32 {
        let mut result = 1;
        let mut base = base;
        while exp > 0 {
            if exp & 1 == 1 {
                result = self.mul_bits(result, base);
            }
            base = self.mul_bits(base, base);
            exp >>= 1;
        }
        result
    }

    pub(crate) fn inv_bits(&self, a: u32) -> Option<u32> {
        if a == 0 {
            None
        } else {
            Some(self.pow_bits(a, (self.order() - 2) as u64))
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 1 {
            write!(f, "gf2")
        } else {
            write!(f, "gf2^{}:{:b}", self.m, self.modulus)
        }
    }
}

/// An element of a [`FieldSpec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    spec: FieldSpec,
    bits: u32,
}

impl FieldElement {
    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn is_one(&self) -> bool {
        self.bits == 1
    }

    fn check(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(AlgebraError::MixedFields)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        Ok(FieldElement {
            spec: self.spec,
            bits: FieldSpec::add_bits(self.bits, other.bits),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        Ok(FieldElement {
            spec: self.spec,
            bits: self.spec.mul_bits(self.bits, other.bits),
        })
    }

    pub fn pow(&self, exp: u64) -> Self {
        FieldElement {
            spec: self.spec,
            bits: self.spec.pow_bits(self.bits, exp),
        }
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        self.spec
            .inv_bits(self.bits)
            .map(|bits| FieldElement { spec: self.spec, bits })
            .ok_or(AlgebraError::DivisionByZero)
    }
}
