//! Sparse polynomials in k[x, y, z, w] over GF(2^m).

use std::collections::{BTreeMap, HashMap};

use super::field::{FieldElement, FieldSpec};
use super::monomial::{Degree, Monomial, NVARS};
use super::AlgebraError;

/// A sparse polynomial. Stored coefficients are never zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    spec: FieldSpec,
    // coefficient bits, reduced and nonzero
    terms: BTreeMap<Monomial, u32>,
}

impl Polynomial {
    pub fn zero(spec: FieldSpec) -> Self {
        Polynomial {
            spec,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(spec: FieldSpec) -> Self {
        Self::constant(spec.one())
    }

    pub fn constant(c: FieldElement) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn term(c: FieldElement, m: Monomial) -> Self {
        let mut p = Self::zero(c.spec());
        if !c.is_zero() {
            p.terms.insert(m, c.bits());
        }
        p
    }

    pub fn monomial(spec: FieldSpec, m: Monomial) -> Self {
        Self::term(spec.one(), m)
    }

    /// The variable at `index` (0 = x, ..., 3 = w).
    pub fn var(spec: FieldSpec, index: usize) -> Self {
        Self::monomial(spec, Monomial::var(index, 1))
    }

    /// Sums the given terms; repeated monomials are combined.
    pub fn from_terms<I>(spec: FieldSpec, terms: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (Monomial, FieldElement)>,
    {
        let mut acc: BTreeMap<Monomial, u32> = BTreeMap::new();
        for (m, c) in terms {
            if c.spec() != spec {
                return Err(AlgebraError::MixedFields);
            }
            *acc.entry(m).or_insert(0) ^= c.bits();
        }
        acc.retain(|_, c| *c != 0);
        Ok(Polynomial { spec, terms: acc })
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE) == Some(&1)
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Monomial, FieldElement)> + '_ {
        self.terms.iter().map(|(m, &c)| (*m, self.spec.element(c)))
    }

    pub fn monomials(&self) -> impl DoubleEndedIterator<Item = &Monomial> + '_ {
        self.terms.keys()
    }

    pub fn coefficient(&self, m: &Monomial) -> FieldElement {
        self.spec.element(self.terms.get(m).copied().unwrap_or(0))
    }

    /// Largest term under the w > z > y > x lexicographic order.
    pub fn leading_term(&self) -> Option<(Monomial, FieldElement)> {
        self.terms
            .iter()
            .next_back()
            .map(|(m, &c)| (*m, self.spec.element(c)))
    }

    /// The constant, if the polynomial is one.
    pub fn as_constant(&self) -> Option<FieldElement> {
        match self.terms.len() {
            0 => Some(self.spec.zero()),
            1 => self
                .terms
                .get(&Monomial::ONE)
                .map(|&c| self.spec.element(c)),
            _ => None,
        }
    }

    /// True when this is exactly the variable at `index`.
    pub fn is_var(&self, index: usize) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::var(index, 1)) == Some(&1)
    }

    /// True when every monomial avoids the variables at positions `>= nvars`.
    pub fn lives_in(&self, nvars: usize) -> bool {
        self.terms.keys().all(|m| m.lives_in(nvars))
    }

    pub fn degree_in(&self, var: usize) -> Degree {
        self.terms
            .keys()
            .map(|m| m.exponent(var))
            .max()
            .map_or(Degree::MinusInfinity, Degree::Finite)
    }

    pub fn total_degree(&self) -> Degree {
        self.terms
            .keys()
            .map(|m| m.total_degree() as u32)
            .max()
            .map_or(Degree::MinusInfinity, Degree::Finite)
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
        let (mut big, small) = if self.len() >= other.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (m, &c) in &small.terms {
            big.add_term(*m, c);
        }
        Ok(big)
    }

    /// Subtraction coincides with addition in characteristic two.
    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(other)
    }

    fn add_term(&mut self, m: Monomial, c: u32) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(m).or_insert(0);
        *slot ^= c;
        if *slot == 0 {
            self.terms.remove(&m);
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.spec));
        }
        let mut acc: HashMap<Monomial, u32> = HashMap::with_capacity(self.len() * other.len());
        for (m1, &c1) in &self.terms {
            for (m2, &c2) in &other.terms {
                let m = m1.mul(m2)?;
                *acc.entry(m).or_insert(0) ^= self.spec.mul_bits(c1, c2);
            }
        }
        let mut sorted: Vec<(Monomial, u32)> = acc.into_iter().filter(|&(_, c)| c != 0).collect();
        sorted.sort_unstable_by_key(|a| a.0);
        Ok(Polynomial {
            spec: self.spec,
            terms: sorted.into_iter().collect(),
        })
    }

    pub fn scale(&self, c: FieldElement) -> Result<Self, AlgebraError> {
        if c.spec() != self.spec {
            return Err(AlgebraError::MixedFields);
        }
        if c.is_zero() {
            return Ok(Self::zero(self.spec));
        }
        Ok(Polynomial {
            spec: self.spec,
            terms: self
                .terms
                .iter()
                .map(|(m, &v)| (*m, self.spec.mul_bits(v, c.bits())))
                .collect(),
        })
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Result<Self, AlgebraError> {
        let mut terms = BTreeMap::new();
        for (k, &c) in &self.terms {
            terms.insert(k.mul(m)?, c);
        }
        Ok(Polynomial {
            spec: self.spec,
            terms,
        })
    }

    /// Frobenius: (sum c_i m_i)^2 = sum c_i^2 m_i^2 in characteristic two.
    pub fn square(&self) -> Result<Self, AlgebraError> {
        let mut terms = BTreeMap::new();
        for (m, &c) in &self.terms {
            terms.insert(m.mul(m)?, self.spec.mul_bits(c, c));
        }
        Ok(Polynomial {
            spec: self.spec,
            terms,
        })
    }

    pub fn pow(&self, mut exp: u32) -> Result<Self, AlgebraError> {
        let mut result = Self::one(self.spec);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(&base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.square()?;
            }
        }
        Ok(result)
    }

    /// Replaces variable `i` by `images[i]`.
    ///
    /// Evaluated by nested Horner schemes from w down to x, so the images are
    /// only ever multiplied into partial results.
    pub fn substitute(&self, images: &[Polynomial; NVARS]) -> Result<Self, AlgebraError> {
        for img in images {
            self.check(img)?;
        }
        self.substitute_below(images, NVARS)
    }

    fn substitute_below(&self, images: &[Polynomial; NVARS], top: usize) -> Result<Self, AlgebraError> {
        if top == 0 || self.is_zero() {
            return Ok(self.clone());
        }
        let v = top - 1;
        if self.degree_in(v) == Degree::Finite(0) {
            return self.substitute_below(images, v);
        }
        let coeffs = self.coeffs_in(v);
        if images[v].is_var(v) {
            let mut acc = Self::zero(self.spec);
            for (i, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let part = c.substitute_below(images, v)?;
                acc = acc.add(&part.mul_monomial(&Monomial::var(v, i as u32))?)?;
            }
            return Ok(acc);
        }
        let mut acc = Self::zero(self.spec);
        for c in coeffs.iter().rev() {
            acc = acc.mul(&images[v])?;
            if !c.is_zero() {
                acc = acc.add(&c.substitute_below(images, v)?)?;
            }
        }
        Ok(acc)
    }

    /// Coefficients `(c_0, ..., c_d)` with `self = sum c_i * var^i`, each free
    /// of `var`. The zero polynomial gives an empty list.
    pub fn coeffs_in(&self, var: usize) -> Vec<Polynomial> {
        let Some(deg) = self.degree_in(var).finite() else {
            return Vec::new();
        };
        let mut out = vec![Self::zero(self.spec); deg as usize + 1];
        for (m, &c) in &self.terms {
            out[m.exponent(var) as usize]
                .terms
                .insert(m.with_exponent(var, 0), c);
        }
        out
    }

    /// Inverse of [`Polynomial::coeffs_in`].
    pub fn from_coeffs_in(spec: FieldSpec, coeffs: &[Polynomial], var: usize) -> Result<Self, AlgebraError> {
        let mut acc = Self::zero(spec);
        for (i, c) in coeffs.iter().enumerate() {
            acc = acc.add(&c.mul_monomial(&Monomial::var(var, i as u32))?)?;
        }
        Ok(acc)
    }

    /// Exact quotient `self / q`.
    ///
    /// Division by leading terms in the lex order: if `q` divides `self` then
    /// the leading monomial of `q` divides the leading monomial of every
    /// intermediate remainder, so any failure proves non-divisibility.
    pub fn exact_div(&self, q: &Polynomial) -> Result<Self, AlgebraError> {
        self.check(q)?;
        let (lq_m, lq_c) = q.leading_term().ok_or(AlgebraError::DivisionByZero)?;
        let lq_inv = lq_c.inv()?;
        let mut rem = self.clone();
        let mut quotient = Self::zero(self.spec);
        while let Some((lm, lc)) = rem.leading_term() {
            let m = lm.div(&lq_m).ok_or(AlgebraError::NotDivisible)?;
            let c = lc.mul(&lq_inv)?;
            let step = Self::term(c, m);
            rem = rem.sub(&q.mul(&step)?)?;
            quotient.add_term(m, c.bits());
        }
        Ok(quotient)
    }
}
