//! Canonical text rendering: terms in decreasing lex order (w > z > y > x),
//! explicit `*`, field constants as sums of powers of the generator `g`.

use std::fmt;

use super::field::FieldElement;
use super::monomial::{Monomial, NVARS};
use super::poly::Polynomial;

/// Names printed for the four variable positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VarNames(pub [&'static str; NVARS]);

impl VarNames {
    pub const STANDARD: VarNames = VarNames(["x", "y", "z", "w"]);
    /// Abstract slots of gamma in form (iii).
    pub const GAMMA: VarNames = VarNames(["g1", "g2", "g3", "g4"]);
    /// Slots of eta in form (ii): (x, y, t).
    pub const ETA: VarNames = VarNames(["x", "y", "t", "w"]);
    /// Slots of a decomposition along y: (x, t).
    pub const ETA_Y: VarNames = VarNames(["x", "t", "z", "w"]);
}

impl Default for VarNames {
    fn default() -> Self {
        VarNames::STANDARD
    }
}

/// Writes a field constant; `g` is the residue class of t.
pub fn format_element(c: &FieldElement) -> String {
    let bits = c.bits();
    if bits == 0 {
        return "0".into();
    }
    let mut parts = Vec::new();
    for i in (0..32).rev() {
        if bits & (1 << i) != 0 {
            parts.push(match i {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            });
        }
    }
    parts.join(" + ")
}

fn format_monomial(m: &Monomial, names: &VarNames) -> String {
    let mut factors = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => factors.push(names.0[i].to_string()),
            _ => factors.push(format!("{}^{}", names.0[i], e)),
        }
    }
    factors.join("*")
}

fn format_term(m: &Monomial, c: &FieldElement, names: &VarNames) -> String {
    if m.is_one() {
        return format_element(c);
    }
    let mono = format_monomial(m, names);
    if c.is_one() {
        return mono;
    }
    let coeff = format_element(c);
    if c.bits().count_ones() == 1 {
        format!("{coeff}*{mono}")
    } else {
        format!("({coeff})*{mono}")
    }
}

impl Polynomial {
    /// Canonical rendering under the given variable names.
    pub fn render(&self, names: &VarNames) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms()
            .rev()
            .map(|(m, c)| format_term(&m, &c, names))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&VarNames::STANDARD))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_element(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FieldSpec, Monomial, X, Y, Z};

    #[test]
    fn canonical_order() {
        let f = FieldSpec::gf2();
        let p = Polynomial::from_terms(
            f,
            [
                (Monomial::var(Y, 1), f.one()),
                (Monomial::new([1, 0, 1, 0]), f.one()),
                (Monomial::var(Z, 2), f.one()),
            ],
        )
        .unwrap();
        assert_eq!(p.to_string(), "z^2 + x*z + y");
        assert_eq!(Polynomial::zero(f).to_string(), "0");
        assert_eq!(Polynomial::one(f).to_string(), "1");
    }

    #[test]
    fn field_constants() {
        let f = FieldSpec::gf4();
        let g = f.generator();
        let g1 = g.add(&f.one()).unwrap();
        let p = Polynomial::from_terms(
            f,
            [
                (Monomial::var(X, 1), g),
                (Monomial::var(Y, 1), g1),
                (Monomial::ONE, g1),
            ],
        )
        .unwrap();
        assert_eq!(p.to_string(), "(g + 1)*y + g*x + g + 1");
        assert_eq!(p.render(&VarNames::GAMMA), "(g + 1)*g2 + g*g1 + g + 1");
    }
}
