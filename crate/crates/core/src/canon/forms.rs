use crate::algebra::{gcd_form_iii, FieldSpec, GcdSplit, Polynomial, VarNames, W, X, Y, Z};
use crate::autmap::PolyMap;

use super::CanonError;

/// Parameters of form (iii) plus the derived gcd split and invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormIii {
    alpha: Polynomial,
    beta: Polynomial,
    gamma: Polynomial,
    split: GcdSplit,
    // beta(x, f2)
    beta_at: Polynomial,
    generators: [Polynomial; 4],
}

impl FormIii {
    /// `alpha` in k[x] \ {0}, `beta` in k[x, y] \ {0}, `gamma` in the slots
    /// g1..g4 (stored at the x..w positions).
    pub fn new(alpha: &Polynomial, beta: &Polynomial, gamma: &Polynomial) -> Result<Self, CanonError> {
        let spec = alpha.spec();
        if beta.spec() != spec || gamma.spec() != spec {
            return Err(crate::algebra::AlgebraError::MixedFields.into());
        }
        let split = gcd_form_iii(alpha, beta)?;
        let x = Polynomial::var(spec, X);
        let y = Polynomial::var(spec, Y);
        let z = Polynomial::var(spec, Z);
        let zero = Polynomial::zero(spec);

        let f2 = y.square()?.add(&alpha.mul(&y)?)?;
        let at_f2 = [x.clone(), f2.clone(), zero.clone(), zero];
        let beta_at = beta.substitute(&at_f2)?;
        let f3 = z.square()?.add(&beta_at.mul(&z)?)?;
        let b_at = split.b.substitute(&at_f2)?;
        let f4 = split.a.mul(&z)?.add(&b_at.mul(&y)?)?;

        Ok(FormIii {
            alpha: alpha.clone(),
            beta: beta.clone(),
            gamma: gamma.clone(),
            split,
            beta_at,
            generators: [x, f2, f3, f4],
        })
    }

    pub fn alpha(&self) -> &Polynomial {
        &self.alpha
    }

    pub fn beta(&self) -> &Polynomial {
        &self.beta
    }

    pub fn gamma(&self) -> &Polynomial {
        &self.gamma
    }

    pub fn d(&self) -> &Polynomial {
        &self.split.d
    }

    pub fn a(&self) -> &Polynomial {
        &self.split.a
    }

    pub fn b(&self) -> &Polynomial {
        &self.split.b
    }

    /// `[f1, f2, f3, f4]`.
    pub fn generators(&self) -> &[Polynomial; 4] {
        &self.generators
    }

    /// `gamma(f1, f2, f3, f4)`.
    pub fn evaluate(&self, slots: &Polynomial) -> Result<Polynomial, CanonError> {
        Ok(slots.substitute(&self.generators)?)
    }

    /// The map with this form's alpha and beta but gamma = 0.
    pub fn base_map(&self) -> Result<PolyMap, CanonError> {
        let spec = self.alpha.spec();
        Ok(PolyMap::new([
            Polynomial::var(spec, X),
            Polynomial::var(spec, Y).add(&self.alpha)?,
            Polynomial::var(spec, Z).add(&self.beta_at)?,
            Polynomial::var(spec, W),
        ])?)
    }

    pub fn to_map(&self) -> Result<PolyMap, CanonError> {
        let spec = self.alpha.spec();
        let shift = self.evaluate(&self.gamma)?;
        Ok(PolyMap::new([
            Polynomial::var(spec, X),
            Polynomial::var(spec, Y).add(&self.alpha)?,
            Polynomial::var(spec, Z).add(&self.beta_at)?,
            Polynomial::var(spec, W).add(&shift)?,
        ])?)
    }
}

/// One of the three canonical shapes of a triangular involution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CanonicalForm {
    /// `w ↦ w + f`.
    I { f: Polynomial },
    /// `z ↦ z + xi`, `w ↦ w + eta(x, y, z^2 + xi z)`; eta uses slots (x, y, t).
    II { xi: Polynomial, eta: Polynomial },
    /// `y ↦ y + alpha`, `z ↦ z + beta(x, f2)`, `w ↦ w + gamma(f1, f2, f3, f4)`.
    III(Box<FormIii>),
}

impl CanonicalForm {
    pub fn form_i(f: &Polynomial) -> Result<Self, CanonError> {
        if !f.lives_in(3) {
            return Err(CanonError::WrongSubring { expected: "k[x, y, z]" });
        }
        Ok(CanonicalForm::I { f: f.clone() })
    }

    pub fn form_ii(xi: &Polynomial, eta: &Polynomial) -> Result<Self, CanonError> {
        if xi.spec() != eta.spec() {
            return Err(crate::algebra::AlgebraError::MixedFields.into());
        }
        if xi.is_zero() {
            return Err(CanonError::ZeroXi);
        }
        if !xi.lives_in(2) {
            return Err(CanonError::WrongSubring { expected: "k[x, y]" });
        }
        if !eta.lives_in(3) {
            return Err(CanonError::WrongSubring { expected: "k[x, y, t]" });
        }
        Ok(CanonicalForm::II {
            xi: xi.clone(),
            eta: eta.clone(),
        })
    }

    pub fn form_iii(alpha: &Polynomial, beta: &Polynomial, gamma: &Polynomial) -> Result<Self, CanonError> {
        Ok(CanonicalForm::III(Box::new(FormIii::new(alpha, beta, gamma)?)))
    }

    pub fn spec(&self) -> FieldSpec {
        match self {
            CanonicalForm::I { f } => f.spec(),
            CanonicalForm::II { xi, .. } => xi.spec(),
            CanonicalForm::III(form) => form.alpha.spec(),
        }
    }

    /// "i", "ii" or "iii".
    pub fn tag(&self) -> &'static str {
        match self {
            CanonicalForm::I { .. } => "i",
            CanonicalForm::II { .. } => "ii",
            CanonicalForm::III(_) => "iii",
        }
    }

    pub fn to_map(&self) -> Result<PolyMap, CanonError> {
        let spec = self.spec();
        match self {
            CanonicalForm::I { f } => Ok(PolyMap::translation(spec, W, f)?),
            CanonicalForm::II { xi, eta } => {
                let z = Polynomial::var(spec, Z);
                let slot = z.square()?.add(&xi.mul(&z)?)?;
                let images = [
                    Polynomial::var(spec, X),
                    Polynomial::var(spec, Y),
                    slot,
                    Polynomial::var(spec, W),
                ];
                let shift = eta.substitute(&images)?;
                Ok(PolyMap::new([
                    Polynomial::var(spec, X),
                    Polynomial::var(spec, Y),
                    Polynomial::var(spec, Z).add(xi)?,
                    Polynomial::var(spec, W).add(&shift)?,
                ])?)
            }
            CanonicalForm::III(form) => form.to_map(),
        }
    }

    /// Named parameters rendered as text, in a fixed order.
    pub fn parameters(&self) -> Vec<(&'static str, String)> {
        match self {
            CanonicalForm::I { f } => vec![("f", f.to_string())],
            CanonicalForm::II { xi, eta } => vec![
                ("xi", xi.to_string()),
                ("eta", eta.render(&VarNames::ETA)),
            ],
            CanonicalForm::III(form) => {
                let mut out = vec![
                    ("alpha", form.alpha.to_string()),
                    ("beta", form.beta.to_string()),
                    ("gamma", form.gamma.render(&VarNames::GAMMA)),
                    ("d", form.d().to_string()),
                    ("a", form.a().to_string()),
                    ("b", form.b().to_string()),
                ];
                for (name, g) in ["f1", "f2", "f3", "f4"].into_iter().zip(&form.generators) {
                    out.push((name, g.to_string()));
                }
                out
            }
        }
    }
}

/// `T: w ↦ w + f`, other variables fixed.
pub fn make_form_i(f: &Polynomial) -> Result<PolyMap, CanonError> {
    CanonicalForm::form_i(f)?.to_map()
}

/// `T: z ↦ z + xi`, `w ↦ w + eta(x, y, z^2 + xi z)`.
pub fn make_form_ii(xi: &Polynomial, eta: &Polynomial) -> Result<PolyMap, CanonError> {
    CanonicalForm::form_ii(xi, eta)?.to_map()
}

pub fn make_form_iii(
    alpha: &Polynomial,
    beta: &Polynomial,
    gamma: &Polynomial,
) -> Result<(PolyMap, CanonicalForm), CanonError> {
    let form = CanonicalForm::form_iii(alpha, beta, gamma)?;
    Ok((form.to_map()?, form))
}
