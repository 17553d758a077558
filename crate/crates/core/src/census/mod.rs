//! Exhaustive verification over GF(2) and randomized spot checks.
//!
//! Every triangular map within [`DegreeBounds`] is built, tested for
//! `sigma^2 = id` both symbolically and by the pointwise oracle, and handed to
//! the classifier. The classifier must succeed exactly on the involutions.

mod fixed;
mod linalg;
mod oracle;
pub mod random;

pub use fixed::{fixed_space_basis, span_contains};
pub use linalg::BitMatrix;
pub use oracle::pointwise_is_involution;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{AlgebraError, FieldSpec, Monomial, Polynomial, NVARS};
use crate::autmap::{MapError, PolyMap};
use crate::canon::{classify, CanonError, Condition};

/// Budget used when none is configured.
pub const DEFAULT_BUDGET: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("census of {cardinality} maps exceeds the budget of {budget}")]
    BudgetExceeded { cardinality: String, budget: u64 },
    #[error("brute-force oracle requires the prime field GF(2)")]
    FieldNotPrime,
    #[error("degree {0} too large for the pointwise oracle")]
    DegreeTooLarge(u64),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Canon(#[from] CanonError),
}

/// Monomials in the first `nvars` variables of total degree `<= max_degree`,
/// by increasing total degree, then by the lex order.
pub fn monomials_up_to(nvars: usize, max_degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    fn rec(out: &mut Vec<Monomial>, exps: &mut [u32; NVARS], var: usize, nvars: usize, left: u32) {
        if var == nvars {
            out.push(Monomial::new(*exps));
            return;
        }
        for e in 0..=left {
            exps[var] = e;
            rec(out, exps, var + 1, nvars, left - e);
        }
        exps[var] = 0;
    }
    rec(&mut out, &mut [0; NVARS], 0, nvars, max_degree);
    out.sort_by(|a, b| a.total_degree().cmp(&b.total_degree()).then(a.cmp(b)));
    out
}

/// Degree bounds for `phi2 in k[x]`, `phi3 in k[x, y]`, `phi4 in k[x, y, z]`.
/// `None` forces the part to zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeBounds {
    /// `phi1` ranges over GF(2) when set, else `phi1 = 0`.
    pub phi1_free: bool,
    pub phi2: Option<u32>,
    pub phi3: Option<u32>,
    pub phi4: Option<u32>,
}

impl DegreeBounds {
    pub fn new(phi1_free: bool, phi2: Option<u32>, phi3: Option<u32>, phi4: Option<u32>) -> Self {
        DegreeBounds {
            phi1_free,
            phi2,
            phi3,
            phi4,
        }
    }

    fn monomials(bound: Option<u32>, nvars: usize) -> Vec<Monomial> {
        bound.map_or_else(Vec::new, |d| monomials_up_to(nvars, d))
    }

    /// Monomial lists for phi2, phi3, phi4.
    pub fn supports(&self) -> [Vec<Monomial>; 3] {
        [
            Self::monomials(self.phi2, 1),
            Self::monomials(self.phi3, 2),
            Self::monomials(self.phi4, 3),
        ]
    }

    /// Number of triangular maps over GF(2) within the bounds (all scalars
    /// are 1 over GF(2)); `None` if it does not fit in 128 bits.
    pub fn cardinality(&self) -> Option<u128> {
        let bits: usize = self.supports().iter().map(Vec::len).sum::<usize>() + self.phi1_free as usize;
        1u128.checked_shl(bits as u32)
    }

    fn check_budget(&self, budget: u64) -> Result<u64, CensusError> {
        match self.cardinality() {
            Some(n) if n <= budget as u128 => Ok(n as u64),
            n => Err(CensusError::BudgetExceeded {
                cardinality: n.map_or_else(|| ">2^127".into(), |n| n.to_string()),
                budget,
            }),
        }
    }

    /// The map with the given enumeration index. Bits are consumed as
    /// `phi4` mask (lowest), `phi3`, `phi2`, then `phi1` (highest), so the
    /// order is lexicographic in `(phi1, phi2, phi3, phi4)`.
    pub fn map_at(&self, mut index: u64) -> PolyMap {
        let spec = FieldSpec::gf2();
        let [s2, s3, s4] = self.supports();
        let mut take = |support: &[Monomial]| {
            let mask = index & ((1u64 << support.len()) - 1);
            index >>= support.len();
            let terms = support
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, m)| (*m, spec.one()));
            Polynomial::from_terms(spec, terms.collect::<Vec<_>>()).expect("gf2")
        };
        let phi4 = take(&s4);
        let phi3 = take(&s3);
        let phi2 = take(&s2);
        let phi1 = if self.phi1_free {
            Polynomial::constant(spec.element((index & 1) as u32))
        } else {
            Polynomial::zero(spec)
        };
        let phis = [phi1, phi2, phi3, phi4];
        let images: [Polynomial; NVARS] =
            std::array::from_fn(|i| Polynomial::var(spec, i).add(&phis[i]).expect("gf2"));
        PolyMap::new(images).expect("gf2")
    }
}

/// All triangular maps within the bounds, in enumeration order.
pub fn enumerate_maps(bounds: DegreeBounds, budget: u64) -> Result<impl Iterator<Item = PolyMap>, CensusError> {
    let n = bounds.check_budget(budget)?;
    Ok((0..n).map(move |i| bounds.map_at(i)))
}

/// The involutions among [`enumerate_maps`].
pub fn enumerate_involutions(
    bounds: DegreeBounds,
    budget: u64,
) -> Result<impl Iterator<Item = PolyMap>, CensusError> {
    Ok(enumerate_maps(bounds, budget)?.filter(|m| m.is_involution().expect("gf2 maps compose")))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusFailure {
    pub index: u64,
    pub map: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CensusReport {
    pub total_maps: u64,
    pub involutions: u64,
    /// Non-involutions on which the classifier correctly refused.
    pub rejected: u64,
    /// Counts for conditions 1, 2, 3.
    pub per_condition: [u64; 3],
    /// Involutions whose scalars were checked to be all 1.
    pub unitriangular: u64,
    pub failures: Vec<CensusFailure>,
}

impl CensusReport {
    /// Associative and order-independent; failures are kept sorted by index.
    pub fn merge(mut self, other: CensusReport) -> CensusReport {
        self.total_maps += other.total_maps;
        self.involutions += other.involutions;
        self.rejected += other.rejected;
        self.unitriangular += other.unitriangular;
        for i in 0..3 {
            self.per_condition[i] += other.per_condition[i];
        }
        self.failures.extend(other.failures);
        self.failures.sort_by_key(|f| f.index);
        self
    }

    pub fn is_success(&self) -> bool {
        self.failures.is_empty() && self.involutions == self.per_condition.iter().sum::<u64>()
    }

    fn fail(index: u64, map: &PolyMap, reason: impl Into<String>) -> CensusReport {
        CensusReport {
            total_maps: 1,
            failures: vec![CensusFailure {
                index,
                map: map.to_string(),
                reason: reason.into(),
            }],
            ..Default::default()
        }
    }

    fn tally(condition: Condition) -> [u64; 3] {
        let mut counts = [0; 3];
        counts[condition.number() as usize - 1] = 1;
        counts
    }
}

fn census_one(index: u64, map: &PolyMap) -> CensusReport {
    let symbolic = match map.is_involution() {
        Ok(b) => b,
        Err(e) => return CensusReport::fail(index, map, format!("composition failed: {e}")),
    };
    match pointwise_is_involution(map) {
        Ok(b) if b == symbolic => {}
        Ok(b) => {
            return CensusReport::fail(
                index,
                map,
                format!("symbolic involution test says {symbolic}, pointwise oracle says {b}"),
            )
        }
        Err(e) => return CensusReport::fail(index, map, format!("oracle failed: {e}")),
    }
    let outcome = classify(map);
    match (symbolic, outcome) {
        (true, Ok(c)) => {
            let unit = map.triangular_parts().is_ok_and(|p| p.is_unitriangular());
            if !unit {
                return CensusReport::fail(index, map, "involution with a scalar different from 1");
            }
            match c.reconstruct() {
                Ok(r) if r == *map => CensusReport {
                    total_maps: 1,
                    involutions: 1,
                    unitriangular: 1,
                    per_condition: CensusReport::tally(c.condition),
                    ..Default::default()
                },
                _ => CensusReport::fail(index, map, "reconstruction mismatch"),
            }
        }
        (true, Err(e)) => CensusReport::fail(index, map, format!("classifier failed on an involution: {e}")),
        (false, Err(CanonError::NotInvolution)) => CensusReport {
            total_maps: 1,
            rejected: 1,
            ..Default::default()
        },
        (false, Err(e)) => CensusReport::fail(index, map, format!("unexpected rejection: {e}")),
        (false, Ok(_)) => CensusReport::fail(index, map, "classified a non-involution"),
    }
}

/// Classifies every map within the bounds and cross-checks the involution
/// filter, the pointwise oracle and the classifier against each other.
pub fn census_classify(bounds: DegreeBounds, budget: u64) -> Result<CensusReport, CensusError> {
    let n = bounds.check_budget(budget)?;
    Ok((0..n)
        .into_par_iter()
        .map(|i| census_one(i, &bounds.map_at(i)))
        .reduce(CensusReport::default, CensusReport::merge))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpotCheck {
    pub samples: u64,
    pub seed: u64,
    pub max_degree: u32,
    pub max_terms: usize,
    /// Degree of the random triangular conjugators.
    pub conjugator_degree: u32,
}

impl Default for SpotCheck {
    fn default() -> Self {
        SpotCheck {
            samples: 100,
            seed: 0,
            max_degree: 2,
            max_terms: 3,
            conjugator_degree: 1,
        }
    }
}

/// Randomized check over any GF(2^m): conjugate a random canonical form by a
/// random triangular automorphism, then classify and reconstruct.
pub fn spot_check(spec: FieldSpec, cfg: SpotCheck) -> CensusReport {
    (0..cfg.samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(i);
            let form = random::random_canonical_form(&mut rng, spec, cfg.max_degree, cfg.max_terms);
            let phi = random::random_triangular(&mut rng, spec, cfg.conjugator_degree, cfg.max_terms);
            let tau = form.to_map().and_then(|t| Ok(phi.conjugate(&t)?));
            let tau = match tau {
                Ok(t) => t,
                Err(e) => return CensusReport::fail(i, &PolyMap::identity(spec), format!("construction failed: {e}")),
            };
            if !tau.is_involution().unwrap_or(false) {
                return CensusReport::fail(i, &tau, "conjugated canonical map is not an involution");
            }
            match classify(&tau) {
                Ok(c) => CensusReport {
                    total_maps: 1,
                    involutions: 1,
                    unitriangular: tau.triangular_parts().is_ok_and(|p| p.is_unitriangular()) as u64,
                    per_condition: CensusReport::tally(c.condition),
                    ..Default::default()
                },
                Err(e) => CensusReport::fail(i, &tau, format!("classifier failed: {e}")),
            }
        })
        .reduce(CensusReport::default, CensusReport::merge)
}
