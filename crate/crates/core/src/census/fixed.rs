//! Brute-force fixed spaces: the kernel of `T - id` on polynomials of
//! bounded total degree in k[x, y, z], over GF(2).

use std::collections::HashMap;

use crate::algebra::{Monomial, Polynomial};
use crate::autmap::PolyMap;

use super::linalg::BitMatrix;
use super::{monomials_up_to, CensusError};

/// Basis of `{f in k[x, y, z] : deg f <= max_degree, T(f) = f}`, in reduced
/// echelon form with respect to the monomial order of [`monomials_up_to`].
///
/// `T - id` is taken as a map from the degree-bounded space into whatever
/// monomials its images reach, so `T` need not preserve the degree bound.
pub fn fixed_space_basis(t: &PolyMap, max_degree: u32) -> Result<Vec<Polynomial>, CensusError> {
    let spec = t.spec();
    if !spec.is_prime_field() {
        return Err(CensusError::FieldNotPrime);
    }
    t.triangular_parts()?;
    let domain = monomials_up_to(3, max_degree);
    let mut row_of: HashMap<Monomial, usize> = HashMap::new();
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for (col, m) in domain.iter().enumerate() {
        let p = Polynomial::monomial(spec, *m);
        let moved = t.apply(&p)?.sub(&p)?;
        for image_m in moved.monomials() {
            let r = *row_of.entry(*image_m).or_insert_with(|| {
                rows.push(Vec::new());
                rows.len() - 1
            });
            rows[r].push(col);
        }
    }
    let mut matrix = BitMatrix::new(domain.len());
    for r in rows {
        matrix.push_row(r);
    }
    Ok(matrix
        .kernel()
        .into_iter()
        .map(|cols| {
            let terms = cols.into_iter().map(|c| (domain[c], spec.one()));
            Polynomial::from_terms(spec, terms.collect::<Vec<_>>()).expect("single field")
        })
        .collect())
}

/// Whether `p` (over GF(2)) lies in the GF(2)-span of `basis`.
pub fn span_contains(basis: &[Polynomial], p: &Polynomial) -> bool {
    let mut index: HashMap<Monomial, usize> = HashMap::new();
    for q in basis.iter().chain(std::iter::once(p)) {
        for m in q.monomials() {
            let next = index.len();
            index.entry(*m).or_insert(next);
        }
    }
    let rank_of = |polys: &[&Polynomial]| {
        let mut matrix = BitMatrix::new(index.len());
        for q in polys {
            matrix.push_row(q.monomials().map(|m| index[m]));
        }
        matrix.rank()
    };
    let base: Vec<&Polynomial> = basis.iter().collect();
    let mut extended = base.clone();
    extended.push(p);
    rank_of(&base) == rank_of(&extended)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FieldSpec, X, Y, Z};
    use crate::canon::make_form_iii;

    fn v(i: usize) -> Polynomial {
        Polynomial::var(FieldSpec::gf2(), i)
    }

    #[test]
    fn unit_form_iii_degree_one() {
        let one = Polynomial::one(FieldSpec::gf2());
        let (t, _) = make_form_iii(&one, &one, &Polynomial::zero(FieldSpec::gf2())).unwrap();
        let basis = fixed_space_basis(&t, 1).unwrap();
        assert_eq!(basis.len(), 3);
        assert!(basis.contains(&one));
        assert!(basis.contains(&v(X)));
        assert!(basis.contains(&v(Y).add(&v(Z)).unwrap()));
    }

    #[test]
    fn identity_fixes_everything() {
        let t = PolyMap::identity(FieldSpec::gf2());
        assert_eq!(fixed_space_basis(&t, 1).unwrap().len(), 4);
        assert_eq!(fixed_space_basis(&t, 5).unwrap().len(), 56);
    }

    #[test]
    fn rejects_extension_fields_and_non_triangular_maps() {
        let t = PolyMap::identity(FieldSpec::gf4());
        assert_eq!(fixed_space_basis(&t, 1), Err(CensusError::FieldNotPrime));
        let swap = PolyMap::swap(FieldSpec::gf2(), X, Y);
        assert!(matches!(fixed_space_basis(&swap, 1), Err(CensusError::Map(_))));
    }

    #[test]
    fn span_membership() {
        let basis = vec![v(X), v(Y).add(&v(Z)).unwrap()];
        assert!(span_contains(&basis, &v(X).add(&v(Y)).unwrap().add(&v(Z)).unwrap()));
        assert!(!span_contains(&basis, &v(Z)));
        assert!(span_contains(&basis, &Polynomial::zero(FieldSpec::gf2())));
    }
}
