use proptest::prelude::*;

use trinv::algebra::{FieldSpec, Monomial, Polynomial, NVARS};
use trinv::autmap::{Conjugator, PolyMap};
use trinv::canon::{classify, decompose_even, CanonicalForm, FormIii};
use trinv::census::random;

fn fields() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![Just(FieldSpec::gf2()), Just(FieldSpec::gf4()), Just(FieldSpec::new(3, 0b1011).unwrap())]
}

fn poly_in(spec: FieldSpec, nvars: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::array::uniform4(0..=max_exp), 1..spec.order()), 0..=max_terms).prop_map(
        move |terms| {
            let terms: Vec<_> = terms
                .into_iter()
                .map(|(mut e, c)| {
                    for slot in e.iter_mut().skip(nvars) {
                        *slot = 0;
                    }
                    (Monomial::new(e), spec.element(c))
                })
                .collect();
            Polynomial::from_terms(spec, terms).unwrap()
        },
    )
}

fn three_polys() -> impl Strategy<Value = (Polynomial, Polynomial, Polynomial)> {
    fields().prop_flat_map(|f| (poly_in(f, 4, 3, 5), poly_in(f, 4, 3, 5), poly_in(f, 4, 3, 5)))
}

fn images(spec: FieldSpec) -> impl Strategy<Value = [Polynomial; NVARS]> {
    prop::array::uniform4(poly_in(spec, 4, 2, 3))
}

fn seeded() -> impl Strategy<Value = (FieldSpec, u64)> {
    (prop_oneof![Just(FieldSpec::gf2()), Just(FieldSpec::gf4())], any::<u64>())
}

fn rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws((p, q, r) in three_polys()) {
        prop_assert_eq!(p.add(&q).unwrap(), q.add(&p).unwrap());
        prop_assert_eq!(p.mul(&q).unwrap(), q.mul(&p).unwrap());
        prop_assert_eq!(p.add(&q).unwrap().add(&r).unwrap(), p.add(&q.add(&r).unwrap()).unwrap());
        prop_assert_eq!(p.mul(&q).unwrap().mul(&r).unwrap(), p.mul(&q.mul(&r).unwrap()).unwrap());
        prop_assert_eq!(
            p.mul(&q.add(&r).unwrap()).unwrap(),
            p.mul(&q).unwrap().add(&p.mul(&r).unwrap()).unwrap()
        );
        prop_assert!(p.add(&p).unwrap().is_zero());
        let pq = p.add(&q).unwrap();
        prop_assert_eq!(pq.mul(&pq).unwrap(), p.square().unwrap().add(&q.square().unwrap()).unwrap());
        prop_assert_eq!(p.square().unwrap(), p.mul(&p).unwrap());
    }

    #[test]
    fn substitution_is_a_homomorphism(
        ((p, q, _), im) in fields().prop_flat_map(|f| ((poly_in(f, 4, 2, 4), poly_in(f, 4, 2, 4), Just(())), images(f)))
    ) {
        let sp = p.substitute(&im).unwrap();
        let sq = q.substitute(&im).unwrap();
        prop_assert_eq!(p.add(&q).unwrap().substitute(&im).unwrap(), sp.add(&sq).unwrap());
        prop_assert_eq!(p.mul(&q).unwrap().substitute(&im).unwrap(), sp.mul(&sq).unwrap());
    }

    #[test]
    fn coeffs_in_round_trip((p, _, _) in three_polys(), var in 0usize..4) {
        let coeffs = p.coeffs_in(var);
        for c in &coeffs {
            prop_assert_eq!(c.degree_in(var).finite().unwrap_or(0), 0);
        }
        prop_assert_eq!(Polynomial::from_coeffs_in(p.spec(), &coeffs, var).unwrap(), p);
    }

    #[test]
    fn exact_division_round_trip((p, q, _) in three_polys()) {
        prop_assume!(!q.is_zero());
        let pq = p.mul(&q).unwrap();
        prop_assert_eq!(pq.exact_div(&q).unwrap(), p);
    }

    #[test]
    fn composition_laws(
        (a, b, c) in fields().prop_flat_map(|f| (images(f), images(f), images(f))),
        (p, _, _) in three_polys(),
    ) {
        let spec = a[0].spec();
        let (sa, sb, sc) = (PolyMap::new(a).unwrap(), PolyMap::new(b).unwrap(), PolyMap::new(c).unwrap());
        let id = PolyMap::identity(spec);
        prop_assert_eq!(id.compose(&sa).unwrap(), sa.clone());
        prop_assert_eq!(sa.compose(&id).unwrap(), sa.clone());
        prop_assert_eq!(
            sa.compose(&sb).unwrap().compose(&sc).unwrap(),
            sa.compose(&sb.compose(&sc).unwrap()).unwrap()
        );
        if p.spec() == spec {
            prop_assert_eq!(
                sa.compose(&sb).unwrap().apply(&p).unwrap(),
                sa.apply(&sb.apply(&p).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn triangular_inverse_both_orders((spec, seed) in seeded()) {
        let phi = random::random_triangular(&mut rng(seed), spec, 3, 4);
        let inv = phi.map().invert_triangular().unwrap();
        prop_assert!(phi.map().compose(&inv).unwrap().is_identity());
        prop_assert!(inv.compose(phi.map()).unwrap().is_identity());
    }

    #[test]
    fn conjugation_preserves_involutions((spec, seed) in seeded()) {
        let mut r = rng(seed);
        let t = random::random_canonical_form(&mut r, spec, 2, 3).to_map().unwrap();
        let phi = random::random_triangular(&mut r, spec, 2, 3);
        let tau = phi.conjugate(&t).unwrap();
        prop_assert!(tau.is_involution().unwrap());
        let parts = tau.triangular_parts().unwrap();
        prop_assert!(parts.is_unitriangular());
    }

    #[test]
    fn decompose_even_round_trip((spec, seed) in seeded()) {
        let mut r = rng(seed);
        let xi = random::random_nonzero_poly(&mut r, spec, 2, 2, 3);
        let eta = random::random_poly(&mut r, spec, 3, 3, 4);
        let z = Polynomial::var(spec, 2);
        let slot = z.square().unwrap().add(&xi.mul(&z).unwrap()).unwrap();
        let sub = [Polynomial::var(spec, 0), Polynomial::var(spec, 1), slot.clone(), Polynomial::var(spec, 3)];
        let f = eta.substitute(&sub).unwrap();
        let back = decompose_even(&f, 2, &xi).unwrap();
        prop_assert_eq!(back.substitute(&sub).unwrap(), f.clone());
        // z is never invariant, so adding it must break the decomposition
        prop_assert!(decompose_even(&f.add(&z).unwrap(), 2, &xi).is_err());
    }

    #[test]
    fn decompose_fixed_round_trip((spec, seed) in seeded()) {
        let mut r = rng(seed);
        let CanonicalForm::III(form) = random::random_form_iii(&mut r, spec, 2, 3) else { unreachable!() };
        let target = form.evaluate(form.gamma()).unwrap();
        let base = FormIii::new(form.alpha(), form.beta(), &Polynomial::zero(spec)).unwrap();
        let d = base.decompose_fixed(&target).unwrap();
        prop_assert_eq!(base.evaluate(&d.gamma).unwrap(), target);
    }

    #[test]
    fn classify_reconstructs((spec, seed) in seeded()) {
        let mut r = rng(seed);
        let t = random::random_canonical_form(&mut r, spec, 2, 3).to_map().unwrap();
        let phi = random::random_triangular(&mut r, spec, 1, 3);
        let tau = phi.conjugate(&t).unwrap();
        let c = classify(&tau).unwrap();
        prop_assert_eq!(c.reconstruct().unwrap(), tau);
        let inv: &PolyMap = c.conjugator.inverse();
        prop_assert!(c.conjugator.map().compose(inv).unwrap().is_identity());
    }

    #[test]
    fn field_group_order(m in 1u32..=8, bits in any::<u32>()) {
        let moduli = [0b11, 0b111, 0b1011, 0b10011, 0b100101, 0b1000011, 0b10000011, 0x11b];
        let f = FieldSpec::new(m, moduli[m as usize - 1]).unwrap();
        let e = f.element(bits);
        if !e.is_zero() {
            prop_assert!(e.pow((f.order() - 1) as u64).is_one());
        }
        prop_assert!(e.add(&e).unwrap().is_zero());
    }
}

#[test]
fn conjugator_pair_survives_chaining() {
    let spec = FieldSpec::gf4();
    let mut r = rng(7);
    let a = random::random_triangular(&mut r, spec, 2, 3);
    let b = Conjugator::swap(spec, 1, 2);
    let c = a.then(&b).unwrap();
    assert!(c.map().compose(c.inverse()).unwrap().is_identity());
    assert!(c.inverse().compose(c.map()).unwrap().is_identity());
}
