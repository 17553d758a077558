//! Pointwise involution test, independent of symbolic composition.
//!
//! A polynomial whose degree in every variable is below `|S|` and which
//! vanishes on the grid `S^4` is zero. So `sigma(sigma(p)) = p` on a large
//! enough grid of points of an extension field decides `sigma^2 = id`.

use crate::algebra::{FieldSpec, Polynomial, NVARS};
use crate::autmap::PolyMap;

use super::CensusError;

fn eval(field: &FieldSpec, p: &Polynomial, point: &[u32; NVARS]) -> u32 {
    let mut acc = 0;
    for (m, c) in p.terms() {
        // coefficients lie in GF(2) ⊂ field
        debug_assert!(c.bits() <= 1);
        let mut v = c.bits();
        for (i, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                v = field.mul_bits(v, field.pow_bits(point[i], e as u64));
            }
        }
        acc ^= v;
    }
    acc
}

/// Decides `sigma ∘ sigma = id` for a map over GF(2) by evaluation.
pub fn pointwise_is_involution(sigma: &PolyMap) -> Result<bool, CensusError> {
    if !sigma.spec().is_prime_field() {
        return Err(CensusError::FieldNotPrime);
    }
    let max_deg = sigma
        .images()
        .iter()
        .filter_map(|p| p.total_degree().finite())
        .max()
        .unwrap_or(0)
        .max(1) as u64;
    // deg(sigma(sigma(x_i)) - x_i) <= max_deg^2 in each variable
    let grid = max_deg * max_deg + 1;
    let field = if grid <= 256 {
        FieldSpec::new(8, 0x11b)
    } else if grid <= 1 << 16 {
        FieldSpec::new(16, 0x1002b)
    } else {
        return Err(CensusError::DegreeTooLarge(max_deg));
    }
    .expect("fixed irreducible moduli");
    let grid = grid as u32;

    let mut point = [0u32; NVARS];
    loop {
        let once: [u32; NVARS] = std::array::from_fn(|i| eval(&field, sigma.image(i), &point));
        for (i, &coordinate) in point.iter().enumerate() {
            if eval(&field, sigma.image(i), &once) != coordinate {
                return Ok(false);
            }
        }
        // next grid point
        let mut i = 0;
        loop {
            if i == NVARS {
                return Ok(true);
            }
            point[i] += 1;
            if point[i] < grid {
                break;
            }
            point[i] = 0;
            i += 1;
        }
    }
}
