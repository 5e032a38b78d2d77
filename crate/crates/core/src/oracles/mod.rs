//! Reference implementations used to cross-check the generator construction.
//!
//! None of these share code with [`crate::vop`] beyond field arithmetic and
//! univariate polynomials.

mod bm;
mod brute;
mod dai;

pub use bm::{berlekamp_massey, connection_matches, BMResult};
pub use brute::{
    brute_force_min_poly, brute_force_min_poly_bounded, is_characteristic, BruteForce,
    DEFAULT_LENGTH_BOUND,
};
pub use dai::{dai_ea, EAResult};

use crate::bivariate::UniPoly;
use crate::field::Field;

/// `x^|c| c(1/x)`, made monic. The zero polynomial maps to itself.
pub fn reciprocal<F: Field>(c: &UniPoly<F>) -> UniPoly<F> {
    let mut cs = c.coeffs().to_vec();
    cs.reverse();
    UniPoly::new(c.field().clone(), cs).monic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Gf2, Rationals};

    #[test]
    fn reciprocal_examples() {
        let c = UniPoly::from_i64s(Rationals, &[-1, 1, 0, 0, 0, 1]);
        assert_eq!(reciprocal(&c).to_string(), "x^5-x^4-1");
        let c = UniPoly::from_i64s(Gf2, &[1, 1]);
        assert_eq!(reciprocal(&c), c);
        let c = UniPoly::monomial(Gf2, 3);
        assert_eq!(reciprocal(&c), UniPoly::one(Gf2));
    }

    #[test]
    fn reciprocal_is_an_involution_on_unit_constant_term() {
        let c = UniPoly::from_i64s(Rationals, &[3, 0, -2, 1]).monic();
        assert_eq!(reciprocal(&reciprocal(&c)), c);
    }
}
