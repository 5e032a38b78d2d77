use std::fmt;

use crate::bitpoly::Gf2Poly;
use crate::bivariate::UniPoly;
use crate::field::Gf2;

use super::ralg;

/// `a + b rho` in `GF(2)[x][rho] / (rho^2 + x rho + 1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExtElement {
    pub a: Gf2Poly,
    pub b: Gf2Poly,
}

impl QuadExtElement {
    pub fn new(a: Gf2Poly, b: Gf2Poly) -> Self {
        QuadExtElement { a, b }
    }

    pub fn one() -> Self {
        QuadExtElement::new(Gf2Poly::one(), Gf2Poly::zero())
    }

    pub fn rho() -> Self {
        QuadExtElement::new(Gf2Poly::zero(), Gf2Poly::one())
    }

    /// `rho^-1 = rho + x`.
    pub fn rho_inv() -> Self {
        QuadExtElement::new(Gf2Poly::monomial(1), Gf2Poly::one())
    }

    pub fn add(&self, other: &Self) -> Self {
        QuadExtElement::new(self.a.add(&other.a), self.b.add(&other.b))
    }

    /// Uses `rho^2 = x rho + 1`.
    pub fn mul(&self, other: &Self) -> Self {
        let bd = self.b.mul(&other.b);
        let a = self.a.mul(&other.a).add(&bd);
        let mut b = self.a.mul(&other.b).add(&self.b.mul(&other.a));
        b.add_assign(&bd.shl(1));
        QuadExtElement::new(a, b)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = QuadExtElement::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn a_poly(&self) -> UniPoly<Gf2> {
        self.a.to_unipoly()
    }

    pub fn b_poly(&self) -> UniPoly<Gf2> {
        self.b.to_unipoly()
    }
}

impl fmt::Debug for QuadExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})rho", self.a, self.b)
    }
}

/// `(1 + rho) rho^k + (1 + rho^-1) rho^-k`.
pub fn eta(k: u64) -> QuadExtElement {
    let one = QuadExtElement::one();
    let left = one.add(&QuadExtElement::rho()).mul(&QuadExtElement::rho().pow(k));
    let right = one
        .add(&QuadExtElement::rho_inv())
        .mul(&QuadExtElement::rho_inv().pow(k));
    left.add(&right)
}

/// Checks that `eta(k)` has no `rho` component and equals `x f^(2k-1)(x, 1)`,
/// a polynomial divisible by `x` of degree `k + 1`.
pub fn quad_ext_identity(k: u64) -> bool {
    if k < 1 {
        return false;
    }
    let e = eta(k);
    let Ok(v) = ralg(2 * k as usize) else { return false };
    let Ok(c) = v.f.dehomogenize() else { return false };
    e.b.is_zero() && e.a == c.shl(1) && !e.a.bit(0) && e.a.degree() == Some(k as usize + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rho_inverse() {
        assert_eq!(QuadExtElement::rho().mul(&QuadExtElement::rho_inv()), QuadExtElement::one());
        let r2 = QuadExtElement::rho().pow(2);
        assert_eq!(r2, QuadExtElement::new(Gf2Poly::one(), Gf2Poly::monomial(1)));
    }

    #[test]
    fn eta_small() {
        // x + x^2
        assert_eq!(eta(1), QuadExtElement::new(Gf2Poly::from_exponents(&[1, 2]), Gf2Poly::zero()));
        // x (x^2 + x + 1)
        assert_eq!(eta(2), QuadExtElement::new(Gf2Poly::from_exponents(&[1, 2, 3]), Gf2Poly::zero()));
        for k in 1..=40 {
            assert!(quad_ext_identity(k), "k = {k}");
        }
        assert!(!quad_ext_identity(0));
    }
}
