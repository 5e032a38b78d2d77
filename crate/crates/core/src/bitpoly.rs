//! Bit-packed polynomials over GF(2).
//!
//! Bit `i` of [`Gf2Poly`] is the coefficient of `x^i`, 64 coefficients per
//! word. Addition is XOR, multiplication by `x` is a one-bit shift, and the
//! product is the carry-less shift-and-XOR schoolbook. [`BitForm`] reuses the
//! same layout for homogeneous forms, with bit `i` the coefficient of
//! `x^i z^(degree - i)`, so multiplying by `z` touches no bits at all.

use std::fmt;

use crate::bivariate::{Form, UniPoly};
use crate::error::{Error, Result};
use crate::field::Gf2;

const W: usize = 64;

/// A polynomial in GF(2)[x]. Trailing zero words are trimmed.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Gf2Poly {
    words: Vec<u64>,
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Gf2Poly { words: Vec::new() }
    }

    pub fn one() -> Self {
        Gf2Poly { words: vec![1] }
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut p = Gf2Poly::zero();
        p.set_bit(k, true);
        p
    }

    /// From coefficients listed by ascending degree.
    pub fn from_bits(bits: &[bool]) -> Self {
        let mut words = vec![0u64; bits.len().div_ceil(W)];
        for (i, &b) in bits.iter().enumerate() {
            if b {
                words[i / W] |= 1 << (i % W);
            }
        }
        Gf2Poly::from_words(words)
    }

    /// From the exponents of the non-zero terms.
    pub fn from_exponents(exps: &[usize]) -> Self {
        let mut p = Gf2Poly::zero();
        for &e in exps {
            p.set_bit(e, !p.bit(e));
        }
        p
    }

    pub fn from_words(mut words: Vec<u64>) -> Self {
        while words.last() == Some(&0) {
            words.pop();
        }
        Gf2Poly { words }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        let top = *self.words.last()?;
        Some((self.words.len() - 1) * W + (W - 1 - top.leading_zeros() as usize))
    }

    #[inline]
    pub fn bit(&self, i: usize) -> bool {
        self.words.get(i / W).is_some_and(|w| (w >> (i % W)) & 1 == 1)
    }

    pub fn set_bit(&mut self, i: usize, v: bool) {
        let wi = i / W;
        if wi >= self.words.len() {
            if !v {
                return;
            }
            self.words.resize(wi + 1, 0);
        }
        if v {
            self.words[wi] |= 1 << (i % W);
        } else {
            self.words[wi] &= !(1 << (i % W));
            self.trim();
        }
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    /// Number of non-zero terms.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Exponents of the non-zero terms, ascending.
    pub fn exponents(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                out.push(wi * W + b);
                w &= w - 1;
            }
        }
        out
    }

    pub fn add_assign(&mut self, other: &Gf2Poly) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        self.trim();
    }

    pub fn add(&self, other: &Gf2Poly) -> Gf2Poly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    /// Multiplies by `x^k` in place.
    pub fn shl_assign(&mut self, k: usize) {
        if self.is_zero() || k == 0 {
            return;
        }
        let (wshift, bshift) = (k / W, k % W);
        if bshift == 0 {
            let mut words = vec![0u64; wshift];
            words.append(&mut self.words);
            self.words = words;
            return;
        }
        let mut out = vec![0u64; self.words.len() + wshift + 1];
        for (i, &w) in self.words.iter().enumerate() {
            out[i + wshift] |= w << bshift;
            out[i + wshift + 1] |= w >> (W - bshift);
        }
        self.words = out;
        self.trim();
    }

    pub fn shl(&self, k: usize) -> Gf2Poly {
        let mut out = self.clone();
        out.shl_assign(k);
        out
    }

    /// Multiplies by `x` in place.
    #[inline]
    pub fn mul_x_assign(&mut self) {
        let mut carry = 0u64;
        for w in self.words.iter_mut() {
            let next = *w >> (W - 1);
            *w = (*w << 1) | carry;
            carry = next;
        }
        if carry != 0 {
            self.words.push(carry);
        }
    }

    /// Carry-less product.
    pub fn mul(&self, other: &Gf2Poly) -> Gf2Poly {
        if self.is_zero() || other.is_zero() {
            return Gf2Poly::zero();
        }
        let (a, b) = if self.weight() <= other.weight() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = vec![0u64; a.words.len() + b.words.len() + 1];
        for e in a.exponents() {
            let (wshift, bshift) = (e / W, e % W);
            for (i, &w) in b.words.iter().enumerate() {
                out[i + wshift] ^= w << bshift;
                if bshift != 0 {
                    out[i + wshift + 1] ^= w >> (W - bshift);
                }
            }
        }
        Gf2Poly::from_words(out)
    }

    pub fn square(&self) -> Gf2Poly {
        // squaring over GF(2) spreads bits: (sum a_i x^i)^2 = sum a_i x^(2i)
        let mut out = vec![0u64; self.words.len() * 2];
        for (i, &w) in self.words.iter().enumerate() {
            out[2 * i] = spread(w as u32);
            out[2 * i + 1] = spread((w >> 32) as u32);
        }
        Gf2Poly::from_words(out)
    }

    pub fn to_unipoly(&self) -> UniPoly<Gf2> {
        let n = self.degree().map_or(0, |d| d + 1);
        UniPoly::new(Gf2, (0..n).map(|i| self.bit(i)).collect())
    }

    pub fn from_unipoly(p: &UniPoly<Gf2>) -> Gf2Poly {
        Gf2Poly::from_bits(p.coeffs())
    }
}

fn spread(v: u32) -> u64 {
    let mut x = v as u64;
    x = (x | (x << 16)) & 0x0000_FFFF_0000_FFFF;
    x = (x | (x << 8)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x << 4)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x << 2)) & 0x3333_3333_3333_3333;
    x = (x | (x << 1)) & 0x5555_5555_5555_5555;
    x
}

impl fmt::Display for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_unipoly().fmt(f)
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Poly({self})")
    }
}

/// A homogeneous form over GF(2), bit-packed by x-exponent.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BitForm {
    degree: usize,
    bits: Gf2Poly,
}

impl BitForm {
    /// The form of the given degree whose x-exponent coefficients are `bits`.
    pub fn new(degree: usize, bits: Gf2Poly) -> Result<Self> {
        if bits.degree().is_some_and(|d| d > degree) {
            return Err(Error::InvalidArgument(format!(
                "coefficient x^{} exceeds degree {degree}",
                bits.degree().unwrap()
            )));
        }
        if bits.is_zero() {
            return Ok(BitForm::zero());
        }
        Ok(BitForm { degree, bits })
    }

    pub fn zero() -> Self {
        BitForm::default()
    }

    /// `x^a z^b`.
    pub fn monomial(a: usize, b: usize) -> Self {
        BitForm { degree: a + b, bits: Gf2Poly::monomial(a) }
    }

    pub fn is_zero(&self) -> bool {
        self.bits.is_zero()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn bits(&self) -> &Gf2Poly {
        &self.bits
    }

    pub fn in_ll(&self) -> bool {
        !self.is_zero() && self.bits.bit(self.degree)
    }

    pub fn eval_at_01(&self) -> bool {
        self.bits.bit(0)
    }

    /// Number of non-zero terms.
    pub fn weight(&self) -> usize {
        self.bits.weight()
    }

    #[inline]
    pub fn mul_x_assign(&mut self) {
        if !self.is_zero() {
            self.bits.mul_x_assign();
            self.degree += 1;
        }
    }

    #[inline]
    pub fn mul_z_assign(&mut self) {
        if !self.is_zero() {
            self.degree += 1;
        }
    }

    pub fn add(&self, other: &BitForm) -> Result<BitForm> {
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let bits = self.bits.add(&other.bits);
        if bits.is_zero() {
            Ok(BitForm::zero())
        } else {
            Ok(BitForm { degree: self.degree, bits })
        }
    }

    /// `self += other`, degrees assumed equal (checked in debug builds).
    #[inline]
    pub(crate) fn add_assign_unchecked(&mut self, other: &BitForm) {
        debug_assert!(other.is_zero() || self.is_zero() || self.degree == other.degree);
        if self.is_zero() {
            *self = other.clone();
            return;
        }
        self.bits.add_assign(&other.bits);
        if self.bits.is_zero() {
            *self = BitForm::zero();
        }
    }

    pub fn mul(&self, other: &BitForm) -> BitForm {
        if self.is_zero() || other.is_zero() {
            return BitForm::zero();
        }
        BitForm {
            degree: self.degree + other.degree,
            bits: self.bits.mul(&other.bits),
        }
    }

    pub fn to_form(&self) -> Form<Gf2> {
        if self.is_zero() {
            return Form::zero(Gf2);
        }
        Form::from_coeffs(Gf2, (0..=self.degree).map(|i| self.bits.bit(i)).collect())
    }

    pub fn from_form(f: &Form<Gf2>) -> BitForm {
        if f.is_zero() {
            return BitForm::zero();
        }
        BitForm { degree: f.degree(), bits: Gf2Poly::from_bits(f.coeffs()) }
    }

    /// `phi(x, 1)`.
    pub fn dehomogenize(&self) -> Result<Gf2Poly> {
        if !self.in_ll() {
            return Err(if self.is_zero() { Error::ZeroForm } else { Error::NotLeading });
        }
        Ok(self.bits.clone())
    }

    pub fn homogenize(c: &Gf2Poly) -> BitForm {
        match c.degree() {
            None => BitForm::zero(),
            Some(d) => BitForm { degree: d, bits: c.clone() },
        }
    }
}

impl fmt::Display for BitForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_form().fmt(f)
    }
}

impl fmt::Debug for BitForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitForm({self})")
    }
}

impl Form<Gf2> {
    /// The bit-packed view of a GF(2) form.
    pub fn to_bit_form(&self) -> BitForm {
        BitForm::from_form(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive_mul(a: &[bool], b: &[bool]) -> Vec<bool> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![false; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] ^= x & y;
            }
        }
        out
    }

    #[test]
    fn degree_and_bits() {
        assert_eq!(Gf2Poly::zero().degree(), None);
        assert_eq!(Gf2Poly::one().degree(), Some(0));
        assert_eq!(Gf2Poly::monomial(200).degree(), Some(200));
        let mut p = Gf2Poly::monomial(130);
        p.set_bit(130, false);
        assert!(p.is_zero());
        assert_eq!(Gf2Poly::from_exponents(&[0, 1, 2]).to_string(), "x^2+x+1");
    }

    #[test]
    fn shifts_cross_word_boundaries() {
        let mut p = Gf2Poly::from_exponents(&[0, 63]);
        p.mul_x_assign();
        assert_eq!(p.exponents(), vec![1, 64]);
        assert_eq!(p.shl(127).exponents(), vec![128, 191]);
        assert_eq!(p.shl(64).exponents(), vec![65, 128]);
    }

    #[test]
    fn bitform_matches_dense_form() {
        let f = Form::from_i64s(Gf2, &[1, 1, 0, 1, 1, 1]);
        let b = f.to_bit_form();
        assert_eq!(b.to_string(), "x^5+x^4z+x^3z^2+xz^4+z^5");
        assert_eq!(b.to_form(), f);
        let mut z = b.clone();
        z.mul_z_assign();
        assert_eq!(z.to_form(), f.mul_z(1));
        let mut x = b.clone();
        x.mul_x_assign();
        assert_eq!(x.to_form(), f.mul_x(1));
        assert!(BitForm::monomial(0, 3).add(&BitForm::monomial(1, 1)).is_err());
    }

    proptest! {
        #[test]
        fn carryless_product_matches_schoolbook(
            a in prop::collection::vec(any::<bool>(), 0..200),
            b in prop::collection::vec(any::<bool>(), 0..200),
        ) {
            let pa = Gf2Poly::from_bits(&a);
            let pb = Gf2Poly::from_bits(&b);
            prop_assert_eq!(pa.mul(&pb), Gf2Poly::from_bits(&naive_mul(&a, &b)));
            prop_assert_eq!(pa.square(), pa.mul(&pa));
        }

        #[test]
        fn gf2_forms_round_trip_through_bits(bits in prop::collection::vec(any::<bool>(), 1..300)) {
            let f = Form::from_coeffs(Gf2, bits);
            prop_assert_eq!(f.to_bit_form().to_form(), f);
        }
    }
}
