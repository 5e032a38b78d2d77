use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

use super::form::monomial_xz;
use super::write_sparse;

/// An inverse form in `F[x^-1, z^-1]` of total degree `m <= 0`, i.e. a finite
/// sequence `(s_0, ..., s_{n-1})` with `m = 1 - n`.
///
/// Indexing is by sequence position: `seq[i]` is the coefficient of
/// `x^(-i) z^(m+i)`. The x-exponent form `F_j` of the same coefficient is
/// `seq[-j]`, available through [`InverseForm::coeff_at`].
#[derive(Clone, Debug, PartialEq)]
pub struct InverseForm<F: Field> {
    field: F,
    seq: Vec<F::Elem>,
}

impl<F: Field> InverseForm<F> {
    pub fn from_sequence(field: F, seq: Vec<F::Elem>) -> Result<Self> {
        if seq.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(InverseForm { field, seq })
    }

    pub fn from_i64s(field: F, seq: &[i64]) -> Result<Self> {
        let s = seq.iter().map(|&v| field.from_i64(v)).collect();
        InverseForm::from_sequence(field, s)
    }

    /// The zero element of the module (used as the result of a vanishing
    /// contraction).
    pub fn zero(field: F) -> Self {
        let z = field.zero();
        InverseForm { field, seq: vec![z] }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn to_sequence(&self) -> &[F::Elem] {
        &self.seq
    }

    pub fn into_sequence(self) -> Vec<F::Elem> {
        self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// Total degree `m = 1 - n`.
    pub fn degree(&self) -> i64 {
        1 - self.seq.len() as i64
    }

    pub fn is_zero(&self) -> bool {
        self.seq.iter().all(|c| self.field.is_zero(c))
    }

    /// `F_j`, the coefficient of `x^j z^(m-j)` for `m <= j <= 0`.
    pub fn coeff_at(&self, j: i64) -> F::Elem {
        if j > 0 || j < self.degree() {
            return self.field.zero();
        }
        self.seq[(-j) as usize].clone()
    }

    /// Order `v(F) = max { j : F_j != 0 }`, i.e. minus the index of the first
    /// non-zero term. `None` for the zero form.
    pub fn order(&self) -> Option<i64> {
        self.seq
            .iter()
            .position(|c| !self.field.is_zero(c))
            .map(|i| -(i as i64))
    }

    /// The subform `F^(j)`, which is the prefix `(s_0, ..., s_{-j})`.
    pub fn subform(&self, j: i64) -> Result<Self> {
        let hi = self.order().ok_or(Error::ZeroInverseForm)?;
        let lo = self.degree();
        if j < lo || j > hi {
            return Err(Error::SubformRange { index: j, lo, hi });
        }
        Ok(self.prefix((1 - j) as usize))
    }

    /// The first `len` terms (clamped to `1..=n`).
    pub fn prefix(&self, len: usize) -> Self {
        let len = len.clamp(1, self.seq.len());
        InverseForm { field: self.field.clone(), seq: self.seq[..len].to_vec() }
    }

    /// `a x^(m-1) + F z^-1`: appends `a` to the sequence.
    pub fn augment(&self, a: F::Elem) -> Self {
        let mut out = self.clone();
        out.seq.push(a);
        out
    }

    pub(crate) fn push(&mut self, a: F::Elem) {
        self.seq.push(a);
    }

    /// `F z^-k`, which appends `k` zero terms to the sequence.
    pub fn shift_z(&self, k: usize) -> Self {
        let mut out = self.clone();
        out.seq.extend(std::iter::repeat_n(self.field.zero(), k));
        out
    }

    /// Sum in the module. Zero operands of any degree are absorbed.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.len() != other.len() {
            return Err(Error::DegreeMismatch(self.len() - 1, other.len() - 1));
        }
        let k = &self.field;
        let seq = self.seq.iter().zip(&other.seq).map(|(a, b)| k.add(a, b)).collect();
        Ok(InverseForm { field: k.clone(), seq })
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let k = &self.field;
        let seq = self.seq.iter().map(|a| k.mul(a, c)).collect();
        InverseForm { field: k.clone(), seq }
    }
}

impl<F: Field> fmt::Display for InverseForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.degree();
        let terms = (m..=0).map(|j| {
            let c = &self.seq[(-j) as usize];
            (c, monomial_xz(j, m - j))
        });
        write_sparse(f, &self.field, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Gf2, Rationals};

    fn rational_example() -> InverseForm<Rationals> {
        InverseForm::from_i64s(Rationals, &[1, 0, 0, 0, -1, 1, 0, 0, 1, -2]).unwrap()
    }

    #[test]
    fn from_sequence_examples() {
        let r = InverseForm::from_i64s(Gf2, &[1, 1, 0, 1]).unwrap();
        assert_eq!(r.to_string(), "x^-3+x^-1z^-2+z^-3");
        assert_eq!(r.degree(), -3);
        let one = InverseForm::from_i64s(Gf2, &[1]).unwrap();
        assert_eq!(one.to_string(), "1");
        assert_eq!(one.degree(), 0);
        assert_eq!(
            rational_example().to_string(),
            "-2x^-9+x^-8z^-1+x^-5z^-4-x^-4z^-5+z^-9"
        );
        assert_eq!(
            InverseForm::<Gf2>::from_sequence(Gf2, vec![]),
            Err(Error::EmptySequence)
        );
    }

    #[test]
    fn subform_examples() {
        let f = rational_example();
        assert_eq!(f.subform(-5).unwrap().to_string(), "x^-5-x^-4z^-1+z^-5");
        assert_eq!(f.subform(0).unwrap().to_string(), "1");
        assert_eq!(f.subform(-9).unwrap(), f);
        assert!(matches!(f.subform(1), Err(Error::SubformRange { .. })));
        assert!(matches!(f.subform(-10), Err(Error::SubformRange { .. })));
        let g = InverseForm::from_i64s(Gf2, &[0, 0, 1, 1]).unwrap();
        assert_eq!(g.order(), Some(-2));
        assert_eq!(g.subform(-2).unwrap().to_string(), "x^-2");
        assert!(g.subform(-1).is_err());
    }

    #[test]
    fn augmentation() {
        // z^m augmented by a is a x^(m-1) + z^(m-1)
        let zm = InverseForm::from_i64s(Rationals, &[1, 0, 0]).unwrap();
        let a = Rationals.from_i64(5);
        assert_eq!(zm.augment(a).to_string(), "5x^-3+z^-3");
        let one = InverseForm::from_i64s(Gf2, &[1]).unwrap();
        assert_eq!(one.augment(true).to_string(), "x^-1+z^-1");
        assert_eq!(one.augment(false), one.shift_z(1));
    }
}
