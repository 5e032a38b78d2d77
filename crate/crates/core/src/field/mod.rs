//! Exact scalar fields.
//!
//! Every algorithm in the crate is generic over a [`Field`] *context*: a small
//! value that knows how to combine elements. The context carries whatever
//! runtime data the field needs (the modulus of GF(p)); for GF(2) and the
//! rationals it is zero-sized. [`FieldSpec`] and [`FieldElement`] are the
//! dynamically typed counterparts used at the I/O boundary.

mod element;
mod gf2;
mod prime;
mod rational;

use std::fmt;

pub use element::{FieldElement, FieldSpec};
pub use gf2::Gf2;
pub use prime::PrimeField;
pub use rational::Rationals;

use crate::error::Result;

/// Arithmetic in an exact field.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Send + Sync;

    /// Descriptor of this field.
    fn spec(&self) -> FieldSpec;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse; fails on zero.
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Image of an integer under the canonical ring map Z -> F.
    fn from_i64(&self, v: i64) -> Self::Elem;

    fn parse(&self, text: &str) -> Result<Self::Elem>;

    fn format(&self, a: &Self::Elem) -> String;

    /// Number of elements, `None` for an infinite field.
    fn order(&self) -> Option<u64>;

    /// The `index`-th element in a fixed enumeration of a finite field.
    /// Only meaningful for `index < order()`.
    fn element(&self, index: u64) -> Self::Elem;

    fn to_element(&self, a: &Self::Elem) -> FieldElement;

    fn from_element(&self, e: &FieldElement) -> Result<Self::Elem>;
}

/// Deterministic trial division.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while (d as u128) * (d as u128) <= p as u128 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn normalize_minus(text: &str) -> String {
    text.trim().replace('\u{2212}', "-")
}
