use super::{normalize_minus, Field, FieldElement, FieldSpec};
use crate::error::{Error, Result};

/// The binary field. Elements are `bool`, addition is XOR.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Gf2;

impl Field for Gf2 {
    type Elem = bool;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Gf2
    }

    #[inline]
    fn zero(&self) -> bool {
        false
    }

    #[inline]
    fn one(&self) -> bool {
        true
    }

    #[inline]
    fn is_zero(&self, a: &bool) -> bool {
        !*a
    }

    #[inline]
    fn add(&self, a: &bool, b: &bool) -> bool {
        a ^ b
    }

    #[inline]
    fn sub(&self, a: &bool, b: &bool) -> bool {
        a ^ b
    }

    #[inline]
    fn mul(&self, a: &bool, b: &bool) -> bool {
        a & b
    }

    #[inline]
    fn neg(&self, a: &bool) -> bool {
        *a
    }

    fn inv(&self, a: &bool) -> Result<bool> {
        if *a {
            Ok(true)
        } else {
            Err(Error::DivisionByZero)
        }
    }

    fn from_i64(&self, v: i64) -> bool {
        v.rem_euclid(2) == 1
    }

    /// Only the literals `0` and `1` are accepted; a stray `2` in a keystream
    /// is a data error, not something to reduce mod 2.
    fn parse(&self, text: &str) -> Result<bool> {
        match normalize_minus(text).as_str() {
            "0" => Ok(false),
            "1" => Ok(true),
            other => Err(Error::Parse {
                text: other.to_string(),
                reason: "GF(2) accepts only 0 or 1".into(),
            }),
        }
    }

    fn format(&self, a: &bool) -> String {
        if *a { "1" } else { "0" }.to_string()
    }

    fn order(&self) -> Option<u64> {
        Some(2)
    }

    fn element(&self, index: u64) -> bool {
        index & 1 == 1
    }

    fn to_element(&self, a: &bool) -> FieldElement {
        FieldElement::Gf2(*a)
    }

    fn from_element(&self, e: &FieldElement) -> Result<bool> {
        match e {
            FieldElement::Gf2(b) => Ok(*b),
            other => Err(Error::FieldMismatch {
                left: FieldSpec::Gf2.to_string(),
                right: other.spec().to_string(),
            }),
        }
    }
}
