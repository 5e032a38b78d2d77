use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{normalize_minus, Field, FieldElement, FieldSpec};
use crate::error::{Error, Result};

/// The rationals, backed by arbitrary-precision fractions kept in lowest
/// terms with a positive denominator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(a.recip())
        }
    }

    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    /// `a` or `a/b` with `b != 0`.
    fn parse(&self, text: &str) -> Result<BigRational> {
        let t = normalize_minus(text);
        let bad = |reason: &str| Error::Parse {
            text: t.clone(),
            reason: reason.to_string(),
        };
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t.as_str(), "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad("bad numerator"))?;
        let den: BigInt = den.parse().map_err(|_| bad("bad denominator"))?;
        if den.is_zero() {
            return Err(bad("zero denominator"));
        }
        Ok(BigRational::new(num, den))
    }

    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn order(&self) -> Option<u64> {
        None
    }

    /// Enumerates 0, 1, -1, 2, -2, ... (integers only); the field is infinite
    /// so this is used for sampling, never for exhaustive enumeration.
    fn element(&self, index: u64) -> BigRational {
        let k = index.div_ceil(2) as i64;
        let v = if index % 2 == 1 { k } else { -k };
        BigRational::from_integer(BigInt::from(v))
    }

    fn to_element(&self, a: &BigRational) -> FieldElement {
        FieldElement::Rational(a.clone())
    }

    fn from_element(&self, e: &FieldElement) -> Result<BigRational> {
        match e {
            FieldElement::Rational(r) => Ok(r.clone()),
            other => Err(Error::FieldMismatch {
                left: FieldSpec::Rationals.to_string(),
                right: other.spec().to_string(),
            }),
        }
    }
}
