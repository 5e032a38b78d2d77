use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{is_prime, normalize_minus, Field, FieldElement, FieldSpec};
use crate::error::{Error, Result};

/// GF(p) for a prime `p`, elements are residues in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(PrimeField { p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_i128(&self, v: i128) -> u64 {
        v.rem_euclid(self.p as i128) as u64
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Gfp(*self)
    }

    #[inline]
    fn zero(&self) -> u64 {
        0
    }

    #[inline]
    fn one(&self) -> u64 {
        1
    }

    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }

    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            ((*a as u128 + self.p as u128) - *b as u128) as u64
        }
    }

    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }

    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u64) -> Result<u64> {
        if *a == 0 {
            return Err(Error::DivisionByZero);
        }
        // Fermat: a^(p-2)
        Ok(self.pow(*a, self.p - 2))
    }

    fn from_i64(&self, v: i64) -> u64 {
        self.reduce_i128(v as i128)
    }

    /// Signed decimal integers of any size, reduced mod p.
    fn parse(&self, text: &str) -> Result<u64> {
        let t = normalize_minus(text);
        let v: BigInt = t.parse().map_err(|_| Error::Parse {
            text: t.clone(),
            reason: format!("expected an integer for GF({})", self.p),
        })?;
        let r = v.mod_floor(&BigInt::from(self.p));
        Ok(r.to_u64().expect("residue fits in u64"))
    }

    fn format(&self, a: &u64) -> String {
        a.to_string()
    }

    fn order(&self) -> Option<u64> {
        Some(self.p)
    }

    fn element(&self, index: u64) -> u64 {
        index % self.p
    }

    fn to_element(&self, a: &u64) -> FieldElement {
        FieldElement::Gfp { p: self.p, value: *a }
    }

    fn from_element(&self, e: &FieldElement) -> Result<u64> {
        match e {
            FieldElement::Gfp { p, value } if *p == self.p => Ok(*value),
            other => Err(Error::FieldMismatch {
                left: self.spec().to_string(),
                right: other.spec().to_string(),
            }),
        }
    }
}
