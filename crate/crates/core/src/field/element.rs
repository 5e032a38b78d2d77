use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use super::{Field, Gf2, PrimeField, Rationals};
use crate::error::{Error, Result};

/// Which field a value lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Gf2,
    /// GF(p); the wrapped [`PrimeField`] can only be built for a prime `p`.
    Gfp(PrimeField),
    Rationals,
}

impl FieldSpec {
    /// GF(p), rejecting composite `p`.
    pub fn gfp(p: u64) -> Result<Self> {
        Ok(FieldSpec::Gfp(PrimeField::new(p)?))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Gf2 => write!(f, "gf2"),
            FieldSpec::Gfp(k) => write!(f, "gfp:{}", k.modulus()),
            FieldSpec::Rationals => write!(f, "q"),
        }
    }
}

/// Accepts `gf2`, `gfp:<p>` and `q`; `gfp:2` is normalised to `gf2`.
impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "gf2" => Ok(FieldSpec::Gf2),
            "q" | "rationals" => Ok(FieldSpec::Rationals),
            _ => {
                let p = t
                    .strip_prefix("gfp:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::Parse {
                        text: s.to_string(),
                        reason: "expected gf2, gfp:<p> or q".into(),
                    })?;
                if p == 2 {
                    Ok(FieldSpec::Gf2)
                } else {
                    FieldSpec::gfp(p)
                }
            }
        }
    }
}

/// A dynamically typed field element. Binary operations check that both
/// operands come from the same field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Gf2(bool),
    Gfp { p: u64, value: u64 },
    Rational(BigRational),
}

macro_rules! dispatch2 {
    ($a:expr, $b:expr, |$k:ident, $x:ident, $y:ident| $body:expr) => {{
        let (a, b) = ($a, $b);
        match (a, b) {
            (FieldElement::Gf2(x), FieldElement::Gf2(y)) => {
                let $k = Gf2;
                let ($x, $y) = (x, y);
                Ok($k.to_element(&$body))
            }
            (FieldElement::Gfp { p, value: x }, FieldElement::Gfp { p: q, value: y }) if p == q => {
                let $k = PrimeField::new(*p)?;
                let ($x, $y) = (x, y);
                Ok($k.to_element(&$body))
            }
            (FieldElement::Rational(x), FieldElement::Rational(y)) => {
                let $k = Rationals;
                let ($x, $y) = (x, y);
                Ok($k.to_element(&$body))
            }
            _ => Err(Error::FieldMismatch {
                left: a.spec().to_string(),
                right: b.spec().to_string(),
            }),
        }
    }};
}

impl FieldElement {
    pub fn spec(&self) -> FieldSpec {
        match self {
            FieldElement::Gf2(_) => FieldSpec::Gf2,
            FieldElement::Gfp { p, .. } => {
                FieldSpec::Gfp(PrimeField::new(*p).expect("element modulus is prime"))
            }
            FieldElement::Rational(_) => FieldSpec::Rationals,
        }
    }

    pub fn parse(text: &str, spec: FieldSpec) -> Result<Self> {
        if text.trim().is_empty() {
            return Err(Error::Parse {
                text: text.to_string(),
                reason: "empty token".into(),
            });
        }
        match spec {
            FieldSpec::Gf2 => Ok(Gf2.to_element(&Gf2.parse(text)?)),
            FieldSpec::Gfp(k) => Ok(k.to_element(&k.parse(text)?)),
            FieldSpec::Rationals => Ok(Rationals.to_element(&Rationals.parse(text)?)),
        }
    }

    pub fn zero(spec: FieldSpec) -> Self {
        match spec {
            FieldSpec::Gf2 => FieldElement::Gf2(false),
            FieldSpec::Gfp(k) => k.to_element(&0),
            FieldSpec::Rationals => Rationals.to_element(&Rationals.zero()),
        }
    }

    pub fn one(spec: FieldSpec) -> Self {
        match spec {
            FieldSpec::Gf2 => FieldElement::Gf2(true),
            FieldSpec::Gfp(k) => k.to_element(&1),
            FieldSpec::Rationals => Rationals.to_element(&Rationals.one()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Gf2(b) => !b,
            FieldElement::Gfp { value, .. } => *value == 0,
            FieldElement::Rational(r) => Rationals.is_zero(r),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        dispatch2!(self, other, |k, x, y| k.add(x, y))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        dispatch2!(self, other, |k, x, y| k.sub(x, y))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        dispatch2!(self, other, |k, x, y| k.mul(x, y))
    }

    pub fn neg(&self) -> Self {
        match self {
            FieldElement::Gf2(b) => FieldElement::Gf2(*b),
            FieldElement::Gfp { p, value } => FieldElement::Gfp {
                p: *p,
                value: if *value == 0 { 0 } else { p - value },
            },
            FieldElement::Rational(r) => FieldElement::Rational(-r),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        match self {
            FieldElement::Gf2(b) => Ok(FieldElement::Gf2(Gf2.inv(b)?)),
            FieldElement::Gfp { p, value } => {
                let k = PrimeField::new(*p)?;
                Ok(k.to_element(&k.inv(value)?))
            }
            FieldElement::Rational(r) => Ok(FieldElement::Rational(Rationals.inv(r)?)),
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Gf2(b) => f.write_str(&Gf2.format(b)),
            FieldElement::Gfp { value, .. } => write!(f, "{value}"),
            FieldElement::Rational(r) => f.write_str(&Rationals.format(r)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(t: &str) -> FieldElement {
        FieldElement::parse(t, FieldSpec::Rationals).unwrap()
    }

    fn gf7(v: &str) -> FieldElement {
        FieldElement::parse(v, FieldSpec::gfp(7).unwrap()).unwrap()
    }

    #[test]
    fn addition_examples() {
        let one = FieldElement::Gf2(true);
        assert_eq!(one.add(&one).unwrap(), FieldElement::Gf2(false));
        assert_eq!(gf7("5").add(&gf7("4")).unwrap(), gf7("2"));
        assert_eq!(q("1/2").add(&q("1/3")).unwrap(), q("5/6"));
    }

    #[test]
    fn multiplicative_examples() {
        assert_eq!(gf7("3").inv().unwrap(), gf7("5"));
        let one = FieldElement::Gf2(true);
        assert_eq!(one.mul(&one).unwrap(), one);
        assert_eq!(q("-2/3").inv().unwrap(), q("-3/2"));
        assert_eq!(q("0").inv(), Err(Error::DivisionByZero));
        assert_eq!(FieldElement::Gf2(false).inv(), Err(Error::DivisionByZero));
        assert!(gf7("7").is_zero());
        assert_eq!(gf7("3").neg(), gf7("4"));
    }

    #[test]
    fn mismatched_fields_are_rejected() {
        let a = gf7("1");
        let b = FieldElement::parse("1", FieldSpec::gfp(5).unwrap()).unwrap();
        assert!(matches!(a.add(&b), Err(Error::FieldMismatch { .. })));
        assert!(matches!(
            a.mul(&FieldElement::Gf2(true)),
            Err(Error::FieldMismatch { .. })
        ));
    }

    #[test]
    fn parse_examples() {
        let gf5 = FieldSpec::gfp(5).unwrap();
        assert_eq!(
            FieldElement::parse("-1", gf5).unwrap(),
            FieldElement::Gfp { p: 5, value: 4 }
        );
        assert_eq!(
            FieldElement::parse("\u{2212}1", gf5).unwrap(),
            FieldElement::Gfp { p: 5, value: 4 }
        );
        assert_eq!(q("1/2").to_string(), "1/2");
        assert_eq!(q("2/4").to_string(), "1/2");
        assert_eq!(q("3/-6").to_string(), "-1/2");
        assert!(FieldElement::parse("2", FieldSpec::Gf2).is_err());
        assert!(FieldElement::parse("1/0", FieldSpec::Rationals).is_err());
        assert!(FieldElement::parse("", FieldSpec::Rationals).is_err());
        assert!(FieldElement::parse("x", gf5).is_err());
        assert!(FieldElement::parse("1.5", FieldSpec::Rationals).is_err());
    }

    #[test]
    fn spec_parsing() {
        assert_eq!("gf2".parse::<FieldSpec>().unwrap(), FieldSpec::Gf2);
        assert_eq!("gfp:7".parse::<FieldSpec>().unwrap(), FieldSpec::gfp(7).unwrap());
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("gfp:9".parse::<FieldSpec>(), Err(Error::NotPrime(9)));
        assert!("gf3".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::gfp(7).unwrap().to_string(), "gfp:7");
    }
}
