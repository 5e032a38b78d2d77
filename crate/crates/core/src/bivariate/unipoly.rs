use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

use super::write_sparse;

/// A univariate polynomial in `F[x]`, coefficients ascending, trimmed so the
/// last stored coefficient is non-zero. The zero polynomial has no
/// coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(field: F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    /// Builds a polynomial from integer coefficients, ascending.
    pub fn from_i64s(field: F, coeffs: &[i64]) -> Self {
        let cs = coeffs.iter().map(|&c| field.from_i64(c)).collect();
        UniPoly::new(field, cs)
    }

    pub fn zero(field: F) -> Self {
        UniPoly { field, coeffs: Vec::new() }
    }

    pub fn one(field: F) -> Self {
        let one = field.one();
        UniPoly { field, coeffs: vec![one] }
    }

    /// `x^k`.
    pub fn monomial(field: F, k: usize) -> Self {
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = field.one();
        UniPoly { field, coeffs }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F::Elem> {
        self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| self.field.is_one(c))
    }

    /// Scales to leading coefficient one; the zero polynomial is returned as is.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.field.inv(lc).expect("leading coefficient is non-zero");
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let cs = self.coeffs.iter().map(|a| self.field.mul(a, c)).collect();
        UniPoly::new(self.field.clone(), cs)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |k, a, b| k.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |k, a, b| k.sub(a, b))
    }

    pub fn neg(&self) -> Self {
        let cs = self.coeffs.iter().map(|a| self.field.neg(a)).collect();
        UniPoly { field: self.field.clone(), coeffs: cs }
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&F, &F::Elem, &F::Elem) -> F::Elem) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let k = &self.field;
        let cs = (0..n).map(|i| op(k, &self.coeff(i), &other.coeff(i))).collect();
        UniPoly::new(k.clone(), cs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(self.field.clone());
        }
        let k = &self.field;
        let mut out = vec![k.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if k.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = k.add(&out[i + j], &k.mul(a, b));
            }
        }
        UniPoly::new(k.clone(), out)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut cs = vec![self.field.zero(); k];
        cs.extend(self.coeffs.iter().cloned());
        UniPoly { field: self.field.clone(), coeffs: cs }
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let k = &self.field;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = k.inv(divisor.leading_coeff().unwrap())?;
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((UniPoly::zero(k.clone()), UniPoly::zero(k.clone())));
        };
        if nd < dd {
            return Ok((UniPoly::zero(k.clone()), self.clone()));
        }
        let mut quot = vec![k.zero(); nd - dd + 1];
        for i in (dd..=nd).rev() {
            let c = k.mul(&rem[i], &lc_inv);
            if k.is_zero(&c) {
                continue;
            }
            let off = i - dd;
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[off + j] = k.sub(&rem[off + j], &k.mul(&c, b));
            }
            quot[off] = c;
        }
        rem.truncate(dd);
        Ok((UniPoly::new(k.clone(), quot), UniPoly::new(k.clone(), rem)))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("divisor is non-zero");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let k = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(k.zero(), |acc, c| k.add(&k.mul(&acc, x), c))
    }
}

impl<F: Field> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .map(|(i, c)| (c, monomial_x(i)));
        write_sparse(f, &self.field, terms)
    }
}

fn monomial_x(i: usize) -> String {
    match i {
        0 => String::new(),
        1 => "x".into(),
        _ => format!("x^{i}"),
    }
}
