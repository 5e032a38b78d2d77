use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

use super::{write_sparse, UniPoly};

/// A homogeneous form in `F[x, z]`.
///
/// Stored densely by x-exponent: `coeffs[i]` is the coefficient of
/// `x^i z^(degree - i)`, so `coeffs.len() == degree + 1`. The zero form has
/// an empty coefficient vector and reports degree 0.
#[derive(Clone, Debug, PartialEq)]
pub struct Form<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> Form<F> {
    /// The form of degree `coeffs.len() - 1` with the given coefficients.
    /// An all-zero vector yields the zero form.
    pub fn from_coeffs(field: F, coeffs: Vec<F::Elem>) -> Self {
        if coeffs.iter().all(|c| field.is_zero(c)) {
            Form::zero(field)
        } else {
            Form { field, coeffs }
        }
    }

    pub fn from_i64s(field: F, coeffs: &[i64]) -> Self {
        let cs = coeffs.iter().map(|&c| field.from_i64(c)).collect();
        Form::from_coeffs(field, cs)
    }

    pub fn zero(field: F) -> Self {
        Form { field, coeffs: Vec::new() }
    }

    pub fn one(field: F) -> Self {
        Form::monomial(field, 0, 0)
    }

    /// `x^a z^b`.
    pub fn monomial(field: F, a: usize, b: usize) -> Self {
        let mut coeffs = vec![field.zero(); a + b + 1];
        coeffs[a] = field.one();
        Form { field, coeffs }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Total degree; 0 for the zero form.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficient of `x^i z^(degree - i)`.
    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Grlex leading term with `x > z`: the largest x-exponent carrying a
    /// non-zero coefficient, with that coefficient.
    pub fn leading_term(&self) -> Result<(usize, F::Elem)> {
        self.coeffs
            .iter()
            .enumerate()
            .rev()
            .find(|(_, c)| !self.field.is_zero(c))
            .map(|(i, c)| (i, c.clone()))
            .ok_or(Error::ZeroForm)
    }

    /// `z` does not divide the leading term, i.e. the `x^degree` coefficient
    /// is non-zero.
    pub fn in_ll(&self) -> bool {
        self.coeffs.last().is_some_and(|c| !self.field.is_zero(c))
    }

    pub fn is_monic(&self) -> bool {
        self.leading_term().is_ok_and(|(_, c)| self.field.is_one(&c))
    }

    /// Scales to grlex leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            Err(_) => self.clone(),
            Ok((_, lc)) => self.scale(&self.field.inv(&lc).expect("non-zero")),
        }
    }

    /// Largest `e` with `z^e` dividing the form.
    pub fn z_valuation(&self) -> usize {
        match self.leading_term() {
            Ok((i, _)) => self.degree() - i,
            Err(_) => 0,
        }
    }

    /// `phi(0, 1)`, the coefficient of `z^degree`.
    pub fn eval_at_01(&self) -> F::Elem {
        self.coeff(0)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let cs = self.coeffs.iter().map(|a| self.field.mul(a, c)).collect();
        Form::from_coeffs(self.field.clone(), cs)
    }

    pub fn neg(&self) -> Self {
        let cs = self.coeffs.iter().map(|a| self.field.neg(a)).collect();
        Form { field: self.field.clone(), coeffs: cs }
    }

    /// Multiplies by `x^k`.
    pub fn mul_x(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut cs = vec![self.field.zero(); k];
        cs.extend(self.coeffs.iter().cloned());
        Form { field: self.field.clone(), coeffs: cs }
    }

    /// Multiplies by `z^k`.
    pub fn mul_z(&self, k: usize) -> Self {
        let mut out = self.clone();
        out.mul_z_in_place(k);
        out
    }

    pub(crate) fn mul_z_in_place(&mut self, k: usize) {
        if !self.is_zero() {
            let z = self.field.zero();
            self.coeffs.resize(self.coeffs.len() + k, z);
        }
    }

    /// Sum of two forms of equal degree (or with either operand zero).
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, |k, a, b| k.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, |k, a, b| k.sub(a, b))
    }

    fn combine(&self, other: &Self, op: impl Fn(&F, &F::Elem, &F::Elem) -> F::Elem) -> Result<Self> {
        let k = &self.field;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            let zero = k.zero();
            let cs = other.coeffs.iter().map(|b| op(k, &zero, b)).collect();
            return Ok(Form::from_coeffs(k.clone(), cs));
        }
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        let cs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| op(k, a, b))
            .collect();
        Ok(Form::from_coeffs(k.clone(), cs))
    }

    /// Product of forms; degrees add and the x-indexed coefficient vectors
    /// convolve.
    pub fn mul(&self, other: &Self) -> Self {
        let k = &self.field;
        if self.is_zero() || other.is_zero() {
            return Form::zero(k.clone());
        }
        let mut out = vec![k.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if k.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = k.add(&out[i + j], &k.mul(a, b));
            }
        }
        Form::from_coeffs(k.clone(), out)
    }

    /// `self -= q * x^shift * other`, where `degree(other) + shift` must equal
    /// `degree(self)`.
    pub(crate) fn sub_scaled_shifted(&mut self, q: &F::Elem, other: &Form<F>, shift: usize) {
        debug_assert_eq!(self.degree(), other.degree() + shift);
        let k = &self.field;
        for (j, b) in other.coeffs.iter().enumerate() {
            if !k.is_zero(b) {
                let t = k.mul(q, b);
                self.coeffs[j + shift] = k.sub(&self.coeffs[j + shift], &t);
            }
        }
        if self.coeffs.iter().all(|c| k.is_zero(c)) {
            self.coeffs.clear();
        }
    }

    /// `phi(x, 1)`; requires the form to be in LL so the degree is kept.
    pub fn dehomogenize(&self) -> Result<UniPoly<F>> {
        if self.is_zero() {
            return Err(Error::ZeroForm);
        }
        if !self.in_ll() {
            return Err(Error::NotLeading);
        }
        Ok(UniPoly::new(self.field.clone(), self.coeffs.clone()))
    }

    /// `z^|c| c(x/z)`; the zero polynomial maps to the zero form.
    pub fn homogenize(c: &UniPoly<F>) -> Self {
        Form::from_coeffs(c.field().clone(), c.coeffs().to_vec())
    }

    /// Splits `phi = z^e * w^` with `w` in `F[x]`, `deg w = degree - e`.
    pub(crate) fn split_z(&self) -> (usize, UniPoly<F>) {
        let e = self.z_valuation();
        let w = UniPoly::new(self.field.clone(), self.coeffs[..self.coeffs.len() - e].to_vec());
        (e, w)
    }
}

impl<F: Field> fmt::Display for Form<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .map(|(i, c)| (c, monomial_xz(i as i64, (d - i) as i64)));
        write_sparse(f, &self.field, terms)
    }
}

/// Text for `x^a z^b`; empty for `a = b = 0`. Negative exponents are used by
/// inverse forms.
pub(crate) fn monomial_xz(a: i64, b: i64) -> String {
    let mut s = String::new();
    for (var, e) in [("x", a), ("z", b)] {
        match e {
            0 => {}
            1 => s.push_str(var),
            _ => s.push_str(&format!("{var}^{e}")),
        }
    }
    s
}
