//! Forms in `R = F[x, z]`, inverse forms in `M = F[x^-1, z^-1]`, and the
//! contraction action of `R` on `M`.
//!
//! A monomial acts by `x^p z^q . x^-u z^-v = x^(p-u) z^(q-v)` when both
//! exponents stay non-positive and by zero otherwise. For a form `phi` and an
//! inverse form `F` of total degree `m`, the product `phi . F` is either zero
//! (when `|phi| + m > 0`) or the inverse form of degree `d = |phi| + m` whose
//! `x^j z^(d-j)` coefficient is the Laurent-product coefficient
//! `sum_i phi_i F_(j-i)`. In sequence terms this is the window sum
//! `t -> sum_i phi_i s_(t+i)` for `0 <= t <= n - 1 - |phi|`.

mod form;
mod inverse;
mod unipoly;

use std::fmt;

pub use form::Form;
pub use inverse::InverseForm;
pub use unipoly::UniPoly;

use crate::field::Field;

/// `phi . F`.
pub fn apply<F: Field>(phi: &Form<F>, inv: &InverseForm<F>) -> InverseForm<F> {
    let k = inv.field();
    let n = inv.len();
    if phi.is_zero() || phi.degree() + 1 > n {
        return InverseForm::zero(k.clone());
    }
    let s = inv.to_sequence();
    let out_len = n - phi.degree();
    let seq = (0..out_len)
        .map(|t| window_dot(k, phi.coeffs(), &s[t..]))
        .collect();
    InverseForm::from_sequence(k.clone(), seq).expect("non-empty")
}

/// Whether `phi . F = 0`.
pub fn annihilates<F: Field>(phi: &Form<F>, inv: &InverseForm<F>) -> bool {
    apply(phi, inv).is_zero()
}

/// The discrepancy `[f . G]_(|f|+|G|, 0)`: zero when `|f| + |G| > 0`,
/// otherwise the single coefficient of `z^0` in the product, which is the
/// window sum over the last `|f| + 1` sequence terms.
pub fn discrepancy<F: Field>(f: &Form<F>, g: &InverseForm<F>) -> F::Elem {
    let k = g.field();
    let n = g.len();
    let l = f.degree();
    if f.is_zero() || l + 1 > n {
        return k.zero();
    }
    window_dot(k, f.coeffs(), &g.to_sequence()[n - 1 - l..])
}

#[inline]
pub(crate) fn window_dot<F: Field>(k: &F, phi: &[F::Elem], s: &[F::Elem]) -> F::Elem {
    let mut acc = k.zero();
    for (a, b) in phi.iter().zip(s) {
        if !k.is_zero(a) && !k.is_zero(b) {
            acc = k.add(&acc, &k.mul(a, b));
        }
    }
    acc
}

/// Monic gcd of two forms, via `phi = z^e * w^` with `w` univariate.
/// `gcd(phi, 0)` is `phi` made monic.
pub fn form_gcd<F: Field>(phi: &Form<F>, psi: &Form<F>) -> Form<F> {
    if psi.is_zero() {
        return phi.monic();
    }
    if phi.is_zero() {
        return psi.monic();
    }
    let (e1, w1) = phi.split_z();
    let (e2, w2) = psi.split_z();
    Form::homogenize(&w1.gcd(&w2)).mul_z(e1.min(e2))
}

/// Writes a sum of `(coefficient, monomial)` terms, skipping zeros.
pub(crate) fn write_sparse<'a, F: Field>(
    out: &mut fmt::Formatter<'_>,
    field: &F,
    terms: impl Iterator<Item = (&'a F::Elem, String)>,
) -> fmt::Result
where
    F::Elem: 'a,
{
    let mut first = true;
    for (c, mono) in terms {
        if field.is_zero(c) {
            continue;
        }
        let text = field.format(c);
        let (neg, mag) = match text.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, text),
        };
        if neg {
            out.write_str("-")?;
        } else if !first {
            out.write_str("+")?;
        }
        if mono.is_empty() {
            out.write_str(&mag)?;
        } else if mag != "1" {
            if mag.contains('/') {
                write!(out, "({mag})")?;
            } else {
                out.write_str(&mag)?;
            }
        }
        out.write_str(&mono)?;
        first = false;
    }
    if first {
        out.write_str("0")?;
    }
    Ok(())
}
