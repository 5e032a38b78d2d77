//! The Rueppel sequence `r_i = 1` iff `i = 2^k - 1`, and the results about
//! its generator pairs: a multiplication-free construction, the parity of
//! the discrepancies, the matrix recurrence, the closed form of the
//! leading generators and an identity in a quadratic extension.

mod matrix;
mod quad;

pub use matrix::{matrix_recurrence, StepMatrix};
pub use quad::{eta, quad_ext_identity, QuadExtElement};

use crate::bitpoly::{BitForm, Gf2Poly};
use crate::bivariate::{Form, InverseForm};
use crate::error::{Error, Result};
use crate::field::Gf2;
use crate::vop::{ProfileEntry, Vop, VopState};

/// `r_i`.
#[inline]
pub fn rueppel_bit(i: usize) -> bool {
    (i + 1).is_power_of_two()
}

/// A bit-packed finite binary sequence.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSequence {
    len: usize,
    words: Vec<u64>,
}

impl BitSequence {
    pub fn from_bits(bits: &[bool]) -> Self {
        let mut words = vec![0u64; bits.len().div_ceil(64)];
        for (i, &b) in bits.iter().enumerate() {
            if b {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        BitSequence { len: bits.len(), words }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(|i| self.get(i))
    }

    pub fn to_vec(&self) -> Vec<bool> {
        self.iter().collect()
    }
}

impl std::fmt::Debug for BitSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: String = self.iter().map(|b| if b { '1' } else { '0' }).collect();
        write!(f, "BitSequence({s})")
    }
}

/// `(r_0, ..., r_(n-1))`.
pub fn rueppel_sequence(n: usize) -> Result<BitSequence> {
    if n < 1 {
        return Err(Error::InvalidArgument("length must be at least 1".into()));
    }
    let mut words = vec![0u64; n.div_ceil(64)];
    let mut i = 0usize;
    while i < n {
        words[i / 64] |= 1 << (i % 64);
        i = 2 * i + 1;
    }
    Ok(BitSequence { len: n, words })
}

/// `R^(1-n)`, the inverse form of the first `n` terms.
pub fn rueppel_inverse_form(n: usize) -> Result<InverseForm<Gf2>> {
    InverseForm::from_sequence(Gf2, rueppel_sequence(n)?.to_vec())
}

/// A generator pair over GF(2) in bit-packed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitVop {
    pub f: BitForm,
    pub g: BitForm,
}

impl BitVop {
    pub fn lambda(&self) -> usize {
        self.f.degree()
    }

    pub fn to_vop(&self) -> Vop<Gf2> {
        Vop { f: self.f.to_form(), g: self.g.to_form() }
    }
}

/// The pairs `(f^(k), g^(k))` for `k = 0, 1, 2, ...`, starting from
/// `(x + z, z)`. Passing from `k` to `k + 1` replaces `(f, g)` by
/// `(x f + g, f)` when `k` is odd, then multiplies `g` by `z`. No sequence
/// term is read.
#[derive(Clone, Debug)]
pub struct Ralg {
    k: usize,
    f: BitForm,
    g: BitForm,
}

impl Ralg {
    pub fn new() -> Self {
        Ralg {
            k: 0,
            f: BitForm::homogenize(&Gf2Poly::from_exponents(&[0, 1])),
            g: BitForm::monomial(0, 1),
        }
    }

    /// Index of the current pair.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn f(&self) -> &BitForm {
        &self.f
    }

    pub fn g(&self) -> &BitForm {
        &self.g
    }

    pub fn vop(&self) -> BitVop {
        BitVop { f: self.f.clone(), g: self.g.clone() }
    }

    /// Moves to `k + 1`.
    pub fn advance(&mut self) {
        if self.k % 2 == 1 {
            let mut next = self.f.clone();
            next.mul_x_assign();
            next.add_assign_unchecked(&self.g);
            self.g = std::mem::replace(&mut self.f, next);
        }
        self.g.mul_z_assign();
        self.k += 1;
    }
}

impl Default for Ralg {
    fn default() -> Self {
        Ralg::new()
    }
}

impl Iterator for Ralg {
    type Item = (usize, BitVop);

    fn next(&mut self) -> Option<Self::Item> {
        let out = (self.k, self.vop());
        self.advance();
        Some(out)
    }
}

/// The generator pair of `(r_0, ..., r_(n-1))`.
pub fn ralg(n: usize) -> Result<BitVop> {
    if n < 1 {
        return Err(Error::InvalidArgument("length must be at least 1".into()));
    }
    let mut r = Ralg::new();
    for _ in 0..n - 1 {
        r.advance();
    }
    Ok(r.vop())
}

/// `x^l + sum_(j=0)^(log2 l) x^(l - 2^j) z^(2^j)` for `l` a power of two.
pub fn closed_form(l: u64) -> Result<BitForm> {
    if !l.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(l));
    }
    let l = l as usize;
    let mut exps = vec![l];
    let mut p = 1;
    while p <= l {
        exps.push(l - p);
        p *= 2;
    }
    BitForm::new(l, Gf2Poly::from_exponents(&exps))
}

/// Runs the general construction over `(r_0, ..., r_(n-1))`, started from the
/// known pair `(x + z, z)` for `(r_0)`, and returns the profile rows for
/// `k = 1, ..., n - 1`. Row `k` carries `Delta_(k-1)` and `d_(k-1)`.
pub fn delta_trace(n: usize) -> Result<Vec<ProfileEntry<Gf2>>> {
    if n < 2 {
        return Err(Error::InvalidArgument("need at least 2 terms".into()));
    }
    let seed = Vop {
        f: Form::from_coeffs(Gf2, vec![true, true]),
        g: Form::monomial(Gf2, 0, 1),
    };
    let mut state = VopState::from_vop(seed, rueppel_inverse_form(1)?)?;
    Ok((1..n).map(|i| state.step(rueppel_bit(i))).collect())
}

/// `Delta_k = k mod 2` and `d_k = 1` at odd `k`, for `0 <= k <= n - 2`.
pub fn delta_parity_check(n: usize) -> Result<bool> {
    Ok(delta_trace(n)?.iter().all(delta_row_ok))
}

/// The parity condition on a single row of [`delta_trace`].
pub fn delta_row_ok(e: &ProfileEntry<Gf2>) -> bool {
    let k = e.k - 1;
    let odd = k % 2 == 1;
    e.delta == Some(odd) && (!odd || e.d_before == Some(1))
}
