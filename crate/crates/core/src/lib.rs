//! Annihilator ideals of finite sequences.
//!
//! A finite sequence `(s_0, ..., s_{n-1})` over a field is encoded as an
//! inverse form in `F[x^-1, z^-1]`; its annihilator ideal in `F[x, z]` is
//! generated by a *viable ordered pair* `(f, g)` built one term at a time.
//! The leading generator `f` dehomogenises to a minimal polynomial of the
//! sequence and its degree is the linear complexity.
//!
//! The crate is organised as:
//!
//! * [`field`]: exact GF(2), GF(p) and rational arithmetic behind [`Field`];
//! * [`bivariate`]: forms, inverse forms, the contraction action;
//! * [`bitpoly`]: bit-packed GF(2) polynomials and forms;
//! * [`vop`]: the inductive generator construction, profiles and `Theta`;
//! * [`oracles`]: Berlekamp–Massey, brute-force linear algebra and the
//!   Euclidean-algorithm construction, for cross-checking;
//! * [`rueppel`]: the sequence with ones at `2^k - 1` and everything proved
//!   about it.

pub mod bitpoly;
pub mod bivariate;
pub mod error;
pub mod field;
pub mod oracles;
pub mod rueppel;
pub mod vop;

pub use bitpoly::{BitForm, Gf2Poly};
pub use bivariate::{annihilates, apply, discrepancy, form_gcd, Form, InverseForm, UniPoly};
pub use error::{Error, Result};
pub use field::{Field, FieldElement, FieldSpec, Gf2, PrimeField, Rationals};
pub use vop::{
    is_plcp, linear_complexity, minimal_leading_forms, minimal_polynomial, synthesize,
    ProfileEntry, Synthesis, Synthesizer, Theta, Vop, VopState,
};

/// Forms over GF(2).
pub type Gf2Form = Form<Gf2>;
/// Forms over GF(p).
pub type PrimeForm = Form<PrimeField>;
/// Forms over the rationals.
pub type RationalForm = Form<Rationals>;

pub type Gf2InverseForm = InverseForm<Gf2>;
pub type PrimeInverseForm = InverseForm<PrimeField>;
pub type RationalInverseForm = InverseForm<Rationals>;

pub type Gf2UniPoly = UniPoly<Gf2>;
pub type PrimeUniPoly = UniPoly<PrimeField>;
pub type RationalUniPoly = UniPoly<Rationals>;

pub type Gf2Vop = Vop<Gf2>;
pub type RationalVop = Vop<Rationals>;
