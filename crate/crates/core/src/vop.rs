//! The inductive construction of a viable ordered pair `(f, g)` generating
//! the annihilator ideal of an inverse form.
//!
//! A VOP satisfies: `f` and `g` are monic, `f` is in LL, `z | g`,
//! `I_F = <f, g>` and `|f| + |g| = 2 - |F|`. The construction starts from
//! `(x^(1-v), z)` for the subform ending at the first non-zero term and
//! absorbs one more term per step; each step costs `O(|f| + |g|)`, so the
//! whole run is quadratic in the sequence length.

use crate::bivariate::{annihilates, discrepancy, form_gcd, window_dot, Form, InverseForm, UniPoly};
use crate::error::{Error, Result};
use crate::field::Field;

/// A generator pair `(f, g)`: leading generator and cogenerator.
#[derive(Clone, Debug, PartialEq)]
pub struct Vop<F: Field> {
    pub f: Form<F>,
    pub g: Form<F>,
}

impl<F: Field> Vop<F> {
    /// Linear complexity, `|f|`.
    pub fn lambda(&self) -> usize {
        self.f.degree()
    }

    /// `|g| - |f|`.
    pub fn d(&self) -> i64 {
        self.g.degree() as i64 - self.f.degree() as i64
    }

    /// Checks every structural VOP property against `inv`. The error names
    /// the first property that fails.
    pub fn verify(&self, inv: &InverseForm<F>) -> std::result::Result<(), String> {
        let (f, g) = (&self.f, &self.g);
        if !f.is_monic() || !f.in_ll() {
            return Err(format!("f = {f} is not a monic leading form"));
        }
        if !g.is_monic() || g.z_valuation() == 0 {
            return Err(format!("g = {g} is not monic or not divisible by z"));
        }
        if (f.degree() + g.degree()) as i64 != 2 - inv.degree() {
            return Err(format!(
                "|f| + |g| = {} but 2 - |F| = {}",
                f.degree() + g.degree(),
                2 - inv.degree()
            ));
        }
        if !annihilates(f, inv) {
            return Err(format!("f = {f} does not annihilate F"));
        }
        if !annihilates(g, inv) {
            return Err(format!("g = {g} does not annihilate F"));
        }
        let h = form_gcd(f, g);
        if h != Form::one(f.field().clone()) {
            return Err(format!("gcd(f, g) = {h}"));
        }
        Ok(())
    }
}

/// One row of a linear-complexity profile.
///
/// Row `k` describes the VOP for the prefix `(s_0, ..., s_k)`. The step
/// fields record the update that produced it from row `k - 1`; they are
/// `None` for rows reached by initialisation rather than by a step.
#[derive(Clone, Debug, PartialEq)]
pub struct ProfileEntry<F: Field> {
    pub k: usize,
    /// `|f^(k)|`, the linear complexity of the prefix.
    pub lambda: usize,
    /// `Delta_(k-1)`.
    pub delta: Option<F::Elem>,
    /// `d_(k-1) = |g^(k-1)| - |f^(k-1)|`.
    pub d_before: Option<i64>,
    /// `Delta'_(k-1)`.
    pub delta_prime_before: Option<F::Elem>,
    /// `q_(k-1) = Delta_(k-1) / Delta'_(k-1)`.
    pub q: Option<F::Elem>,
}

/// The construction state after consuming a non-zero prefix `G`.
#[derive(Clone, Debug)]
pub struct VopState<F: Field> {
    f: Form<F>,
    g: Form<F>,
    d: i64,
    delta_prime: F::Elem,
    consumed: InverseForm<F>,
    checked: bool,
}

impl<F: Field> VopState<F> {
    /// Basis of the induction: consumes `F` up to and including its first
    /// non-zero term (the subform `F^(v)`) and returns `(x^(1-v), z)`.
    ///
    /// `Delta'` is set to `Delta(z; F^(v) z^-1) = F_v`, which is 1 when the
    /// first non-zero term is normalised to 1.
    pub fn init(inv: &InverseForm<F>) -> Result<Self> {
        let v = inv.order().ok_or(Error::ZeroInverseForm)?;
        let k = inv.field().clone();
        let first = inv.coeff_at(v);
        let lead = (1 - v) as usize;
        Ok(VopState {
            f: Form::monomial(k.clone(), lead, 0),
            g: Form::monomial(k, 0, 1),
            d: v,
            delta_prime: first,
            consumed: inv.prefix(lead),
            checked: false,
        })
    }

    /// Resumes the construction from any known VOP for `consumed`.
    /// Fails if `g` already annihilates every augmentation of `consumed`
    /// (then the cogenerator discrepancy is zero and no step is possible).
    pub fn from_vop(vop: Vop<F>, consumed: InverseForm<F>) -> Result<Self> {
        let k = consumed.field().clone();
        let delta_prime = discrepancy(&vop.g, &consumed.augment(k.zero()));
        if k.is_zero(&delta_prime) {
            return Err(Error::InvalidArgument(
                "cogenerator has zero discrepancy".into(),
            ));
        }
        Ok(VopState {
            d: vop.d(),
            f: vop.f,
            g: vop.g,
            delta_prime,
            consumed,
            checked: false,
        })
    }

    /// Turns on per-step invariant verification (quadratic cost per step).
    pub fn set_checked(&mut self, on: bool) {
        self.checked = on;
    }

    pub fn f(&self) -> &Form<F> {
        &self.f
    }

    pub fn g(&self) -> &Form<F> {
        &self.g
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn delta_prime(&self) -> &F::Elem {
        &self.delta_prime
    }

    /// The prefix consumed so far.
    pub fn consumed(&self) -> &InverseForm<F> {
        &self.consumed
    }

    /// Total degree of the consumed prefix.
    pub fn j(&self) -> i64 {
        self.consumed.degree()
    }

    pub fn vop(&self) -> Vop<F> {
        Vop { f: self.f.clone(), g: self.g.clone() }
    }

    /// Discrepancy of `f` against the prefix extended by `a`, without
    /// stepping.
    pub fn next_discrepancy(&self, a: &F::Elem) -> F::Elem {
        let k = self.consumed.field();
        let s = self.consumed.to_sequence();
        let l = self.f.degree();
        let n = s.len() + 1;
        if l + 1 > n {
            return k.zero();
        }
        let coeffs = self.f.coeffs();
        let head = window_dot(k, &coeffs[..l], &s[n - 1 - l..]);
        k.add(&head, &k.mul(&coeffs[l], a))
    }

    /// Absorbs the next term `a` and returns the profile row it produces.
    pub fn step(&mut self, a: F::Elem) -> ProfileEntry<F> {
        let k = self.consumed.field().clone();
        self.consumed.push(a);
        let delta = discrepancy(&self.f, &self.consumed);
        let q = k.div(&delta, &self.delta_prime).expect("delta' is non-zero");
        let d_before = self.d;
        let delta_prime_before = self.delta_prime.clone();

        if !k.is_zero(&delta) {
            if self.d <= 0 {
                // f <- f - q x^(-d) g
                self.f.sub_scaled_shifted(&q, &self.g, (-self.d) as usize);
            } else {
                // (f, g) <- (x^d f - q g, f)
                let mut next = self.f.mul_x(self.d as usize);
                next.sub_scaled_shifted(&q, &self.g, 0);
                self.g = std::mem::replace(&mut self.f, next);
                self.delta_prime = delta.clone();
                self.d = -self.d;
            }
        }
        self.g.mul_z_in_place(1);
        self.d += 1;

        if self.checked {
            if let Err(msg) = self.check_invariants() {
                panic!("invariant violated after term {}: {msg}", self.consumed.len() - 1);
            }
        }

        ProfileEntry {
            k: self.consumed.len() - 1,
            lambda: self.f.degree(),
            delta: Some(delta),
            d_before: Some(d_before),
            delta_prime_before: Some(delta_prime_before),
            q: Some(q),
        }
    }

    /// Full invariant check: VOP properties, the bookkeeping of `d` and
    /// `Delta'`.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        self.vop().verify(&self.consumed)?;
        if self.d != self.vop().d() {
            return Err(format!("d = {} but |g| - |f| = {}", self.d, self.vop().d()));
        }
        let k = self.consumed.field();
        let dp = discrepancy(&self.g, &self.consumed.augment(k.zero()));
        if dp != self.delta_prime || k.is_zero(&dp) {
            return Err(format!(
                "delta' = {} but Delta(g; G) = {}",
                k.format(&self.delta_prime),
                k.format(&dp)
            ));
        }
        Ok(())
    }
}

/// Streaming synthesis over a sequence that may start with zeros.
#[derive(Clone, Debug)]
pub struct Synthesizer<F: Field> {
    field: F,
    zeros: usize,
    state: Option<VopState<F>>,
    profile: Vec<ProfileEntry<F>>,
    checked: bool,
}

impl<F: Field> Synthesizer<F> {
    pub fn new(field: F) -> Self {
        Synthesizer { field, zeros: 0, state: None, profile: Vec::new(), checked: false }
    }

    /// Continues from an existing state; profile rows start at the next term.
    pub fn resume(state: VopState<F>) -> Self {
        let field = state.consumed.field().clone();
        Synthesizer { field, zeros: 0, state: Some(state), profile: Vec::new(), checked: false }
    }

    pub fn with_checks(mut self, on: bool) -> Self {
        self.checked = on;
        if let Some(s) = self.state.as_mut() {
            s.set_checked(on);
        }
        self
    }

    /// Number of terms consumed.
    pub fn len(&self) -> usize {
        match &self.state {
            Some(s) => s.consumed.len(),
            None => self.zeros,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn state(&self) -> Option<&VopState<F>> {
        self.state.as_ref()
    }

    pub fn profile(&self) -> &[ProfileEntry<F>] {
        &self.profile
    }

    /// Discrepancy the next term `a` would produce (zero while every term so
    /// far is zero).
    pub fn next_discrepancy(&self, a: &F::Elem) -> F::Elem {
        match &self.state {
            Some(s) => s.next_discrepancy(a),
            None => self.field.zero(),
        }
    }

    pub fn push(&mut self, a: F::Elem) -> &ProfileEntry<F> {
        let entry = match self.state.as_mut() {
            Some(s) => s.step(a),
            None if self.field.is_zero(&a) => {
                self.zeros += 1;
                ProfileEntry {
                    k: self.zeros - 1,
                    lambda: 0,
                    delta: None,
                    d_before: None,
                    delta_prime_before: None,
                    q: None,
                }
            }
            None => {
                let mut seq = vec![self.field.zero(); self.zeros];
                seq.push(a);
                let inv = InverseForm::from_sequence(self.field.clone(), seq).expect("non-empty");
                let mut s = VopState::init(&inv).expect("non-zero prefix");
                s.set_checked(self.checked);
                if self.checked {
                    if let Err(msg) = s.check_invariants() {
                        panic!("invariant violated at initialisation: {msg}");
                    }
                }
                let k = s.consumed.len() - 1;
                let lambda = s.f.degree();
                self.state = Some(s);
                ProfileEntry {
                    k,
                    lambda,
                    delta: None,
                    d_before: None,
                    delta_prime_before: None,
                    q: None,
                }
            }
        };
        self.profile.push(entry);
        self.profile.last().unwrap()
    }

    /// The current generator pair. For an all-zero prefix of length `n`
    /// this is the degenerate pair `(1, z^(n+1))`.
    pub fn vop(&self) -> Vop<F> {
        match &self.state {
            Some(s) => s.vop(),
            None => Vop {
                f: Form::one(self.field.clone()),
                g: Form::monomial(self.field.clone(), 0, self.zeros + 1),
            },
        }
    }

    pub fn finish(self) -> Synthesis<F> {
        Synthesis {
            vop: self.vop(),
            degenerate: self.state.is_none(),
            field: self.field,
            profile: self.profile,
        }
    }
}

/// Result of a batch synthesis.
#[derive(Clone, Debug, PartialEq)]
pub struct Synthesis<F: Field> {
    pub field: F,
    pub vop: Vop<F>,
    pub profile: Vec<ProfileEntry<F>>,
    /// The sequence was all zero; `vop` is the conventional `(1, z^(n+1))`.
    pub degenerate: bool,
}

impl<F: Field> Synthesis<F> {
    pub fn lambda(&self) -> usize {
        self.vop.lambda()
    }

    /// `f(x, 1)`, monic.
    pub fn minimal_polynomial(&self) -> UniPoly<F> {
        self.vop.f.dehomogenize().expect("leading generator is in LL")
    }

    pub fn theta(&self) -> Theta<F> {
        minimal_leading_forms(&self.vop)
    }

    pub fn is_plcp(&self) -> bool {
        is_plcp(&self.field, &self.profile)
    }
}

/// Runs the construction over the whole of `inv`.
pub fn synthesize<F: Field>(inv: &InverseForm<F>) -> Synthesis<F> {
    synthesize_with(inv, false)
}

/// As [`synthesize`], optionally verifying every invariant after each step.
pub fn synthesize_with<F: Field>(inv: &InverseForm<F>, checked: bool) -> Synthesis<F> {
    let mut s = Synthesizer::new(inv.field().clone()).with_checks(checked);
    for a in inv.to_sequence() {
        s.push(a.clone());
    }
    s.finish()
}

pub fn linear_complexity<F: Field>(field: &F, seq: &[F::Elem]) -> Result<usize> {
    let inv = InverseForm::from_sequence(field.clone(), seq.to_vec())?;
    Ok(synthesize(&inv).lambda())
}

pub fn minimal_polynomial<F: Field>(field: &F, seq: &[F::Elem]) -> Result<UniPoly<F>> {
    let inv = InverseForm::from_sequence(field.clone(), seq.to_vec())?;
    Ok(synthesize(&inv).minimal_polynomial())
}

/// The monic leading forms of minimal degree in `<f, g>`.
#[derive(Clone, Debug, PartialEq)]
pub enum Theta<F: Field> {
    /// `|g| > |f|`: `f` is the only one.
    Unique(Form<F>),
    /// `|g| <= |f|`: `f + psi g` for every form `psi` of degree
    /// `psi_degree = |f| - |g|` (including `psi = 0`).
    Parametric { f: Form<F>, g: Form<F>, psi_degree: usize },
}

const ENUMERATION_LIMIT: u128 = 1 << 20;

impl<F: Field> Theta<F> {
    /// Number of elements, `None` over an infinite field with a parametric
    /// family.
    pub fn count(&self) -> Option<u128> {
        match self {
            Theta::Unique(_) => Some(1),
            Theta::Parametric { f, psi_degree, .. } => {
                let q = f.field().order()? as u128;
                q.checked_pow(*psi_degree as u32 + 1)
            }
        }
    }

    /// Expands the family into explicit forms.
    pub fn enumerate(&self) -> Result<Vec<Form<F>>> {
        match self {
            Theta::Unique(f) => Ok(vec![f.clone()]),
            Theta::Parametric { f, g, psi_degree } => {
                let k = f.field();
                let q = k.order().ok_or(Error::InfiniteField)?;
                let total = self.count().unwrap_or(u128::MAX);
                if total > ENUMERATION_LIMIT {
                    return Err(Error::TooMany(total));
                }
                let mut out = Vec::with_capacity(total as usize);
                for idx in 0..total as u64 {
                    let mut rest = idx;
                    let coeffs = (0..=*psi_degree)
                        .map(|_| {
                            let c = k.element(rest % q);
                            rest /= q;
                            c
                        })
                        .collect();
                    // A non-zero psi keeps degree psi_degree even with leading zeros.
                    let psi = Form::from_coeffs(k.clone(), coeffs);
                    out.push(f.add(&psi.mul(g))?);
                }
                Ok(out)
            }
        }
    }
}

/// `Theta` for a VOP.
pub fn minimal_leading_forms<F: Field>(vop: &Vop<F>) -> Theta<F> {
    let (fd, gd) = (vop.f.degree(), vop.g.degree());
    if gd > fd {
        Theta::Unique(vop.f.clone())
    } else {
        Theta::Parametric { f: vop.f.clone(), g: vop.g.clone(), psi_degree: fd - gd }
    }
}

/// Perfect linear complexity profile: the first term is non-zero and
/// `lambda_k = floor((k + 2) / 2)` for every prefix.
///
/// Evaluated two ways, from the complexities and from the steps (the shift
/// is `x`, i.e. a non-zero discrepancy with `d = 1`, exactly at odd `k`);
/// the two must agree.
pub fn is_plcp<F: Field>(field: &F, profile: &[ProfileEntry<F>]) -> bool {
    if profile.is_empty() || profile[0].k != 0 {
        return false;
    }
    let by_lambda = profile.iter().all(|e| e.lambda == (e.k + 2) / 2);

    let by_shift = profile[0].lambda == 1
        && profile[1..].iter().all(|e| {
            let prev = e.k - 1;
            let shift_x = e.delta.as_ref().is_some_and(|d| !field.is_zero(d)) && e.d_before == Some(1);
            shift_x == (prev % 2 == 1)
        });

    assert_eq!(
        by_lambda, by_shift,
        "profile and shift criteria for a perfect profile disagree"
    );
    by_lambda
}
