//! Sweeps over Rueppel prefixes. Each check covers every length up to its
//! bound in one streaming pass where the underlying construction allows it.

use serde::{Deserialize, Serialize};

use seqideal::bitpoly::{BitForm, Gf2Poly};
use seqideal::oracles::{berlekamp_massey, dai_ea, reciprocal};
use seqideal::rueppel::{
    closed_form, delta_row_ok, matrix_recurrence, quad_ext_identity, ralg, rueppel_bit,
    rueppel_inverse_form, rueppel_sequence, BitVop, Ralg, StepMatrix,
};
use seqideal::vop::{Synthesizer, VopState};
use seqideal::{Form, Gf2, UniPoly, Vop};

/// Lengths up to which the matrix products are checked for every `n`.
pub const MATRIX_FULL_SWEEP: usize = 1 << 10;
/// Largest `k` for which the Euclidean and quadratic-extension checks run
/// for every `k`; beyond it only the endpoint is checked.
pub const POLY_FULL_SWEEP: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, failure: Option<String>, ok: String) -> Self {
        match failure {
            None => Check { name: name.into(), passed: true, detail: ok },
            Some(why) => Check { name: name.into(), passed: false, detail: why },
        }
    }
}

/// `lambda = floor((n + 1) / 2)`, `f(0, 1) = g(0, 1) = 1`, the size of
/// `Theta` by parity, and `f^(2k-1) = f^(2k-2)`, for every `n <= max_n`.
pub fn check_plcp(max_n: usize) -> Check {
    let mut failure = None;
    let mut prev_f: Option<BitForm> = None;
    for (k, v) in Ralg::new().take(max_n) {
        let n = k + 1;
        if v.lambda() != n.div_ceil(2) {
            failure = Some(format!("n = {n}: lambda {} != {}", v.lambda(), n.div_ceil(2)));
        } else if !v.f.eval_at_01() || !v.g.eval_at_01() {
            failure = Some(format!("n = {n}: f(0,1) or g(0,1) is zero"));
        } else if (v.g.degree() > v.f.degree()) != (k % 2 == 1) {
            failure = Some(format!("n = {n}: Theta size has the wrong parity"));
        } else if k % 2 == 1 && prev_f.as_ref() != Some(&v.f) {
            failure = Some(format!("n = {n}: f changed at odd k"));
        }
        if failure.is_some() {
            break;
        }
        prev_f = Some(v.f);
    }
    Check::new("plcp", failure, format!("lambda = floor((n+1)/2) for all n <= {max_n}"))
}

/// Linear complexity of every prefix up to `max_n` via the general engine
/// (streamed once over the longest prefix).
pub fn check_engine_plcp(max_n: usize) -> Check {
    let mut s = Synthesizer::new(Gf2);
    let mut failure = None;
    for i in 0..max_n {
        let e = s.push(rueppel_bit(i));
        if e.lambda != (i + 2) / 2 {
            failure = Some(format!("n = {}: lambda {} != {}", i + 1, e.lambda, (i + 2) / 2));
            break;
        }
    }
    if failure.is_none() && max_n >= 1 && !s.clone().finish().is_plcp() {
        failure = Some("profile rejected as perfect".into());
    }
    Check::new("engine-plcp", failure, format!("general engine agrees for all n <= {max_n}"))
}

/// `ralg(2l).f` equals the closed form for every power of two `l`, `2l <= max_n`.
pub fn check_closed_form(max_n: usize) -> Check {
    let mut failure = None;
    let mut count = 0;
    let mut next_l = 1usize;
    for (k, v) in Ralg::new().take(max_n) {
        if k + 1 == 2 * next_l {
            let expect = closed_form(next_l as u64).expect("power of two");
            if v.f != expect {
                failure = Some(format!("l = {next_l}: {} != {expect}", v.f));
                break;
            }
            if v.f.weight() != next_l.trailing_zeros() as usize + 2 {
                failure = Some(format!("l = {next_l}: weight {}", v.f.weight()));
                break;
            }
            count += 1;
            next_l *= 2;
        }
    }
    Check::new("closed-form", failure, format!("{count} powers of two checked, 2l <= {max_n}"))
}

/// The general engine, started from `(x + z, z)`, has `Delta_k = k mod 2`
/// and `d_k = 1` at odd `k` for every `k <= n - 2`.
pub fn check_delta(n: usize, debug_asserts: bool) -> Check {
    if n < 2 {
        return Check::new("delta", None, "nothing to check for n < 2".into());
    }
    let seed = Vop { f: Form::from_i64s(Gf2, &[1, 1]), g: Form::monomial(Gf2, 0, 1) };
    let mut state = VopState::from_vop(seed, rueppel_inverse_form(1).unwrap()).unwrap();
    state.set_checked(debug_asserts);
    let mut failure = None;
    let mut ralg_walk = Ralg::new();
    for i in 1..n {
        let row = state.step(rueppel_bit(i));
        ralg_walk.advance();
        if !delta_row_ok(&row) {
            failure = Some(format!(
                "k = {}: delta {:?}, d {:?}",
                row.k - 1,
                row.delta,
                row.d_before
            ));
            break;
        }
        if state.f().degree() != ralg_walk.f().degree() {
            failure = Some(format!("k = {}: engine and ralg differ", row.k));
            break;
        }
    }
    if failure.is_none() && n >= 2 {
        let v = ralg_walk.vop();
        if v.to_vop() != state.vop() {
            failure = Some(format!("n = {n}: engine pair differs from ralg"));
        }
    }
    Check::new("delta", failure, format!("parity holds for all k <= {}", n - 2))
}

/// Row-vector times `E`/`U` for every `n <= max_n`, and the closed `P`-power
/// expressions for every `n <= min(max_n, 1024)` and at `n = max_n`.
pub fn check_matrix(max_n: usize) -> Check {
    let mut failure = None;
    let start = ralg(1).unwrap();
    let (mut f, mut g) = (start.f, start.g);
    for (k, v) in Ralg::new().take(max_n) {
        if (BitVop { f: f.clone(), g: g.clone() }) != v {
            failure = Some(format!("row product differs at n = {}", k + 1));
            break;
        }
        let m = if k % 2 == 0 { StepMatrix::e() } else { StepMatrix::u() };
        (f, g) = m.apply_row(&f, &g);
        let n = k + 1;
        if (n <= MATRIX_FULL_SWEEP || n == max_n) && matrix_recurrence(n).unwrap() != v {
            failure = Some(format!("P-power form differs at n = {n}"));
            break;
        }
    }
    Check::new(
        "matrix",
        failure,
        if max_n > MATRIX_FULL_SWEEP {
            format!("E/U products for n <= {max_n}, P powers for n <= {MATRIX_FULL_SWEEP} and n = {max_n}")
        } else {
            format!("E/U products and P powers for n <= {max_n}")
        },
    )
}

fn ks(max_n: usize) -> Vec<usize> {
    let top = max_n / 2;
    let mut ks: Vec<usize> = (1..=top.min(POLY_FULL_SWEEP)).collect();
    if top > POLY_FULL_SWEEP {
        ks.push(top);
    }
    ks
}

/// `f^(2k-1)(x, 1)` for each requested `k`, from one Ralg pass.
fn rueppel_c(ks: &[usize]) -> Vec<Gf2Poly> {
    let mut out = Vec::with_capacity(ks.len());
    let mut walk = Ralg::new();
    for &k in ks {
        while walk.k() < 2 * k - 1 {
            walk.advance();
        }
        out.push(walk.f().dehomogenize().expect("leading form"));
    }
    out
}

/// The Euclidean algorithm on `(r_0, ..., r_(2k-1))` gives `q_1 = x + 1`,
/// `q_i = x` after, and `c_k = f^(2k-1)(x, 1)`; Berlekamp–Massey on the same
/// prefix returns `(k, reciprocal of c_k)`.
pub fn check_dai(max_n: usize) -> Check {
    let ks = ks(max_n);
    let cs = rueppel_c(&ks);
    let x = UniPoly::monomial(Gf2, 1);
    let x1 = UniPoly::from_i64s(Gf2, &[1, 1]);
    let mut failure = None;
    for (&k, c) in ks.iter().zip(&cs) {
        let seq = rueppel_sequence(2 * k).unwrap().to_vec();
        let ea = dai_ea(&Gf2, k, &seq).expect("length 2k");
        let c = c.to_unipoly();
        let quotients_ok = ea.quotients.len() == k
            && ea.quotients[0] == x1
            && ea.quotients[1..].iter().all(|q| *q == x);
        if !quotients_ok {
            failure = Some(format!("k = {k}: unexpected quotients"));
            break;
        }
        if ea.c != c {
            failure = Some(format!("k = {k}: c_k = {} but f(x,1) = {c}", ea.c));
            break;
        }
        let bm = berlekamp_massey(&Gf2, &seq);
        if bm.l != k || bm.gamma != reciprocal(&c) {
            failure = Some(format!("k = {k}: LFSR synthesis gave ({}, {})", bm.l, bm.gamma));
            break;
        }
    }
    let detail = match ks.last() {
        Some(&top) if top > POLY_FULL_SWEEP => format!("k <= {POLY_FULL_SWEEP} and k = {top}"),
        Some(&top) => format!("k <= {top}"),
        None => "nothing to check for n < 2".into(),
    };
    Check::new("dai", failure, detail)
}

pub fn check_quadext(max_n: usize) -> Check {
    let ks = ks(max_n);
    let failure = ks
        .iter()
        .find(|&&k| !quad_ext_identity(k as u64))
        .map(|k| format!("identity fails at k = {k}"));
    let detail = match ks.last() {
        Some(&top) if top > POLY_FULL_SWEEP => format!("k <= {POLY_FULL_SWEEP} and k = {top}"),
        Some(&top) => format!("k <= {top}"),
        None => "nothing to check for n < 2".into(),
    };
    Check::new("quadext", failure, detail)
}
