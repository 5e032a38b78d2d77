use crate::bivariate::UniPoly;
use crate::field::Field;

/// Output of LFSR synthesis: length `l` and connection polynomial `gamma`
/// with `gamma_0 = 1`, so that
/// `gamma_0 s_j + gamma_1 s_(j-1) + ... + gamma_l s_(j-l) = 0` for
/// `l <= j < n`.
#[derive(Clone, Debug, PartialEq)]
pub struct BMResult<F: Field> {
    pub l: usize,
    pub gamma: UniPoly<F>,
}

/// Massey's iteration with the usual `(L, B, b, m)` state.
pub fn berlekamp_massey<F: Field>(field: &F, seq: &[F::Elem]) -> BMResult<F> {
    let k = field;
    let mut c = vec![k.one()];
    let mut b_poly = vec![k.one()];
    let mut l = 0usize;
    let mut m = 1usize;
    let mut b = k.one();

    for n in 0..seq.len() {
        let mut d = seq[n].clone();
        for i in 1..=l.min(c.len() - 1) {
            d = k.add(&d, &k.mul(&c[i], &seq[n - i]));
        }
        if k.is_zero(&d) {
            m += 1;
            continue;
        }
        let coef = k.div(&d, &b).expect("b is non-zero");
        let prev = c.clone();
        if c.len() < b_poly.len() + m {
            c.resize(b_poly.len() + m, k.zero());
        }
        for (i, bi) in b_poly.iter().enumerate() {
            c[i + m] = k.sub(&c[i + m], &k.mul(&coef, bi));
        }
        if 2 * l <= n {
            l = n + 1 - l;
            b_poly = prev;
            b = d;
            m = 1;
        } else {
            m += 1;
        }
    }
    BMResult { l, gamma: UniPoly::new(k.clone(), c) }
}

/// Whether `gamma` is the connection polynomial of the characteristic
/// polynomial `c` of degree `l`, i.e. `gamma_i = c_(l-i)` up to a common
/// non-zero scalar, comparing all `l + 1` coefficients zero-padded.
pub fn connection_matches<F: Field>(gamma: &UniPoly<F>, l: usize, c: &UniPoly<F>) -> bool {
    let k = gamma.field();
    if c.degree() != Some(l) || gamma.degree().is_some_and(|d| d > l) {
        return false;
    }
    let g0 = gamma.coeff(0);
    let Ok(scale) = k.div(c.leading_coeff().unwrap(), &g0) else {
        return false;
    };
    (0..=l).all(|i| k.mul(&gamma.coeff(i), &scale) == c.coeff(l - i))
}
