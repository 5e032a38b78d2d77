use crate::bivariate::UniPoly;
use crate::error::{Error, Result};
use crate::field::Field;

pub const DEFAULT_LENGTH_BOUND: usize = 16;

const WITNESS_LIMIT: u128 = 1 << 20;

/// Minimal characteristic polynomials found by linear algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct BruteForce<F: Field> {
    pub lambda: usize,
    /// Every monic characteristic polynomial of degree `lambda` over a
    /// finite field; over the rationals only the solution with free
    /// coefficients set to zero.
    pub witnesses: Vec<UniPoly<F>>,
    /// Dimension of the affine solution space.
    pub solution_dim: usize,
}

/// Whether `c_l s_(k+l) + ... + c_0 s_k = 0` for `0 <= k <= n - l - 1`.
pub fn is_characteristic<F: Field>(field: &F, seq: &[F::Elem], c: &UniPoly<F>) -> bool {
    let Some(l) = c.degree() else { return false };
    (0..seq.len().saturating_sub(l)).all(|k| {
        let acc = (0..=l).fold(field.zero(), |acc, i| {
            field.add(&acc, &field.mul(&c.coeff(i), &seq[k + i]))
        });
        field.is_zero(&acc)
    })
}

pub fn brute_force_min_poly<F: Field>(field: &F, seq: &[F::Elem]) -> Result<BruteForce<F>> {
    brute_force_min_poly_bounded(field, seq, DEFAULT_LENGTH_BOUND)
}

/// For `l = 0, 1, ...` solves the characteristic equations for a monic
/// degree-`l` polynomial; stops at the first consistent system.
pub fn brute_force_min_poly_bounded<F: Field>(
    field: &F,
    seq: &[F::Elem],
    bound: usize,
) -> Result<BruteForce<F>> {
    let n = seq.len();
    if n > bound {
        return Err(Error::TooLong { len: n, bound });
    }
    for l in 0..=n {
        // Unknowns c_0..c_(l-1); row k: sum_i c_i s_(k+i) = -s_(k+l).
        let rows: Vec<Vec<F::Elem>> = (0..n - l)
            .map(|k| {
                let mut row: Vec<_> = seq[k..k + l].to_vec();
                row.push(field.neg(&seq[k + l]));
                row
            })
            .collect();
        if let Some(sol) = solve(field, rows, l) {
            let witnesses = expand(field, &sol, l)?;
            return Ok(BruteForce { lambda: l, witnesses, solution_dim: sol.basis.len() });
        }
    }
    unreachable!("degree n is always feasible")
}

struct Solution<E> {
    particular: Vec<E>,
    basis: Vec<Vec<E>>,
}

/// Reduced row echelon form of an augmented system with `vars` unknowns.
fn solve<F: Field>(k: &F, mut rows: Vec<Vec<F::Elem>>, vars: usize) -> Option<Solution<F::Elem>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..vars {
        let Some(p) = (r..rows.len()).find(|&i| !k.is_zero(&rows[i][col])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = k.inv(&rows[r][col]).expect("pivot is non-zero");
        for v in rows[r].iter_mut() {
            *v = k.mul(v, &inv);
        }
        for i in 0..rows.len() {
            if i != r && !k.is_zero(&rows[i][col]) {
                let factor = rows[i][col].clone();
                for j in 0..=vars {
                    let t = k.mul(&factor, &rows[r][j]);
                    rows[i][j] = k.sub(&rows[i][j], &t);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if rows[r..].iter().any(|row| !k.is_zero(&row[vars])) {
        return None;
    }

    let mut particular = vec![k.zero(); vars];
    for (i, &col) in pivots.iter().enumerate() {
        particular[col] = rows[i][vars].clone();
    }
    let free: Vec<usize> = (0..vars).filter(|c| !pivots.contains(c)).collect();
    let basis = free
        .iter()
        .map(|&fc| {
            let mut v = vec![k.zero(); vars];
            v[fc] = k.one();
            for (i, &col) in pivots.iter().enumerate() {
                v[col] = k.neg(&rows[i][fc]);
            }
            v
        })
        .collect();
    Some(Solution { particular, basis })
}

fn to_poly<F: Field>(k: &F, mut c: Vec<F::Elem>) -> UniPoly<F> {
    c.push(k.one());
    UniPoly::new(k.clone(), c)
}

fn expand<F: Field>(k: &F, sol: &Solution<F::Elem>, l: usize) -> Result<Vec<UniPoly<F>>> {
    let dim = sol.basis.len();
    let Some(q) = k.order() else {
        return Ok(vec![to_poly(k, sol.particular.clone())]);
    };
    let total = (q as u128).checked_pow(dim as u32).unwrap_or(u128::MAX);
    if total > WITNESS_LIMIT {
        return Err(Error::TooMany(total));
    }
    let mut out = Vec::with_capacity(total as usize);
    for idx in 0..total as u64 {
        let mut v = sol.particular.clone();
        let mut rest = idx;
        for b in &sol.basis {
            let t = k.element(rest % q);
            rest /= q;
            for j in 0..l {
                v[j] = k.add(&v[j], &k.mul(&t, &b[j]));
            }
        }
        out.push(to_poly(k, v));
    }
    Ok(out)
}
