use crate::bitpoly::{BitForm, Gf2Poly};
use crate::error::{Error, Result};

use super::BitVop;

/// A 2x2 matrix over GF(2)[x, z], acting on row vectors `(f, g)` from the
/// right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepMatrix {
    pub m: [[BitForm; 2]; 2],
}

impl StepMatrix {
    pub fn identity() -> Self {
        StepMatrix {
            m: [
                [BitForm::monomial(0, 0), BitForm::zero()],
                [BitForm::zero(), BitForm::monomial(0, 0)],
            ],
        }
    }

    /// `[[1, 0], [0, z]]`: the step from even `k`.
    pub fn e() -> Self {
        StepMatrix {
            m: [
                [BitForm::monomial(0, 0), BitForm::zero()],
                [BitForm::zero(), BitForm::monomial(0, 1)],
            ],
        }
    }

    /// `[[x, z], [1, 0]]`: the step from odd `k`.
    pub fn u() -> Self {
        StepMatrix {
            m: [
                [BitForm::monomial(1, 0), BitForm::monomial(0, 1)],
                [BitForm::monomial(0, 0), BitForm::zero()],
            ],
        }
    }

    /// `P = U E = [[x, z^2], [1, 0]]`.
    pub fn p() -> Self {
        StepMatrix {
            m: [
                [BitForm::monomial(1, 0), BitForm::monomial(0, 2)],
                [BitForm::monomial(0, 0), BitForm::zero()],
            ],
        }
    }

    pub fn mul(&self, other: &StepMatrix) -> StepMatrix {
        let entry = |i: usize, j: usize| {
            sum(&self.m[i][0].mul(&other.m[0][j]), &self.m[i][1].mul(&other.m[1][j]))
        };
        StepMatrix { m: [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]] }
    }

    pub fn pow(&self, mut e: u64) -> StepMatrix {
        let mut base = self.clone();
        let mut acc = StepMatrix::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `(f, g) M`.
    pub fn apply_row(&self, f: &BitForm, g: &BitForm) -> (BitForm, BitForm) {
        let col = |j: usize| sum(&f.mul(&self.m[0][j]), &g.mul(&self.m[1][j]));
        (col(0), col(1))
    }
}

fn sum(a: &BitForm, b: &BitForm) -> BitForm {
    a.add(b).expect("entries of a graded matrix product are homogeneous")
}

/// `(f^(n-1), g^(n-1))` as `(x + z, z^2) P^i` for `n - 1 = 2i + 1`, as
/// `(x + z, z^2) P^(i-1) U` for `n - 1 = 2i >= 2`, and `(x + z, z)` for
/// `n = 1`.
pub fn matrix_recurrence(n: usize) -> Result<BitVop> {
    if n < 1 {
        return Err(Error::InvalidArgument("length must be at least 1".into()));
    }
    let x_plus_z = BitForm::homogenize(&Gf2Poly::from_exponents(&[0, 1]));
    let k = n - 1;
    if k == 0 {
        return Ok(BitVop { f: x_plus_z, g: BitForm::monomial(0, 1) });
    }
    let i = (k / 2) as u64;
    let m = if k % 2 == 1 {
        StepMatrix::p().pow(i)
    } else {
        StepMatrix::p().pow(i - 1).mul(&StepMatrix::u())
    };
    let (f, g) = m.apply_row(&x_plus_z, &BitForm::monomial(0, 2));
    Ok(BitVop { f, g })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rueppel::ralg;

    #[test]
    fn one_p_step() {
        let x_plus_z = BitForm::homogenize(&Gf2Poly::from_exponents(&[0, 1]));
        let (f, g) = StepMatrix::p().apply_row(&x_plus_z, &BitForm::monomial(0, 2));
        assert_eq!(f.to_string(), "x^2+xz+z^2");
        assert_eq!(g.to_string(), "xz^2+z^3");
    }

    #[test]
    fn single_steps_from_the_start() {
        let x_plus_z = BitForm::homogenize(&Gf2Poly::from_exponents(&[0, 1]));
        let (f1, g1) = StepMatrix::e().apply_row(&x_plus_z, &BitForm::monomial(0, 1));
        assert_eq!(BitVop { f: f1.clone(), g: g1.clone() }, ralg(2).unwrap());
        let (f2, g2) = StepMatrix::u().apply_row(&f1, &g1);
        assert_eq!(BitVop { f: f2, g: g2 }, ralg(3).unwrap());
        assert_eq!(StepMatrix::u().mul(&StepMatrix::e()), StepMatrix::p());
    }

    #[test]
    fn matches_ralg() {
        for n in 1..=64 {
            assert_eq!(matrix_recurrence(n).unwrap(), ralg(n).unwrap(), "n = {n}");
        }
    }
}
