use crate::bivariate::UniPoly;
use crate::field::Field;

/// Euclidean-algorithm data: quotients `q_1, q_2, ...`, the degrees of the
/// remainders `s'_1, s'_2, ...` (`None` for zero) and
/// `c = q_k c_(k-1) + c_(k-2)` with `c_(-1) = 0`, `c_0 = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct EAResult<F: Field> {
    pub c: UniPoly<F>,
    pub quotients: Vec<UniPoly<F>>,
    pub remainder_degrees: Vec<Option<usize>>,
}

/// Runs the Euclidean algorithm on `s'_(-1) = x^(2k)` and
/// `s'_0 = s_0 x^(2k-1) + ... + s_(2k-1)`, stopping at the first remainder
/// of degree below `k` (or zero).
pub fn dai_ea<F: Field>(field: &F, k: usize, seq: &[F::Elem]) -> crate::Result<EAResult<F>> {
    if seq.len() != 2 * k {
        return Err(crate::Error::InvalidArgument(format!(
            "expected {} terms, got {}",
            2 * k,
            seq.len()
        )));
    }
    let mut prev = UniPoly::monomial(field.clone(), 2 * k);
    let mut cur = UniPoly::new(field.clone(), seq.iter().rev().cloned().collect());
    let mut c_prev = UniPoly::zero(field.clone());
    let mut c = UniPoly::one(field.clone());
    let mut quotients = Vec::new();
    let mut remainder_degrees = Vec::new();

    while cur.degree().is_some_and(|d| d >= k) {
        let (q, r) = prev.div_rem(&cur)?;
        let next_c = q.mul(&c).add(&c_prev);
        c_prev = std::mem::replace(&mut c, next_c);
        remainder_degrees.push(r.degree());
        quotients.push(q);
        prev = std::mem::replace(&mut cur, r);
    }
    Ok(EAResult { c, quotients, remainder_degrees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Gf2;

    fn rueppel(n: usize) -> Vec<bool> {
        (0..n).map(|i| (i + 1).is_power_of_two()).collect()
    }

    #[test]
    fn rueppel_small() {
        let out = dai_ea(&Gf2, 1, &rueppel(2)).unwrap();
        assert_eq!(out.quotients.len(), 1);
        assert_eq!(out.quotients[0].to_string(), "x+1");
        assert_eq!(out.c.to_string(), "x+1");

        let out = dai_ea(&Gf2, 2, &rueppel(4)).unwrap();
        let qs: Vec<String> = out.quotients.iter().map(|q| q.to_string()).collect();
        assert_eq!(qs, ["x+1", "x"]);
        assert_eq!(out.c.to_string(), "x^2+x+1");
        assert_eq!(out.remainder_degrees, [Some(2), Some(1)]);
    }

    #[test]
    fn c_recurrence() {
        let out = dai_ea(&Gf2, 5, &rueppel(10)).unwrap();
        let mut c = (UniPoly::zero(Gf2), UniPoly::one(Gf2));
        for q in &out.quotients {
            c = (c.1.clone(), q.mul(&c.1).add(&c.0));
        }
        assert_eq!(c.1, out.c);
        assert_eq!(out.c.degree(), Some(5));
    }

    #[test]
    fn wrong_length() {
        assert!(dai_ea(&Gf2, 2, &rueppel(3)).is_err());
    }
}
