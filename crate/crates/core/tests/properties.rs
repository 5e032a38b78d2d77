use proptest::prelude::*;
use seqideal::oracles::{
    berlekamp_massey, brute_force_min_poly, connection_matches, is_characteristic, reciprocal,
};
use seqideal::vop::synthesize_with;
use seqideal::{Field, Gf2, InverseForm, PrimeField, Rationals, Theta};

fn check<F: Field>(field: F, seq: Vec<F::Elem>) -> Result<(), TestCaseError> {
    let inv = InverseForm::from_sequence(field.clone(), seq.clone()).unwrap();
    let out = synthesize_with(&inv, true);
    prop_assert_eq!(out.vop.verify(&inv), Ok(()));

    let bf = brute_force_min_poly(&field, &seq).unwrap();
    prop_assert_eq!(bf.lambda, out.lambda());
    let mp = out.minimal_polynomial();
    prop_assert!(is_characteristic(&field, &seq, &mp));

    let bm = berlekamp_massey(&field, &seq);
    prop_assert_eq!(bm.l, out.lambda());
    if out.vop.g.degree() > out.vop.f.degree() {
        prop_assert!(connection_matches(&bm.gamma, bm.l, &mp));
        if mp.coeff(0) != field.zero() {
            prop_assert_eq!(bm.gamma.monic(), reciprocal(&mp));
        }
    }
    if let Theta::Unique(_) = out.theta() {
        prop_assert_eq!(bf.solution_dim, 0);
    }
    Ok(())
}

proptest! {
    #[test]
    fn gf2_sequences(seq in prop::collection::vec(any::<bool>(), 1..14)) {
        check(Gf2, seq)?;
    }

    #[test]
    fn gf5_sequences(seq in prop::collection::vec(0u64..5, 1..12)) {
        check(PrimeField::new(5).unwrap(), seq)?;
    }

    #[test]
    fn rational_sequences(seq in prop::collection::vec(-3i64..4, 1..10)) {
        let s = seq.iter().map(|&v| Rationals.from_i64(v)).collect();
        check(Rationals, s)?;
    }

    #[test]
    fn profile_is_monotone(seq in prop::collection::vec(0u64..7, 1..40)) {
        let k = PrimeField::new(7).unwrap();
        let out = synthesize_with(&InverseForm::from_sequence(k, seq).unwrap(), false);
        for w in out.profile.windows(2) {
            prop_assert!(w[1].lambda >= w[0].lambda);
            // lambda_(k+1) is lambda_k or k + 1 - lambda_k
            prop_assert!(w[1].lambda == w[0].lambda || w[1].lambda == w[1].k + 1 - w[0].lambda);
        }
    }
}
