use seqideal::rueppel::{delta_trace, ralg, rueppel_inverse_form, Ralg};
use seqideal::{synthesize, Field, Form, Gf2, InverseForm, Rationals, Synthesizer, Vop, VopState};

fn q(v: i64) -> num_rational::BigRational {
    Rationals.from_i64(v)
}

#[test]
fn rational_example_trace() {
    let seq = [1, 0, 0, 0, -1, 1, 0, 0, 1, -2];
    let inv = InverseForm::from_i64s(Rationals, &seq).unwrap();
    let mut s = Synthesizer::new(Rationals).with_checks(true);
    let mut pairs = Vec::new();
    for a in inv.to_sequence() {
        s.push(a.clone());
        let v = s.vop();
        pairs.push((v.f.to_string(), v.g.to_string()));
    }
    let profile = s.profile().to_vec();

    // (d, delta', delta, q) for k = 1..9
    let steps = [
        (0, 1, 0, 0),
        (1, 1, 0, 0),
        (2, 1, 0, 0),
        (3, 1, -1, -1),
        (-2, -1, 1, -1),
        (-1, -1, 1, -1),
        (0, -1, 1, -1),
        (1, -1, 1, -1),
        (0, 1, 1, 1),
    ];
    assert_eq!(profile[0].d_before, None);
    for (k, &(d, dp, delta, qq)) in steps.iter().enumerate() {
        let e = &profile[k + 1];
        assert_eq!(e.d_before, Some(d), "k = {}", k + 1);
        assert_eq!(e.delta_prime_before, Some(q(dp)), "k = {}", k + 1);
        assert_eq!(e.delta, Some(q(delta)), "k = {}", k + 1);
        assert_eq!(e.q, Some(q(qq)), "k = {}", k + 1);
    }

    let f7 = Form::from_i64s(Rationals, &[1, 1, 1, 1, 1]);
    let expected = [
        ("x", "z".to_string()),
        ("x", "z^2".into()),
        ("x", "z^3".into()),
        ("x", "z^4".into()),
        ("x^4+z^4", "xz".into()),
        ("x^4+x^3z+z^4", "xz^2".into()),
        ("x^4+x^3z+x^2z^2+z^4", "xz^3".into()),
        ("x^4+x^3z+x^2z^2+xz^3+z^4", "xz^4".into()),
        ("x^5+x^4z+x^3z^2+x^2z^3+2xz^4", f7.mul_z(1).to_string()),
        ("x^5+xz^4-z^5", f7.mul_z(2).to_string()),
    ];
    for (k, (f, g)) in expected.iter().enumerate() {
        assert_eq!(pairs[k].0, *f, "f at k = {k}");
        assert_eq!(pairs[k].1, *g, "g at k = {k}");
    }

    let out = s.finish();
    assert_eq!(out.lambda(), 5);
    assert_eq!(out.minimal_polynomial().to_string(), "x^5+x-1");
}

#[test]
fn rueppel_first_ten() {
    let seed = Vop { f: Form::from_i64s(Gf2, &[1, 1]), g: Form::monomial(Gf2, 0, 1) };
    let mut state = VopState::from_vop(seed, rueppel_inverse_form(1).unwrap()).unwrap();
    state.set_checked(true);
    let mut fs = vec![state.f().clone()];
    let mut gs = vec![state.g().clone()];
    let r = rueppel_inverse_form(10).unwrap();
    let mut rows = Vec::new();
    for a in &r.to_sequence()[1..] {
        rows.push(state.step(*a));
        fs.push(state.f().clone());
        gs.push(state.g().clone());
    }

    let f_text = [
        "x+z",
        "x+z",
        "x^2+xz+z^2",
        "x^2+xz+z^2",
        "x^3+x^2z+z^3",
        "x^3+x^2z+z^3",
        "x^4+x^3z+x^2z^2+z^4",
        "x^4+x^3z+x^2z^2+z^4",
        "x^5+x^4z+x^2z^3+xz^4+z^5",
        "x^5+x^4z+x^2z^3+xz^4+z^5",
    ];
    for k in 0..10 {
        assert_eq!(fs[k].to_string(), f_text[k], "f at k = {k}");
        let g = match k {
            0 => Form::monomial(Gf2, 0, 1),
            1 => Form::monomial(Gf2, 0, 2),
            _ if k % 2 == 0 => fs[k - 2].mul_z(1),
            _ => fs[k - 3].mul_z(2),
        };
        assert_eq!(gs[k], g, "g at k = {k}");
        if k >= 1 {
            let row = &rows[k - 1];
            assert_eq!(row.k, k);
            let even = k % 2 == 0;
            assert_eq!(row.delta, Some(even), "delta at k = {k}");
            let d = if k == 1 { 0 } else if even { 1 } else { 0 };
            assert_eq!(row.d_before, Some(d), "d at k = {k}");
        }
        let v = ralg(k + 1).unwrap();
        assert_eq!(v.f.to_form(), fs[k]);
        assert_eq!(v.g.to_form(), gs[k]);
    }
    assert!(delta_trace(10).unwrap().iter().all(seqideal::rueppel::delta_row_ok));
}

#[test]
fn rueppel_theta_parity() {
    for (k, v) in Ralg::new().take(40) {
        let theta = seqideal::minimal_leading_forms(&v.to_vop());
        let count = theta.count().unwrap();
        assert_eq!(count, if k % 2 == 1 { 1 } else { 2 }, "k = {k}");
        assert!(v.f.eval_at_01() && v.g.eval_at_01());
    }
}

#[test]
fn generic_engine_on_rueppel_prefixes() {
    for n in 2..200 {
        let out = synthesize(&rueppel_inverse_form(n).unwrap());
        assert_eq!(out.vop, ralg(n).unwrap().to_vop(), "n = {n}");
        assert!(out.is_plcp());
    }
}
