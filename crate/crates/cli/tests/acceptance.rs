//! Acceptance suite: one PASS/FAIL line per criterion.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use seqideal::oracles::{berlekamp_massey, brute_force_min_poly, connection_matches, reciprocal};
use seqideal::rueppel::{delta_parity_check, ralg, rueppel_inverse_form, Ralg};
use seqideal::vop::{synthesize, Synthesis, Synthesizer, VopState};
use seqideal::{Field, Form, Gf2, InverseForm, PrimeField, Rationals, Vop};
use seqideal_cli::bench::{loglog_slope, random_gf2, time_vop};
use seqideal_cli::verify;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn from_check(c: verify::Check) -> Result<String, String> {
    if c.passed {
        Ok(c.detail)
    } else {
        Err(format!("{}: {}", c.name, c.detail))
    }
}

fn c1_rueppel_conjecture() -> Outcome {
    let a = from_check(verify::check_plcp(1 << 15))?;
    let b = from_check(verify::check_engine_plcp(1 << 12))?;
    Ok(format!("ralg: {a}; {b}"))
}

fn c2_parity() -> Outcome {
    // One pass over the longest prefix covers every shorter one.
    let d = from_check(verify::check_delta(1 << 13, false))?;
    for n in [2, 3, 10, 100, 1000] {
        ensure(delta_parity_check(n).unwrap(), || format!("n = {n}"))?;
    }
    Ok(d)
}

fn c3_closed_form() -> Outcome {
    let c = from_check(verify::check_closed_form(1 << 13))?;
    ensure(c.starts_with("13 "), || format!("expected 13 powers of two, got {c}"))?;
    Ok(c)
}

fn c4_rational_example() -> Outcome {
    let k = Rationals;
    let inv = InverseForm::from_i64s(k, &[1, 0, 0, 0, -1, 1, 0, 0, 1, -2]).unwrap();
    let mut s = Synthesizer::new(k).with_checks(true);
    let mut fs = Vec::new();
    for a in inv.to_sequence() {
        s.push(a.clone());
        fs.push(s.vop().f.to_string());
    }
    let trace = [
        (0, 0, 0),
        (1, 0, 0),
        (2, 0, 0),
        (3, -1, -1),
        (-2, 1, -1),
        (-1, 1, -1),
        (0, 1, -1),
        (1, 1, -1),
        (0, 1, 1),
    ];
    for (i, &(d, delta, q)) in trace.iter().enumerate() {
        let e = &s.profile()[i + 1];
        ensure(
            e.d_before == Some(d) && e.delta == Some(k.from_i64(delta)) && e.q == Some(k.from_i64(q)),
            || format!("row k = {}: {:?}", i + 1, e),
        )?;
    }
    ensure(fs[4] == "x^4+z^4" && fs[8] == "x^5+x^4z+x^3z^2+x^2z^3+2xz^4", || {
        format!("intermediate f: {fs:?}")
    })?;
    let out = s.finish();
    ensure(out.vop.f.to_string() == "x^5+xz^4-z^5", || format!("f = {}", out.vop.f))?;
    ensure(out.vop.g.to_string() == "x^4z^2+x^3z^3+x^2z^4+xz^5+z^6", || format!("g = {}", out.vop.g))?;
    ensure(out.lambda() == 5, || format!("lambda = {}", out.lambda()))?;
    let mp = out.minimal_polynomial().to_string();
    ensure(mp == "x^5+x-1", || format!("min poly {mp}"))?;
    Ok("f, g, lambda, min poly and (d, Delta, q) for k = 0..9".into())
}

fn c5_binary_example() -> Outcome {
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
    let seed = Vop { f: Form::from_i64s(Gf2, &[1, 1]), g: Form::monomial(Gf2, 0, 1) };
    let mut state = VopState::from_vop(seed, rueppel_inverse_form(1).unwrap()).unwrap();
    let r = rueppel_inverse_form(10).unwrap();
    let mut fs = vec![state.f().clone()];
    let mut gs = vec![state.g().clone()];
    let mut rows = Vec::new();
    for a in &r.to_sequence()[1..] {
        rows.push(state.step(*a));
        fs.push(state.f().clone());
        gs.push(state.g().clone());
    }
    for k in 0..10 {
        ensure(fs[k].to_string() == f_text[k], || format!("f at k = {k}: {}", fs[k]))?;
        let g = match k {
            0 => Form::monomial(Gf2, 0, 1),
            1 => Form::monomial(Gf2, 0, 2),
            _ if k % 2 == 0 => fs[k - 2].mul_z(1),
            _ => fs[k - 3].mul_z(2),
        };
        ensure(gs[k] == g, || format!("g at k = {k}: {}", gs[k]))?;
        if k >= 1 {
            let even = k % 2 == 0;
            let d = if k == 1 || !even { 0 } else { 1 };
            let row = &rows[k - 1];
            ensure(row.delta == Some(even) && row.d_before == Some(d), || {
                format!("row k = {k}: {row:?}")
            })?;
        }
        let v = ralg(k + 1).unwrap();
        ensure(v.f.to_form() == fs[k] && v.g.to_form() == gs[k], || format!("ralg at k = {k}"))?;
    }
    Ok("f, g, Delta, d for k = 0..9".into())
}

/// Every sequence used by the oracle criteria, with its synthesis.
struct Corpus {
    gf2: Vec<(Vec<bool>, Synthesis<Gf2>)>,
    gf5: Vec<(Vec<u64>, Synthesis<PrimeField>)>,
    gf7: Vec<(Vec<u64>, Synthesis<PrimeField>)>,
    q: Vec<(Vec<<Rationals as Field>::Elem>, Synthesis<Rationals>)>,
}

fn build_corpus() -> Corpus {
    let mut gf2 = Vec::new();
    for len in 1..=12usize {
        for bits in 0u32..(1 << len) {
            let seq: Vec<bool> = (0..len).map(|i| bits >> i & 1 == 1).collect();
            let out = synthesize(&InverseForm::from_sequence(Gf2, seq.clone()).unwrap());
            gf2.push((seq, out));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let prime = |p: u64, rng: &mut ChaCha8Rng| {
        let k = PrimeField::new(p).unwrap();
        (0..500)
            .map(|_| {
                let len = rng.gen_range(1..=10);
                let seq: Vec<u64> = (0..len).map(|_| rng.gen_range(0..p)).collect();
                let out = synthesize(&InverseForm::from_sequence(k, seq.clone()).unwrap());
                (seq, out)
            })
            .collect::<Vec<_>>()
    };
    let gf5 = prime(5, &mut rng);
    let gf7 = prime(7, &mut rng);
    let q = (0..500)
        .map(|_| {
            let len = rng.gen_range(1..=10);
            let seq: Vec<_> = (0..len)
                .map(|_| {
                    let num = rng.gen_range(-9i64..=9);
                    let den = rng.gen_range(1i64..=4);
                    Rationals.div(&Rationals.from_i64(num), &Rationals.from_i64(den)).unwrap()
                })
                .collect();
            let out = synthesize(&InverseForm::from_sequence(Rationals, seq.clone()).unwrap());
            (seq, out)
        })
        .collect();
    Corpus { gf2, gf5, gf7, q }
}

fn lambda_agrees<F: Field>(field: &F, corpus: &[(Vec<F::Elem>, Synthesis<F>)]) -> Result<(), String> {
    for (seq, out) in corpus {
        let bf = brute_force_min_poly(field, seq).map_err(|e| e.to_string())?;
        ensure(bf.lambda == out.lambda(), || {
            format!("{}: {:?} brute {} vs {}", field.spec(), seq, bf.lambda, out.lambda())
        })?;
    }
    Ok(())
}

fn c6_oracle(corpus: &Corpus) -> Outcome {
    let mut theta_checked = 0;
    for (seq, out) in &corpus.gf2 {
        let bf = brute_force_min_poly(&Gf2, seq).map_err(|e| e.to_string())?;
        ensure(bf.lambda == out.lambda(), || format!("{seq:?}: lambda"))?;
        let mp = out.minimal_polynomial();
        ensure(bf.witnesses.contains(&mp), || format!("{seq:?}: {mp} not a witness"))?;
        if seq.len() <= 10 {
            let theta: BTreeSet<String> = out
                .theta()
                .enumerate()
                .map_err(|e| e.to_string())?
                .iter()
                .map(|f| f.dehomogenize().unwrap().to_string())
                .collect();
            let wit: BTreeSet<String> = bf.witnesses.iter().map(|w| w.to_string()).collect();
            ensure(theta == wit, || format!("{seq:?}: Theta {theta:?} vs {wit:?}"))?;
            theta_checked += 1;
        }
    }
    lambda_agrees(&PrimeField::new(5).unwrap(), &corpus.gf5)?;
    lambda_agrees(&PrimeField::new(7).unwrap(), &corpus.gf7)?;
    lambda_agrees(&Rationals, &corpus.q)?;
    Ok(format!(
        "{} GF(2) sequences ({theta_checked} with Theta), 500 each over GF(5), GF(7), Q",
        corpus.gf2.len()
    ))
}

fn bm_agrees<F: Field>(field: &F, corpus: &[(Vec<F::Elem>, Synthesis<F>)]) -> Result<usize, String> {
    let mut gamma_checked = 0;
    for (seq, out) in corpus {
        let bm = berlekamp_massey(field, seq);
        ensure(bm.l == out.lambda(), || format!("{}: {seq:?}: L = {}", field.spec(), bm.l))?;
        if out.vop.g.degree() > out.vop.f.degree() {
            let mp = out.minimal_polynomial();
            ensure(connection_matches(&bm.gamma, bm.l, &mp), || {
                format!("{}: {seq:?}: gamma = {}", field.spec(), bm.gamma)
            })?;
            if !field.is_zero(&mp.coeff(0)) {
                ensure(bm.gamma.monic() == reciprocal(&mp), || format!("{seq:?}: reciprocal"))?;
            }
            gamma_checked += 1;
        }
    }
    Ok(gamma_checked)
}

fn c7_bm(corpus: &Corpus) -> Outcome {
    let mut g = bm_agrees(&Gf2, &corpus.gf2)?;
    g += bm_agrees(&PrimeField::new(5).unwrap(), &corpus.gf5)?;
    g += bm_agrees(&PrimeField::new(7).unwrap(), &corpus.gf7)?;
    g += bm_agrees(&Rationals, &corpus.q)?;
    let mut walk = Ralg::new();
    for k in 1..=256usize {
        while walk.k() < 2 * k - 1 {
            walk.advance();
        }
        let c = walk.f().dehomogenize().unwrap().to_unipoly();
        let seq = rueppel_inverse_form(2 * k).unwrap().into_sequence();
        let bm = berlekamp_massey(&Gf2, &seq);
        ensure(bm.l == k && bm.gamma == reciprocal(&c), || format!("Rueppel k = {k}"))?;
    }
    Ok(format!("all corpora, {g} connection polynomials compared, Rueppel 2k <= 512"))
}

fn c8_invariants(corpus: &Corpus) -> Outcome {
    fn all<F: Field>(field: &F, corpus: &[(Vec<F::Elem>, Synthesis<F>)]) -> Result<usize, String> {
        for (seq, out) in corpus {
            let inv = InverseForm::from_sequence(field.clone(), seq.clone()).unwrap();
            out.vop.verify(&inv).map_err(|e| format!("{}: {seq:?}: {e}", field.spec()))?;
        }
        Ok(corpus.len())
    }
    let mut count = all(&Gf2, &corpus.gf2)?;
    count += all(&PrimeField::new(5).unwrap(), &corpus.gf5)?;
    count += all(&PrimeField::new(7).unwrap(), &corpus.gf7)?;
    count += all(&Rationals, &corpus.q)?;
    for n in 1..=512 {
        let inv = rueppel_inverse_form(n).unwrap();
        ralg(n).unwrap().to_vop().verify(&inv).map_err(|e| format!("Rueppel n = {n}: {e}"))?;
        count += 1;
    }
    Ok(format!("{count} pairs verified"))
}

fn c9_dai() -> Outcome {
    from_check(verify::check_dai(512))
}

fn c10_quadext() -> Outcome {
    from_check(verify::check_quadext(512))
}

fn c11_matrix() -> Outcome {
    from_check(verify::check_matrix(1 << 10))
}

fn c12_complexity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut points = Vec::new();
    // Half-octave grid over [2^10, 2^14]; best of three runs per size.
    for i in 0..=8 {
        let n = (1024.0 * 2f64.powf(i as f64 / 2.0)).round() as usize;
        let seq = random_gf2(n, &mut rng);
        let best = (0..3).map(|_| time_vop(&seq).0).min().unwrap();
        points.push((n as f64, best as f64));
    }
    let slope = loglog_slope(&points);
    ensure((slope - 2.0).abs() <= 0.4, || format!("slope {slope:.3}"))?;
    Ok(format!("log-log slope {slope:.3}"))
}

fn main() {
    let corpus_start = Instant::now();
    let corpus = build_corpus();
    let corpus_time = corpus_start.elapsed();

    let criteria: Vec<Criterion> = vec![
        ("rueppel conjecture", Box::new(c1_rueppel_conjecture)),
        ("discrepancy parity", Box::new(c2_parity)),
        ("closed form", Box::new(c3_closed_form)),
        ("rational worked example", Box::new(c4_rational_example)),
        ("binary worked example", Box::new(c5_binary_example)),
        ("oracle equivalence", Box::new(|| c6_oracle(&corpus))),
        ("berlekamp-massey cross-check", Box::new(|| c7_bm(&corpus))),
        ("structural invariants", Box::new(|| c8_invariants(&corpus))),
        ("euclidean algorithm", Box::new(c9_dai)),
        ("quadratic extension identity", Box::new(c10_quadext)),
        ("matrix recurrence", Box::new(c11_matrix)),
        ("quadratic complexity", Box::new(c12_complexity)),
    ];

    println!("acceptance (corpus built in {:.2?})", corpus_time);
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let el = t.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{el:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} [{el:.2?}]", i + 1);
            }
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
