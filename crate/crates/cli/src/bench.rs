use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use seqideal::oracles::berlekamp_massey;
use seqideal::rueppel::Ralg;
use seqideal::vop::Synthesizer;
use seqideal::Gf2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Impl {
    Vop,
    Ralg,
    Bm,
    All,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub implementation: &'static str,
    pub n: usize,
    pub nanos: u128,
    pub lambda: usize,
}

impl BenchRow {
    pub fn csv(&self) -> String {
        format!("{},{},{},{}", self.implementation, self.n, self.nanos, self.lambda)
    }
}

pub const CSV_HEADER: &str = "impl,n,nanos,lambda";

pub fn random_gf2(n: usize, rng: &mut impl Rng) -> Vec<bool> {
    (0..n).map(|_| rng.gen()).collect()
}

pub fn time_vop(seq: &[bool]) -> (u128, usize) {
    let t = Instant::now();
    let mut s = Synthesizer::new(Gf2);
    for &b in seq {
        s.push(b);
    }
    let lambda = s.vop().lambda();
    (t.elapsed().as_nanos(), lambda)
}

pub fn time_bm(seq: &[bool]) -> (u128, usize) {
    let t = Instant::now();
    let l = berlekamp_massey(&Gf2, seq).l;
    (t.elapsed().as_nanos(), l)
}

pub fn time_ralg(n: usize) -> (u128, usize) {
    let t = Instant::now();
    let mut r = Ralg::new();
    for _ in 1..n {
        r.advance();
    }
    let lambda = r.f().degree();
    (t.elapsed().as_nanos(), lambda)
}

/// Rows for `n = step, 2 step, ...` up to `max_n`. Random inputs are drawn
/// from a ChaCha stream seeded with `seed`; `vop` and `bm` see the same input.
pub fn run(max_n: usize, step: usize, which: Impl, seed: u64) -> Vec<BenchRow> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    let step = step.max(1);
    let mut n = step;
    while n <= max_n {
        let seq = random_gf2(n, &mut rng);
        if matches!(which, Impl::Vop | Impl::All) {
            let (nanos, lambda) = time_vop(&seq);
            rows.push(BenchRow { implementation: "vop", n, nanos, lambda });
        }
        if matches!(which, Impl::Bm | Impl::All) {
            let (nanos, lambda) = time_bm(&seq);
            rows.push(BenchRow { implementation: "bm", n, nanos, lambda });
        }
        if matches!(which, Impl::Ralg | Impl::All) {
            let (nanos, lambda) = time_ralg(n);
            rows.push(BenchRow { implementation: "ralg", n, nanos, lambda });
        }
        n += step;
    }
    rows
}

/// Least-squares slope of `log y` against `log x`.
pub fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let pts: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let m = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / m;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / m;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}
