use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use seqideal::vop::Synthesizer;
use seqideal::Gf2;

/// A binary sequence of length `n` with a perfect linear complexity profile:
/// `s_0 = 1`, then each next term is chosen so that the discrepancy is 1
/// when the last index is odd and random when it is even.
pub fn random_plcp(n: usize, seed: u64) -> Vec<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = Synthesizer::new(Gf2);
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let a = if i == 0 {
            true
        } else {
            let k = i - 1;
            // The discrepancy is affine in the new term with slope lc(f) = 1.
            let base = s.next_discrepancy(&false);
            let want = if k % 2 == 1 { true } else { rng.gen() };
            base ^ want
        };
        s.push(a);
        out.push(a);
    }
    out
}
