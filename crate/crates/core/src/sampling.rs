//! Seeded, reproducible rational sampling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactlp::{is_zero_vector, rat, Rational};

/// Draws rationals `p/q` with `1 ≤ q ≤ 8` and `|p/q| ≤ 4`.
#[derive(Clone, Debug)]
pub struct RationalSampler {
    rng: ChaCha8Rng,
}

impl RationalSampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rational(&mut self) -> Rational {
        let den: i64 = self.rng.gen_range(1..=8);
        let num: i64 = self.rng.gen_range(-4 * den..=4 * den);
        rat(num, den)
    }

    pub fn vector(&mut self, n: usize) -> Vec<Rational> {
        (0..n).map(|_| self.rational()).collect()
    }

    pub fn nonzero_vector(&mut self, n: usize) -> Vec<Rational> {
        loop {
            let v = self.vector(n);
            if !is_zero_vector(&v) {
                return v;
            }
        }
    }
}
