//! Seeded rational samples: numerators in [−9, 9], denominators in {1, 2, 3}.

use rand::{Rng, SeedableRng};
use rand_pcg::Pcg64;

use crate::linalg::{rat, Rational, Vector};

pub struct Sampler {
    rng: Pcg64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: Pcg64::seed_from_u64(seed) }
    }

    pub fn rational(&mut self) -> Rational {
        let n = self.rng.gen_range(-9i64..=9);
        let d = self.rng.gen_range(1i64..=3);
        rat(n, d)
    }

    pub fn vector(&mut self, n: usize) -> Vector {
        (0..n).map(|_| self.rational()).collect()
    }

    pub fn index(&mut self, bound: usize) -> usize {
        self.rng.gen_range(0..bound)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    pub fn small_int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn rng(&mut self) -> &mut Pcg64 {
        &mut self.rng
    }
}
