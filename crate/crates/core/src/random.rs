//! Reproducible random generic seeds and shifts.
//!
//! Entries are `integer + c/denominator` with the fractional class `c`
//! drawn from a small pool, so distinct rows share classes often and the
//! resulting lattices have nonempty `Ω`. Within each row below the top the
//! classes are distinct, which makes every sampled seed generic.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::rational::{frac, Rational};
use crate::tableau::{shift_dim, Seed, Shift};

#[derive(Clone, Debug)]
pub struct SeedSampler {
    pub n: usize,
    /// Integer parts are drawn from `0..=int_spread`.
    pub int_spread: i64,
    /// Fractional classes are drawn from `0..pool`; must be at least `n - 1`.
    pub pool: i64,
    /// Denominator of the fractional parts; must exceed `pool`.
    pub denominator: i64,
}

impl SeedSampler {
    pub fn new(n: usize) -> Self {
        SeedSampler {
            n,
            int_spread: 2,
            pool: n as i64,
            denominator: 11,
        }
    }

    pub fn with_int_spread(mut self, spread: i64) -> Self {
        self.int_spread = spread;
        self
    }

    pub fn with_pool(mut self, pool: i64) -> Self {
        self.pool = pool;
        self
    }

    pub fn sample(&self, rng: &mut impl Rng) -> Seed {
        assert!(
            self.pool >= self.n as i64 - 1,
            "class pool too small for a generic seed"
        );
        assert!(
            self.denominator > self.pool,
            "denominator must exceed the class pool"
        );
        let classes: Vec<i64> = (0..self.pool).collect();
        let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(self.n);
        for k in (1..=self.n).rev() {
            let picked: Vec<i64> = if k == self.n {
                (0..k)
                    .map(|_| *classes.choose(rng).expect("nonempty pool"))
                    .collect()
            } else {
                classes.choose_multiple(rng, k).copied().collect()
            };
            let row = picked
                .into_iter()
                .map(|c| {
                    let whole = rng.gen_range(0..=self.int_spread);
                    frac(whole * self.denominator + c, self.denominator)
                })
                .collect();
            rows.push(row);
        }
        Seed::new(rows).expect("sampled rows have the right shape")
    }
}

/// Uniform shift with every coordinate in `[-radius, radius]`.
pub fn random_shift(rng: &mut impl Rng, n: usize, radius: i64) -> Shift {
    Shift::new(
        n,
        (0..shift_dim(n))
            .map(|_| rng.gen_range(-radius..=radius))
            .collect(),
    )
    .expect("length matches")
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
