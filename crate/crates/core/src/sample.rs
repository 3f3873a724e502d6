//! Seeded random monomials and series for sampled verifiers and tests.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chain::Fundamental;
use crate::monomial::Monomial;
use crate::series::{Series, Term};
use crate::{qr, Q};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Where random values are drawn from.
#[derive(Clone, Debug)]
pub struct SampleSpace {
    pub fundamentals: Vec<Fundamental>,
    /// Bound on `|p/q|` for exponents and coefficients.
    pub max_abs: i64,
    pub max_support: usize,
    pub max_terms: usize,
}

impl SampleSpace {
    pub fn new(fundamentals: Vec<Fundamental>) -> Self {
        SampleSpace { fundamentals, max_abs: 5, max_support: 3, max_terms: 4 }
    }

    /// A nonzero `p/q` with `q ∈ {1, 2, 3}` and `|p/q| ≤ max_abs`.
    pub fn nonzero_rational<R: Rng>(&self, rng: &mut R) -> Q {
        loop {
            let d: i64 = rng.gen_range(1..=3);
            let n = rng.gen_range(-self.max_abs * d..=self.max_abs * d);
            if n != 0 {
                return qr(n, d);
            }
        }
    }

    /// A monomial with up to `max_support` distinct fundamentals.
    pub fn monomial<R: Rng>(&self, rng: &mut R) -> Monomial {
        let k = rng.gen_range(0..=self.max_support.min(self.fundamentals.len()));
        let chosen: Vec<_> = self.fundamentals.choose_multiple(rng, k).cloned().collect();
        Monomial::from_pairs(chosen.into_iter().map(|p| (p, self.nonzero_rational(rng))))
    }

    /// A monomial different from `1`.
    pub fn nontrivial_monomial<R: Rng>(&self, rng: &mut R) -> Monomial {
        loop {
            let m = self.monomial(rng);
            if !m.is_one() {
                return m;
            }
        }
    }

    /// A series with up to `max_terms` terms (possibly zero after fusion).
    pub fn series<R: Rng>(&self, rng: &mut R) -> Series {
        let k = rng.gen_range(0..=self.max_terms);
        Series::from_terms((0..k).map(|_| Term::new(self.nonzero_rational(rng), self.monomial(rng))))
    }

    pub fn nonzero_series<R: Rng>(&self, rng: &mut R) -> Series {
        loop {
            let s = self.series(rng);
            if !s.is_zero() {
                return s;
            }
        }
    }
}
