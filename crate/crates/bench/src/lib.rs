//! Seeded fixtures shared by the criterion benches.

use hahn_core::sample::{self, SampleSpace};
use hahn_core::{Fundamental, Series};

/// Sampler over `E_lo..=E_hi` with room for `terms`-term series.
pub fn space(lo: i64, hi: i64, terms: usize) -> SampleSpace {
    let mut s = SampleSpace::new((lo..=hi).map(Fundamental::new).collect());
    s.max_terms = terms;
    s
}

/// `count` nonzero series drawn from `space` with a fixed seed.
pub fn corpus(space: &SampleSpace, count: usize, seed: u64) -> Vec<Series> {
    let mut rng = sample::rng(seed);
    (0..count).map(|_| space.nonzero_series(&mut rng)).collect()
}

/// `1 + ε` with `ε` a sum of `terms` infinitesimal monomials.
pub fn near_one(terms: usize, seed: u64) -> Series {
    let space = space(-2, 2, terms);
    let mut rng = sample::rng(seed);
    loop {
        let eps = space.nonzero_series(&mut rng).decompose().infinitesimal_part;
        if eps.len() == terms {
            return &Series::one() + &eps;
        }
    }
}
