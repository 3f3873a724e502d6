#![allow(dead_code)]

use hahn_core::{qr, Fundamental, Monomial, Series, Term, Q};
use proptest::prelude::*;

pub fn rational(max_abs: i64) -> impl Strategy<Value = Q> {
    (1i64..=3).prop_flat_map(move |d| (-max_abs * d..=max_abs * d, Just(d)).prop_map(|(n, d)| qr(n, d)))
}

pub fn nonzero_rational(max_abs: i64) -> impl Strategy<Value = Q> {
    rational(max_abs).prop_filter("nonzero", |r| *r != qr(0, 1))
}

pub fn monomial(lo: i64, hi: i64) -> impl Strategy<Value = Monomial> {
    prop::collection::vec((lo..=hi, rational(5)), 0..4)
        .prop_map(|fs| Monomial::from_pairs(fs.into_iter().map(|(i, e)| (Fundamental::new(i), e))))
}

pub fn series(lo: i64, hi: i64) -> impl Strategy<Value = Series> {
    prop::collection::vec((nonzero_rational(4), monomial(lo, hi)), 0..5)
        .prop_map(|ts| Series::from_terms(ts.into_iter().map(|(c, m)| Term::new(c, m))))
}

pub fn nonzero_series(lo: i64, hi: i64) -> impl Strategy<Value = Series> {
    series(lo, hi).prop_filter("nonzero", |s| !s.is_zero())
}

/// Exponent map of a monomial, read off through the public iterator.
pub fn exponents(m: &Monomial) -> std::collections::BTreeMap<Q, Q> {
    m.iter().map(|(p, e)| (p.index().clone(), e.clone())).collect()
}

/// `LE(β/α) > 0`, computed by hand from exponent maps.
pub fn oracle_less(alpha: &Monomial, beta: &Monomial) -> bool {
    let mut q = exponents(beta);
    for (k, e) in exponents(alpha) {
        *q.entry(k).or_insert_with(|| qr(0, 1)) -= e;
    }
    q.into_iter().rev().find(|(_, e)| *e != qr(0, 1)).is_some_and(|(_, e)| e > qr(0, 1))
}
