//! Hardy-type axioms: constants, l'Hospital's rule, compatibility of the
//! logarithmic derivative with dominance, and H-field positivity.

use std::cmp::Ordering;

use num_traits::Signed;

use crate::chain::Fundamental;
use crate::derivation::{check_condition, Condition, ConditionReport, DerivationSchema, Witness};
use crate::monomial::Monomial;
use crate::sample::{self, SampleSpace};
use crate::series::Series;
use crate::{qr, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HFieldVerdict {
    Yes,
    /// A fundamental monomial whose logarithmic derivative is negative.
    No(Fundamental),
}

/// Which axiom a sampled pair was checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    LHospital,
    LogCompat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSample {
    pub axiom: Axiom,
    pub a: Series,
    pub b: Series,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HardyReport {
    pub h3prime: ConditionReport,
    pub lhospital_samples: Vec<(Series, Series, bool)>,
    pub logcompat_samples: Vec<(Series, Series, bool)>,
    pub hfield: HFieldVerdict,
}

impl HardyReport {
    pub fn all_samples_pass(&self) -> bool {
        self.lhospital_samples.iter().chain(&self.logcompat_samples).all(|s| s.2)
    }
}

pub fn check_h3prime(schema: &DerivationSchema, window: &[Fundamental]) -> Result<ConditionReport> {
    check_condition(schema, Condition::H3Prime, window)
}

/// (HD2) on one pair: `a ≼ b ⇔ a′ ≼ b′`, for `a, b ≭ 1`.
pub fn verify_lhospital(schema: &DerivationSchema, a: &Series, b: &Series) -> Result<bool> {
    for s in [a, b] {
        if s.is_zero() || s.leading_monomial().is_some_and(Monomial::is_one) {
            return Err(Error::Domain("l'Hospital needs a, b nonzero and not asymptotic to 1".into()));
        }
    }
    let lhs = a.dominance(b) != Ordering::Greater;
    let rhs = schema.derive(a)?.dominance(&schema.derive(b)?) != Ordering::Greater;
    Ok(lhs == rhs)
}

/// `LM(a′/a) = LM(a′)/LM(a)`; `None` when `a′ = 0`.
fn log_derivative_lm(schema: &DerivationSchema, a: &Series) -> Result<Option<Monomial>> {
    let da = schema.derive(a)?;
    Ok(da.leading_monomial().map(|m| m.div(a.leading_monomial().expect("a is nonzero"))))
}

/// (HD3) on one pair with `a ≻ b ≻ 1`: `a′/a ≽ b′/b`, with equivalence
/// exactly when `LF(a) = LF(b)`.
pub fn verify_log_compat(schema: &DerivationSchema, a: &Series, b: &Series) -> Result<bool> {
    let one = Series::one();
    if !(a.dominance(b) == Ordering::Greater && b.dominance(&one) == Ordering::Greater) {
        return Err(Error::Domain("log-compatibility needs |a| ≻ |b| ≻ 1".into()));
    }
    let la = log_derivative_lm(schema, a)?;
    let lb = log_derivative_lm(schema, b)?;
    let comparable = a.leading_fundamental() == b.leading_fundamental();
    Ok(la >= lb && (la == lb) == comparable)
}

/// `LC(φ′/φ) > 0` for every `φ` in the window.
pub fn check_hfield(schema: &DerivationSchema, window: &[Fundamental]) -> Result<HFieldVerdict> {
    for phi in window {
        if !schema.log_derivative(phi)?.leading_coefficient().is_positive() {
            return Ok(HFieldVerdict::No(phi.clone()));
        }
    }
    Ok(HFieldVerdict::Yes)
}

/// (HD1) on one element: `a′ = 0` exactly when `a` is a constant.
pub fn check_constants(schema: &DerivationSchema, a: &Series) -> Result<bool> {
    Ok(schema.derive(a)?.is_zero() == a.is_constant())
}

/// Samples `samples` valid pairs for each of (HD2) and (HD3) over the window
/// fundamentals, together with the (H3′) and H-field checks on the window.
pub fn hardy_report(
    schema: &DerivationSchema,
    window: &[Fundamental],
    samples: usize,
    seed: u64,
) -> Result<HardyReport> {
    let h3prime = check_h3prime(schema, window)?;
    let hfield = check_hfield(schema, window)?;
    let space = SampleSpace::new(window.to_vec());
    let mut rng = sample::rng(seed);
    let one = Series::one();

    let mut lhospital_samples = Vec::with_capacity(samples);
    while lhospital_samples.len() < samples {
        let a = space.nonzero_series(&mut rng);
        let b = space.nonzero_series(&mut rng);
        if a.dominance(&one) == Ordering::Equal || b.dominance(&one) == Ordering::Equal {
            continue;
        }
        let ok = verify_lhospital(schema, &a, &b)?;
        lhospital_samples.push((a, b, ok));
    }

    let mut logcompat_samples = Vec::with_capacity(samples);
    while logcompat_samples.len() < samples {
        let a = space.nonzero_series(&mut rng);
        let b = space.nonzero_series(&mut rng);
        let (a, b) = match a.dominance(&b) {
            Ordering::Greater => (a, b),
            Ordering::Less => (b, a),
            Ordering::Equal => continue,
        };
        if b.dominance(&one) != Ordering::Greater {
            continue;
        }
        let ok = verify_log_compat(schema, &a, &b)?;
        logcompat_samples.push((a, b, ok));
    }

    Ok(HardyReport { h3prime, lhospital_samples, logcompat_samples, hfield })
}

/// Monomial pairs built from an (H3′) witness `(φ, ψ)`, `φ ≺ ψ`: (HD2) on
/// `(ψ^r, φ^s)` for a few small exponents and (HD3) on `(ψ, φ)`. When the
/// witness is genuine at least one of them fails.
pub fn counter_samples(schema: &DerivationSchema, witness: &Witness) -> Result<Vec<PairSample>> {
    let Some((phi, psi)) = witness.pair() else {
        return Ok(Vec::new());
    };
    let power = |p: &Fundamental, e| Series::monomial(Monomial::power(p.clone(), e));
    let mut out = Vec::new();
    for r in [qr(-1, 1), qr(-2, 1), qr(-1, 2)] {
        for s in [qr(1, 1), qr(-1, 1), qr(2, 1), qr(-2, 1), qr(1, 2)] {
            let (a, b) = (power(psi, r.clone()), power(phi, s));
            let passed = verify_lhospital(schema, &a, &b)?;
            out.push(PairSample { axiom: Axiom::LHospital, a, b, passed });
        }
    }
    let (a, b) = (power(psi, qr(1, 1)), power(phi, qr(1, 1)));
    let passed = verify_log_compat(schema, &a, &b)?;
    out.push(PairSample { axiom: Axiom::LogCompat, a, b, passed });
    Ok(out)
}
