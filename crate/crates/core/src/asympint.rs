//! Asymptotic integration and budgeted integration.
//!
//! For a monomial `α` with `φ_0 = LF(α)` and `θ_0 = θ^(φ_0)` exactly one of
//! three cases applies:
//!
//! 1. `LF(θ_0) ≼ φ_0 = LF(α/θ_0)`: integrate to `α/θ_0 / (F_0·(α_{φ_0} − θ_{0,φ_0}))`;
//! 2. `LF(θ_0) = φ_1 ≻ φ_0`: integrate to `α/θ_1 / (−F_1·θ_{0,φ_1})`;
//! 3. `LF(θ_0) ≼ φ_0 ≻ LF(α/θ_0)`, or `α = 1`: find `φ_1 ≺ φ_0` with
//!    `LF(α/θ_1) = φ_1` and integrate to `α/θ_1 / (F_1·(α_{φ_1} − θ_{1,φ_1}))`.
//!
//! Series are handled through their leading term; [`integrate`] repeats the
//! step on the residual until it vanishes or the budget runs out.

use crate::chain::Fundamental;
use crate::derivation::{DerivationSchema, SchemaKind};
use crate::monomial::Monomial;
use crate::series::{Series, Term};
use crate::{Error, Result, Q};

/// Leading data of `φ′/φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaInfo {
    pub phi: Fundamental,
    pub theta: Monomial,
    pub f: Q,
}

pub fn theta_info(schema: &DerivationSchema, phi: &Fundamental) -> Result<ThetaInfo> {
    let (theta, f, _) = schema.log_derivative(phi)?.leading_data()?;
    Ok(ThetaInfo { phi: phi.clone(), theta, f })
}

/// Greatest lower bound `θ̃` of `{θ^(φ)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GlbVerdict {
    /// The minimum, attained at some fundamental.
    Attained(Monomial),
    /// A bound in `Γ` approached but never reached.
    Infimum(Monomial),
    /// The `θ^(φ)` decrease without a bound in `Γ`.
    NotInGamma,
    Unknown,
}

impl GlbVerdict {
    /// The monomial without an asymptotic integral, if `θ̃ ∈ Γ`.
    pub fn obstruction(&self) -> Option<&Monomial> {
        match self {
            GlbVerdict::Attained(m) | GlbVerdict::Infimum(m) => Some(m),
            GlbVerdict::NotInGamma | GlbVerdict::Unknown => None,
        }
    }
}

pub fn theta_glb(schema: &DerivationSchema) -> Result<GlbVerdict> {
    let chain = schema.chain();
    if let Some(domain) = schema.domain() {
        let mut best: Option<Monomial> = None;
        for phi in &domain {
            let t = schema.theta(phi)?;
            if best.as_ref().is_none_or(|b| &t < b) {
                best = Some(t);
            }
        }
        return Ok(best.map_or(GlbVerdict::Unknown, GlbVerdict::Attained));
    }
    if !schema.is_certified() {
        return Ok(GlbVerdict::Unknown);
    }
    // Certified schemas satisfy (H3′), so θ is increasing along the chain.
    if let Some(least) = chain.least() {
        return Ok(GlbVerdict::Attained(schema.theta(&least)?));
    }
    Ok(match schema.kind() {
        SchemaKind::LogExpChain => GlbVerdict::NotInGamma,
        SchemaKind::ShiftMonomial { .. } => GlbVerdict::Infimum(Monomial::one()),
        SchemaKind::GeneralShift { gamma, .. } => GlbVerdict::Infimum(gamma.clone()),
        _ => GlbVerdict::Unknown,
    })
}

/// An asymptotic integral `coeff·monomial` of a monomial, with the case
/// that produced it and the fundamental whose `θ` was divided out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIntegral {
    pub case: u8,
    pub phi: Fundamental,
    pub monomial: Monomial,
    pub coeff: Q,
}

pub fn integrate_monomial(
    schema: &DerivationSchema,
    alpha: &Monomial,
    probe: usize,
) -> Result<MonomialIntegral> {
    if theta_glb(schema)?.obstruction() == Some(alpha) {
        return Err(Error::NoAsymptoticIntegral);
    }
    let Some(phi0) = alpha.leading_fundamental().cloned() else {
        return descent_case(schema, alpha, None, probe);
    };
    let t0 = theta_info(schema, &phi0)?;
    let lf_theta = t0.theta.leading_fundamental();
    if lf_theta > Some(&phi0) {
        let phi1 = lf_theta.expect("above phi0").clone();
        let t1 = theta_info(schema, &phi1)?;
        let coeff = (-(&t1.f * t0.theta.exponent(&phi1))).recip();
        return Ok(MonomialIntegral { case: 2, monomial: alpha.div(&t1.theta), coeff, phi: phi1 });
    }
    let ratio = alpha.div(&t0.theta);
    if ratio.leading_fundamental() == Some(&phi0) {
        let coeff = (&t0.f * (alpha.exponent(&phi0) - t0.theta.exponent(&phi0))).recip();
        return Ok(MonomialIntegral { case: 1, monomial: ratio, coeff, phi: phi0 });
    }
    descent_case(schema, alpha, Some(&phi0), probe)
}

fn descent_case(
    schema: &DerivationSchema,
    alpha: &Monomial,
    phi0: Option<&Fundamental>,
    probe: usize,
) -> Result<MonomialIntegral> {
    let phi1 = find_descent(schema, alpha, phi0, probe)?;
    let t1 = theta_info(schema, &phi1)?;
    let coeff = (&t1.f * (alpha.exponent(&phi1) - t1.theta.exponent(&phi1))).recip();
    Ok(MonomialIntegral { case: 3, monomial: alpha.div(&t1.theta), coeff, phi: phi1 })
}

/// `φ_1` with `LF(α/θ^(φ_1)) = φ_1`, below `φ_0` when there is one.
fn find_descent(
    schema: &DerivationSchema,
    alpha: &Monomial,
    phi0: Option<&Fundamental>,
    probe: usize,
) -> Result<Fundamental> {
    let chain = schema.chain();
    let fits = |phi: &Fundamental| -> bool {
        phi0.is_none_or(|p| phi < p)
            && schema.theta(phi).is_ok_and(|t| alpha.div(&t).leading_fundamental() == Some(phi))
    };

    if let Ok(u0) = rosenlicht_u0(schema, alpha, probe) {
        if let Some(hat) = u0.leading_fundamental() {
            if let Ok(t) = schema.theta(hat) {
                if let Some(cand) = alpha.div(&t).leading_fundamental() {
                    if fits(cand) {
                        return Ok(cand.clone());
                    }
                }
            }
        }
    }

    let mut candidates: Vec<Fundamental> = Vec::new();
    if chain.is_discrete() {
        match phi0 {
            Some(p) => {
                let mut cur = chain.predecessor(p);
                while let Some(c) = cur {
                    if candidates.len() >= probe {
                        break;
                    }
                    cur = chain.predecessor(&c);
                    candidates.push(c);
                }
            }
            None => {
                let anchor = chain.anchor();
                let (mut down, mut up) = (Some(anchor.clone()), chain.successor(&anchor));
                while candidates.len() < probe && (down.is_some() || up.is_some()) {
                    if let Some(d) = down.take() {
                        down = chain.predecessor(&d);
                        candidates.push(d);
                    }
                    if let Some(u) = up.take() {
                        if candidates.len() < probe {
                            up = chain.successor(&u);
                            candidates.push(u);
                        }
                    }
                }
            }
        }
    } else {
        candidates.extend(alpha.support().rev().cloned());
        candidates.extend(chain.least());
        candidates.push(chain.anchor());
        if chain.shift_step().is_some() {
            let mut cur = phi0.cloned().unwrap_or_else(|| chain.anchor());
            for _ in 0..probe {
                match chain.shift(&cur) {
                    Ok(next) if next != cur => {
                        candidates.push(next.clone());
                        cur = next;
                    }
                    _ => break,
                }
            }
        }
    }
    candidates.into_iter().find(|c| fits(c)).ok_or_else(|| Error::SearchExhausted {
        what: "no fundamental below the leading one cancels the logarithmic derivative".into(),
        depth: probe,
    })
}

/// Rosenlicht's auxiliary monomial: `u_1` is the largest fundamental at or
/// below the anchor with `α ≻ θ^(u_1)` (retrying with `α⁻¹` if there is
/// none), and `u_0 = min{u_1, α/θ^(u_1)}`.
pub fn rosenlicht_u0(schema: &DerivationSchema, alpha: &Monomial, probe: usize) -> Result<Monomial> {
    let chain = schema.chain();
    for target in [alpha.clone(), alpha.inv()] {
        let mut cur = Some(chain.anchor());
        for _ in 0..probe.max(1) {
            let Some(u1) = cur.take() else { break };
            let theta = schema.theta(&u1)?;
            if target > theta {
                let u1m = Monomial::fundamental(u1);
                let other = target.div(&theta);
                return Ok(if other < u1m { other } else { u1m });
            }
            cur = if chain.is_discrete() {
                chain.predecessor(&u1)
            } else {
                chain.shift(&u1).ok().filter(|n| n != &u1)
            };
        }
    }
    Err(Error::SearchExhausted { what: "no u1 with α ≻ θ(u1)".into(), depth: probe })
}

/// An asymptotic integral `b` of `a`, i.e. `b′ ∼ a`.
pub fn asymptotic_integral(schema: &DerivationSchema, a: &Series, probe: usize) -> Result<Series> {
    let (alpha, c, lt) = a.leading_data()?;
    let mi = integrate_monomial(schema, &alpha, probe)?;
    let b = Series::term(c * mi.coeff, mi.monomial);
    if schema.derive(&b)?.leading_term() != Some(&lt) {
        return Err(Error::Domain(
            "the candidate's derivative is not equivalent to the input; the schema is not of Hardy type here"
                .into(),
        ));
    }
    Ok(b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegrationResult {
    pub antiderivative: Series,
    pub residual: Series,
    pub steps_used: usize,
    pub exact: bool,
    /// Leading terms of the successive residuals, starting with `LT(a)`.
    pub trace: Vec<Term>,
}

/// Iterated asymptotic integration: `b_{k+1} = b_k + ∫r_k`,
/// `r_{k+1} = a − b_{k+1}′`, for at most `budget` steps.
pub fn integrate(
    schema: &DerivationSchema,
    a: &Series,
    budget: usize,
    probe: usize,
) -> Result<IntegrationResult> {
    if a.is_zero() {
        return Err(Error::Domain("integrate needs a nonzero series".into()));
    }
    if budget == 0 {
        return Err(Error::Domain("integration budget must be at least 1".into()));
    }
    let mut b = Series::zero();
    let mut r = a.clone();
    let mut trace = vec![r.leading_term().expect("nonzero").clone()];
    let mut steps = 0;
    while !r.is_zero() && steps < budget {
        let step = asymptotic_integral(schema, &r, probe)?;
        let next = r.sub(&schema.derive(&step)?);
        if next.leading_monomial() >= r.leading_monomial() {
            return Err(Error::NoDescent);
        }
        b = b.add(&step);
        r = next;
        steps += 1;
        if let Some(t) = r.leading_term() {
            trace.push(t.clone());
        }
    }
    Ok(IntegrationResult { exact: r.is_zero(), antiderivative: b, residual: r, steps_used: steps, trace })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::FundamentalChain;
    use crate::text::{parse_monomial, parse_series, print_series};
    use std::collections::BTreeMap;

    fn le() -> DerivationSchema {
        DerivationSchema::log_exp()
    }

    fn p(s: &str) -> Series {
        parse_series(s, &FundamentalChain::log_exp()).unwrap()
    }

    fn m(s: &str) -> Monomial {
        parse_monomial(s, &FundamentalChain::log_exp()).unwrap()
    }

    fn show(s: &Series) -> String {
        print_series(s, &FundamentalChain::log_exp())
    }

    #[test]
    fn worked_asymptotic_integrals() {
        let d = le();
        let cases = [("E_1", "E_1", 1), ("x", "1/2*x^2", 1), ("x^-1", "E_-1", 3), ("E_-1", "x*E_-1", 2)];
        for (a, b, case) in cases {
            assert_eq!(show(&asymptotic_integral(&d, &p(a), 64).unwrap()), b, "{a}");
            assert_eq!(integrate_monomial(&d, &m(a), 64).unwrap().case, case, "{a}");
        }
    }

    #[test]
    fn worked_integrals() {
        let d = le();
        let r = integrate(&d, &p("E_-1"), 4, 64).unwrap();
        assert_eq!(show(&r.antiderivative), "x*E_-1 - x");
        assert!(r.exact && r.residual.is_zero());
        assert_eq!(r.steps_used, 2);
        let r = integrate(&d, &p("1"), 1, 64).unwrap();
        assert_eq!(show(&r.antiderivative), "x");
        let r = integrate(&d, &p("x^-1*E_-1^-1"), 1, 64).unwrap();
        assert_eq!(show(&r.antiderivative), "E_-2");
        assert!(r.exact);
        let r = integrate(&d, &p("E_-1"), 1, 64).unwrap();
        assert!(!r.exact);
        assert_eq!(show(&r.residual), "-1");
    }

    #[test]
    fn rosenlicht_examples() {
        let d = le();
        assert_eq!(rosenlicht_u0(&d, &m("E_1"), 64).unwrap(), m("x"));
        assert_eq!(rosenlicht_u0(&d, &m("x"), 64).unwrap(), m("x"));
    }

    #[test]
    fn glb_verdicts() {
        assert_eq!(theta_glb(&le()).unwrap(), GlbVerdict::NotInGamma);
        let chain = FundamentalChain::finite(["x"]).unwrap();
        let x = chain.lookup("x").unwrap();
        let table = BTreeMap::from([(x, parse_series("x^-1", &chain).unwrap())]);
        let d = DerivationSchema::new(chain.clone(), SchemaKind::ExplicitTable(table)).unwrap();
        let xinv = parse_monomial("x^-1", &chain).unwrap();
        assert_eq!(theta_glb(&d).unwrap(), GlbVerdict::Attained(xinv.clone()));
        assert_eq!(asymptotic_integral(&d, &Series::monomial(xinv), 8), Err(Error::NoAsymptoticIntegral));
        let one = asymptotic_integral(&d, &Series::one(), 8).unwrap();
        assert_eq!(print_series(&one, &chain), "x");

        let shift = FundamentalChain::integer("p_").unwrap().with_shift(crate::q(1)).unwrap();
        let d = DerivationSchema::new(
            shift,
            SchemaKind::ShiftMonomial { scale: crate::q(1), exponents: vec![crate::q(1)] },
        )
        .unwrap();
        assert_eq!(theta_glb(&d).unwrap(), GlbVerdict::Infimum(Monomial::one()));
        assert_eq!(asymptotic_integral(&d, &Series::one(), 8), Err(Error::NoAsymptoticIntegral));
    }
}
