//! Derivation schemas on the chain and their extension to monomials and
//! series.
//!
//! A schema prescribes the logarithmic derivative `φ′/φ` of every
//! fundamental monomial. Monomials are differentiated by the strong Leibniz
//! rule `α′ = α·Σ α_φ·φ′/φ` and series by linearity.

mod check;

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::chain::{ChainKind, Fundamental, FundamentalChain};
use crate::monomial::Monomial;
use crate::series::{Series, Term};
use crate::{Error, Result, Q};

pub use check::{check_condition, Condition, ConditionReport, Verdict, Witness};

/// The scale `t_φ` of a [`SchemaKind::RealIndexedPower`] schema.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PowerScale {
    Constant(Q),
    /// `t_φ = f(φ)`, or `1` at the least element where `f` vanishes.
    IndexOrOne,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SchemaKind {
    /// `φ′/φ` given explicitly for the elements of a finite list.
    ExplicitTable(BTreeMap<Fundamental, Series>),
    /// `E_n′/E_n` of the iterated exponentials and logarithms.
    LogExpChain,
    /// `φ′/φ = t·Π_{n=1}^{N} s^n(φ)^{α_n}`, and `t` at a fixed least element.
    ShiftMonomial { scale: Q, exponents: Vec<Q> },
    /// `φ′/φ = t_φ·φ_m^{f(φ)+β}` with `f(φ) = index(φ) − index(φ_m)`.
    RealIndexedPower { beta: Q, scale: PowerScale },
    /// `φ′/φ = γ·Σ_τ t_τ Π_n s^{n+1}(φ)^{τ_n}` over a finite set of `τ`.
    GeneralShift { gamma: Monomial, terms: Vec<(Q, Vec<Q>)> },
    /// `φ_k′/φ_k = t·Π φ_{k+o}^{e}` over `(o, e)` pairs.
    OffsetMonomial { scale: Q, factors: Vec<(Q, Q)> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationSchema {
    chain: FundamentalChain,
    kind: SchemaKind,
}

impl DerivationSchema {
    pub fn new(chain: FundamentalChain, kind: SchemaKind) -> Result<Self> {
        let invalid = |msg: &str| Err(Error::InvalidSchema(msg.to_owned()));
        match &kind {
            SchemaKind::ExplicitTable(table) => {
                if !matches!(chain.kind(), ChainKind::FiniteList(_)) {
                    return invalid("explicit tables need a finite list chain");
                }
                for (phi, s) in table {
                    if !chain.contains(phi) {
                        return invalid("table entry outside the chain");
                    }
                    if s.is_zero() {
                        return invalid("logarithmic derivatives must be nonzero");
                    }
                    let outside =
                        s.terms().iter().flat_map(|t| t.monomial.support()).any(|p| !chain.contains(p));
                    if outside {
                        return invalid("table value uses a name outside the chain");
                    }
                }
            }
            SchemaKind::LogExpChain => {
                if !matches!(chain.kind(), ChainKind::IntegerIndexed { .. }) {
                    return invalid("the log-exp schema needs an integer-indexed chain");
                }
                if !chain.contains(&Fundamental::new(0)) || !chain.contains(&Fundamental::new(1)) {
                    return invalid("the log-exp chain must contain the indices 0 and 1");
                }
            }
            SchemaKind::ShiftMonomial { scale, exponents } => {
                if chain.shift_step().is_none() {
                    return invalid("shift-monomial schemas need a chain with a shift");
                }
                if scale.is_zero() {
                    return invalid("scale must be nonzero");
                }
                match exponents.first() {
                    Some(a) if a.is_positive() => {}
                    _ => return invalid("the first shift exponent must be positive"),
                }
                if chain.least().is_some() && !exponents.iter().sum::<Q>().is_positive() {
                    return invalid("with a least element the shift exponents must have positive sum");
                }
            }
            SchemaKind::RealIndexedPower { scale, .. } => {
                if chain.least().is_none() {
                    return invalid("indexed-power schemas need a chain with a least element");
                }
                if let PowerScale::Constant(c) = scale {
                    if c.is_zero() {
                        return invalid("scale must be nonzero");
                    }
                }
            }
            SchemaKind::GeneralShift { gamma, terms } => {
                if chain.shift_step().is_none() || chain.least().is_some() {
                    return invalid("general-shift schemas need a shift on a chain without least element");
                }
                if gamma.support().any(|p| !chain.contains(p)) {
                    return invalid("gamma uses a name outside the chain");
                }
                if terms.is_empty() {
                    return invalid("general-shift schemas need at least one term");
                }
                let mut seen = Vec::new();
                for (t, tau) in terms {
                    if t.is_zero() {
                        return invalid("term coefficients must be nonzero");
                    }
                    match tau.iter().find(|e| !e.is_zero()) {
                        Some(e) if e.is_positive() => {}
                        _ => return invalid("each exponent vector must have a positive first nonzero entry"),
                    }
                    let mut trimmed = tau.clone();
                    while trimmed.last().is_some_and(Zero::is_zero) {
                        trimmed.pop();
                    }
                    if seen.contains(&trimmed) {
                        return invalid("exponent vectors must be distinct");
                    }
                    seen.push(trimmed);
                }
            }
            SchemaKind::OffsetMonomial { scale, factors } => {
                if scale.is_zero() {
                    return invalid("scale must be nonzero");
                }
                if chain.is_discrete() && factors.iter().any(|(o, _)| !o.is_integer()) {
                    return invalid("offsets on a discrete chain must be integers");
                }
            }
        }
        Ok(DerivationSchema { chain, kind })
    }

    /// The built-in schema on `E_k = exp^k(x)`.
    pub fn log_exp() -> Self {
        DerivationSchema::new(FundamentalChain::log_exp(), SchemaKind::LogExpChain)
            .expect("built-in schema is valid")
    }

    pub fn chain(&self) -> &FundamentalChain {
        &self.chain
    }

    pub fn kind(&self) -> &SchemaKind {
        &self.kind
    }

    /// Whether the schema is known, by its construction, to satisfy all of
    /// (H1′), (H1″), (H2″) and (H3′) on the whole chain.
    pub fn is_certified(&self) -> bool {
        match &self.kind {
            SchemaKind::LogExpChain
            | SchemaKind::RealIndexedPower { .. }
            | SchemaKind::GeneralShift { .. } => true,
            SchemaKind::ShiftMonomial { .. } => self.chain.shift_is_strict(),
            SchemaKind::ExplicitTable(_) | SchemaKind::OffsetMonomial { .. } => false,
        }
    }

    /// Elements on which `φ′/φ` is defined, for finite chains.
    pub fn domain(&self) -> Option<Vec<Fundamental>> {
        match &self.kind {
            SchemaKind::ExplicitTable(table) => Some(table.keys().cloned().collect()),
            _ => self.chain.elements(),
        }
    }

    /// `φ′/φ`.
    pub fn log_derivative(&self, phi: &Fundamental) -> Result<Series> {
        if !self.chain.contains(phi) {
            return Err(Error::SchemaDomain(phi.clone()));
        }
        let s = match &self.kind {
            SchemaKind::ExplicitTable(table) => {
                table.get(phi).cloned().ok_or_else(|| Error::SchemaDomain(phi.clone()))?
            }
            SchemaKind::LogExpChain => {
                let n = phi.integer_index().ok_or_else(|| Error::SchemaDomain(phi.clone()))?;
                let m = if n >= 1 {
                    Monomial::from_pairs((1..n).map(|k| (Fundamental::new(k), Q::one())))
                } else {
                    Monomial::from_pairs((n..=0).map(|k| (Fundamental::new(k), -Q::one())))
                };
                Series::monomial(m)
            }
            SchemaKind::ShiftMonomial { scale, exponents } => {
                if self.chain.least().as_ref() == Some(phi) {
                    Series::constant(scale.clone())
                } else {
                    let mut pairs = Vec::with_capacity(exponents.len());
                    let mut cur = phi.clone();
                    for e in exponents {
                        cur = self.chain.shift(&cur)?;
                        pairs.push((cur.clone(), e.clone()));
                    }
                    Series::term(scale.clone(), Monomial::from_pairs(pairs))
                }
            }
            SchemaKind::RealIndexedPower { beta, scale } => {
                let least = self.chain.least().expect("validated");
                let f = phi.index() - least.index();
                let t = match scale {
                    PowerScale::Constant(c) => c.clone(),
                    PowerScale::IndexOrOne if f.is_zero() => Q::one(),
                    PowerScale::IndexOrOne => f.clone(),
                };
                Series::term(t, Monomial::power(least, f + beta))
            }
            SchemaKind::GeneralShift { gamma, terms } => {
                let depth = terms.iter().map(|(_, tau)| tau.len()).max().unwrap_or(0);
                let mut shifts = Vec::with_capacity(depth);
                let mut cur = phi.clone();
                for _ in 0..depth {
                    cur = self.chain.shift(&cur)?;
                    shifts.push(cur.clone());
                }
                Series::from_terms(terms.iter().map(|(t, tau)| {
                    let m = Monomial::from_pairs(shifts.iter().cloned().zip(tau.iter().cloned()));
                    Term::new(t.clone(), gamma.mul(&m))
                }))
            }
            SchemaKind::OffsetMonomial { scale, factors } => {
                let mut pairs = Vec::with_capacity(factors.len());
                for (o, e) in factors {
                    let target = phi.offset(o);
                    if !self.chain.contains(&target) {
                        return Err(Error::SchemaDomain(phi.clone()));
                    }
                    pairs.push((target, e.clone()));
                }
                Series::term(scale.clone(), Monomial::from_pairs(pairs))
            }
        };
        debug_assert!(!s.is_zero());
        Ok(s)
    }

    /// `θ^(φ) = LM(φ′/φ)`.
    pub fn theta(&self, phi: &Fundamental) -> Result<Monomial> {
        Ok(self.log_derivative(phi)?.leading_monomial().expect("nonzero").clone())
    }

    /// Support of `φ′/φ` in decreasing order.
    pub fn support(&self, phi: &Fundamental) -> Result<Vec<Monomial>> {
        Ok(self.log_derivative(phi)?.into_terms().into_iter().map(|t| t.monomial).collect())
    }

    /// `α′ = α·Σ_φ α_φ·(φ′/φ)`.
    pub fn derive_monomial(&self, alpha: &Monomial) -> Result<Series> {
        let mut terms = Vec::new();
        for (phi, e) in alpha.iter() {
            for t in self.log_derivative(phi)?.into_terms() {
                terms.push(Term::new(t.coeff * e, t.monomial.mul(alpha)));
            }
        }
        Ok(Series::from_terms(terms))
    }

    pub fn derive(&self, a: &Series) -> Result<Series> {
        let mut terms = Vec::new();
        for t in a.terms() {
            for (phi, e) in t.monomial.iter() {
                let c = &t.coeff * e;
                for u in self.log_derivative(phi)?.into_terms() {
                    terms.push(Term::new(u.coeff * &c, u.monomial.mul(&t.monomial)));
                }
            }
        }
        Ok(Series::from_terms(terms))
    }

    /// `p_φ(τ)`, the 0-based position of `τ` in the decreasing enumeration of
    /// `Supp(φ′/φ)`.
    pub fn position(&self, phi: &Fundamental, tau: &Monomial) -> Result<usize> {
        self.support(phi)?
            .iter()
            .position(|m| m == tau)
            .ok_or_else(|| Error::Domain(format!("monomial is not in the support of {phi}′/{phi}")))
    }

    /// `I_{μ,ν}(τ)`: the element of `Supp(ν′/ν)` at the position of `τ` in
    /// `Supp(μ′/μ)`.
    pub fn support_isomorphism(
        &self,
        mu: &Fundamental,
        nu: &Fundamental,
        tau: &Monomial,
    ) -> Result<Monomial> {
        let p = self.position(mu, tau)?;
        self.support(nu)?
            .into_iter()
            .nth(p)
            .ok_or_else(|| Error::Domain(format!("position {p} has no match in the support of {nu}′/{nu}")))
    }

    /// Whether `I_{μ,ν}(τ) ≺ τ` on the whole matched segment.
    pub fn is_left_shift(&self, mu: &Fundamental, nu: &Fundamental) -> Result<bool> {
        Ok(first_non_shift(&self.support(mu)?, &self.support(nu)?).is_none())
    }
}

/// First position where the position-matching of two decreasing supports does
/// not move strictly down.
pub(crate) fn first_non_shift(from: &[Monomial], to: &[Monomial]) -> Option<usize> {
    from.iter().zip(to).position(|(a, b)| b >= a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_series, print_series};
    use crate::{q, qr};

    fn le() -> DerivationSchema {
        DerivationSchema::log_exp()
    }

    fn p(s: &str) -> Series {
        parse_series(s, &FundamentalChain::log_exp()).unwrap()
    }

    fn show(s: &Series) -> String {
        print_series(s, &FundamentalChain::log_exp())
    }

    #[test]
    fn log_exp_log_derivatives() {
        let d = le();
        assert_eq!(show(&d.log_derivative(&Fundamental::new(2)).unwrap()), "E_1");
        assert_eq!(show(&d.log_derivative(&Fundamental::new(3)).unwrap()), "E_1*E_2");
        assert_eq!(show(&d.log_derivative(&Fundamental::new(1)).unwrap()), "1");
        assert_eq!(show(&d.log_derivative(&Fundamental::new(0)).unwrap()), "x^-1");
        assert_eq!(show(&d.log_derivative(&Fundamental::new(-1)).unwrap()), "x^-1*E_-1^-1");
    }

    #[test]
    fn derive_examples() {
        let d = le();
        assert!(d.derive_monomial(&Monomial::one()).unwrap().is_zero());
        assert_eq!(d.derive(&p("x")).unwrap(), p("1"));
        assert_eq!(d.derive(&p("x*E_1")).unwrap(), p("x*E_1 + E_1"));
        assert_eq!(d.derive(&p("x^2 + x")).unwrap(), p("2*x + 1"));
        assert!(d.derive(&p("7/2")).unwrap().is_zero());
        assert_eq!(d.derive(&p("E_2")).unwrap(), p("E_1*E_2"));
        assert_eq!(d.derive(&p("E_-1")).unwrap(), p("x^-1"));
    }

    fn two_term_table() -> DerivationSchema {
        let chain = FundamentalChain::finite(["a", "b", "c", "d", "u", "v"]).unwrap();
        let ps = |s: &str| parse_series(s, &chain).unwrap();
        let table = BTreeMap::from([
            (chain.lookup("u").unwrap(), ps("a + b")),
            (chain.lookup("v").unwrap(), ps("c + d")),
        ]);
        DerivationSchema::new(chain, SchemaKind::ExplicitTable(table)).unwrap()
    }

    #[test]
    fn isomorphism_and_position() {
        let d = two_term_table();
        let c = d.chain().clone();
        let (u, v) = (c.lookup("u").unwrap(), c.lookup("v").unwrap());
        let m = |s: &str| crate::text::parse_monomial(s, &c).unwrap();
        assert_eq!(d.support_isomorphism(&u, &v, &m("a")).unwrap(), m("c"));
        assert_eq!(d.support_isomorphism(&u, &v, &m("b")).unwrap(), m("d"));
        assert_eq!(d.support_isomorphism(&v, &u, &m("d")).unwrap(), m("b"));
        assert_eq!(d.position(&u, &m("a")).unwrap(), 1);
        assert_eq!(d.position(&u, &m("b")).unwrap(), 0);
        assert!(matches!(d.position(&u, &m("c")), Err(Error::Domain(_))));
        assert!(matches!(d.log_derivative(&c.lookup("a").unwrap()), Err(Error::SchemaDomain(_))));
        assert!(d.is_left_shift(&v, &u).unwrap());
        assert!(!d.is_left_shift(&u, &v).unwrap());
    }

    #[test]
    fn shift_schemas() {
        let chain = FundamentalChain::integer("p_").unwrap().with_shift(q(1)).unwrap();
        let d = DerivationSchema::new(
            chain.clone(),
            SchemaKind::ShiftMonomial { scale: q(1), exponents: vec![q(1), qr(-1, 2)] },
        )
        .unwrap();
        let s = d.log_derivative(&Fundamental::new(3)).unwrap();
        assert_eq!(print_series(&s, &chain), "p_1^-1/2*p_2");

        let floor = chain.clone().with_bounds(Some(q(0)), None).unwrap();
        let d = DerivationSchema::new(
            floor.clone(),
            SchemaKind::ShiftMonomial { scale: q(2), exponents: vec![q(1), q(1)] },
        )
        .unwrap();
        assert_eq!(d.log_derivative(&Fundamental::new(0)).unwrap(), Series::constant(q(2)));
        assert_eq!(print_series(&d.log_derivative(&Fundamental::new(1)).unwrap(), &floor), "2*p_0^2");
        assert!(DerivationSchema::new(
            floor,
            SchemaKind::ShiftMonomial { scale: q(1), exponents: vec![q(1), q(-2)] },
        )
        .is_err());

        let g = DerivationSchema::new(
            chain.clone(),
            SchemaKind::GeneralShift {
                gamma: Monomial::one(),
                terms: vec![(q(2), vec![q(1)]), (q(1), vec![q(0), q(1)])],
            },
        )
        .unwrap();
        assert_eq!(print_series(&g.log_derivative(&Fundamental::new(0)).unwrap(), &chain), "2*p_-1 + p_-2");
        assert!(DerivationSchema::new(
            chain,
            SchemaKind::GeneralShift { gamma: Monomial::one(), terms: vec![(q(1), vec![q(0), q(-1)])] },
        )
        .is_err());
    }

    #[test]
    fn indexed_power() {
        let chain = FundamentalChain::rational("f_").unwrap().with_bounds(Some(q(0)), None).unwrap();
        let d = DerivationSchema::new(
            chain.clone(),
            SchemaKind::RealIndexedPower { beta: q(-1), scale: PowerScale::IndexOrOne },
        )
        .unwrap();
        let half = Fundamental::from_index(qr(1, 2));
        assert_eq!(print_series(&d.log_derivative(&half).unwrap(), &chain), "1/2*f_0^-1/2");
        assert_eq!(print_series(&d.log_derivative(&Fundamental::new(0)).unwrap(), &chain), "f_0^-1");
    }
}
