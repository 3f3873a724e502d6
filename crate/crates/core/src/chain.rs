//! The ordered chain `Φ` of fundamental monomials.
//!
//! Every fundamental monomial is identified by a rational index and the
//! chain order is the order of indices. Finite lists use the positions
//! `0..n`, integer-indexed chains use `ℤ` (optionally bounded) and
//! rational-indexed chains use `ℚ`. Elements of infinite chains are never
//! materialized as a whole; membership and neighbours are computed from the
//! index.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{q, Error, Result, Q};

/// A fundamental monomial, i.e. an element of the chain.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fundamental(Q);

impl Fundamental {
    pub fn new(index: i64) -> Self {
        Fundamental(q(index))
    }

    pub fn from_index(index: Q) -> Self {
        Fundamental(index)
    }

    pub fn index(&self) -> &Q {
        &self.0
    }

    /// The index as a machine integer, if it is one.
    pub fn integer_index(&self) -> Option<i64> {
        if self.0.is_integer() {
            self.0.to_integer().to_i64()
        } else {
            None
        }
    }

    pub fn offset(&self, by: &Q) -> Self {
        Fundamental(&self.0 + by)
    }
}

impl fmt::Display for Fundamental {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainKind {
    /// Names listed in ascending order; the index is the position.
    FiniteList(Vec<String>),
    /// `prefix` followed by an integer index, e.g. `E_-1`.
    IntegerIndexed { prefix: String },
    /// `prefix` followed by a rational index, e.g. `F_1/2`.
    RationalIndexed { prefix: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalChain {
    kind: ChainKind,
    min: Option<Q>,
    max: Option<Q>,
    aliases: BTreeMap<Fundamental, String>,
    /// Step of the translation endomorphism `s(φ_q) = φ_{q-step}`, clamped at
    /// the least element when there is one.
    shift: Option<Q>,
}

impl FundamentalChain {
    pub fn finite<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidChain("a finite chain needs at least one name".into()));
        }
        let mut seen = BTreeSet::new();
        for name in &names {
            if !is_plain_name(name) {
                return Err(Error::InvalidChain(format!("`{name}` is not a valid name")));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidChain(format!("duplicate name `{name}`")));
            }
        }
        let n = names.len() as i64;
        Ok(FundamentalChain {
            kind: ChainKind::FiniteList(names),
            min: Some(Q::zero()),
            max: Some(q(n - 1)),
            aliases: BTreeMap::new(),
            shift: None,
        })
    }

    pub fn integer(prefix: &str) -> Result<Self> {
        Self::indexed(ChainKind::IntegerIndexed { prefix: prefix.to_owned() })
    }

    pub fn rational(prefix: &str) -> Result<Self> {
        Self::indexed(ChainKind::RationalIndexed { prefix: prefix.to_owned() })
    }

    fn indexed(kind: ChainKind) -> Result<Self> {
        let prefix = match &kind {
            ChainKind::IntegerIndexed { prefix } | ChainKind::RationalIndexed { prefix } => prefix,
            ChainKind::FiniteList(_) => unreachable!(),
        };
        if !prefix.ends_with('_') || !is_plain_name(prefix.trim_end_matches('_')) {
            return Err(Error::InvalidChain(format!("prefix `{prefix}` must be a name followed by `_`")));
        }
        Ok(FundamentalChain { kind, min: None, max: None, aliases: BTreeMap::new(), shift: None })
    }

    /// The iterated logarithms and exponentials `E_k = exp^k(x)`, `k ∈ ℤ`,
    /// with `E_0` printed as `x`.
    pub fn log_exp() -> Self {
        Self::integer("E_")
            .and_then(|c| c.with_alias(Fundamental::new(0), "x"))
            .expect("built-in chain is valid")
    }

    /// Restricts an indexed chain to `min ≤ index ≤ max`.
    pub fn with_bounds(mut self, min: Option<Q>, max: Option<Q>) -> Result<Self> {
        if let ChainKind::FiniteList(_) = self.kind {
            return Err(Error::InvalidChain("finite lists are bounded by their names".into()));
        }
        if let ChainKind::IntegerIndexed { .. } = self.kind {
            if min.iter().chain(max.iter()).any(|b| !b.is_integer()) {
                return Err(Error::InvalidChain("integer chain bounds must be integers".into()));
            }
        }
        if let (Some(lo), Some(hi)) = (&min, &max) {
            if lo > hi {
                return Err(Error::InvalidChain("empty chain: min exceeds max".into()));
            }
        }
        self.min = min;
        self.max = max;
        Ok(self)
    }

    pub fn with_alias(mut self, phi: Fundamental, name: &str) -> Result<Self> {
        if !is_plain_name(name) {
            return Err(Error::InvalidChain(format!("`{name}` is not a valid name")));
        }
        if !self.contains(&phi) {
            return Err(Error::InvalidChain(format!("alias `{name}` names an index outside the chain")));
        }
        if self.lookup(name).is_some_and(|other| other != phi) {
            return Err(Error::InvalidChain(format!("alias `{name}` is already in use")));
        }
        self.aliases.insert(phi, name.to_owned());
        Ok(self)
    }

    /// Installs the translation shift `s(φ_q) = φ_{q−step}` (clamped at the
    /// least element, which is then fixed).
    pub fn with_shift(mut self, step: Q) -> Result<Self> {
        if !step.is_positive() {
            return Err(Error::InvalidChain("shift step must be positive".into()));
        }
        if self.is_discrete() && !step.is_integer() {
            return Err(Error::InvalidChain("shift step on a discrete chain must be an integer".into()));
        }
        self.shift = Some(step);
        Ok(self)
    }

    pub fn kind(&self) -> &ChainKind {
        &self.kind
    }

    pub fn shift_step(&self) -> Option<&Q> {
        self.shift.as_ref()
    }

    pub fn min_index(&self) -> Option<&Q> {
        self.min.as_ref()
    }

    pub fn max_index(&self) -> Option<&Q> {
        self.max.as_ref()
    }

    /// Integer positions: finite lists and integer-indexed chains.
    pub fn is_discrete(&self) -> bool {
        !matches!(self.kind, ChainKind::RationalIndexed { .. })
    }

    pub fn is_finite(&self) -> bool {
        self.is_discrete() && self.min.is_some() && self.max.is_some()
    }

    pub fn contains(&self, phi: &Fundamental) -> bool {
        let idx = phi.index();
        if self.is_discrete() && !idx.is_integer() {
            return false;
        }
        self.min.as_ref().is_none_or(|m| idx >= m) && self.max.as_ref().is_none_or(|m| idx <= m)
    }

    pub fn least(&self) -> Option<Fundamental> {
        self.min.clone().map(Fundamental)
    }

    pub fn greatest(&self) -> Option<Fundamental> {
        self.max.clone().map(Fundamental)
    }

    /// All elements in ascending order, for finite chains.
    pub fn elements(&self) -> Option<Vec<Fundamental>> {
        if !self.is_finite() {
            return None;
        }
        let lo = self.min.as_ref()?.to_integer().to_i64()?;
        let hi = self.max.as_ref()?.to_integer().to_i64()?;
        Some((lo..=hi).map(Fundamental::new).collect())
    }

    pub fn predecessor(&self, phi: &Fundamental) -> Option<Fundamental> {
        if !self.is_discrete() {
            return None;
        }
        let prev = phi.offset(&-Q::one());
        self.contains(&prev).then_some(prev)
    }

    pub fn successor(&self, phi: &Fundamental) -> Option<Fundamental> {
        if !self.is_discrete() {
            return None;
        }
        let next = phi.offset(&Q::one());
        self.contains(&next).then_some(next)
    }

    /// The element used as the starting point of outward searches: index 0
    /// clamped into the chain, or the top of a finite list.
    pub fn anchor(&self) -> Fundamental {
        if let ChainKind::FiniteList(_) = self.kind {
            return self.greatest().expect("finite lists are bounded");
        }
        let mut idx = Q::zero();
        if let Some(max) = &self.max {
            if &idx > max {
                idx = max.clone();
            }
        }
        if let Some(min) = &self.min {
            if &idx < min {
                idx = min.clone();
            }
        }
        Fundamental(idx)
    }

    /// Applies the shift endomorphism `s`.
    pub fn shift(&self, phi: &Fundamental) -> Result<Fundamental> {
        let step = self
            .shift
            .as_ref()
            .ok_or_else(|| Error::InvalidChain("chain has no shift endomorphism".into()))?;
        if !self.contains(phi) {
            return Err(Error::SchemaDomain(phi.clone()));
        }
        let mut idx = phi.index() - step;
        if let Some(min) = &self.min {
            if &idx < min {
                idx = min.clone();
            }
        }
        Ok(Fundamental(idx))
    }

    /// `s^n(φ)`.
    pub fn shift_iter(&self, phi: &Fundamental, n: usize) -> Result<Fundamental> {
        let mut cur = phi.clone();
        for _ in 0..n {
            cur = self.shift(&cur)?;
        }
        Ok(cur)
    }

    /// Whether `s` is strictly increasing on the chain minus its least element
    /// (true translations, or unit steps on a discrete chain with a floor).
    pub fn shift_is_strict(&self) -> bool {
        match (&self.shift, &self.min) {
            (None, _) => false,
            (Some(_), None) => true,
            (Some(step), Some(_)) => self.is_discrete() && step.is_one(),
        }
    }

    pub fn name(&self, phi: &Fundamental) -> String {
        if let Some(alias) = self.aliases.get(phi) {
            return alias.clone();
        }
        match &self.kind {
            ChainKind::FiniteList(names) => phi
                .integer_index()
                .and_then(|i| usize::try_from(i).ok())
                .and_then(|i| names.get(i).cloned())
                .unwrap_or_else(|| format!("?{}", phi.index())),
            ChainKind::IntegerIndexed { prefix } | ChainKind::RationalIndexed { prefix } => {
                format!("{prefix}{}", phi.index())
            }
        }
    }

    pub fn lookup(&self, name: &str) -> Option<Fundamental> {
        if let Some((phi, _)) = self.aliases.iter().find(|(_, a)| a.as_str() == name) {
            return Some(phi.clone());
        }
        let phi = match &self.kind {
            ChainKind::FiniteList(names) => Fundamental::new(names.iter().position(|n| n == name)? as i64),
            ChainKind::IntegerIndexed { prefix } | ChainKind::RationalIndexed { prefix } => {
                let rest = name.strip_prefix(prefix.as_str())?;
                let idx: Q = rest.parse().ok()?;
                if canonical_rational_text(rest) {
                    Fundamental(idx)
                } else {
                    return None;
                }
            }
        };
        self.contains(&phi).then_some(phi)
    }

    /// Elements with integer index in `lo..=hi`, ascending.
    pub fn range(&self, lo: i64, hi: i64) -> Result<Vec<Fundamental>> {
        if lo > hi {
            return Err(Error::Window(format!("empty range {lo}..{hi}")));
        }
        let out: Vec<_> = (lo..=hi).map(Fundamental::new).collect();
        if let Some(bad) = out.iter().find(|p| !self.contains(p)) {
            return Err(Error::Window(format!("index {} is not in the chain", bad.index())));
        }
        Ok(out)
    }
}

/// `[A-Za-z][A-Za-z0-9_]*`
pub(crate) fn is_plain_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Accepts exactly what `Q`'s `Display` prints: `-?\d+(/\d+)?` in lowest terms.
fn canonical_rational_text(s: &str) -> bool {
    match s.parse::<Q>() {
        Ok(v) => v.to_string() == s,
        Err(_) => false,
    }
}
