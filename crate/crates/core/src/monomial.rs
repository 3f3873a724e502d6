//! The Hahn group `H_fin(Φ)` of finitely supported formal products
//! `Π φ^{γ_φ}` with rational exponents.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Div, Mul};

use num_traits::{One, Signed, Zero};

use crate::chain::Fundamental;
use crate::{Error, Result, Q};

/// An element of `H_fin(Φ)`; zero exponents are never stored, so the
/// identity is the empty map.
///
/// Monomials are ordered anti-lexicographically: `α ≺ β` iff the exponent of
/// `β/α` at its leading fundamental monomial is positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: BTreeMap<Fundamental, Q>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    /// The fundamental monomial `φ` itself.
    pub fn fundamental(phi: Fundamental) -> Self {
        Monomial::power(phi, Q::one())
    }

    /// `φ^e`.
    pub fn power(phi: Fundamental, e: Q) -> Self {
        let mut exps = BTreeMap::new();
        if !e.is_zero() {
            exps.insert(phi, e);
        }
        Monomial { exps }
    }

    /// Builds `Π φ^e`, merging repeated fundamentals.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Fundamental, Q)>) -> Self {
        let mut exps: BTreeMap<Fundamental, Q> = BTreeMap::new();
        for (phi, e) in pairs {
            *exps.entry(phi).or_insert_with(Q::zero) += e;
        }
        exps.retain(|_, e| !e.is_zero());
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// `γ_φ`, zero outside the support.
    pub fn exponent(&self, phi: &Fundamental) -> Q {
        self.exps.get(phi).cloned().unwrap_or_else(Q::zero)
    }

    /// `(φ, γ_φ)` in ascending chain order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Fundamental, &Q)> + '_ {
        self.exps.iter()
    }

    pub fn support(&self) -> impl DoubleEndedIterator<Item = &Fundamental> + '_ {
        self.exps.keys()
    }

    pub fn support_len(&self) -> usize {
        self.exps.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (phi, e) in &other.exps {
            let slot = exps.entry(phi.clone()).or_insert_with(Q::zero);
            *slot += e;
            if slot.is_zero() {
                exps.remove(phi);
            }
        }
        Monomial { exps }
    }

    pub fn inv(&self) -> Monomial {
        Monomial { exps: self.exps.iter().map(|(p, e)| (p.clone(), -e)).collect() }
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        self.mul(&other.inv())
    }

    /// `γ^r`, exponentwise scaling.
    pub fn pow_scalar(&self, r: &Q) -> Monomial {
        if r.is_zero() {
            return Monomial::one();
        }
        Monomial { exps: self.exps.iter().map(|(p, e)| (p.clone(), e * r)).collect() }
    }

    /// `LF(γ) = max supp γ`; `None` stands for the convention `LF(1) = 1`,
    /// which sits below every fundamental monomial.
    pub fn leading_fundamental(&self) -> Option<&Fundamental> {
        self.exps.keys().next_back()
    }

    /// `LE(γ)`, the exponent of `LF(γ)`.
    pub fn leading_exponent(&self) -> Result<&Q> {
        self.exps
            .values()
            .next_back()
            .ok_or_else(|| Error::Domain("leading exponent of the identity monomial".into()))
    }

    /// Position of `γ` relative to `1`.
    pub fn cmp_one(&self) -> Ordering {
        match self.exps.values().next_back() {
            None => Ordering::Equal,
            Some(e) if e.is_positive() => Ordering::Greater,
            Some(_) => Ordering::Less,
        }
    }

    /// `(|α|, sign α)` with `|α| = max(α, 1/α)`; `sign(1)` is `Plus`.
    pub fn abs_sign(&self) -> (Monomial, Sign) {
        match self.cmp_one() {
            Ordering::Less => (self.inv(), Sign::Minus),
            _ => (self.clone(), Sign::Plus),
        }
    }

    pub fn compare(&self, other: &Monomial) -> Ordering {
        self.cmp(other)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        // Walk both supports downward; the first fundamental where the
        // exponents differ decides.
        let mut a = self.exps.iter().rev().peekable();
        let mut b = other.exps.iter().rev().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some((_, ea)), None) => return ea.sign_ord(),
                (None, Some((_, eb))) => return eb.sign_ord().reverse(),
                (Some((pa, ea)), Some((pb, eb))) => match pa.cmp(pb) {
                    Ordering::Greater => return ea.sign_ord(),
                    Ordering::Less => return eb.sign_ord().reverse(),
                    Ordering::Equal => {
                        let c = ea.cmp(eb);
                        if c != Ordering::Equal {
                            return c;
                        }
                        a.next();
                        b.next();
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

trait SignOrd {
    fn sign_ord(&self) -> Ordering;
}

impl SignOrd for Q {
    fn sign_ord(&self) -> Ordering {
        self.cmp(&Q::zero())
    }
}

impl Mul for &Monomial {
    type Output = Monomial;
    fn mul(self, rhs: &Monomial) -> Monomial {
        Monomial::mul(self, rhs)
    }
}

impl Div for &Monomial {
    type Output = Monomial;
    fn div(self, rhs: &Monomial) -> Monomial {
        Monomial::div(self, rhs)
    }
}

/// Maximum of two leading fundamentals, with `None` (the identity) lowest.
pub fn max_lead<'a>(a: Option<&'a Fundamental>, b: Option<&'a Fundamental>) -> Option<&'a Fundamental> {
    a.max(b)
}
