//! Finitely supported generalised series with rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::chain::Fundamental;
use crate::monomial::Monomial;
use crate::{Error, Result, Q};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Q,
    pub monomial: Monomial,
}

impl Term {
    pub fn new(coeff: Q, monomial: Monomial) -> Self {
        Term { coeff, monomial }
    }
}

/// A series `Σ a_α α` stored as terms with nonzero coefficients and strictly
/// decreasing monomials, so structural equality is mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Series {
    terms: Vec<Term>,
}

/// `a = a^{≻1} + c + a^{≺1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesDecomposition {
    pub infinite_part: Series,
    pub constant_part: Q,
    pub infinitesimal_part: Series,
}

impl Series {
    pub fn zero() -> Self {
        Series::default()
    }

    pub fn one() -> Self {
        Series::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Series::term(c, Monomial::one())
    }

    pub fn monomial(m: Monomial) -> Self {
        Series::term(Q::one(), m)
    }

    pub fn term(c: Q, m: Monomial) -> Self {
        if c.is_zero() {
            Series::zero()
        } else {
            Series { terms: vec![Term::new(c, m)] }
        }
    }

    /// Normalizes an arbitrary list of terms: fuses equal monomials, drops
    /// zero coefficients and sorts decreasingly.
    pub fn from_terms(terms: impl IntoIterator<Item = Term>) -> Self {
        let mut acc: BTreeMap<Monomial, Q> = BTreeMap::new();
        for t in terms {
            *acc.entry(t.monomial).or_insert_with(Q::zero) += t.coeff;
        }
        Series {
            terms: acc
                .into_iter()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| Term::new(c, m))
                .collect(),
        }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// True for elements of `ℚ` (including zero).
    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.monomial.is_one())
    }

    pub fn coefficient(&self, m: &Monomial) -> Q {
        self.terms.iter().find(|t| &t.monomial == m).map(|t| t.coeff.clone()).unwrap_or_else(Q::zero)
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// `LM(a)`; `None` for the zero series, which lies below every monomial.
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.monomial)
    }

    /// `LC(a)` with `LC(0) = 0`.
    pub fn leading_coefficient(&self) -> Q {
        self.terms.first().map(|t| t.coeff.clone()).unwrap_or_else(Q::zero)
    }

    /// `(LM, LC, LT)` of a nonzero series.
    pub fn leading_data(&self) -> Result<(Monomial, Q, Term)> {
        let t = self.terms.first().ok_or_else(|| Error::Domain("leading data of the zero series".into()))?;
        Ok((t.monomial.clone(), t.coeff.clone(), t.clone()))
    }

    /// `LF(a) = LF(LM(a))`; `None` for constants and zero.
    pub fn leading_fundamental(&self) -> Option<&Fundamental> {
        self.leading_monomial().and_then(Monomial::leading_fundamental)
    }

    /// Sign in the ordered field (`a > 0` iff `LC(a) > 0`).
    pub fn signum(&self) -> Ordering {
        self.leading_coefficient().cmp(&Q::zero())
    }

    /// Field order: `a ≤ b` iff `LC(b − a) ≥ 0`.
    pub fn cmp_value(&self, other: &Series) -> Ordering {
        self.sub(other).signum()
    }

    /// Dominance: compares leading monomials, zero below everything.
    pub fn dominance(&self, other: &Series) -> Ordering {
        self.leading_monomial().cmp(&other.leading_monomial())
    }

    /// `a ∼ b`: equal leading terms.
    pub fn equivalent(&self, other: &Series) -> bool {
        self.leading_term() == other.leading_term()
    }

    pub fn decompose(&self) -> SeriesDecomposition {
        let mut infinite = Vec::new();
        let mut constant = Q::zero();
        let mut small = Vec::new();
        for t in &self.terms {
            match t.monomial.cmp_one() {
                Ordering::Greater => infinite.push(t.clone()),
                Ordering::Equal => constant = t.coeff.clone(),
                Ordering::Less => small.push(t.clone()),
            }
        }
        SeriesDecomposition {
            infinite_part: Series { terms: infinite },
            constant_part: constant,
            infinitesimal_part: Series { terms: small },
        }
    }

    pub fn add(&self, other: &Series) -> Series {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match a.monomial.cmp(&b.monomial) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a.coeff + &b.coeff;
                    if !c.is_zero() {
                        out.push(Term::new(c, a.monomial.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Series { terms: out }
    }

    pub fn neg(&self) -> Series {
        Series { terms: self.terms.iter().map(|t| Term::new(-&t.coeff, t.monomial.clone())).collect() }
    }

    pub fn sub(&self, other: &Series) -> Series {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Q) -> Series {
        if c.is_zero() {
            return Series::zero();
        }
        Series { terms: self.terms.iter().map(|t| Term::new(&t.coeff * c, t.monomial.clone())).collect() }
    }

    /// Multiplication by a single term; order is preserved.
    pub fn mul_term(&self, c: &Q, m: &Monomial) -> Series {
        if c.is_zero() {
            return Series::zero();
        }
        Series { terms: self.terms.iter().map(|t| Term::new(&t.coeff * c, t.monomial.mul(m))).collect() }
    }

    /// Convolution product.
    pub fn mul(&self, other: &Series) -> Series {
        if self.is_zero() || other.is_zero() {
            return Series::zero();
        }
        if other.len() == 1 {
            let t = &other.terms[0];
            return self.mul_term(&t.coeff, &t.monomial);
        }
        if self.len() == 1 {
            let t = &self.terms[0];
            return other.mul_term(&t.coeff, &t.monomial);
        }
        Series::from_terms(self.terms.iter().flat_map(|a| {
            other.terms.iter().map(move |b| Term::new(&a.coeff * &b.coeff, a.monomial.mul(&b.monomial)))
        }))
    }

    /// Terms with monomial strictly above `bound`.
    pub fn truncate_above(&self, bound: &Monomial) -> Series {
        Series { terms: self.terms.iter().take_while(|t| &t.monomial > bound).cloned().collect() }
    }

    /// The `n` leading terms.
    pub fn truncate_terms(&self, n: usize) -> Series {
        Series { terms: self.terms.iter().take(n).cloned().collect() }
    }

    /// The `budget` leading terms of `1/a` (all of them when `a` is a single
    /// term, whose inverse is exact).
    ///
    /// With `a = c·m·(1+ε)`, `ε ≺ 1`, partial geometric sums `Σ_{k<K} (−ε)^k`
    /// are exact strictly above `LM(ε)^K`; `K` grows until enough exact terms
    /// are available. The defect `a·result − 1` then lies strictly below
    /// `LM(a)` times the last returned term.
    pub fn invert(&self, budget: usize) -> Result<Series> {
        if budget == 0 {
            return Err(Error::Domain("inversion budget must be at least 1".into()));
        }
        let (m, c, _) = self.leading_data().map_err(|_| Error::DivisionByZero)?;
        let lead_inv = Series::term(c.recip(), m.inv());
        if self.len() == 1 {
            return Ok(lead_inv);
        }
        // ε = a / LT(a) − 1
        let eps = self.mul(&lead_inv).sub(&Series::one());
        let neg_eps = eps.neg();
        let eps_lm = eps.leading_monomial().expect("a has a second term").clone();

        let mut depth = budget;
        // A finite series with more than one term has infinitely many terms in its
        // inverse, but cancellation can thin out the region above LM(ε)^K.
        let max_depth = budget.saturating_mul(64).max(64);
        loop {
            let bound = eps_lm.pow_scalar(&Q::from_integer(depth.into()));
            let mut sum = Series::one();
            let mut power = Series::one();
            for _ in 1..depth {
                power = power.mul(&neg_eps).truncate_above(&bound);
                if power.is_zero() {
                    break;
                }
                sum = sum.add(&power);
            }
            if sum.len() >= budget || depth >= max_depth {
                return Ok(sum.truncate_terms(budget).mul(&lead_inv));
            }
            depth = (depth * 2).min(max_depth);
        }
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        Series::add(self, rhs)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        Series::sub(self, rhs)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        Series::mul(self, rhs)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series::neg(self)
    }
}

impl From<Monomial> for Series {
    fn from(m: Monomial) -> Self {
        Series::monomial(m)
    }
}

impl From<Term> for Series {
    fn from(t: Term) -> Self {
        Series::term(t.coeff, t.monomial)
    }
}
