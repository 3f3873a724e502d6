mod common;

use std::cmp::Ordering;

use common::{monomial, nonzero_rational, nonzero_series, series};
use hahn_core::{q, Fundamental, Monomial, Series, Term, Q};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

/// `LM` with `LM(0) = 0` placed below every monomial.
fn lm(a: &Series) -> Option<Monomial> {
    a.leading_monomial().cloned()
}

fn le_dom(a: &Series, b: &Series) -> bool {
    lm(a) <= lm(b)
}

/// `a ≤ b` in the field order: `b − a` is zero or has a positive leading coefficient.
fn le_value(a: &Series, b: &Series) -> bool {
    let d = b.sub(a);
    d.is_zero() || d.leading_coefficient() > Q::zero()
}

/// Top `n` terms of `Σ_{k<n} (−ε)^k`, multiplied out by hand.
fn geometric_oracle(eps: &Series, n: usize) -> Series {
    let mut sum = Series::one();
    let mut power = Series::one();
    let minus_eps = eps.neg();
    for _ in 1..n {
        power = &power * &minus_eps;
        sum = &sum + &power;
    }
    Series::from_terms(sum.terms().iter().take(n).cloned())
}

proptest! {
    #[test]
    fn ring_axioms(a in series(-2, 2), b in series(-2, 2), c in series(-2, 2)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn canonical_form(a in series(-2, 2)) {
        let t = a.terms();
        prop_assert!(t.windows(2).all(|w| w[0].monomial > w[1].monomial));
        prop_assert!(t.iter().all(|t| !t.coeff.is_zero()));
    }

    #[test]
    fn valuation_laws(a in series(-2, 2), b in series(-2, 2)) {
        let prod = &a * &b;
        match (lm(&a), lm(&b)) {
            (Some(x), Some(y)) => prop_assert_eq!(lm(&prod), Some(x.mul(&y))),
            _ => prop_assert!(prod.is_zero()),
        }
        let sum = &a + &b;
        prop_assert!(lm(&sum) <= lm(&a).max(lm(&b)));
        if lm(&a) != lm(&b) {
            prop_assert_eq!(lm(&sum), lm(&a).max(lm(&b)));
        }
    }

    #[test]
    fn dominance_relation(a in series(-2, 2), b in series(-2, 2), c in series(-2, 2)) {
        prop_assert!(!le_dom(&Series::one(), &Series::zero()));
        prop_assert!(le_dom(&a, &a));
        if le_dom(&a, &b) && le_dom(&b, &c) {
            prop_assert!(le_dom(&a, &c));
        }
        prop_assert!(le_dom(&a, &b) || le_dom(&b, &a));
        if le_dom(&a, &b) {
            prop_assert!(le_dom(&(&a * &c), &(&b * &c)));
        }
        if le_dom(&a, &c) && le_dom(&b, &c) {
            prop_assert!(le_dom(&(&a - &b), &c));
        }
        if le_value(&Series::zero(), &a) && le_value(&a, &b) {
            prop_assert!(le_dom(&a, &b));
        }
        prop_assert_eq!(a.dominance(&b), lm(&a).cmp(&lm(&b)));
        prop_assert_eq!(a.cmp_value(&b) != Ordering::Greater, le_value(&a, &b));
    }

    #[test]
    fn decompose_is_linear_and_exact(a in series(-2, 2), b in series(-2, 2)) {
        let (da, db, dab) = (a.decompose(), b.decompose(), (&a + &b).decompose());
        prop_assert_eq!(&(&da.infinite_part + &Series::constant(da.constant_part.clone())) + &da.infinitesimal_part, a.clone());
        prop_assert_eq!(&dab.infinite_part, &(&da.infinite_part + &db.infinite_part));
        prop_assert_eq!(&dab.constant_part, &(&da.constant_part + &db.constant_part));
        prop_assert_eq!(&dab.infinitesimal_part, &(&da.infinitesimal_part + &db.infinitesimal_part));
        let one = Monomial::one();
        prop_assert!(da.infinite_part.terms().iter().all(|t| t.monomial > one));
        prop_assert!(da.infinitesimal_part.terms().iter().all(|t| t.monomial < one));
    }

    #[test]
    fn invert_binomial_matches_geometric_series(
        c in nonzero_rational(4),
        d in nonzero_rational(4),
        m in monomial(-2, 2),
        e in monomial(-2, 2),
        n in 1usize..8,
    ) {
        prop_assume!(e < Monomial::one());
        // a = c·m·(1 + d·e)
        let eps = Series::term(d, e);
        let a = Series::term(c.clone(), m.clone()).mul(&(&Series::one() + &eps));
        let expected = geometric_oracle(&eps, n).mul_term(&c.recip(), &m.inv());
        prop_assert_eq!(a.invert(n).unwrap(), expected);
    }

    #[test]
    fn invert_trinomial_over_independent_fundamentals(
        c in nonzero_rational(3),
        d in nonzero_rational(3),
        i in -2i64..=0,
        j in 1i64..=2,
        r in nonzero_rational(3),
        s in nonzero_rational(3),
        n in 1usize..7,
    ) {
        // u and v involve distinct fundamentals, so no two products u^i v^j coincide
        let u = Monomial::power(Fundamental::new(i), -r.abs());
        let v = Monomial::from_pairs([(Fundamental::new(j), -s.abs()), (Fundamental::new(i), q(3))]);
        let eps = Series::from_terms([Term::new(c, u), Term::new(d, v)]);
        let a = &Series::one() + &eps;
        prop_assert_eq!(a.invert(n).unwrap(), geometric_oracle(&eps, n));
    }

    #[test]
    fn invert_defect_lies_below_last_term(a in nonzero_series(-2, 2), n in 1usize..6) {
        let inv = a.invert(n).unwrap();
        prop_assert!(inv.len() <= n);
        let defect = &(&a * &inv) - &Series::one();
        if inv.len() == n {
            let bound = a.leading_monomial().unwrap().mul(&inv.terms().last().unwrap().monomial);
            prop_assert!(defect.leading_monomial().is_none_or(|m| *m < bound));
        } else {
            prop_assert!(defect.is_zero());
        }
    }
}

#[test]
fn single_terms_invert_exactly() {
    let m = Monomial::from_pairs([(Fundamental::new(0), q(2)), (Fundamental::new(1), q(-1))]);
    let a = Series::term(q(3), m);
    assert_eq!(&a * &a.invert(1).unwrap(), Series::one());
    assert!(Series::zero().invert(3).is_err());
    assert_eq!(Series::constant(Q::one()).invert(5).unwrap(), Series::one());
}
