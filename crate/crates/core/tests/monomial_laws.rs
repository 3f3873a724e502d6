mod common;

use std::cmp::Ordering;

use common::{exponents, monomial, nonzero_rational, oracle_less};
use hahn_core::{Monomial, Sign};
use proptest::prelude::*;

proptest! {
    #[test]
    fn order_matches_leading_exponent_oracle(a in monomial(-3, 3), b in monomial(-3, 3)) {
        let expected = if oracle_less(&a, &b) {
            Ordering::Less
        } else if oracle_less(&b, &a) {
            Ordering::Greater
        } else {
            Ordering::Equal
        };
        prop_assert_eq!(a.compare(&b), expected);
        prop_assert_eq!(a.cmp(&b), expected);
        prop_assert_eq!(expected == Ordering::Equal, a == b);
    }

    #[test]
    fn order_is_transitive(a in monomial(-3, 3), b in monomial(-3, 3), c in monomial(-3, 3)) {
        if a <= b && b <= c {
            prop_assert!(a <= c);
        }
    }

    #[test]
    fn group_laws(a in monomial(-3, 3), b in monomial(-3, 3), c in monomial(-3, 3)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&a.inv()), Monomial::one());
        prop_assert_eq!(a.mul(&Monomial::one()), a.clone());
    }

    #[test]
    fn order_compatible_with_product(a in monomial(-3, 3), b in monomial(-3, 3), c in monomial(-3, 3)) {
        prop_assert_eq!(a.compare(&b), a.mul(&c).compare(&b.mul(&c)));
    }

    #[test]
    fn above_one_iff_positive_leading_exponent(a in monomial(-3, 3)) {
        prop_assume!(!a.is_one());
        let top = exponents(&a).into_iter().next_back().unwrap().1;
        prop_assert_eq!(a > Monomial::one(), top > hahn_core::q(0));
        prop_assert_eq!(a.leading_exponent().unwrap(), &top);
    }

    #[test]
    fn leading_fundamental_ultrametric(a in monomial(-3, 3), b in monomial(-3, 3)) {
        let (la, lb) = (a.leading_fundamental().cloned(), b.leading_fundamental().cloned());
        let lab = a.mul(&b).leading_fundamental().cloned();
        prop_assert!(lab <= la.clone().max(lb.clone()));
        if la != lb {
            prop_assert_eq!(lab, la.max(lb));
        }
    }

    #[test]
    fn same_sign_product_lf(a in monomial(-3, 3), b in monomial(-3, 3)) {
        if a.abs_sign().1 == b.abs_sign().1 {
            let expected = a.leading_fundamental().cloned().max(b.leading_fundamental().cloned());
            prop_assert_eq!(a.mul(&b).leading_fundamental().cloned(), expected);
        }
    }

    #[test]
    fn small_quotient_forces_equal_lead(a in monomial(-3, 3), b in monomial(-3, 3)) {
        if b.div(&a).leading_fundamental() < b.leading_fundamental() {
            prop_assert_eq!(a.leading_fundamental(), b.leading_fundamental());
            prop_assert_eq!(a.leading_exponent().unwrap(), b.leading_exponent().unwrap());
            prop_assert_eq!(a.abs_sign().1, b.abs_sign().1);
        }
    }

    #[test]
    fn scalar_power(a in monomial(-3, 3), r in nonzero_rational(4)) {
        prop_assume!(!a.is_one());
        let p = a.pow_scalar(&r);
        prop_assert_eq!(p.leading_fundamental(), a.leading_fundamental());
        prop_assert_eq!(p.leading_exponent().unwrap(), &(r * a.leading_exponent().unwrap()));
    }

    #[test]
    fn abs_sign_reconstructs(a in monomial(-3, 3)) {
        let (abs, sign) = a.abs_sign();
        prop_assert!(abs >= Monomial::one());
        let back = if sign == Sign::Plus { abs } else { abs.inv() };
        prop_assert_eq!(back, a);
    }
}
