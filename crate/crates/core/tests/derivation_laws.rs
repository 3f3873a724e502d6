mod common;

use common::{nonzero_rational, series};
use hahn_core::derivation::SchemaKind;
use hahn_core::text::{parse_series, print_series};
use hahn_core::{
    check_condition, q, qr, Condition, DerivationSchema, Fundamental, FundamentalChain, Monomial, Series,
    Term, Verdict, Q,
};
use num_traits::One;
use proptest::prelude::*;

/// `E_n′` written out by hand: `E_n′ = E_1⋯E_n` for `n ≥ 1`, `x′ = 1` and
/// `E_{-m}′ = x⁻¹E_{-1}⁻¹⋯E_{-m+1}⁻¹` for `m ≥ 1`.
fn log_exp_derivative_oracle(n: i64) -> Series {
    let f = |k: i64, e: i64| (Fundamental::new(k), q(e));
    let m = if n >= 1 {
        Monomial::from_pairs((1..=n).map(|k| f(k, 1)))
    } else if n == 0 {
        Monomial::one()
    } else {
        Monomial::from_pairs((n + 1..=0).map(|k| f(k, -1)))
    };
    Series::monomial(m)
}

fn shift_schema() -> DerivationSchema {
    let chain = FundamentalChain::integer("p_").unwrap().with_shift(q(1)).unwrap();
    DerivationSchema::new(chain, SchemaKind::ShiftMonomial { scale: q(1), exponents: vec![q(1), qr(-1, 2)] })
        .unwrap()
}

proptest! {
    #[test]
    fn fundamental_derivatives_match_closed_form(n in -6i64..=6) {
        let d = DerivationSchema::log_exp();
        let phi = Series::monomial(Monomial::fundamental(Fundamental::new(n)));
        prop_assert_eq!(d.derive(&phi).unwrap(), log_exp_derivative_oracle(n));
    }

    #[test]
    fn log_exp_linear_and_leibniz(a in series(-3, 3), b in series(-3, 3), c in nonzero_rational(4)) {
        let d = DerivationSchema::log_exp();
        let (da, db) = (d.derive(&a).unwrap(), d.derive(&b).unwrap());
        prop_assert_eq!(d.derive(&(&a + &b)).unwrap(), &da + &db);
        prop_assert_eq!(d.derive(&a.scale(&c)).unwrap(), da.scale(&c));
        prop_assert_eq!(d.derive(&(&a * &b)).unwrap(), &(&da * &b) + &(&a * &db));
    }

    #[test]
    fn shift_schema_leibniz(a in series(-2, 3), b in series(-2, 3)) {
        let d = shift_schema();
        let (da, db) = (d.derive(&a).unwrap(), d.derive(&b).unwrap());
        prop_assert_eq!(d.derive(&(&a * &b)).unwrap(), &(&da * &b) + &(&a * &db));
    }

    #[test]
    fn monomial_derivative_is_strong_leibniz(a in common::monomial(-3, 3)) {
        let d = DerivationSchema::log_exp();
        let mut expected = Series::zero();
        for (phi, e) in a.iter() {
            let dphi = d.derive(&Series::monomial(Monomial::fundamental(phi.clone()))).unwrap();
            let log = dphi.mul_term(&Q::one(), &Monomial::fundamental(phi.clone()).inv());
            expected = &expected + &log.mul_term(e, &a);
        }
        prop_assert_eq!(d.derive_monomial(&a).unwrap(), expected);
    }

    #[test]
    fn constants_are_the_kernel(a in series(-3, 3)) {
        let d = DerivationSchema::log_exp();
        prop_assert_eq!(d.derive(&a).unwrap().is_zero(), a.is_constant());
    }
}

#[test]
fn worked_log_exp_values() {
    let c = FundamentalChain::log_exp();
    let d = DerivationSchema::log_exp();
    let p = |s: &str| parse_series(s, &c).unwrap();
    let show = |s: &Series| print_series(s, &c);
    assert_eq!(show(&d.derive(&p("E_2")).unwrap()), "E_1*E_2");
    assert_eq!(show(&d.derive(&p("x")).unwrap()), "1");
    assert_eq!(show(&d.derive(&p("E_-1")).unwrap()), "x^-1");
    assert_eq!(show(&d.derive(&p("x*E_-1 - x")).unwrap()), "E_-1");
}

#[test]
fn support_isomorphism_preserves_order() {
    let chain = FundamentalChain::integer("p_").unwrap().with_shift(q(1)).unwrap();
    let d = DerivationSchema::new(
        chain,
        SchemaKind::GeneralShift {
            gamma: Monomial::one(),
            terms: vec![(q(1), vec![q(1)]), (q(2), vec![q(1), q(-1)]), (q(-1), vec![q(0), q(1)])],
        },
    )
    .unwrap();
    for i in -3..3 {
        let (mu, nu) = (Fundamental::new(i), Fundamental::new(i + 1));
        let supp = d.support(&mu).unwrap();
        assert_eq!(supp.len(), 3);
        let images: Vec<_> = supp.iter().map(|t| d.support_isomorphism(&mu, &nu, t).unwrap()).collect();
        assert!(supp.windows(2).all(|w| w[0] > w[1]));
        assert!(images.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(images, d.support(&nu).unwrap());
    }
}

#[test]
fn shift_schemas_have_empty_bad_sets() {
    let d = shift_schema();
    for cond in [Condition::H1Prime, Condition::H2DoublePrime] {
        for len in [1, 2, 7, 50] {
            let w = d.chain().range(-10, -10 + len as i64 - 1).unwrap();
            assert!(check_condition(&d, cond, &w).unwrap().verdict.holds(), "{cond} {len}");
        }
    }
}

#[test]
fn adversarial_witness_rechecks() {
    let d = DerivationSchema::new(
        FundamentalChain::integer("p_").unwrap(),
        SchemaKind::OffsetMonomial { scale: q(1), factors: vec![(q(1), q(1))] },
    )
    .unwrap();
    let w = d.chain().range(0, 4).unwrap();
    let report = check_condition(&d, Condition::H2DoublePrime, &w).unwrap();
    let Verdict::Fails(witness) = &report.verdict else { panic!("{:?}", report.verdict) };
    assert!(witness.recheck(&d).unwrap());
    assert_eq!(witness.pair(), Some((&Fundamental::new(0), &Fundamental::new(1))));
    let report = check_condition(&d, Condition::H3Prime, &w).unwrap();
    assert!(report.verdict.witness().unwrap().recheck(&d).unwrap());
}

#[test]
fn finite_tables_are_decided_exactly() {
    let chain = FundamentalChain::finite(["u", "v"]).unwrap();
    let p = |s: &str| parse_series(s, &chain).unwrap();
    let table = [(chain.lookup("u").unwrap(), p("3")), (chain.lookup("v").unwrap(), p("u"))].into();
    let d = DerivationSchema::new(chain.clone(), SchemaKind::ExplicitTable(table)).unwrap();
    let w = chain.elements().unwrap();
    for cond in [Condition::H1Prime, Condition::H2DoublePrime, Condition::H3Prime] {
        let v = check_condition(&d, cond, &w).unwrap().verdict;
        assert!(!matches!(v, Verdict::UnknownAtDepth(_)), "{cond}: {v:?}");
    }
    let term = Term::new(q(2), Monomial::fundamental(chain.lookup("v").unwrap()));
    assert_eq!(print_series(&d.derive(&term.into()).unwrap(), &chain), "2*u*v");
}
