//! Randomized structural properties beyond the acceptance suite.

mod common;

use common::*;
use plane_branch::milnor::milnor_number;
use plane_branch::report::analyze_param;
use plane_branch::semigroup::{polar_intersection_triple, SemigroupData};
use plane_branch::Order;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    /// Intersection numbers are additive: i0(f, h1*h2) = i0(f, h1) + i0(f, h2).
    #[test]
    fn intersection_order_is_additive(b in arb_branch(),
                                      h1 in arb_curve_template(),
                                      h2 in arb_curve_template()) {
        let fp = b.field();
        let (h1, h2) = (h1.reduce(fp), h2.reduce(fp));
        let prod = h1.mul(&h2);
        match (b.intersection_order(&h1), b.intersection_order(&h2)) {
            (Order::Finite(v1), Order::Finite(v2)) => {
                prop_assert_eq!(b.intersection_order(&prod), Order::Finite(v1 + v2));
            }
            _ => {
                prop_assert_eq!(b.intersection_order(&prod), Order::Infinite);
            }
        }
    }

    /// The three polar computations agree on every valid instance.
    #[test]
    fn polar_triple_always_agrees(b in arb_branch()) {
        let ce = b.char_exponents();
        let sd = SemigroupData::from_char_exponents(&ce);
        let t = polar_intersection_triple(&b, &ce, &sd);
        prop_assert!(t.agree(), "triple {:?} on {}", t.values(), b);
    }

    /// Pullback of the implicit equation's y-partial has order c + n - 1.
    #[test]
    fn conductor_polar_formula_random(b in arb_small_branch(20)) {
        let sd = SemigroupData::from_char_exponents(&b.char_exponents());
        let f = b.implicitize().unwrap();
        let i0 = b.intersection_order(&f.partial_y());
        prop_assert_eq!(i0, Order::Finite(sd.conductor() + b.n() - 1));
    }

    /// Structure verification never flags pipeline-produced semigroups.
    #[test]
    fn structure_always_verifies(b in arb_branch()) {
        let sd = SemigroupData::from_char_exponents(&b.char_exponents());
        let rep = sd.verify_structure();
        prop_assert!(rep.all_pass(), "failures: {:?}", rep.failures);
        let merle = sd.merle().expect("pipeline data always has merle packages");
        prop_assert_eq!(merle.orders.iter().sum::<u64>(), b.n() - 1);
    }

    /// The Milnor number only depends on the function up to constant units
    /// and on the curve up to swapping the variables.
    #[test]
    fn milnor_invariance(b in arb_small_branch(14), unit in 1u64..1_000) {
        let f = b.implicitize().unwrap();
        let unit = b.field().reduce_u64(unit);
        prop_assume!(unit != 0);
        let m = milnor_number(&f, 64);
        prop_assert_eq!(milnor_number(&f.scale(unit), 64).value(), m.value());
        prop_assert_eq!(milnor_number(&f.swap_xy(), 64).value(), m.value());
    }

    /// Every check a report emits is pass or not-applicable on valid
    /// instances; sweeps of theorem-regime rows confirm the dichotomy
    /// between mu = c and mu > c.
    #[test]
    fn reports_never_fail_on_valid_branches(b in arb_small_branch(14)) {
        let report = analyze_param(&b, None).unwrap();
        prop_assert!(!report.any_check_failed(),
                     "failing checks: {:?}",
                     report.checks.iter()
                           .filter(|c| c.status == plane_branch::report::CheckStatus::Fail)
                           .collect::<Vec<_>>());
        if report.hypotheses.p_greater_than_n {
            if let Some(mu) = report.mu.value() {
                let c = report.conductor.unwrap();
                let coprime = report.beta_bar.as_ref().unwrap()[1..]
                    .iter()
                    .all(|&g| g % b.prime() != 0);
                if coprime {
                    prop_assert_eq!(mu, c);
                } else {
                    prop_assert!(mu > c);
                }
            }
        }
    }
}
