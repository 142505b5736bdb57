//! Randomized invariant sweeps over the whole measure family.

use confirm_core::classic::{eval_classic, eval_f_directed};
use confirm_core::contingency::TablePermutation;
use confirm_core::prediction::predict_posterior;
use confirm_core::properties::{check_nfc, check_symmetry, CheckOutcome, SymmetryKind};
use confirm_core::semantic::{
    average_semantic_information, relative_entropy_information, semantic_information,
    semantic_information_via_posterior, TruthAssignment,
};
use confirm_core::star::{
    b_star, b_star_from_counts, c_f_star, c_star, optimize_truth_assignment, StarKind,
};
use confirm_core::{ConfirmationValue, ContingencyTable, EventRole, MeasureKind, Rule};
use proptest::prelude::*;

fn table_strategy() -> impl Strategy<Value = ContingencyTable> {
    let small = (0u64..=6, 0u64..=6, 0u64..=6, 0u64..=6);
    let large = (0u64..=10_000, 0u64..=10_000, 0u64..=10_000, 0u64..=10_000);
    prop_oneof![small, large]
        .prop_filter_map("table must be non-empty", |(a, b, c, d)| {
            ContingencyTable::new(a, b, c, d).ok()
        })
}

const MAJOR_RULES: [Rule; 4] = [Rule::E1_H1, Rule::E0_H0, Rule::H1_E1, Rule::H0_E0];

proptest! {
    #[test]
    fn probability_masses_sum_to_one(t in table_strategy()) {
        let prior_sum = t.prior(EventRole::H1) + t.prior(EventRole::H0);
        prop_assert!((prior_sum - 1.0).abs() < 1e-12);
        let joint_sum: f64 = [
            (EventRole::E1, EventRole::H1),
            (EventRole::E1, EventRole::H0),
            (EventRole::E0, EventRole::H1),
            (EventRole::E0, EventRole::H0),
        ]
        .iter()
        .map(|&(e, h)| t.joint(e, h))
        .sum();
        prop_assert!((joint_sum - 1.0).abs() < 1e-12);
        for given in [EventRole::E1, EventRole::H0] {
            let pair = match given {
                EventRole::E1 => (EventRole::H1, EventRole::H0),
                _ => (EventRole::E1, EventRole::E0),
            };
            if let (Ok(x), Ok(y)) = (t.conditional(pair.0, given), t.conditional(pair.1, given)) {
                prop_assert!((x + y - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn permutations_compose_as_documented(t in table_strategy()) {
        use TablePermutation::*;
        for p in [SwapH, SwapE, SwapBoth, Transpose] {
            prop_assert_eq!(t.permute(p).permute(p), t, "{:?} must be an involution", p);
        }
        prop_assert_eq!(t.permute(SwapH).permute(SwapE), t.permute(SwapBoth));
        prop_assert_eq!(t.permute(SwapE).permute(SwapH), t.permute(SwapBoth));
    }

    #[test]
    fn orientation_realizes_rule_conditionals(t in table_strategy()) {
        for major in MAJOR_RULES {
            for rule in [major, major.negated()] {
                let via_orientation = t.oriented(rule).conditional(EventRole::E1, EventRole::H1);
                let direct = t.conditional(rule.antecedent(), rule.consequent());
                match (via_orientation, direct) {
                    (Ok(x), Ok(y)) => prop_assert!((x - y).abs() < 1e-15, "{}", rule),
                    (Err(_), Err(_)) => {}
                    (x, y) => prop_assert!(false, "{}: {:?} vs {:?}", rule, x, y),
                }
            }
        }
    }

    #[test]
    fn count_negation_symmetry_is_exact(t in table_strategy()) {
        // The count-built measures flip sign exactly (not just within
        // tolerance) when the hypothesis is negated.
        for kind in [MeasureKind::F, MeasureKind::BStar, MeasureKind::CStar, MeasureKind::CFStar] {
            match check_symmetry(kind, SymmetryKind::Hs, &t, 0.0) {
                CheckOutcome::Holds { deviation } => prop_assert_eq!(deviation, 0.0, "{}", kind),
                CheckOutcome::Skipped => {}
                CheckOutcome::Violation { deviation, .. } => {
                    prop_assert!(false, "{}: deviation {}", kind, deviation)
                }
            }
        }
        // The ratio-of-logs route rounds, so these hold to tolerance instead.
        for kind in [MeasureKind::D, MeasureKind::C, MeasureKind::S, MeasureKind::N,
                     MeasureKind::Z, MeasureKind::L] {
            if let CheckOutcome::Violation { deviation, .. } =
                check_symmetry(kind, SymmetryKind::Hs, &t, 1e-12)
            {
                prop_assert!(false, "{}: deviation {}", kind, deviation)
            }
        }
    }

    #[test]
    fn normalizing_measures_stay_in_unit_interval(t in table_strategy()) {
        for kind in [MeasureKind::Z, MeasureKind::F, MeasureKind::BStar,
                     MeasureKind::CStar, MeasureKind::CFStar] {
            for rule in MAJOR_RULES {
                if let Ok(ConfirmationValue::Finite(v)) = eval_classic(kind, rule, &t, 2.0) {
                    prop_assert!((-1.0..=1.0).contains(&v), "{} {} gave {}", kind, rule, v);
                }
            }
        }
    }

    #[test]
    fn ratio_identities(t in table_strategy()) {
        use confirm_core::contingency::LrSign;
        let lr = t.likelihood_ratio(LrSign::Positive);
        let f = eval_classic(MeasureKind::F, Rule::E1_H1, &t, 2.0);
        let l = eval_classic(MeasureKind::L, Rule::E1_H1, &t, 2.0);
        let b = b_star(Rule::E1_H1, &t);
        if let Ok(ConfirmationValue::Finite(lr)) = lr {
            if let Ok(ConfirmationValue::Finite(f)) = f {
                prop_assert!((f - (lr - 1.0) / (lr + 1.0)).abs() < 1e-10);
                if lr >= 1.0 {
                    let b = b.unwrap().as_finite().unwrap();
                    prop_assert!((b - 2.0 * f / (1.0 + f)).abs() < 1e-10);
                }
            }
            if lr > 0.0 {
                if let Ok(ConfirmationValue::Finite(l)) = l {
                    prop_assert!((l - lr.log2()).abs() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn dual_routes_agree(t in table_strategy()) {
        for major in MAJOR_RULES {
            for rule in [major, major.negated()] {
                let count_form = eval_f_directed(rule, &t);
                let prob_form = eval_classic(MeasureKind::F, rule, &t, 2.0);
                if let Ok(prob_form) = prob_form {
                    prop_assert!(
                        count_form.approx_eq(prob_form, 1e-12),
                        "F {}: {} vs {}", rule, count_form, prob_form
                    );
                }
                if let (Ok(count), Ok(prob)) = (b_star_from_counts(rule, &t), b_star(rule, &t)) {
                    prop_assert!(
                        count.approx_eq(prob, 1e-12),
                        "b* {}: {} vs {}", rule, count, prob
                    );
                }
            }
        }
    }

    #[test]
    fn predictions_round_trip(t in table_strategy()) {
        let Ok(actual) = t.conditional(EventRole::H1, EventRole::E1) else { return Ok(()); };
        let prior = t.prior(EventRole::H1);
        if let Ok(ConfirmationValue::Finite(b)) = b_star(Rule::E1_H1, &t) {
            let predicted = predict_posterior(StarKind::BStar, b, Some(prior)).unwrap();
            prop_assert!((predicted - actual).abs() < 1e-12, "b*={} prior={}", b, prior);
        }
        if let ConfirmationValue::Finite(c) = c_star(Rule::E1_H1, &t) {
            let predicted = predict_posterior(StarKind::CStar, c, None).unwrap();
            prop_assert!((predicted - actual).abs() < 1e-12, "c*={}", c);
        }
        if let ConfirmationValue::Finite(cf) = c_f_star(Rule::E1_H1, &t) {
            let predicted = predict_posterior(StarKind::CFStar, cf, None).unwrap();
            prop_assert!((predicted - actual).abs() < 1e-12, "c_F*={}", cf);
        }
    }

    #[test]
    fn equal_margins_collapse_the_two_stars(a in 0u64..=100, b in 0u64..=100, c in 0u64..=100) {
        // When the hypothesis margin is balanced, channel and prediction
        // confirmation coincide; build d to balance the margins directly.
        prop_assume!(a + b >= c && a + b > 0);
        let t = ContingencyTable::new(a, b, c, a + b - c).unwrap();
        let b_val = b_star(Rule::E1_H1, &t);
        let c_val = c_star(Rule::E1_H1, &t);
        if let Ok(b_val) = b_val {
            prop_assert!(b_val.approx_eq(c_val, 1e-12), "{} vs {}", b_val, c_val);
        }
    }

    #[test]
    fn irrelevant_cells_never_move_the_prediction_measures(
        t in table_strategy(),
        db in 0i64..=500,
        dd in 0i64..=500,
    ) {
        for kind in [MeasureKind::CStar, MeasureKind::CFStar] {
            match check_nfc(kind, Rule::E1_H1, &t, &[(db, dd)], 0.0) {
                CheckOutcome::Holds { deviation } => prop_assert_eq!(deviation, 0.0),
                CheckOutcome::Skipped => {}
                CheckOutcome::Violation { deviation, .. } => {
                    prop_assert!(false, "{}: moved by {}", kind, deviation)
                }
            }
        }
    }

    #[test]
    fn information_routes_agree(t in table_strategy(), b1 in 0.0f64..=1.0, b0 in 0.0f64..=1.0) {
        let ta = TruthAssignment::new(b1, b0).unwrap();
        for evidence in [EventRole::E1, EventRole::E0] {
            for hypothesis in [EventRole::H1, EventRole::H0] {
                let direct = semantic_information(&t, &ta, evidence, hypothesis, 2.0);
                let via = semantic_information_via_posterior(&t, &ta, evidence, hypothesis, 2.0);
                if let (Ok(x), Ok(y)) = (direct, via) {
                    prop_assert!(x.approx_eq(y, 1e-10), "{} {}: {} vs {}", evidence, hypothesis, x, y);
                }
            }
        }
    }

    #[test]
    fn optimized_assignment_reaches_the_entropy_ceiling(t in table_strategy()) {
        let Ok(ta) = optimize_truth_assignment(&t) else { return Ok(()); };
        for evidence in [EventRole::E1, EventRole::E0] {
            let Ok(avg) = average_semantic_information(&t, &ta, evidence, 2.0) else { continue };
            let Ok(ceiling) = relative_entropy_information(&t, evidence, 2.0) else { continue };
            // Never exceeded, and attained exactly when the reading's own
            // likelihood ratio favors it (the degree then equals the inverse
            // ratio instead of saturating at 1).
            prop_assert!(avg <= ceiling + 1e-10, "{}: {} > {}", evidence, avg, ceiling);
            let (own, other) = match evidence {
                EventRole::E1 => (
                    t.conditional(EventRole::E1, EventRole::H1).unwrap(),
                    t.conditional(EventRole::E1, EventRole::H0).unwrap(),
                ),
                _ => (
                    t.conditional(EventRole::E0, EventRole::H0).unwrap(),
                    t.conditional(EventRole::E0, EventRole::H1).unwrap(),
                ),
            };
            if own >= other {
                prop_assert!((avg - ceiling).abs() < 1e-10, "optimum must meet the ceiling");
            }
        }
    }

    #[test]
    fn smoothing_shifts_every_cell(t in table_strategy(), alpha in 1u64..=3) {
        let s = t.smoothed(alpha).unwrap();
        let [a, b, c, d] = t.cells();
        prop_assert_eq!(s.cells(), [a + alpha, b + alpha, c + alpha, d + alpha]);
        // Smoothed tables always have every conditional defined.
        prop_assert!(s.conditional(EventRole::E1, EventRole::H1).is_ok());
        prop_assert!(s.conditional(EventRole::H1, EventRole::E1).is_ok());
    }
}
