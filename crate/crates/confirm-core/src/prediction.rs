//! Posterior prediction from confirmation values.
//!
//! b*, c*, and c_F* can be inverted: given the measure value (and, for b*,
//! the prior) the posterior P(h1|e1) is recovered exactly. This is what makes
//! them usable as portable summaries of an evidence channel.

use serde::Serialize;

use crate::contingency::{ContingencyTable, EventRole, LrSign, Rule};
use crate::error::{Error, Result};
use crate::star::{b_star, StarKind};
use crate::value::ConfirmationValue;

fn check_unit(what: &'static str, v: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&v) {
        return Err(Error::OutOfRange {
            what,
            value: v,
            expected: "a probability in [0, 1]",
        });
    }
    Ok(())
}

/// Recover P(h1|e1) from a confirmation value.
///
/// * b* needs the prior: `prior / (1 - b*(1 - prior))` when `b* >= 0`,
///   `(1 + b*) prior / (1 + b* prior)` when `b* < 0`.
/// * c* is prior-free: `1 / (2 - c*)` when `c* >= 0`,
///   `(1 + c*) / (2 + c*)` when `c* < 0`.
/// * c_F* is prior-free: `(1 + value) / 2`.
pub fn predict_posterior(kind: StarKind, value: f64, prior: Option<f64>) -> Result<f64> {
    if !(-1.0..=1.0).contains(&value) {
        return Err(Error::OutOfRange {
            what: "confirmation value",
            value,
            expected: "a value in [-1, 1]",
        });
    }
    match kind {
        StarKind::BStar => {
            let prior = prior.ok_or(Error::Undefined(
                "posterior prediction from bstar needs a prior",
            ))?;
            check_unit("prior", prior)?;
            let (num, den) = if value >= 0.0 {
                // Algebraically 1 - value*(1 - prior); this grouping is exact
                // at both endpoints.
                (prior, (1.0 - value) + value * prior)
            } else {
                ((1.0 + value) * prior, 1.0 + value * prior)
            };
            if den == 0.0 {
                return Err(Error::Undefined(
                    "degenerate combination of confirmation value and prior",
                ));
            }
            Ok(num / den)
        }
        StarKind::CStar => {
            if value >= 0.0 {
                Ok(1.0 / (2.0 - value))
            } else {
                Ok((1.0 + value) / (2.0 + value))
            }
        }
        StarKind::CFStar => Ok((1.0 + value) / 2.0),
    }
}

/// Textbook posterior from sensitivity, false-positive rate, and prior.
pub fn bayes_posterior(sensitivity: f64, false_positive_rate: f64, prior: f64) -> Result<f64> {
    check_unit("sensitivity", sensitivity)?;
    check_unit("false positive rate", false_positive_rate)?;
    check_unit("prior", prior)?;
    let den = sensitivity * prior + false_positive_rate * (1.0 - prior);
    if den == 0.0 {
        return Err(Error::Undefined("positive evidence has probability zero"));
    }
    Ok(sensitivity * prior / den)
}

/// The usual diagnostic-test summary for a 2x2 table, plus the channel
/// confirmations of the positive and negative readings.
///
/// Entries that hinge on an empty margin come back as `undefined` rather
/// than failing the whole panel.
#[derive(Debug, Clone, Serialize)]
pub struct DiagnosticPanel {
    /// P(e1|h1)
    pub sensitivity: ConfirmationValue,
    /// P(e0|h0)
    pub specificity: ConfirmationValue,
    /// P(h1|e1)
    pub ppv: ConfirmationValue,
    /// P(h0|e0)
    pub npv: ConfirmationValue,
    /// P(e1|h1) / P(e1|h0)
    pub lr_pos: ConfirmationValue,
    /// P(e0|h0) / P(e0|h1)
    pub lr_neg: ConfirmationValue,
    /// b* of e1->h1
    pub b_star_pos: ConfirmationValue,
    /// b* of e0->h0
    pub b_star_neg: ConfirmationValue,
}

pub fn diagnostic_panel(t: &ContingencyTable) -> DiagnosticPanel {
    let cond = |event, given| match t.conditional(event, given) {
        Ok(v) => ConfirmationValue::Finite(v),
        Err(_) => ConfirmationValue::Undefined,
    };
    let star = |rule| b_star(rule, t).unwrap_or(ConfirmationValue::Undefined);
    let lr = |sign| t.likelihood_ratio(sign).unwrap_or(ConfirmationValue::Undefined);
    DiagnosticPanel {
        sensitivity: cond(EventRole::E1, EventRole::H1),
        specificity: cond(EventRole::E0, EventRole::H0),
        ppv: cond(EventRole::H1, EventRole::E1),
        npv: cond(EventRole::H0, EventRole::E0),
        lr_pos: lr(LrSign::Positive),
        lr_neg: lr(LrSign::Negative),
        b_star_pos: star(Rule::E1_H1),
        b_star_neg: star(Rule::E0_H0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::star::{c_f_star, c_star};

    fn t(a: u64, b: u64, c: u64, d: u64) -> ContingencyTable {
        ContingencyTable::new(a, b, c, d).unwrap()
    }

    #[test]
    fn all_three_recover_the_same_posterior() {
        // All three measure values of this table decode to P(h1|e1) = 5/7.
        let table = t(20, 180, 8, 792);
        let actual = table.conditional(EventRole::H1, EventRole::E1).unwrap();
        assert!((actual - 5.0 / 7.0).abs() < 1e-15);

        let from_b = predict_posterior(StarKind::BStar, 0.9, Some(0.2)).unwrap();
        let from_c = predict_posterior(StarKind::CStar, 0.6, None).unwrap();
        let from_cf = predict_posterior(StarKind::CFStar, 3.0 / 7.0, None).unwrap();
        assert!((from_b - actual).abs() < 1e-12);
        assert!((from_c - actual).abs() < 1e-12);
        assert!((from_cf - actual).abs() < 1e-12);
    }

    #[test]
    fn negative_branch_round_trip() {
        let table = t(2, 8, 6, 4);
        let actual = table.conditional(EventRole::H1, EventRole::E1).unwrap();
        assert_eq!(actual, 0.25);

        let b = b_star(Rule::E1_H1, &table).unwrap().as_finite().unwrap();
        assert!((b + 2.0 / 3.0).abs() < 1e-15);
        let prior = table.prior(EventRole::H1);
        assert!((predict_posterior(StarKind::BStar, b, Some(prior)).unwrap() - actual).abs() < 1e-12);

        let c = c_star(Rule::E1_H1, &table).as_finite().unwrap();
        assert!((predict_posterior(StarKind::CStar, c, None).unwrap() - actual).abs() < 1e-12);

        let cf = c_f_star(Rule::E1_H1, &table).as_finite().unwrap();
        assert!((predict_posterior(StarKind::CFStar, cf, None).unwrap() - actual).abs() < 1e-12);
    }

    #[test]
    fn endpoints() {
        assert_eq!(predict_posterior(StarKind::CStar, 1.0, None).unwrap(), 1.0);
        assert_eq!(predict_posterior(StarKind::CStar, -1.0, None).unwrap(), 0.0);
        assert_eq!(predict_posterior(StarKind::CStar, 0.0, None).unwrap(), 0.5);
        assert_eq!(predict_posterior(StarKind::CFStar, 1.0, None).unwrap(), 1.0);
        assert_eq!(predict_posterior(StarKind::CFStar, -1.0, None).unwrap(), 0.0);
        assert_eq!(predict_posterior(StarKind::BStar, 1.0, Some(0.2)).unwrap(), 1.0);
        assert_eq!(predict_posterior(StarKind::BStar, -1.0, Some(0.2)).unwrap(), 0.0);
        assert_eq!(predict_posterior(StarKind::BStar, 0.0, Some(0.2)).unwrap(), 0.2);
    }

    #[test]
    fn validation() {
        assert!(matches!(
            predict_posterior(StarKind::CStar, 1.5, None),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            predict_posterior(StarKind::BStar, 0.5, None),
            Err(Error::Undefined(_))
        ));
        assert!(matches!(
            predict_posterior(StarKind::BStar, 0.5, Some(-0.1)),
            Err(Error::OutOfRange { .. })
        ));
        // Certain confirmation of an impossible hypothesis has no posterior.
        assert!(matches!(
            predict_posterior(StarKind::BStar, 1.0, Some(0.0)),
            Err(Error::Undefined(_))
        ));
        assert!(matches!(
            predict_posterior(StarKind::BStar, -1.0, Some(1.0)),
            Err(Error::Undefined(_))
        ));
    }

    #[test]
    fn bayes_matches_table_posterior() {
        let table = t(20, 180, 8, 792);
        let sens = table.conditional(EventRole::E1, EventRole::H1).unwrap();
        let fpr = table.conditional(EventRole::E1, EventRole::H0).unwrap();
        let prior = table.prior(EventRole::H1);
        let posterior = bayes_posterior(sens, fpr, prior).unwrap();
        let direct = table.conditional(EventRole::H1, EventRole::E1).unwrap();
        assert!((posterior - direct).abs() < 1e-15);
        assert!(matches!(
            bayes_posterior(0.0, 0.0, 0.5),
            Err(Error::Undefined(_))
        ));
        assert!(matches!(
            bayes_posterior(1.2, 0.0, 0.5),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn panel_values_and_degenerate_margins() {
        let screen = t(917, 83, 1, 999);
        let panel = diagnostic_panel(&screen);
        assert_eq!(panel.sensitivity, ConfirmationValue::Finite(0.917));
        assert_eq!(panel.specificity, ConfirmationValue::Finite(0.999));
        assert!(panel.ppv.approx_eq(ConfirmationValue::Finite(917.0 / 918.0), 1e-15));
        assert!(panel.npv.approx_eq(ConfirmationValue::Finite(999.0 / 1082.0), 1e-15));
        assert!(panel.lr_pos.approx_eq(ConfirmationValue::Finite(917.0), 1e-9));
        assert!(panel.lr_neg.approx_eq(ConfirmationValue::Finite(0.999 / 0.083), 1e-12));
        assert!(panel.b_star_pos.approx_eq(ConfirmationValue::Finite(0.916 / 0.917), 1e-12));

        // Single-column table: everything conditioned on h0 is undefined.
        let lopsided = t(5, 5, 0, 0);
        let panel = diagnostic_panel(&lopsided);
        assert_eq!(panel.sensitivity, ConfirmationValue::Finite(0.5));
        assert_eq!(panel.specificity, ConfirmationValue::Undefined);
        assert_eq!(panel.lr_pos, ConfirmationValue::Undefined);
        assert_eq!(panel.b_star_pos, ConfirmationValue::Undefined);
        assert_eq!(panel.ppv, ConfirmationValue::Finite(1.0));
    }
}
