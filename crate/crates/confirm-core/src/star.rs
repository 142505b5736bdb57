//! Derived confirmation measures: b*, c*, c_F*.
//!
//! All three normalize a difference by the larger (or the sum) of its two
//! ingredients, which pins the range to [-1, 1] and makes the value depend
//! only on the rule's own cells. Consequent-negated rules are evaluated by
//! negating their major counterpart; tests cross-check that against full
//! table re-orientation.

use std::fmt;
use std::str::FromStr;

use crate::classic::{eval_classic, MeasureKind};
use crate::contingency::{ContingencyTable, EventRole, Rule};
use crate::error::{Error, Result};
use crate::semantic::TruthAssignment;
use crate::value::ConfirmationValue;

/// The subset of measures that support posterior prediction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StarKind {
    BStar,
    CStar,
    CFStar,
}

impl StarKind {
    pub fn measure(self) -> MeasureKind {
        match self {
            StarKind::BStar => MeasureKind::BStar,
            StarKind::CStar => MeasureKind::CStar,
            StarKind::CFStar => MeasureKind::CFStar,
        }
    }
}

impl fmt::Display for StarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.measure())
    }
}

impl FromStr for StarKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.parse::<MeasureKind>()? {
            MeasureKind::BStar => Ok(StarKind::BStar),
            MeasureKind::CStar => Ok(StarKind::CStar),
            MeasureKind::CFStar => Ok(StarKind::CFStar),
            other => Err(Error::UnknownMeasure(format!(
                "{other} (expected one of bstar, cstar, cfstar)"
            ))),
        }
    }
}

/// Channel confirmation: `(p - q) / max(p, q)` over the rule's two
/// transition probabilities (for `e1->h1`: `p = P(e1|h1)`, `q = P(e1|h0)`).
///
/// Undefined when both are zero; a zero conditioning marginal surfaces as
/// `ZeroMarginal`.
pub fn b_star(rule: Rule, t: &ContingencyTable) -> Result<ConfirmationValue> {
    if !rule.is_major() {
        return Ok(-b_star(rule.negated(), t)?);
    }
    let o = t.oriented(rule);
    let p = o.conditional(EventRole::E1, EventRole::H1)?;
    let q = o.conditional(EventRole::E1, EventRole::H0)?;
    if p == 0.0 && q == 0.0 {
        return Ok(ConfirmationValue::Undefined);
    }
    Ok(ConfirmationValue::Finite((p - q) / p.max(q)))
}

/// b* through its integer count form, `(ad - bc)` over the larger of the two
/// cross products (`a(c+d)` vs `c(a+b)` after orientation).
///
/// Must agree with [`b_star`] wherever both are defined.
pub fn b_star_from_counts(rule: Rule, t: &ContingencyTable) -> Result<ConfirmationValue> {
    if !rule.is_major() {
        return Ok(-b_star_from_counts(rule.negated(), t)?);
    }
    let o = t.oriented(rule);
    let (a, b, c, d) = (o.a() as u128, o.b() as u128, o.c() as u128, o.d() as u128);
    if a + b == 0 {
        return Err(Error::ZeroMarginal { given: EventRole::H1 });
    }
    if c + d == 0 {
        return Err(Error::ZeroMarginal { given: EventRole::H0 });
    }
    let den = (a * (c + d)).max(c * (a + b));
    if den == 0 {
        return Ok(ConfirmationValue::Undefined);
    }
    let (ad, bc) = (a * d, b * c);
    let num = if ad >= bc { (ad - bc) as f64 } else { -((bc - ad) as f64) };
    Ok(ConfirmationValue::Finite(num / den as f64))
}

/// Prediction confirmation: `(x - y) / max(x, y)` over the rule's own count
/// pair (for `e1->h1`: `x = a`, `y = c`). Undefined when both counts are zero.
pub fn c_star(rule: Rule, t: &ContingencyTable) -> ConfirmationValue {
    if !rule.is_major() {
        return -c_star(rule.negated(), t);
    }
    let o = t.oriented(rule);
    let (x, y) = (o.a(), o.c());
    if x == 0 && y == 0 {
        return ConfirmationValue::Undefined;
    }
    ConfirmationValue::Finite((x as f64 - y as f64) / x.max(y) as f64)
}

/// Additive variant of c*: `(x - y) / (x + y)`. Undefined when both counts
/// are zero.
pub fn c_f_star(rule: Rule, t: &ContingencyTable) -> ConfirmationValue {
    if !rule.is_major() {
        return -c_f_star(rule.negated(), t);
    }
    let o = t.oriented(rule);
    let (x, y) = (o.a(), o.c());
    if x == 0 && y == 0 {
        return ConfirmationValue::Undefined;
    }
    ConfirmationValue::Finite((x as f64 - y as f64) / (x + y) as f64)
}

/// The truth assignment that maximizes average semantic information: each
/// degree is its side's inverse likelihood ratio `1/LR`, saturated at 1.
///
/// Below 1 the degree is an interior stationary point of the reading's
/// average information and the optimum attains the relative-entropy
/// ceiling. When the evidence actually points the other way (`1/LR > 1`)
/// the average is still increasing at the boundary, so the best assignment
/// that keeps the reading fully true on its own side is the saturated,
/// uninformative one.
///
/// Requires `P(e1|h1) > 0` and `P(e0|h0) > 0` so that both ratios exist.
pub fn optimize_truth_assignment(t: &ContingencyTable) -> Result<TruthAssignment> {
    let p_e1_h1 = t.conditional(EventRole::E1, EventRole::H1)?;
    let p_e1_h0 = t.conditional(EventRole::E1, EventRole::H0)?;
    let p_e0_h0 = t.conditional(EventRole::E0, EventRole::H0)?;
    let p_e0_h1 = t.conditional(EventRole::E0, EventRole::H1)?;
    if p_e1_h1 == 0.0 {
        return Err(Error::Undefined("optimal truth degree needs P(e1|h1) > 0"));
    }
    if p_e0_h0 == 0.0 {
        return Err(Error::Undefined("optimal truth degree needs P(e0|h0) > 0"));
    }
    let b1 = (p_e1_h0 / p_e1_h1).min(1.0);
    let b0 = (p_e0_h1 / p_e0_h0).min(1.0);
    TruthAssignment::new(b1, b0)
}

/// An additive perturbation of the four cells.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CellDelta {
    pub da: i64,
    pub db: i64,
    pub dc: i64,
    pub dd: i64,
}

impl CellDelta {
    pub fn new(da: i64, db: i64, dc: i64, dd: i64) -> Self {
        CellDelta { da, db, dc, dd }
    }

    /// Apply to a table, rejecting negative results and empty totals.
    pub fn apply(self, t: &ContingencyTable) -> Result<ContingencyTable> {
        fn shift(count: u64, delta: i64, cell: &'static str) -> Result<u64> {
            let v = count as i128 + delta as i128;
            if v < 0 {
                Err(Error::NegativeCount { cell, value: v as i64 })
            } else {
                u64::try_from(v).map_err(|_| Error::OutOfRange {
                    what: cell,
                    value: v as f64,
                    expected: "count representable in 64 bits",
                })
            }
        }
        ContingencyTable::new(
            shift(t.a(), self.da, "a")?,
            shift(t.b(), self.db, "b")?,
            shift(t.c(), self.dc, "c")?,
            shift(t.d(), self.dd, "d")?,
        )
    }
}

/// Finite difference of a measure under a cell perturbation:
/// `f(t + delta) - f(t)`. Both evaluations must be finite.
pub fn confirmation_increment(
    kind: MeasureKind,
    rule: Rule,
    t: &ContingencyTable,
    delta: CellDelta,
    log_base: f64,
) -> Result<f64> {
    let shifted = delta.apply(t)?;
    let before = eval_classic(kind, rule, t, log_base)?
        .as_finite()
        .ok_or(Error::Undefined("increment base value is not finite"))?;
    let after = eval_classic(kind, rule, &shifted, log_base)?
        .as_finite()
        .ok_or(Error::Undefined("increment shifted value is not finite"))?;
    Ok(after - before)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ConfirmationValue::Finite;

    fn t(a: u64, b: u64, c: u64, d: u64) -> ContingencyTable {
        ContingencyTable::new(a, b, c, d).unwrap()
    }

    fn fin(v: Result<ConfirmationValue>) -> f64 {
        v.unwrap().as_finite().expect("finite")
    }

    #[test]
    fn b_star_golden() {
        assert!((fin(b_star(Rule::E1_H1, &t(20, 180, 8, 792))) - 0.9).abs() < 1e-12);
        assert!((fin(b_star(Rule::E1_H1, &t(200, 0, 720, 80))) - 0.1).abs() < 1e-12);
        assert!((fin(b_star(Rule::E1_H1, &t(10, 0, 90, 900))) - 10.0 / 11.0).abs() < 1e-12);
        // Rare-positive screen: sensitivity 0.917, false-positive rate 0.001.
        let screen = t(917, 83, 1, 999);
        assert!((fin(b_star(Rule::E1_H1, &screen)) - 0.916 / 0.917).abs() < 1e-12);
    }

    #[test]
    fn b_star_extremes() {
        // No false positives: full confirmation.
        assert_eq!(b_star(Rule::E1_H1, &t(5, 5, 0, 7)).unwrap(), Finite(1.0));
        // No true positives: full disconfirmation.
        assert_eq!(b_star(Rule::E1_H1, &t(0, 5, 3, 7)).unwrap(), Finite(-1.0));
        // 0/0 of the two conditionals.
        assert_eq!(b_star(Rule::E1_H1, &t(0, 5, 0, 7)).unwrap(), ConfirmationValue::Undefined);
        assert!(matches!(
            b_star(Rule::E1_H1, &t(0, 0, 3, 4)),
            Err(Error::ZeroMarginal { .. })
        ));
    }

    #[test]
    fn b_star_count_form_matches_probability_form() {
        let tables = [t(1, 2, 3, 4), t(20, 180, 8, 792), t(10, 0, 90, 900), t(7, 7, 7, 7)];
        let rules = [Rule::E1_H1, Rule::E0_H0, Rule::H1_E1, Rule::H0_E0];
        for table in &tables {
            for rule in rules {
                let prob = b_star(rule, table).unwrap();
                let count = b_star_from_counts(rule, table).unwrap();
                assert!(prob.approx_eq(count, 1e-12), "{rule} on {table}");
            }
        }
        // Hand-checked directed denominators on (1,2,3,4).
        let table = t(1, 2, 3, 4);
        assert!(fin(b_star_from_counts(Rule::E1_H1, &table)) + 2.0 / 9.0 < 1e-15);
        assert!((fin(b_star_from_counts(Rule::E0_H0, &table)) + 2.0 / 14.0).abs() < 1e-15);
        assert!((fin(b_star_from_counts(Rule::H1_E1, &table)) + 2.0 / 8.0).abs() < 1e-15);
        assert!((fin(b_star_from_counts(Rule::H0_E0, &table)) + 2.0 / 18.0).abs() < 1e-15);
    }

    #[test]
    fn c_star_golden() {
        assert_eq!(c_star(Rule::E1_H1, &t(20, 180, 8, 792)), Finite(0.6));
        assert!(c_star(Rule::E1_H1, &t(200, 0, 720, 80)).approx_eq(Finite(-13.0 / 18.0), 1e-15));
        // Rule and converse-negation pair on the sparse-counterexample table.
        let raven = t(10, 0, 1, 100);
        assert_eq!(c_star(Rule::E1_H1, &raven), Finite(0.9));
        assert_eq!(c_star(Rule::H0_E0, &raven), Finite(0.99));
    }

    #[test]
    fn c_star_all_directions() {
        let table = t(1, 2, 3, 4);
        assert!(c_star(Rule::E1_H1, &table).approx_eq(Finite(-2.0 / 3.0), 1e-15));
        assert_eq!(c_star(Rule::E0_H0, &table), Finite(0.5)); // (d-b)/max(d,b)
        assert_eq!(c_star(Rule::H1_E1, &table), Finite(-0.5)); // (a-b)/max(a,b)
        assert_eq!(c_star(Rule::H0_E0, &table), Finite(0.25)); // (d-c)/max(d,c)
        assert_eq!(c_star(Rule::E1_H1, &t(0, 9, 0, 9)), ConfirmationValue::Undefined);
    }

    #[test]
    fn negation_route_matches_reorientation() {
        // Consequent-negated rules are computed as -major; re-orienting the
        // table and applying the base formula must give the same number.
        let table = t(20, 180, 8, 792);
        for major in [Rule::E1_H1, Rule::E0_H0, Rule::H1_E1, Rule::H0_E0] {
            let negated = major.negated();
            let via_negation = c_star(negated, &table);
            let o = table.oriented(negated);
            let direct = Finite((o.a() as f64 - o.c() as f64) / o.a().max(o.c()) as f64);
            assert!(via_negation.approx_eq(direct, 1e-15), "{negated}");

            let b_neg = b_star(negated, &table).unwrap();
            let p = o.conditional(EventRole::E1, EventRole::H1).unwrap();
            let q = o.conditional(EventRole::E1, EventRole::H0).unwrap();
            let b_direct = Finite((p - q) / p.max(q));
            assert!(b_neg.approx_eq(b_direct, 1e-12), "{negated}");
        }
    }

    #[test]
    fn c_f_star_values() {
        assert!(c_f_star(Rule::E1_H1, &t(20, 180, 8, 792)).approx_eq(Finite(3.0 / 7.0), 1e-15));
        assert_eq!(c_f_star(Rule::E1_H1, &t(5, 9, 5, 1)), Finite(0.0));
        assert_eq!(c_f_star(Rule::E1_H1, &t(5, 9, 0, 1)), Finite(1.0));
        assert_eq!(c_f_star(Rule::E1_H1, &t(0, 9, 5, 1)), Finite(-1.0));
        assert_eq!(c_f_star(Rule::E1_H1, &t(0, 9, 0, 1)), ConfirmationValue::Undefined);
        assert_eq!(c_f_star(Rule::H0_E0, &t(1, 2, 3, 4)), Finite(1.0 / 7.0));
    }

    #[test]
    fn optimized_truth_assignment() {
        let ta = optimize_truth_assignment(&t(20, 180, 8, 792)).unwrap();
        assert!((ta.b1_prime() - 0.1).abs() < 1e-12);
        assert!((ta.b0_prime() - 0.9 / 0.99).abs() < 1e-12);

        let screen = optimize_truth_assignment(&t(917, 83, 1, 999)).unwrap();
        assert!((screen.b1_prime() - 1.0 / 917.0).abs() < 1e-12);

        // Uninformative evidence: both degrees reach 1.
        let flat = optimize_truth_assignment(&t(10, 10, 10, 10)).unwrap();
        assert_eq!(flat.b1_prime(), 1.0);
        assert_eq!(flat.b0_prime(), 1.0);

        // Evidence pointing the wrong way saturates instead of mirroring:
        // P(e1|h0) = 10/29 exceeds P(e1|h1) = 18/68, so no degree below 1
        // improves the e1 reading.
        let inverted = optimize_truth_assignment(&t(18, 50, 10, 19)).unwrap();
        assert_eq!(inverted.b1_prime(), 1.0);
        assert_eq!(inverted.b0_prime(), 1.0);

        // Perfectly clean channel: both degrees reach 0.
        let clean = optimize_truth_assignment(&t(9, 0, 0, 4)).unwrap();
        assert_eq!(clean.b1_prime(), 0.0);
        assert_eq!(clean.b0_prime(), 0.0);

        assert!(matches!(
            optimize_truth_assignment(&t(0, 5, 3, 7)),
            Err(Error::Undefined(_))
        ));
        assert!(matches!(
            optimize_truth_assignment(&t(0, 0, 3, 7)),
            Err(Error::ZeroMarginal { .. })
        ));
    }

    #[test]
    fn increments_on_sparse_counterexample() {
        let raven = t(10, 0, 1, 100);
        let inc_a = confirmation_increment(
            MeasureKind::CStar,
            Rule::E1_H1,
            &raven,
            CellDelta::new(1, 0, 0, 0),
            2.0,
        )
        .unwrap();
        assert!((inc_a - 1.0 / 110.0).abs() < 1e-15);

        let inc_d = confirmation_increment(
            MeasureKind::CStar,
            Rule::H0_E0,
            &raven,
            CellDelta::new(0, 0, 0, 1),
            2.0,
        )
        .unwrap();
        assert!((inc_d - 1.0 / 10100.0).abs() < 1e-18);
        assert!((inc_a / inc_d - 10100.0 / 110.0).abs() < 1e-9);

        let zero = confirmation_increment(
            MeasureKind::CStar,
            Rule::E1_H1,
            &raven,
            CellDelta::default(),
            2.0,
        )
        .unwrap();
        assert_eq!(zero, 0.0);
    }

    #[test]
    fn increment_error_paths() {
        let raven = t(10, 0, 1, 100);
        assert!(matches!(
            confirmation_increment(
                MeasureKind::CStar,
                Rule::E1_H1,
                &raven,
                CellDelta::new(0, -1, 0, 0),
                2.0
            ),
            Err(Error::NegativeCount { cell: "b", value: -1 })
        ));
        // L is infinite here (no false positives), so no finite increment exists.
        let sure = t(5, 5, 0, 7);
        assert!(matches!(
            confirmation_increment(
                MeasureKind::L,
                Rule::E1_H1,
                &sure,
                CellDelta::new(1, 0, 0, 0),
                2.0
            ),
            Err(Error::Undefined(_))
        ));
        let tiny = t(1, 0, 0, 0);
        assert!(matches!(
            CellDelta::new(-1, 0, 0, 0).apply(&tiny),
            Err(Error::EmptyTable)
        ));
    }

    #[test]
    fn star_kind_parses() {
        assert_eq!("bstar".parse::<StarKind>().unwrap(), StarKind::BStar);
        assert_eq!("c*".parse::<StarKind>().unwrap(), StarKind::CStar);
        assert_eq!("CFSTAR".parse::<StarKind>().unwrap(), StarKind::CFStar);
        assert!("D".parse::<StarKind>().is_err());
        assert!("nope".parse::<StarKind>().is_err());
    }
}
