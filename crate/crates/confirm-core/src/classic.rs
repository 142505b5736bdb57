//! The classical confirmation measures and the shared measure-name enum.
//!
//! Every formula below is written for the base rule `e1->h1`; other rules are
//! handled by first re-orienting the table (see
//! [`ContingencyTable::oriented`]), so each directed variant reads its own
//! cells without per-rule special cases.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::contingency::{ContingencyTable, EventRole, Rule};
use crate::error::{Error, Result};
use crate::star;
use crate::util::{log_with, validate_log_base};
use crate::value::ConfirmationValue;

/// Name of a confirmation measure, classical or derived.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MeasureKind {
    /// `P(h1|e1) - P(h1)`
    D,
    /// `P(e1|h1) - P(e1)`
    M,
    /// `log [ P(h1|e1) / P(h1) ]`
    R,
    /// `P(h1,e1) - P(e1) P(h1)`
    C,
    /// `D` renormalized to [-1, 1] by the headroom of the matching branch
    Z,
    /// `P(h1|e1) - P(h1|e0)`
    S,
    /// `P(e1|h1) - P(e1|h0)`
    N,
    /// `log [ P(e1|h1) / P(e1|h0) ]`
    L,
    /// `[P(e1|h1) - P(e1|h0)] / [P(e1|h1) + P(e1|h0)]`
    F,
    /// Channel confirmation `(LR+ - 1) / max(LR+, 1)`
    #[serde(rename = "bstar")]
    BStar,
    /// Prediction confirmation `(a - c) / max(a, c)`
    #[serde(rename = "cstar")]
    CStar,
    /// Additive prediction confirmation `(a - c) / (a + c)`
    #[serde(rename = "cfstar")]
    CFStar,
}

impl MeasureKind {
    /// All measures in canonical presentation order.
    pub fn all() -> [MeasureKind; 12] {
        use MeasureKind::*;
        [D, M, R, C, Z, S, N, L, F, BStar, CStar, CFStar]
    }

    pub fn canonical_name(self) -> &'static str {
        use MeasureKind::*;
        match self {
            D => "D",
            M => "M",
            R => "R",
            C => "C",
            Z => "Z",
            S => "S",
            N => "N",
            L => "L",
            F => "F",
            BStar => "bstar",
            CStar => "cstar",
            CFStar => "cfstar",
        }
    }

    pub fn aliases(self) -> &'static [&'static str] {
        match self {
            MeasureKind::BStar => &["b*", "b_star"],
            MeasureKind::CStar => &["c*", "c_star"],
            MeasureKind::CFStar => &["cf*", "c_f*", "c_f_star", "cf_star"],
            _ => &[],
        }
    }

    /// The three measures derived from likelihood/count ratios rather than the
    /// classical difference/ratio templates.
    pub fn is_star(self) -> bool {
        matches!(self, MeasureKind::BStar | MeasureKind::CStar | MeasureKind::CFStar)
    }
}

impl fmt::Display for MeasureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_name())
    }
}

impl FromStr for MeasureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let needle = s.trim();
        for kind in MeasureKind::all() {
            if kind.canonical_name().eq_ignore_ascii_case(needle)
                || kind.aliases().iter().any(|a| a.eq_ignore_ascii_case(needle))
            {
                return Ok(kind);
            }
        }
        Err(Error::UnknownMeasure(s.to_string()))
    }
}

/// Evaluate any measure on any rule.
///
/// The derived measures route to their dedicated forms in [`crate::star`];
/// the nine classical ones evaluate their base formula on the re-oriented
/// table. `log_base` affects only `R` and `L`.
pub fn eval_classic(
    kind: MeasureKind,
    rule: Rule,
    t: &ContingencyTable,
    log_base: f64,
) -> Result<ConfirmationValue> {
    validate_log_base(log_base)?;
    match kind {
        MeasureKind::BStar => star::b_star(rule, t),
        MeasureKind::CStar => Ok(star::c_star(rule, t)),
        MeasureKind::CFStar => Ok(star::c_f_star(rule, t)),
        _ => classical_on_oriented(kind, &t.oriented(rule), log_base),
    }
}

fn classical_on_oriented(
    kind: MeasureKind,
    o: &ContingencyTable,
    base: f64,
) -> Result<ConfirmationValue> {
    use ConfirmationValue::*;
    use EventRole::{E0, E1, H0, H1};
    Ok(match kind {
        MeasureKind::D => Finite(o.conditional(H1, E1)? - o.prior(H1)),
        MeasureKind::M => Finite(o.conditional(E1, H1)? - o.prior(E1)),
        MeasureKind::R => {
            let post = o.conditional(H1, E1)?;
            let prior = o.prior(H1);
            if prior == 0.0 {
                // a+b = 0 forces the posterior to 0 as well: 0/0.
                Undefined
            } else if post == 0.0 {
                NegInfinite
            } else {
                Finite(log_with(post / prior, base))
            }
        }
        MeasureKind::C => Finite(o.joint(H1, E1) - o.prior(E1) * o.prior(H1)),
        MeasureKind::Z => {
            let post = o.conditional(H1, E1)?;
            let prior = o.prior(H1);
            match compare_posterior_prior(o) {
                Ordering::Equal => Finite(0.0),
                // post > prior implies prior < 1, post < prior implies prior > 0,
                // so the selected denominator is always positive.
                Ordering::Greater => Finite((post - prior) / (1.0 - prior)),
                Ordering::Less => Finite((post - prior) / prior),
            }
        }
        MeasureKind::S => Finite(o.conditional(H1, E1)? - o.conditional(H1, E0)?),
        MeasureKind::N => Finite(o.conditional(E1, H1)? - o.conditional(E1, H0)?),
        MeasureKind::L => {
            let p = o.conditional(E1, H1)?;
            let q = o.conditional(E1, H0)?;
            if p == 0.0 && q == 0.0 {
                Undefined
            } else if q == 0.0 {
                PosInfinite
            } else if p == 0.0 {
                NegInfinite
            } else {
                Finite(log_with(p / q, base))
            }
        }
        MeasureKind::F => {
            let p = o.conditional(E1, H1)?;
            let q = o.conditional(E1, H0)?;
            if p + q == 0.0 {
                Undefined
            } else {
                Finite((p - q) / (p + q))
            }
        }
        MeasureKind::BStar | MeasureKind::CStar | MeasureKind::CFStar => {
            unreachable!("derived measures are routed before this point")
        }
    })
}

/// Exact three-way comparison of `P(h1|e1)` against `P(h1)` by
/// cross-multiplication, so Z's branch selection never depends on float
/// rounding. Requires `a + c > 0` (callers surface that as ZeroMarginal).
fn compare_posterior_prior(t: &ContingencyTable) -> Ordering {
    let lhs = (t.a() as u128) * (t.n() as u128);
    let rhs = (t.a() as u128 + t.b() as u128) * (t.a() as u128 + t.c() as u128);
    lhs.cmp(&rhs)
}

/// F through its directed integer count forms.
///
/// For the four major rules the value is `(ad - bc)` over `ad + bc` plus twice
/// the product of the rule's own diagonal pair (`2ac`, `2ab`, `2bd`, `2cd`
/// after orientation collapses to the first); consequent-negated rules are the
/// negation of their major counterpart. Returns `Undefined` exactly where the
/// probability route has no value (a zero conditioning marginal or 0/0).
pub fn eval_f_directed(rule: Rule, t: &ContingencyTable) -> ConfirmationValue {
    if !rule.is_major() {
        return -eval_f_directed(rule.negated(), t);
    }
    let o = t.oriented(rule);
    let ad = (o.a() as u128) * (o.d() as u128);
    let bc = (o.b() as u128) * (o.c() as u128);
    let ac2 = 2 * (o.a() as u128) * (o.c() as u128);
    // Each single product fits in u128; the sum is accumulated with a float
    // fallback for astronomically large tables.
    let den = match ad.checked_add(bc).and_then(|s| s.checked_add(ac2)) {
        Some(s) => s as f64,
        None => ad as f64 + bc as f64 + ac2 as f64,
    };
    if den == 0.0 {
        return ConfirmationValue::Undefined;
    }
    let num = if ad >= bc { (ad - bc) as f64 } else { -((bc - ad) as f64) };
    ConfirmationValue::Finite(num / den)
}
