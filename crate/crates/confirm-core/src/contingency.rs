//! 2x2 evidence/hypothesis contingency tables.
//!
//! The four cells count joint outcomes of a binary evidence variable `e` and a
//! binary hypothesis variable `h`:
//!
//! | cell | event      |
//! |------|------------|
//! | `a`  | `e1 ∧ h1`  |
//! | `b`  | `e0 ∧ h1`  |
//! | `c`  | `e1 ∧ h0`  |
//! | `d`  | `e0 ∧ h0`  |
//!
//! Counts are kept as exact integers; probabilities are derived lazily as
//! ratios, so branch decisions that compare probabilities can be made by exact
//! cross-multiplication instead of float comparison.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::value::ConfirmationValue;

/// One of the four elementary outcomes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum EventRole {
    #[serde(rename = "e1")]
    E1,
    #[serde(rename = "e0")]
    E0,
    #[serde(rename = "h1")]
    H1,
    #[serde(rename = "h0")]
    H0,
}

/// Which variable an [`EventRole`] belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Evidence,
    Hypothesis,
}

impl EventRole {
    pub fn family(self) -> Family {
        match self {
            EventRole::E1 | EventRole::E0 => Family::Evidence,
            EventRole::H1 | EventRole::H0 => Family::Hypothesis,
        }
    }

    /// The complementary outcome of the same variable.
    pub fn negated(self) -> Self {
        match self {
            EventRole::E1 => EventRole::E0,
            EventRole::E0 => EventRole::E1,
            EventRole::H1 => EventRole::H0,
            EventRole::H0 => EventRole::H1,
        }
    }

    /// Positive outcomes are `e1`/`h1`.
    pub fn is_positive(self) -> bool {
        matches!(self, EventRole::E1 | EventRole::H1)
    }

    /// Counterpart role when evidence and hypothesis swap places.
    fn transposed(self) -> Self {
        match self {
            EventRole::E1 => EventRole::H1,
            EventRole::E0 => EventRole::H0,
            EventRole::H1 => EventRole::E1,
            EventRole::H0 => EventRole::E0,
        }
    }
}

impl fmt::Display for EventRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            EventRole::E1 => "e1",
            EventRole::E0 => "e0",
            EventRole::H1 => "h1",
            EventRole::H0 => "h0",
        };
        write!(f, "{s}")
    }
}

impl FromStr for EventRole {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "e1" => Ok(EventRole::E1),
            "e0" => Ok(EventRole::E0),
            "h1" => Ok(EventRole::H1),
            "h0" => Ok(EventRole::H0),
            other => Err(Error::UnknownRule(other.to_string())),
        }
    }
}

/// A directed rule `antecedent -> consequent` across the two variables.
///
/// Eight rules exist: four "major" ones whose outcomes share polarity
/// (`e1->h1`, `e0->h0`, `h1->e1`, `h0->e0`) and their consequent-negated
/// counterparts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rule {
    antecedent: EventRole,
    consequent: EventRole,
}

impl Rule {
    pub const E1_H1: Rule = Rule { antecedent: EventRole::E1, consequent: EventRole::H1 };
    pub const E0_H0: Rule = Rule { antecedent: EventRole::E0, consequent: EventRole::H0 };
    pub const H1_E1: Rule = Rule { antecedent: EventRole::H1, consequent: EventRole::E1 };
    pub const H0_E0: Rule = Rule { antecedent: EventRole::H0, consequent: EventRole::E0 };

    /// Build a rule; antecedent and consequent must come from different
    /// variables.
    pub fn new(antecedent: EventRole, consequent: EventRole) -> Result<Self> {
        if antecedent.family() == consequent.family() {
            return Err(Error::UnknownRule(format!(
                "{antecedent}->{consequent} (antecedent and consequent must come from different variables)"
            )));
        }
        Ok(Rule { antecedent, consequent })
    }

    pub fn antecedent(self) -> EventRole {
        self.antecedent
    }

    pub fn consequent(self) -> EventRole {
        self.consequent
    }

    /// Swap antecedent and consequent.
    pub fn converse(self) -> Rule {
        Rule { antecedent: self.consequent, consequent: self.antecedent }
    }

    /// Negate the consequent (the hypothesis-swap dual of the rule).
    pub fn negated(self) -> Rule {
        Rule { antecedent: self.antecedent, consequent: self.consequent.negated() }
    }

    /// True for the four rules whose antecedent and consequent share polarity.
    pub fn is_major(self) -> bool {
        self.antecedent.is_positive() == self.consequent.is_positive()
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.antecedent, self.consequent)
    }
}

impl FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (lhs, rhs) = s
            .split_once("->")
            .ok_or_else(|| Error::UnknownRule(s.to_string()))?;
        Rule::new(lhs.parse()?, rhs.parse()?)
    }
}

/// The four involutive cell permutations of a 2x2 table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TablePermutation {
    /// Negate the hypothesis: a<->c, b<->d.
    SwapH,
    /// Negate the evidence: a<->b, c<->d.
    SwapE,
    /// Negate both: a<->d, b<->c.
    SwapBoth,
    /// Exchange the roles of evidence and hypothesis: b<->c.
    Transpose,
}

/// Which likelihood ratio to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LrSign {
    /// `P(e1|h1) / P(e1|h0)`.
    Positive,
    /// `P(e0|h0) / P(e0|h1)`.
    Negative,
}

/// A validated 2x2 contingency table with total count `n > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ContingencyTable {
    a: u64,
    b: u64,
    c: u64,
    d: u64,
}

impl ContingencyTable {
    /// Construct from non-negative cell counts; the total must be positive.
    pub fn new(a: u64, b: u64, c: u64, d: u64) -> Result<Self> {
        let total = (a as u128) + (b as u128) + (c as u128) + (d as u128);
        if total == 0 {
            return Err(Error::EmptyTable);
        }
        if total > u64::MAX as u128 {
            return Err(Error::OutOfRange {
                what: "total count",
                value: total as f64,
                expected: "a+b+c+d representable in 64 bits",
            });
        }
        Ok(ContingencyTable { a, b, c, d })
    }

    /// Construct from possibly-signed counts, rejecting negatives.
    pub fn from_counts(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        for (cell, value) in [("a", a), ("b", b), ("c", c), ("d", d)] {
            if value < 0 {
                return Err(Error::NegativeCount { cell, value });
            }
        }
        ContingencyTable::new(a as u64, b as u64, c as u64, d as u64)
    }

    /// Tally `(e, h)` example pairs into a table.
    pub fn from_examples<I: IntoIterator<Item = (bool, bool)>>(examples: I) -> Result<Self> {
        let (mut a, mut b, mut c, mut d) = (0u64, 0u64, 0u64, 0u64);
        for (e, h) in examples {
            match (e, h) {
                (true, true) => a += 1,
                (false, true) => b += 1,
                (true, false) => c += 1,
                (false, false) => d += 1,
            }
        }
        ContingencyTable::new(a, b, c, d)
    }

    /// Additive smoothing: add `alpha` to every cell.
    ///
    /// Meant to be applied once, at ingestion; the measure formulas themselves
    /// always see the table as-is.
    pub fn smoothed(self, alpha: u64) -> Result<Self> {
        let bump = |x: u64, cell: &'static str| {
            x.checked_add(alpha).ok_or(Error::OutOfRange {
                what: cell,
                value: alpha as f64,
                expected: "cell + alpha representable in 64 bits",
            })
        };
        ContingencyTable::new(
            bump(self.a, "a")?,
            bump(self.b, "b")?,
            bump(self.c, "c")?,
            bump(self.d, "d")?,
        )
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// Total count.
    pub fn n(&self) -> u64 {
        self.a + self.b + self.c + self.d
    }

    pub fn cells(&self) -> [u64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    fn cell_count(&self, e: bool, h: bool) -> u64 {
        match (e, h) {
            (true, true) => self.a,
            (false, true) => self.b,
            (true, false) => self.c,
            (false, false) => self.d,
        }
    }

    /// Count of the joint outcome named by two roles from different variables.
    pub fn pair_count(&self, x: EventRole, y: EventRole) -> u64 {
        assert_ne!(
            x.family(),
            y.family(),
            "pair_count needs one evidence role and one hypothesis role"
        );
        let (e_role, h_role) = if x.family() == Family::Evidence { (x, y) } else { (y, x) };
        self.cell_count(e_role == EventRole::E1, h_role == EventRole::H1)
    }

    /// Marginal count of a single outcome.
    pub fn marginal_count(&self, role: EventRole) -> u64 {
        match role {
            EventRole::E1 => self.a + self.c,
            EventRole::E0 => self.b + self.d,
            EventRole::H1 => self.a + self.b,
            EventRole::H0 => self.c + self.d,
        }
    }

    /// Marginal probability of a single outcome.
    pub fn prior(&self, role: EventRole) -> f64 {
        self.marginal_count(role) as f64 / self.n() as f64
    }

    /// Joint probability of two outcomes from different variables.
    pub fn joint(&self, x: EventRole, y: EventRole) -> f64 {
        self.pair_count(x, y) as f64 / self.n() as f64
    }

    /// Conditional probability `P(of | given)`; the two roles must come from
    /// different variables.
    pub fn conditional(&self, of: EventRole, given: EventRole) -> Result<f64> {
        assert_ne!(
            of.family(),
            given.family(),
            "conditional needs one evidence role and one hypothesis role"
        );
        let denom = self.marginal_count(given);
        if denom == 0 {
            return Err(Error::ZeroMarginal { given });
        }
        Ok(self.pair_count(of, given) as f64 / denom as f64)
    }

    /// Likelihood ratio of the evidence under the two hypotheses.
    ///
    /// `Positive` is `P(e1|h1)/P(e1|h0)`, `Negative` is `P(e0|h0)/P(e0|h1)`.
    /// A zero denominator with a positive numerator yields `PosInfinite`;
    /// 0/0 yields `Undefined`.
    pub fn likelihood_ratio(&self, sign: LrSign) -> Result<ConfirmationValue> {
        let (num, den) = match sign {
            LrSign::Positive => (
                self.conditional(EventRole::E1, EventRole::H1)?,
                self.conditional(EventRole::E1, EventRole::H0)?,
            ),
            LrSign::Negative => (
                self.conditional(EventRole::E0, EventRole::H0)?,
                self.conditional(EventRole::E0, EventRole::H1)?,
            ),
        };
        Ok(if den > 0.0 {
            ConfirmationValue::Finite(num / den)
        } else if num > 0.0 {
            ConfirmationValue::PosInfinite
        } else {
            ConfirmationValue::Undefined
        })
    }

    /// Apply one of the involutive cell permutations.
    pub fn permute(&self, p: TablePermutation) -> Self {
        let ContingencyTable { a, b, c, d } = *self;
        match p {
            TablePermutation::SwapH => ContingencyTable { a: c, b: d, c: a, d: b },
            TablePermutation::SwapE => ContingencyTable { a: b, b: a, c: d, d: c },
            TablePermutation::SwapBoth => ContingencyTable { a: d, b: c, c: b, d: a },
            TablePermutation::Transpose => ContingencyTable { a, b: c, c: b, d },
        }
    }

    /// Permute the table so that evaluating any measure's base `e1->h1`
    /// formula on the result evaluates `rule` on the original table.
    ///
    /// Converse rules transpose first; a negated antecedent applies `SwapE`, a
    /// negated consequent `SwapH`, both together `SwapBoth`.
    pub fn oriented(&self, rule: Rule) -> Self {
        let (table, ante, cons) = if rule.antecedent().family() == Family::Hypothesis {
            (
                self.permute(TablePermutation::Transpose),
                rule.antecedent().transposed(),
                rule.consequent().transposed(),
            )
        } else {
            (*self, rule.antecedent(), rule.consequent())
        };
        match (ante, cons) {
            (EventRole::E1, EventRole::H1) => table,
            (EventRole::E1, EventRole::H0) => table.permute(TablePermutation::SwapH),
            (EventRole::E0, EventRole::H1) => table.permute(TablePermutation::SwapE),
            (EventRole::E0, EventRole::H0) => table.permute(TablePermutation::SwapBoth),
            _ => unreachable!("orientation reduced to evidence-antecedent roles"),
        }
    }
}

impl fmt::Display for ContingencyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={}, b={}, c={}, d={}", self.a, self.b, self.c, self.d)
    }
}

/// Which CSV labels count as true/false when reading example files.
///
/// Matching is case-insensitive on trimmed fields; a field matching neither
/// set is an error rather than silently skipped.
#[derive(Debug, Clone)]
pub struct LabelPolicy {
    truthy: Vec<String>,
    falsy: Vec<String>,
}

impl Default for LabelPolicy {
    fn default() -> Self {
        LabelPolicy { truthy: vec!["1".into()], falsy: vec!["0".into()] }
    }
}

impl LabelPolicy {
    pub fn new<T: Into<String>, F: Into<String>>(
        truthy: impl IntoIterator<Item = T>,
        falsy: impl IntoIterator<Item = F>,
    ) -> Self {
        LabelPolicy {
            truthy: truthy.into_iter().map(|s| s.into().to_ascii_lowercase()).collect(),
            falsy: falsy.into_iter().map(|s| s.into().to_ascii_lowercase()).collect(),
        }
    }

    fn classify(&self, field: &str) -> Option<bool> {
        let needle = field.trim().to_ascii_lowercase();
        if self.truthy.contains(&needle) {
            Some(true)
        } else if self.falsy.contains(&needle) {
            Some(false)
        } else {
            None
        }
    }
}

/// Read `(e, h)` example pairs from CSV with header `e,h`.
pub fn examples_from_csv<R: std::io::Read>(
    reader: R,
    policy: &LabelPolicy,
) -> Result<Vec<(bool, bool)>> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let headers = rdr.headers()?.clone();
    let names: Vec<String> = headers.iter().map(|h| h.to_ascii_lowercase()).collect();
    if names != ["e", "h"] {
        return Err(Error::InvalidExamples(format!(
            "expected header e,h but found {}",
            headers.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let mut out = Vec::new();
    for record in rdr.records() {
        let record = record?;
        if record.len() != 2 {
            return Err(Error::InvalidExamples(format!(
                "expected 2 fields per row, found {}",
                record.len()
            )));
        }
        let e = policy.classify(&record[0]).ok_or_else(|| Error::UnrecognizedLabel {
            column: "e",
            value: record[0].to_string(),
        })?;
        let h = policy.classify(&record[1]).ok_or_else(|| Error::UnrecognizedLabel {
            column: "h",
            value: record[1].to_string(),
        })?;
        out.push((e, h));
    }
    Ok(out)
}

/// Read and tally an example CSV straight into a table.
pub fn table_from_examples_csv<R: std::io::Read>(
    reader: R,
    policy: &LabelPolicy,
) -> Result<ContingencyTable> {
    ContingencyTable::from_examples(examples_from_csv(reader, policy)?)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CountsFile {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

/// Read a table from a JSON counts file `{"a":..,"b":..,"c":..,"d":..}`.
pub fn table_from_counts_json<R: std::io::Read>(reader: R) -> Result<ContingencyTable> {
    let counts: CountsFile = serde_json::from_reader(reader)?;
    ContingencyTable::from_counts(counts.a, counts.b, counts.c, counts.d)
}
