//! Seeded property audits for confirmation measures.
//!
//! Each audit sweeps a deterministic sequence of random tables and counts
//! how often a claimed property fails, keeping the worst witness. Non-finite
//! evaluations are skipped rather than failed: the properties under test are
//! claims about defined values. All audits evaluate at log base 2.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classic::{eval_classic, MeasureKind};
use crate::contingency::{ContingencyTable, Rule, TablePermutation};
use crate::error::{Error, Result};
use crate::star::CellDelta;

const AUDIT_LOG_BASE: f64 = 2.0;
/// Cell bound for generated tables; small enough that empty cells and
/// one-sided margins show up regularly.
const MAX_CELL: u64 = 30;
/// Evidence-irrelevant perturbations used by the irrelevance audit: each
/// adds only to the `b` and `d` cells.
const IRRELEVANT_SHIFTS: [(i64, i64); 5] = [(1, 0), (0, 1), (5, 0), (0, 5), (10, 1000)];

/// The four relabeling symmetries: how the measure of `e1->h1` relates to
/// the measure on a permuted table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetryKind {
    /// Negating the hypothesis negates the value: `f(t) = -f(SwapH t)`.
    Hs,
    /// Negating the evidence negates the value: `f(t) = -f(SwapE t)`.
    Es,
    /// Swapping the roles of evidence and hypothesis preserves the value:
    /// `f(t) = f(Transpose t)`.
    Cs,
    /// Negating both sides preserves the value: `f(t) = f(SwapBoth t)`.
    Ts,
}

impl SymmetryKind {
    fn permutation(self) -> TablePermutation {
        match self {
            SymmetryKind::Hs => TablePermutation::SwapH,
            SymmetryKind::Es => TablePermutation::SwapE,
            SymmetryKind::Cs => TablePermutation::Transpose,
            SymmetryKind::Ts => TablePermutation::SwapBoth,
        }
    }

    /// Whether the permuted value is expected to equal the negation (true)
    /// or the value itself (false).
    fn negates(self) -> bool {
        matches!(self, SymmetryKind::Hs | SymmetryKind::Es)
    }
}

impl fmt::Display for SymmetryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            SymmetryKind::Hs => "hs",
            SymmetryKind::Es => "es",
            SymmetryKind::Cs => "cs",
            SymmetryKind::Ts => "ts",
        };
        write!(f, "{name}")
    }
}

/// A property an audit can target.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PropertyKind {
    Symmetry(SymmetryKind),
    /// Weak unit-increment monotonicity: up in `a` and `d`, down in `b`
    /// and `c`.
    Monotonicity,
    /// Finite values stay within [-1, 1].
    Normalization,
    /// Exactly 1 with no counterexamples, exactly -1 with no positive
    /// examples.
    Logicality,
    /// Invariance of the `e1->h1` value under changes to `b` and `d` — the
    /// cells an observation of `e0` lands in.
    Nfc,
}

impl PropertyKind {
    pub fn all() -> [PropertyKind; 8] {
        [
            PropertyKind::Symmetry(SymmetryKind::Hs),
            PropertyKind::Symmetry(SymmetryKind::Es),
            PropertyKind::Symmetry(SymmetryKind::Cs),
            PropertyKind::Symmetry(SymmetryKind::Ts),
            PropertyKind::Monotonicity,
            PropertyKind::Normalization,
            PropertyKind::Logicality,
            PropertyKind::Nfc,
        ]
    }
}

impl fmt::Display for PropertyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PropertyKind::Symmetry(s) => write!(f, "{s}"),
            PropertyKind::Monotonicity => write!(f, "monotonicity"),
            PropertyKind::Normalization => write!(f, "normalization"),
            PropertyKind::Logicality => write!(f, "logicality"),
            PropertyKind::Nfc => write!(f, "nfc"),
        }
    }
}

impl FromStr for PropertyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "hs" => Ok(PropertyKind::Symmetry(SymmetryKind::Hs)),
            "es" => Ok(PropertyKind::Symmetry(SymmetryKind::Es)),
            "cs" => Ok(PropertyKind::Symmetry(SymmetryKind::Cs)),
            "ts" => Ok(PropertyKind::Symmetry(SymmetryKind::Ts)),
            "monotonicity" => Ok(PropertyKind::Monotonicity),
            "normalization" => Ok(PropertyKind::Normalization),
            "logicality" => Ok(PropertyKind::Logicality),
            "nfc" => Ok(PropertyKind::Nfc),
            other => Err(Error::UnknownProperty(other.to_string())),
        }
    }
}

/// Result of checking one property on one table.
#[derive(Debug, Clone, PartialEq)]
pub enum CheckOutcome {
    /// Property held; `deviation` is how far from exact it was (within
    /// tolerance).
    Holds { deviation: f64 },
    Violation { deviation: f64, detail: String },
    /// Some needed value was non-finite or the table does not exercise the
    /// property.
    Skipped,
}

/// Whether a measure is documented to have a property.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    /// Violations indicate a real defect.
    Pass,
    /// The measure is known to lack the property; the audit looks for a
    /// witness.
    FailExpected,
    /// No documented expectation; reported for the record.
    Informational,
}

pub fn expectation_for(kind: MeasureKind, property: PropertyKind) -> Expectation {
    use MeasureKind::*;
    match property {
        PropertyKind::Symmetry(SymmetryKind::Hs) => match kind {
            M | R => Expectation::FailExpected,
            _ => Expectation::Pass,
        },
        PropertyKind::Symmetry(SymmetryKind::Es) => match kind {
            M | C | S | N => Expectation::Pass,
            _ => Expectation::FailExpected,
        },
        PropertyKind::Symmetry(SymmetryKind::Cs) => match kind {
            R | C => Expectation::Pass,
            _ => Expectation::FailExpected,
        },
        PropertyKind::Symmetry(SymmetryKind::Ts) => match kind {
            C | S | N => Expectation::Pass,
            _ => Expectation::FailExpected,
        },
        PropertyKind::Monotonicity => match kind {
            Z | S | L | F | BStar | CStar | CFStar => Expectation::Pass,
            N => Expectation::Informational,
            _ => Expectation::FailExpected,
        },
        PropertyKind::Normalization => match kind {
            R | L => Expectation::FailExpected,
            _ => Expectation::Pass,
        },
        PropertyKind::Logicality => match kind {
            Z | F | BStar | CStar | CFStar => Expectation::Pass,
            _ => Expectation::Informational,
        },
        PropertyKind::Nfc => match kind {
            CStar | CFStar => Expectation::Pass,
            F | BStar => Expectation::FailExpected,
            _ => Expectation::Informational,
        },
    }
}

/// The most extreme failing case an audit saw.
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub table: ContingencyTable,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub measure: MeasureKind,
    pub property: String,
    pub expectation: Expectation,
    pub trials: usize,
    pub violations: usize,
    pub skipped: usize,
    /// Largest deviation observed across all non-skipped trials, violations
    /// or not.
    pub max_deviation: f64,
    pub worst_witness: Option<Witness>,
}

impl AuditReport {
    /// A report contradicts its expectation when a pass-expected property
    /// shows violations.
    pub fn is_unexpected_failure(&self) -> bool {
        self.expectation == Expectation::Pass && self.violations > 0
    }
}

/// Deterministic sequence of tables with cells uniform in `0..=max_cell`
/// and at least one positive cell.
pub fn random_tables(trials: usize, seed: u64, max_cell: u64) -> Result<Vec<ContingencyTable>> {
    if trials == 0 {
        return Err(Error::OutOfRange {
            what: "trials",
            value: 0.0,
            expected: "at least 1",
        });
    }
    if max_cell == 0 {
        return Err(Error::OutOfRange {
            what: "max cell",
            value: 0.0,
            expected: "at least 1",
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tables = Vec::with_capacity(trials);
    while tables.len() < trials {
        let cells: [u64; 4] = std::array::from_fn(|_| rng.random_range(0..=max_cell));
        if let Ok(t) = ContingencyTable::new(cells[0], cells[1], cells[2], cells[3]) {
            tables.push(t);
        }
    }
    Ok(tables)
}

fn finite_eval(kind: MeasureKind, rule: Rule, t: &ContingencyTable) -> Option<f64> {
    eval_classic(kind, rule, t, AUDIT_LOG_BASE)
        .ok()
        .and_then(|v| v.as_finite())
}

pub fn check_symmetry(
    kind: MeasureKind,
    symmetry: SymmetryKind,
    t: &ContingencyTable,
    tol: f64,
) -> CheckOutcome {
    let direct = finite_eval(kind, Rule::E1_H1, t);
    let permuted = finite_eval(kind, Rule::E1_H1, &t.permute(symmetry.permutation()));
    let (Some(direct), Some(permuted)) = (direct, permuted) else {
        return CheckOutcome::Skipped;
    };
    let counterpart = if symmetry.negates() { -permuted } else { permuted };
    let deviation = (direct - counterpart).abs();
    if deviation <= tol {
        CheckOutcome::Holds { deviation }
    } else {
        CheckOutcome::Violation {
            deviation,
            detail: format!("{direct} vs counterpart {counterpart} under {symmetry}"),
        }
    }
}

pub fn check_monotonicity(kind: MeasureKind, t: &ContingencyTable, tol: f64) -> CheckOutcome {
    let Some(base) = finite_eval(kind, Rule::E1_H1, t) else {
        return CheckOutcome::Skipped;
    };
    // (cell shifted, whether the value may only go up)
    let steps: [(CellDelta, &str, bool); 4] = [
        (CellDelta::new(1, 0, 0, 0), "a", true),
        (CellDelta::new(0, 1, 0, 0), "b", false),
        (CellDelta::new(0, 0, 1, 0), "c", false),
        (CellDelta::new(0, 0, 0, 1), "d", true),
    ];
    let mut worst: Option<(f64, String)> = None;
    for (delta, cell, upward) in steps {
        let Ok(shifted) = delta.apply(t) else {
            return CheckOutcome::Skipped;
        };
        let Some(value) = finite_eval(kind, Rule::E1_H1, &shifted) else {
            return CheckOutcome::Skipped;
        };
        let deviation = if upward { base - value } else { value - base };
        if deviation > worst.as_ref().map_or(f64::NEG_INFINITY, |w| w.0) {
            let direction = if upward { "decreased" } else { "increased" };
            worst = Some((deviation, format!("{cell}+1 {direction} the value by {deviation}")));
        }
    }
    let (deviation, detail) = worst.expect("four steps always evaluated");
    if deviation <= tol {
        CheckOutcome::Holds { deviation: deviation.max(0.0) }
    } else {
        CheckOutcome::Violation { deviation, detail }
    }
}

pub fn check_normalization(kind: MeasureKind, t: &ContingencyTable, tol: f64) -> CheckOutcome {
    let Some(value) = finite_eval(kind, Rule::E1_H1, t) else {
        return CheckOutcome::Skipped;
    };
    let deviation = (value.abs() - 1.0).max(0.0);
    if deviation <= tol {
        CheckOutcome::Holds { deviation }
    } else {
        CheckOutcome::Violation {
            deviation,
            detail: format!("value {value} lies outside [-1, 1]"),
        }
    }
}

/// Checks the table's pole: `c = 0 < a` must give exactly 1, `a = 0 < c`
/// exactly -1. Tables with both or neither pole are skipped.
pub fn check_logicality(kind: MeasureKind, t: &ContingencyTable, tol: f64) -> CheckOutcome {
    let expected = if t.c() == 0 && t.a() > 0 {
        1.0
    } else if t.a() == 0 && t.c() > 0 {
        -1.0
    } else {
        return CheckOutcome::Skipped;
    };
    let Some(value) = finite_eval(kind, Rule::E1_H1, t) else {
        return CheckOutcome::Skipped;
    };
    let deviation = (value - expected).abs();
    if deviation <= tol {
        CheckOutcome::Holds { deviation }
    } else {
        CheckOutcome::Violation {
            deviation,
            detail: format!("pole value {value}, expected exactly {expected}"),
        }
    }
}

/// Measures how much the value moves under shifts confined to `b` and `d`.
pub fn check_nfc(
    kind: MeasureKind,
    rule: Rule,
    t: &ContingencyTable,
    shifts: &[(i64, i64)],
    tol: f64,
) -> CheckOutcome {
    let Some(base) = finite_eval(kind, rule, t) else {
        return CheckOutcome::Skipped;
    };
    let mut worst: Option<(f64, String)> = None;
    for &(db, dd) in shifts {
        let Ok(shifted) = CellDelta::new(0, db, 0, dd).apply(t) else {
            continue;
        };
        let Some(value) = finite_eval(kind, rule, &shifted) else {
            continue;
        };
        let deviation = (value - base).abs();
        if deviation > worst.as_ref().map_or(f64::NEG_INFINITY, |w| w.0) {
            worst = Some((
                deviation,
                format!("(b+{db}, d+{dd}) moved the value from {base} to {value}"),
            ));
        }
    }
    let Some((deviation, detail)) = worst else {
        return CheckOutcome::Skipped;
    };
    if deviation <= tol {
        CheckOutcome::Holds { deviation }
    } else {
        CheckOutcome::Violation { deviation, detail }
    }
}

/// Make a table exercise a logicality pole: even indices get the
/// no-counterexample shape (`c = 0 < a`, `d > 0`), odd indices the
/// no-positive-example shape (`a = 0 < c`, `b > 0`).
fn force_pole(t: &ContingencyTable, index: usize) -> ContingencyTable {
    let [a, b, c, d] = t.cells();
    let forced = if index.is_multiple_of(2) {
        ContingencyTable::new(a.max(1), b, 0, d.max(1))
    } else {
        ContingencyTable::new(0, b.max(1), c.max(1), d)
    };
    forced.expect("pole tables have positive cells by construction")
}

/// Run one property audit for one measure over `trials` seeded tables.
pub fn audit(
    kind: MeasureKind,
    property: PropertyKind,
    trials: usize,
    seed: u64,
    tol: f64,
) -> Result<AuditReport> {
    if !(tol.is_finite() && tol >= 0.0) {
        return Err(Error::OutOfRange {
            what: "tolerance",
            value: tol,
            expected: "finite and non-negative",
        });
    }
    let tables = random_tables(trials, seed, MAX_CELL)?;
    let mut report = AuditReport {
        measure: kind,
        property: property.to_string(),
        expectation: expectation_for(kind, property),
        trials: tables.len(),
        violations: 0,
        skipped: 0,
        max_deviation: 0.0,
        worst_witness: None,
    };
    let mut worst_violation = f64::NEG_INFINITY;
    for (index, table) in tables.iter().enumerate() {
        let (table, outcome) = match property {
            PropertyKind::Symmetry(s) => (*table, check_symmetry(kind, s, table, tol)),
            PropertyKind::Monotonicity => (*table, check_monotonicity(kind, table, tol)),
            PropertyKind::Normalization => (*table, check_normalization(kind, table, tol)),
            PropertyKind::Logicality => {
                let pole = force_pole(table, index);
                let outcome = check_logicality(kind, &pole, tol);
                (pole, outcome)
            }
            PropertyKind::Nfc => {
                (*table, check_nfc(kind, Rule::E1_H1, table, &IRRELEVANT_SHIFTS, tol))
            }
        };
        match outcome {
            CheckOutcome::Holds { deviation } => {
                report.max_deviation = report.max_deviation.max(deviation);
            }
            CheckOutcome::Violation { deviation, detail } => {
                report.violations += 1;
                report.max_deviation = report.max_deviation.max(deviation);
                if deviation > worst_violation {
                    worst_violation = deviation;
                    report.worst_witness = Some(Witness { table, detail });
                }
            }
            CheckOutcome::Skipped => report.skipped += 1,
        }
    }
    Ok(report)
}
