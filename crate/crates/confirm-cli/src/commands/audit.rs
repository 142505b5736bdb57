//! `confirm audit`: run one property check for one measure over seeded
//! random tables.
//!
//! Exit status is 1 when a property the measure is documented to have
//! records violations; everything else (including witnessed expected
//! failures) exits 0.

use confirm_core::properties::{audit, AuditReport, Expectation, PropertyKind};
use confirm_core::MeasureKind;
use serde::Serialize;

use crate::output::{format_sig, json, tsv, Format};
use crate::{Cli, CommandOutput};

#[derive(Debug, clap::Args)]
pub struct AuditArgs {
    /// Measure name: D, M, R, C, Z, S, N, L, F, bstar, cstar, or cfstar
    pub measure: String,

    /// Property: hs, es, cs, ts, monotonicity, normalization, logicality,
    /// or nfc
    pub property: String,

    /// Number of random tables
    #[arg(long, default_value_t = 10_000)]
    pub trials: usize,

    /// Deviation above which a defined comparison counts as a violation
    #[arg(long, default_value_t = 1e-9)]
    pub tolerance: f64,
}

#[derive(Serialize)]
struct AuditDoc<'a> {
    status: &'static str,
    report: &'a AuditReport,
}

fn expectation_label(e: Expectation) -> &'static str {
    match e {
        Expectation::Pass => "pass",
        Expectation::FailExpected => "fail_expected",
        Expectation::Informational => "informational",
    }
}

fn status_label(report: &AuditReport) -> &'static str {
    if report.is_unexpected_failure() {
        return "unexpected-failure";
    }
    match (report.expectation, report.violations) {
        (Expectation::FailExpected, 0) => "expected-failure-not-witnessed",
        (Expectation::FailExpected, _) => "expected-failure-confirmed",
        (Expectation::Informational, v) if v > 0 => "violations-noted",
        _ => "ok",
    }
}

pub fn run(cli: &Cli, args: &AuditArgs) -> anyhow::Result<CommandOutput> {
    let kind: MeasureKind = args.measure.parse::<MeasureKind>()?;
    let property: PropertyKind = args.property.parse::<PropertyKind>()?;
    let report = audit(kind, property, args.trials, cli.seed, args.tolerance)?;
    let status = status_label(&report);

    let stdout = match cli.format {
        Format::Tsv => {
            let mut rows = vec![
                vec!["field".to_string(), "value".to_string()],
                vec!["measure".to_string(), kind.to_string()],
                vec!["property".to_string(), report.property.clone()],
                vec![
                    "expectation".to_string(),
                    expectation_label(report.expectation).to_string(),
                ],
                vec!["trials".to_string(), report.trials.to_string()],
                vec!["violations".to_string(), report.violations.to_string()],
                vec!["skipped".to_string(), report.skipped.to_string()],
                vec![
                    "max_deviation".to_string(),
                    format_sig(report.max_deviation, cli.precision),
                ],
            ];
            if let Some(witness) = &report.worst_witness {
                rows.push(vec![
                    "worst_witness".to_string(),
                    format!("{}; {}", witness.table, witness.detail),
                ]);
            }
            rows.push(vec!["status".to_string(), status.to_string()]);
            tsv(&rows)
        }
        Format::Json => json(&AuditDoc { status, report: &report })?,
    };
    Ok(CommandOutput {
        stdout,
        code: if report.is_unexpected_failure() { 1 } else { 0 },
    })
}
