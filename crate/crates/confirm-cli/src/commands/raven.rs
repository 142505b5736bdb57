//! `confirm raven`: how much confirmation a new raven buys compared with a
//! new non-black non-raven.
//!
//! The hypothesis rule is `e1->h1`; a supporting raven lands in cell `a`.
//! The contrapositive form is `h0->e0`; a supporting non-black non-raven
//! lands in cell `d`. The command reports `c*` of both forms, the
//! increment each gains from its own observation, and the increment
//! ratio.

use confirm_core::classic::eval_classic;
use confirm_core::star::{confirmation_increment, CellDelta};
use confirm_core::{ConfirmationValue, ContingencyTable, MeasureKind, Rule};
use serde::Serialize;

use crate::output::{format_sig, format_value, json, tsv, Format};
use crate::{Cli, CommandOutput};

#[derive(Debug, clap::Args)]
pub struct RavenArgs {
    /// Cell counts `a,b,c,d`
    #[arg(long, value_name = "A,B,C,D", default_value = "10,0,1,100")]
    pub counts: String,

    /// Supporting observations added to cell `a`
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    pub delta_a: i64,

    /// Supporting observations added to cell `d`
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    pub delta_d: i64,
}

#[derive(Serialize)]
struct RavenDoc<'a> {
    table: &'a ContingencyTable,
    delta_a: i64,
    delta_d: i64,
    rule_confirmation: f64,
    contrapositive_confirmation: f64,
    rule_increment: f64,
    contrapositive_increment: f64,
    ratio: ConfirmationValue,
}

fn finite_c_star(rule: Rule, t: &ContingencyTable) -> anyhow::Result<f64> {
    Ok(eval_classic(MeasureKind::CStar, rule, t, 2.0)?
        .as_finite()
        .ok_or(confirm_core::Error::Undefined("c* has no value on this table"))?)
}

pub fn run(cli: &Cli, args: &RavenArgs) -> anyhow::Result<CommandOutput> {
    let table = super::parse_counts(&args.counts)?;
    let rule_confirmation = finite_c_star(Rule::E1_H1, &table)?;
    let contrapositive_confirmation = finite_c_star(Rule::H0_E0, &table)?;
    let rule_increment = confirmation_increment(
        MeasureKind::CStar,
        Rule::E1_H1,
        &table,
        CellDelta::new(args.delta_a, 0, 0, 0),
        cli.log_base,
    )?;
    let contrapositive_increment = confirmation_increment(
        MeasureKind::CStar,
        Rule::H0_E0,
        &table,
        CellDelta::new(0, 0, 0, args.delta_d),
        cli.log_base,
    )?;
    // 0/0 renders as undefined, x/0 as +inf or -inf.
    let ratio = ConfirmationValue::from_f64(rule_increment / contrapositive_increment);

    let stdout = match cli.format {
        Format::Tsv => {
            let p = cli.precision;
            tsv(&[
                vec!["quantity".to_string(), "value".to_string()],
                vec!["delta_a".to_string(), args.delta_a.to_string()],
                vec!["delta_d".to_string(), args.delta_d.to_string()],
                vec!["c_star(e1->h1)".to_string(), format_sig(rule_confirmation, p)],
                vec![
                    "c_star(h0->e0)".to_string(),
                    format_sig(contrapositive_confirmation, p),
                ],
                vec!["increment(e1->h1)".to_string(), format_sig(rule_increment, p)],
                vec![
                    "increment(h0->e0)".to_string(),
                    format_sig(contrapositive_increment, p),
                ],
                vec!["ratio".to_string(), format_value(ratio, p)],
            ])
        }
        Format::Json => json(&RavenDoc {
            table: &table,
            delta_a: args.delta_a,
            delta_d: args.delta_d,
            rule_confirmation,
            contrapositive_confirmation,
            rule_increment,
            contrapositive_increment,
            ratio,
        })?,
    };
    Ok(CommandOutput::ok(stdout))
}
