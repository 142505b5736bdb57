//! `confirm measures`: one row per requested measure on one table.

use std::fs::File;
use std::path::PathBuf;

use anyhow::bail;
use confirm_core::contingency::table_from_counts_json;
use confirm_core::contingency::table_from_examples_csv;
use confirm_core::error::Error;
use confirm_core::registry::MeasureRegistry;
use confirm_core::{ConfirmationValue, ContingencyTable, MeasureKind, Rule};
use serde::Serialize;

use crate::output::{format_value, json, tsv, Format};
use crate::{Cli, CommandOutput};

#[derive(Debug, clap::Args)]
pub struct MeasuresArgs {
    /// Cell counts `a,b,c,d`
    #[arg(long, value_name = "A,B,C,D")]
    pub counts: Option<String>,

    /// CSV file of labeled examples with header `e,h`
    #[arg(long, value_name = "FILE", conflicts_with = "counts")]
    pub examples: Option<PathBuf>,

    /// JSON counts file `{"a":..,"b":..,"c":..,"d":..}`
    #[arg(long, value_name = "FILE", conflicts_with_all = ["counts", "examples"])]
    pub counts_file: Option<PathBuf>,

    /// Rule direction: e1->h1, e0->h0, h1->e1, or h0->e0
    #[arg(long, default_value = "e1->h1")]
    pub rule: String,

    /// Comma-separated measure names (default: all twelve)
    #[arg(long, value_delimiter = ',')]
    pub measures: Vec<String>,

    /// Labels read as true in example files (default: 1)
    #[arg(long, value_delimiter = ',')]
    pub truthy: Vec<String>,

    /// Labels read as false in example files (default: 0)
    #[arg(long, value_delimiter = ',')]
    pub falsy: Vec<String>,

    /// Laplace smoothing: add this count to every cell
    #[arg(long, default_value_t = 0)]
    pub alpha: u64,
}

#[derive(Serialize)]
struct MeasureRow {
    measure: &'static str,
    value: ConfirmationValue,
}

#[derive(Serialize)]
struct MeasuresDoc<'a> {
    rule: String,
    log_base: f64,
    table: &'a ContingencyTable,
    values: Vec<MeasureRow>,
}

fn load_table(args: &MeasuresArgs) -> anyhow::Result<ContingencyTable> {
    let table = if let Some(counts) = &args.counts {
        super::parse_counts(counts)?
    } else if let Some(path) = &args.examples {
        let policy = super::label_policy(&args.truthy, &args.falsy);
        table_from_examples_csv(File::open(path)?, &policy)?
    } else if let Some(path) = &args.counts_file {
        table_from_counts_json(File::open(path)?)?
    } else {
        bail!("no input: pass --counts, --examples, or --counts-file");
    };
    Ok(if args.alpha > 0 { table.smoothed(args.alpha)? } else { table })
}

pub fn run(cli: &Cli, args: &MeasuresArgs) -> anyhow::Result<CommandOutput> {
    let table = load_table(args)?;
    let rule: Rule = args.rule.parse::<Rule>().map_err(anyhow::Error::from)?;
    let kinds: Vec<MeasureKind> = if args.measures.is_empty() {
        MeasureKind::all().to_vec()
    } else {
        args.measures
            .iter()
            .map(|name| name.parse::<MeasureKind>())
            .collect::<Result<_, _>>()?
    };

    let registry = MeasureRegistry::global();
    let mut values = Vec::new();
    for kind in kinds {
        // A zero conditioning marginal makes a single measure undefined,
        // not the whole invocation.
        let value = match registry.by_kind(kind).evaluate(rule, &table, cli.log_base) {
            Ok(v) => v,
            Err(Error::ZeroMarginal { .. } | Error::Undefined(_)) => ConfirmationValue::Undefined,
            Err(other) => return Err(other.into()),
        };
        values.push(MeasureRow { measure: kind.canonical_name(), value });
    }

    let stdout = match cli.format {
        Format::Tsv => {
            let mut rows = vec![vec!["measure".to_string(), "value".to_string()]];
            for row in &values {
                rows.push(vec![
                    row.measure.to_string(),
                    format_value(row.value, cli.precision),
                ]);
            }
            tsv(&rows)
        }
        Format::Json => json(&MeasuresDoc {
            rule: rule.to_string(),
            log_base: cli.log_base,
            table: &table,
            values,
        })?,
    };
    Ok(CommandOutput::ok(stdout))
}
