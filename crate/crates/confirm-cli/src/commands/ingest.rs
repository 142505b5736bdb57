//! `confirm ingest`: tally a labeled-example CSV into 2x2 counts.
//!
//! The JSON output (without `--panel`) is exactly the counts-file schema,
//! so it can be fed back to `measures --counts-file`.

use std::fs::File;
use std::path::PathBuf;

use confirm_core::contingency::table_from_examples_csv;
use confirm_core::prediction::{diagnostic_panel, DiagnosticPanel};
use confirm_core::ContingencyTable;
use serde::Serialize;

use crate::output::{format_value, json, tsv, Format};
use crate::{Cli, CommandOutput};

#[derive(Debug, clap::Args)]
pub struct IngestArgs {
    /// CSV file of labeled examples with header `e,h`
    pub file: PathBuf,

    /// Labels read as true (default: 1)
    #[arg(long, value_delimiter = ',')]
    pub truthy: Vec<String>,

    /// Labels read as false (default: 0)
    #[arg(long, value_delimiter = ',')]
    pub falsy: Vec<String>,

    /// Laplace smoothing: add this count to every cell
    #[arg(long, default_value_t = 0)]
    pub alpha: u64,

    /// Also report sensitivity, specificity, predictive values, likelihood
    /// ratios, and channel confirmations
    #[arg(long)]
    pub panel: bool,
}

#[derive(Serialize)]
struct IngestDoc<'a> {
    counts: &'a ContingencyTable,
    panel: DiagnosticPanel,
}

pub fn run(cli: &Cli, args: &IngestArgs) -> anyhow::Result<CommandOutput> {
    let policy = super::label_policy(&args.truthy, &args.falsy);
    let mut table = table_from_examples_csv(File::open(&args.file)?, &policy)?;
    if args.alpha > 0 {
        table = table.smoothed(args.alpha)?;
    }

    let stdout = match cli.format {
        Format::Tsv => {
            let [a, b, c, d] = table.cells();
            let mut rows = vec![vec!["cell".to_string(), "count".to_string()]];
            for (name, count) in [("a", a), ("b", b), ("c", c), ("d", d), ("n", table.n())] {
                rows.push(vec![name.to_string(), count.to_string()]);
            }
            if args.panel {
                let panel = diagnostic_panel(&table);
                rows.push(vec!["quantity".to_string(), "value".to_string()]);
                for (name, value) in [
                    ("sensitivity", panel.sensitivity),
                    ("specificity", panel.specificity),
                    ("ppv", panel.ppv),
                    ("npv", panel.npv),
                    ("lr_pos", panel.lr_pos),
                    ("lr_neg", panel.lr_neg),
                    ("b_star_pos", panel.b_star_pos),
                    ("b_star_neg", panel.b_star_neg),
                ] {
                    rows.push(vec![name.to_string(), format_value(value, cli.precision)]);
                }
            }
            tsv(&rows)
        }
        Format::Json => {
            if args.panel {
                json(&IngestDoc { counts: &table, panel: diagnostic_panel(&table) })?
            } else {
                json(&table)?
            }
        }
    };
    Ok(CommandOutput::ok(stdout))
}
