//! `confirm paper-tables`: recompute every numeric cell of the published
//! reference tables and flag each as MATCH, MATCH-ROUNDED, or ERRATUM.
//!
//! Always exits 0 — the discrepancies are the point of the report.

use serde::Serialize;

use crate::output::{format_sig, json, tsv, Format};
use crate::published::{all_cells, CellCheck, Verdict};
use crate::{Cli, CommandOutput};

#[derive(Serialize)]
struct TablesDoc {
    cells: Vec<CellCheck>,
    errata: usize,
}

pub fn run(cli: &Cli) -> anyhow::Result<CommandOutput> {
    let cells = all_cells();
    let errata = cells.iter().filter(|c| c.verdict == Verdict::Erratum).count();

    let stdout = match cli.format {
        Format::Tsv => {
            let mut rows = vec![vec![
                "section".to_string(),
                "row".to_string(),
                "column".to_string(),
                "printed".to_string(),
                "computed".to_string(),
                "verdict".to_string(),
            ]];
            for cell in &cells {
                let computed = cell
                    .value
                    .map_or_else(|| cell.computed.clone(), |v| format_sig(v, cli.precision));
                rows.push(vec![
                    cell.section.to_string(),
                    cell.row.to_string(),
                    cell.column.to_string(),
                    cell.printed.clone(),
                    computed,
                    cell.verdict.to_string(),
                ]);
            }
            rows.push(vec!["errata".to_string(), errata.to_string()]);
            tsv(&rows)
        }
        Format::Json => json(&TablesDoc { cells, errata })?,
    };
    Ok(CommandOutput::ok(stdout))
}
