//! `confirm`: a command-line front end over `confirm-core`.
//!
//! Subcommands cover the library surface end to end: evaluating measures
//! on 2x2 tables (`measures`), tallying labeled-example CSVs (`ingest`),
//! turning confirmation values into posteriors (`predict`), the raven
//! increment comparison (`raven`), property audits over seeded random
//! tables (`audit`), the information-maximizing classifier (`classify`),
//! and a recomputation of the published reference tables with a misprint
//! ledger (`paper-tables`).
//!
//! Identical invocations produce byte-identical output; randomness only
//! enters through the explicit `--seed` flag.

use anyhow::bail;
use clap::{Parser, Subcommand};

pub mod commands;
pub mod output;
pub mod published;

use output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "confirm",
    version,
    about = "Confirmation measures, predictions, audits, and classification over 2x2 evidence tables"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,

    /// Base of the logarithm used by R, L, and information scores
    #[arg(long, global = true, default_value_t = 2.0)]
    pub log_base: f64,

    /// Significant digits in tabular output (JSON keeps full precision)
    #[arg(long, global = true, default_value_t = 6)]
    pub precision: usize,

    /// Seed for the audit table generator
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate confirmation measures on a 2x2 table
    Measures(commands::measures::MeasuresArgs),
    /// Tally a labeled-example CSV into table counts
    Ingest(commands::ingest::IngestArgs),
    /// Turn a confirmation value into a posterior probability
    Predict(commands::predict::PredictArgs),
    /// Compare the confirmation gained from a raven against a non-raven
    Raven(commands::raven::RavenArgs),
    /// Check one measure for one property over seeded random tables
    Audit(commands::audit::AuditArgs),
    /// Run the information-maximizing binary classifier on a dataset
    Classify(commands::classify::ClassifyArgs),
    /// Recompute the published reference tables and flag discrepancies
    PaperTables,
}

/// What a subcommand produced: the text to print and the process exit code.
pub struct CommandOutput {
    pub stdout: String,
    pub code: i32,
}

impl CommandOutput {
    pub fn ok(stdout: String) -> Self {
        CommandOutput { stdout, code: 0 }
    }
}

/// Dispatch a parsed invocation. `Err` means invalid input and maps to
/// exit status 2; an audit that contradicts a documented expectation
/// returns `Ok` with code 1.
pub fn run(cli: &Cli) -> anyhow::Result<CommandOutput> {
    if !(1..=17).contains(&cli.precision) {
        bail!("precision must be between 1 and 17 significant digits");
    }
    match &cli.command {
        Command::Measures(args) => commands::measures::run(cli, args),
        Command::Ingest(args) => commands::ingest::run(cli, args),
        Command::Predict(args) => commands::predict::run(cli, args),
        Command::Raven(args) => commands::raven::run(cli, args),
        Command::Audit(args) => commands::audit::run(cli, args),
        Command::Classify(args) => commands::classify::run(cli, args),
        Command::PaperTables => commands::tables::run(cli),
    }
}
