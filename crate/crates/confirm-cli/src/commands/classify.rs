//! `confirm classify`: iterate the information-maximizing partition on a
//! binned dataset and print the trace.

use std::path::PathBuf;

use anyhow::Context;
use confirm_core::classifier::{
    run as run_classifier, ClassifierOptions, ClassifierRun, Dataset, InitialPartition,
};
use serde::Serialize;

use crate::output::{format_sig, json, tsv, Format};
use crate::{Cli, CommandOutput};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Start {
    /// Assign each bin to the side with the larger posterior mass
    MaxPosterior,
    /// Assign each bin to the side with the larger likelihood
    MaxLikelihood,
}

impl Start {
    fn criterion(self) -> InitialPartition {
        match self {
            Start::MaxPosterior => InitialPartition::MaxPosterior,
            Start::MaxLikelihood => InitialPartition::MaxLikelihood,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Start::MaxPosterior => "max-posterior",
            Start::MaxLikelihood => "max-likelihood",
        }
    }
}

#[derive(Debug, clap::Args)]
pub struct ClassifyArgs {
    /// Dataset CSV: a `# prior_h1=` comment line, then header `bin,p1,p0`
    pub dataset: PathBuf,

    /// Total expected count the partition is rounded to
    #[arg(long, default_value_t = 10_000)]
    pub scale: u64,

    /// Stop after this many evaluated partitions
    #[arg(long, default_value_t = 100)]
    pub max_iterations: usize,

    /// Starting partition rule
    #[arg(long, value_enum, default_value_t = Start::MaxPosterior)]
    pub initial: Start,
}

#[derive(Serialize)]
struct OptionsDoc {
    initial: &'static str,
    scale: u64,
    max_iterations: usize,
    log_base: f64,
}

#[derive(Serialize)]
struct ClassifyDoc<'a> {
    dataset: String,
    bins: usize,
    prior_h1: f64,
    options: OptionsDoc,
    #[serde(flatten)]
    run: &'a ClassifierRun,
}

fn partition_string(partition: &[bool]) -> String {
    partition.iter().map(|&e1| if e1 { '1' } else { '0' }).collect()
}

pub fn run(cli: &Cli, args: &ClassifyArgs) -> anyhow::Result<CommandOutput> {
    let dataset = Dataset::from_csv_path(&args.dataset)
        .with_context(|| format!("cannot load dataset {}", args.dataset.display()))?;
    let options = ClassifierOptions {
        initial: args.initial.criterion(),
        scale: args.scale,
        max_iterations: args.max_iterations,
        log_base: cli.log_base,
    };
    let outcome = run_classifier(&dataset, &options)?;

    let stdout = match cli.format {
        Format::Tsv => {
            let p = cli.precision;
            let mut rows = vec![
                vec!["dataset".to_string(), args.dataset.display().to_string()],
                vec!["bins".to_string(), dataset.len().to_string()],
                vec!["prior_h1".to_string(), format_sig(dataset.prior_h1(), p)],
                vec!["scale".to_string(), args.scale.to_string()],
                vec!["initial".to_string(), args.initial.label().to_string()],
                vec![
                    "initial_partition".to_string(),
                    partition_string(&outcome.iterations[0].partition),
                ],
                vec![
                    "iteration".to_string(),
                    "partition".to_string(),
                    "a".to_string(),
                    "b".to_string(),
                    "c".to_string(),
                    "d".to_string(),
                    "mutual_information".to_string(),
                ],
            ];
            for (i, record) in outcome.iterations.iter().enumerate() {
                let [a, b, c, d] = record.table.cells();
                rows.push(vec![
                    (i + 1).to_string(),
                    partition_string(&record.partition),
                    a.to_string(),
                    b.to_string(),
                    c.to_string(),
                    d.to_string(),
                    format_sig(record.mutual_information, p),
                ]);
            }
            rows.push(vec![
                "final_partition".to_string(),
                partition_string(&outcome.final_record().partition),
            ]);
            rows.push(vec!["outcome".to_string(), outcome.outcome.to_string()]);
            tsv(&rows)
        }
        Format::Json => json(&ClassifyDoc {
            dataset: args.dataset.display().to_string(),
            bins: dataset.len(),
            prior_h1: dataset.prior_h1(),
            options: OptionsDoc {
                initial: args.initial.label(),
                scale: args.scale,
                max_iterations: args.max_iterations,
                log_base: cli.log_base,
            },
            run: &outcome,
        })?,
    };
    Ok(CommandOutput::ok(stdout))
}
