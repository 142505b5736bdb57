//! `confirm predict`: recover `P(h1|e1)` from a prediction-capable
//! confirmation value.

use confirm_core::prediction::predict_posterior;
use confirm_core::star::StarKind;
use serde::Serialize;

use crate::output::{format_sig, json, tsv, Format};
use crate::published::{prediction_references, verdict_for, Verdict};
use crate::{Cli, CommandOutput};

#[derive(Debug, clap::Args)]
pub struct PredictArgs {
    /// Source measure: bstar, cstar, or cfstar
    pub measure: String,

    /// The confirmation value, in [-1, 1]
    #[arg(allow_negative_numbers = true)]
    pub value: f64,

    /// Prior P(h1); required for bstar, unused otherwise
    #[arg(long)]
    pub prior: Option<f64>,
}

#[derive(Serialize)]
struct PredictDoc {
    measure: String,
    value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    prior: Option<f64>,
    posterior_h1: f64,
    posterior_h0: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

/// When the invocation reproduces a published prediction row and the
/// result contradicts the printed posterior, say so.
fn reference_note(kind: StarKind, value: f64, prior: Option<f64>, posterior: f64) -> Option<String> {
    if kind != StarKind::BStar {
        return None;
    }
    let prior = prior?;
    for r in prediction_references() {
        if value == r.b_star
            && prior == r.prior
            && verdict_for(r.printed, posterior) == Verdict::Erratum
        {
            return Some(format!(
                "the published reference value {} for this prior disagrees with the \
                 computed posterior; the printed cell looks like a decimal-point misprint",
                r.printed_literal
            ));
        }
    }
    None
}

pub fn run(cli: &Cli, args: &PredictArgs) -> anyhow::Result<CommandOutput> {
    let kind: StarKind = args.measure.parse::<StarKind>()?;
    let posterior = predict_posterior(kind, args.value, args.prior)?;
    let note = reference_note(kind, args.value, args.prior, posterior);

    let stdout = match cli.format {
        Format::Tsv => {
            let mut rows = vec![
                vec!["measure".to_string(), kind.to_string()],
                vec!["value".to_string(), format_sig(args.value, cli.precision)],
            ];
            if let Some(prior) = args.prior {
                rows.push(vec!["prior".to_string(), format_sig(prior, cli.precision)]);
            }
            rows.push(vec![
                "posterior_h1".to_string(),
                format_sig(posterior, cli.precision),
            ]);
            rows.push(vec![
                "posterior_h0".to_string(),
                format_sig(1.0 - posterior, cli.precision),
            ]);
            if let Some(note) = &note {
                rows.push(vec!["note".to_string(), note.clone()]);
            }
            tsv(&rows)
        }
        Format::Json => json(&PredictDoc {
            measure: kind.to_string(),
            value: args.value,
            prior: args.prior,
            posterior_h1: posterior,
            posterior_h0: 1.0 - posterior,
            note,
        })?,
    };
    Ok(CommandOutput::ok(stdout))
}
