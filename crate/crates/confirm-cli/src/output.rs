//! Rendering helpers shared by every subcommand.

use clap::ValueEnum;
use confirm_core::ConfirmationValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Tab-separated lines.
    Tsv,
    /// One pretty-printed JSON document.
    Json,
}

/// Render with `sig` significant digits, trailing zeros stripped.
///
/// Used for all tabular output so that repeated runs are byte-identical
/// and small tables stay readable; JSON output keeps full precision.
pub fn format_sig(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".to_string()
        } else if x > 0.0 {
            "inf".to_string()
        } else {
            "-inf".to_string()
        };
    }
    let magnitude = x.abs().log10().floor() as i32;
    let places = (sig as i32 - 1 - magnitude).max(0) as usize;
    let s = format!("{x:.places$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// A confirmation value as a cell: decimal, `+inf`, `-inf`, or `undefined`.
pub fn format_value(v: ConfirmationValue, sig: usize) -> String {
    match v {
        ConfirmationValue::Finite(x) => format_sig(x, sig),
        other => other.to_string(),
    }
}

/// Join rows into tab-separated lines with a trailing newline.
pub fn tsv(rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    for row in rows {
        out.push_str(&row.join("\t"));
        out.push('\n');
    }
    out
}

/// Pretty JSON document with a trailing newline.
pub fn json<T: serde::Serialize>(doc: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(doc)? + "\n")
}
