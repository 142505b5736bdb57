//! Shared error taxonomy.
//!
//! Zero-denominator situations are deliberately split three ways and never
//! collapsed into a catch-all: a conditioning marginal of zero is
//! [`Error::ZeroMarginal`], a 0/0 measure value is reported through
//! [`crate::value::ConfirmationValue::Undefined`], and operations whose
//! result type has no undefined slot use [`Error::Undefined`].

use crate::contingency::EventRole;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// All four counts are zero; no probability is defined.
    #[error("empty table: all four counts are zero")]
    EmptyTable,

    /// A count (or a count after applying a delta) went negative.
    #[error("negative count {value} for cell {cell}")]
    NegativeCount { cell: &'static str, value: i64 },

    /// Conditioning event has zero total count, so the conditional is undefined.
    #[error("zero marginal: conditioning on {given} (total count 0)")]
    ZeroMarginal { given: EventRole },

    /// The requested quantity has no defined value for these inputs.
    #[error("undefined value: {0}")]
    Undefined(&'static str),

    /// A numeric argument fell outside its documented domain.
    #[error("{what} out of range: {value} (expected {expected})")]
    OutOfRange {
        what: &'static str,
        value: f64,
        expected: &'static str,
    },

    /// The fuzzy predicate has logical probability zero, so no posterior exists.
    #[error("zero logical probability: the predicate excludes every hypothesis")]
    ZeroLogicalProbability,

    /// Classification cannot proceed (e.g. a partition side carries no mass).
    #[error("degenerate classification: {0}")]
    Degenerate(&'static str),

    /// Classifier dataset file violates its schema.
    #[error("malformed dataset: {0}")]
    MalformedDataset(String),

    /// Example CSV violates the `e,h` schema.
    #[error("invalid examples file: {0}")]
    InvalidExamples(String),

    /// A CSV field matched neither the truthy nor the falsy label set.
    #[error("unrecognized label {value:?} in column {column}")]
    UnrecognizedLabel { column: &'static str, value: String },

    #[error("unknown measure {0:?}")]
    UnknownMeasure(String),

    #[error("unknown property {0:?}")]
    UnknownProperty(String),

    #[error("unknown rule {0:?} (expected e.g. \"e1->h1\")")]
    UnknownRule(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("invalid counts file: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
