//! Confirmation measures over 2x2 evidence tables.
//!
//! Given counts of how often a binary piece of evidence co-occurs with a
//! binary hypothesis, this crate evaluates the classical confirmation
//! measures (D, M, R, C, Z, S, N, L, F) and three normalized derived ones
//! (b*, c*, c_F*) on any orientation of the rule, inverts the derived
//! measures back into posterior predictions, audits documented measure
//! properties over seeded random tables, scores soft evidence readings by
//! semantic information, and runs an iterative information-maximizing
//! binary classifier over binned feature data.
//!
//! Entry points:
//! * [`contingency::ContingencyTable`] — validated counts, conditionals,
//!   likelihood ratios, CSV/JSON ingestion.
//! * [`registry::MeasureRegistry`] — all twelve measures behind one trait,
//!   selectable by name.
//! * [`prediction`] — posterior recovery from measure values and the
//!   diagnostic-test panel.
//! * [`properties`] — seeded symmetry/monotonicity/normalization/logicality
//!   /irrelevance audits with witnesses.
//! * [`semantic`] — truth assignments, semantic Bayes, average semantic
//!   information.
//! * [`classifier`] — the iterative partition refiner with its
//!   mutual-information trace.

pub mod classic;
pub mod classifier;
pub mod contingency;
pub mod error;
pub mod prediction;
pub mod properties;
pub mod registry;
pub mod semantic;
pub mod star;
mod util;
pub mod value;

pub use classic::MeasureKind;
pub use contingency::{ContingencyTable, EventRole, Rule};
pub use error::{Error, Result};
pub use value::ConfirmationValue;
