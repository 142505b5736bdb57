//! Runtime measure registry.
//!
//! Every measure sits behind one object-safe trait so callers can select by
//! name at runtime, iterate the whole family, or carry a `&dyn` handle
//! without matching on the concrete kind. The nine classical measures share
//! a single generic strategy; the derived measures get dedicated entries
//! wired to their count-level forms.

use std::sync::OnceLock;

use crate::classic::{eval_classic, MeasureKind};
use crate::contingency::{ContingencyTable, Rule};
use crate::error::Result;
use crate::star;
use crate::util::validate_log_base;
use crate::value::ConfirmationValue;

/// A confirmation measure: evaluation on any rule direction plus the
/// metadata audits and front ends need.
pub trait ConfirmationMeasure: Send + Sync {
    fn kind(&self) -> MeasureKind;

    fn name(&self) -> &'static str {
        self.kind().canonical_name()
    }

    /// Whether finite values are guaranteed to lie in [-1, 1].
    fn normalizing(&self) -> bool;

    /// `log_base` applies to the logarithmic measures and is validated for
    /// all of them so behavior is uniform.
    fn evaluate(&self, rule: Rule, t: &ContingencyTable, log_base: f64)
        -> Result<ConfirmationValue>;
}

struct Classical(MeasureKind);

impl ConfirmationMeasure for Classical {
    fn kind(&self) -> MeasureKind {
        self.0
    }

    fn normalizing(&self) -> bool {
        matches!(self.0, MeasureKind::Z | MeasureKind::F)
    }

    fn evaluate(
        &self,
        rule: Rule,
        t: &ContingencyTable,
        log_base: f64,
    ) -> Result<ConfirmationValue> {
        eval_classic(self.0, rule, t, log_base)
    }
}

struct ChannelConfirmation;

impl ConfirmationMeasure for ChannelConfirmation {
    fn kind(&self) -> MeasureKind {
        MeasureKind::BStar
    }

    fn normalizing(&self) -> bool {
        true
    }

    fn evaluate(
        &self,
        rule: Rule,
        t: &ContingencyTable,
        log_base: f64,
    ) -> Result<ConfirmationValue> {
        validate_log_base(log_base)?;
        star::b_star(rule, t)
    }
}

struct PredictionConfirmation;

impl ConfirmationMeasure for PredictionConfirmation {
    fn kind(&self) -> MeasureKind {
        MeasureKind::CStar
    }

    fn normalizing(&self) -> bool {
        true
    }

    fn evaluate(
        &self,
        rule: Rule,
        t: &ContingencyTable,
        log_base: f64,
    ) -> Result<ConfirmationValue> {
        validate_log_base(log_base)?;
        Ok(star::c_star(rule, t))
    }
}

struct BalancedPredictionConfirmation;

impl ConfirmationMeasure for BalancedPredictionConfirmation {
    fn kind(&self) -> MeasureKind {
        MeasureKind::CFStar
    }

    fn normalizing(&self) -> bool {
        true
    }

    fn evaluate(
        &self,
        rule: Rule,
        t: &ContingencyTable,
        log_base: f64,
    ) -> Result<ConfirmationValue> {
        validate_log_base(log_base)?;
        Ok(star::c_f_star(rule, t))
    }
}

pub struct MeasureRegistry {
    entries: Vec<Box<dyn ConfirmationMeasure>>,
}

impl MeasureRegistry {
    fn build() -> Self {
        let mut entries: Vec<Box<dyn ConfirmationMeasure>> = Vec::new();
        for kind in MeasureKind::all() {
            entries.push(match kind {
                MeasureKind::BStar => Box::new(ChannelConfirmation),
                MeasureKind::CStar => Box::new(PredictionConfirmation),
                MeasureKind::CFStar => Box::new(BalancedPredictionConfirmation),
                classical => Box::new(Classical(classical)),
            });
        }
        MeasureRegistry { entries }
    }

    /// The process-wide registry holding all twelve measures in canonical
    /// order.
    pub fn global() -> &'static MeasureRegistry {
        static REGISTRY: OnceLock<MeasureRegistry> = OnceLock::new();
        REGISTRY.get_or_init(MeasureRegistry::build)
    }

    pub fn all(&self) -> impl Iterator<Item = &dyn ConfirmationMeasure> {
        self.entries.iter().map(|m| m.as_ref())
    }

    pub fn by_kind(&self, kind: MeasureKind) -> &dyn ConfirmationMeasure {
        self.entries
            .iter()
            .find(|m| m.kind() == kind)
            .expect("registry holds every measure kind")
            .as_ref()
    }

    /// Select by canonical name or alias (case-insensitive).
    pub fn lookup(&self, name: &str) -> Result<&dyn ConfirmationMeasure> {
        Ok(self.by_kind(name.parse::<MeasureKind>()?))
    }
}

/// One-shot convenience: look a measure up by name and evaluate it.
pub fn evaluate(
    name: &str,
    rule: Rule,
    t: &ContingencyTable,
    log_base: f64,
) -> Result<ConfirmationValue> {
    MeasureRegistry::global().lookup(name)?.evaluate(rule, t, log_base)
}
