//! Semantic information of soft evidence readings.
//!
//! A reading of the evidence (say "e1 was observed") is treated as a fuzzy
//! predicate over the two hypotheses: it is fully true under the hypothesis
//! it points at and true to some degree `b' in [0, 1]` under the other. The
//! predicate's logical probability is the prior-weighted truth,
//! `T = sum_h T(reading|h) P(h)`, a posterior follows by Bayes with truth
//! degrees in place of likelihoods, and the information the reading carries
//! about a hypothesis is `log(T(reading|h) / T)` — equivalently
//! `log(posterior / prior)`. Averaging over hypotheses with the observed
//! conditional weights scores how well a truth assignment matches the
//! channel; [`crate::star::optimize_truth_assignment`] produces the
//! maximizing degrees.

use crate::contingency::{ContingencyTable, EventRole, Family};
use crate::error::{Error, Result};
use crate::util::{log_with, validate_log_base, weighted_log};
use crate::value::ConfirmationValue;

/// Truth degrees of the two evidence readings under their opposing
/// hypotheses. `b1_prime` is how true "e1 observed" remains under h0;
/// `b0_prime` is how true "e0 observed" remains under h1. (Under their own
/// hypotheses both readings are fully true.)
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruthAssignment {
    b1: f64,
    b0: f64,
}

impl TruthAssignment {
    pub fn new(b1_prime: f64, b0_prime: f64) -> Result<Self> {
        for (what, v) in [("b1'", b1_prime), ("b0'", b0_prime)] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::OutOfRange {
                    what: if what == "b1'" { "truth degree b1'" } else { "truth degree b0'" },
                    value: v,
                    expected: "a degree in [0, 1]",
                });
            }
        }
        Ok(TruthAssignment { b1: b1_prime, b0: b0_prime })
    }

    pub fn b1_prime(&self) -> f64 {
        self.b1
    }

    pub fn b0_prime(&self) -> f64 {
        self.b0
    }

    /// `T(reading | hypothesis)`: 1 on the reading's own side, the assigned
    /// degree on the other.
    pub fn truth_degree(&self, evidence: EventRole, hypothesis: EventRole) -> f64 {
        assert_eq!(evidence.family(), Family::Evidence, "reading must be an evidence event");
        assert_eq!(hypothesis.family(), Family::Hypothesis, "conditioner must be a hypothesis");
        match (evidence, hypothesis) {
            (EventRole::E1, EventRole::H1) | (EventRole::E0, EventRole::H0) => 1.0,
            (EventRole::E1, EventRole::H0) => self.b1,
            (EventRole::E0, EventRole::H1) => self.b0,
            _ => unreachable!(),
        }
    }
}

/// `T(reading) = sum_h T(reading|h) P(h)`.
pub fn logical_probability(t: &ContingencyTable, ta: &TruthAssignment, evidence: EventRole) -> f64 {
    ta.truth_degree(evidence, EventRole::H1) * t.prior(EventRole::H1)
        + ta.truth_degree(evidence, EventRole::H0) * t.prior(EventRole::H0)
}

/// Bayes with truth degrees in place of likelihoods:
/// `P(h | reading) = T(reading|h) P(h) / T(reading)`.
pub fn semantic_bayes_posterior(
    t: &ContingencyTable,
    ta: &TruthAssignment,
    evidence: EventRole,
    hypothesis: EventRole,
) -> Result<f64> {
    let total = logical_probability(t, ta, evidence);
    if total == 0.0 {
        return Err(Error::ZeroLogicalProbability);
    }
    Ok(ta.truth_degree(evidence, hypothesis) * t.prior(hypothesis) / total)
}

/// `log(T(reading|h) / T(reading))`. `-inf` when the degree is zero;
/// an all-zero logical probability is an error.
pub fn semantic_information(
    t: &ContingencyTable,
    ta: &TruthAssignment,
    evidence: EventRole,
    hypothesis: EventRole,
    log_base: f64,
) -> Result<ConfirmationValue> {
    validate_log_base(log_base)?;
    let total = logical_probability(t, ta, evidence);
    if total == 0.0 {
        return Err(Error::ZeroLogicalProbability);
    }
    let degree = ta.truth_degree(evidence, hypothesis);
    if degree == 0.0 {
        return Ok(ConfirmationValue::NegInfinite);
    }
    Ok(ConfirmationValue::Finite(log_with(degree / total, log_base)))
}

/// The same quantity through the posterior route, `log(P(h|reading) / P(h))`.
/// Must agree with [`semantic_information`] wherever both are defined.
pub fn semantic_information_via_posterior(
    t: &ContingencyTable,
    ta: &TruthAssignment,
    evidence: EventRole,
    hypothesis: EventRole,
    log_base: f64,
) -> Result<ConfirmationValue> {
    validate_log_base(log_base)?;
    let posterior = semantic_bayes_posterior(t, ta, evidence, hypothesis)?;
    let prior = t.prior(hypothesis);
    if prior == 0.0 {
        return Err(Error::Undefined("hypothesis has zero prior"));
    }
    if posterior == 0.0 {
        return Ok(ConfirmationValue::NegInfinite);
    }
    Ok(ConfirmationValue::Finite(log_with(posterior / prior, log_base)))
}

/// Information of a reading averaged over hypotheses with the observed
/// conditional weights `P(h | e)`. Zero weights contribute nothing even
/// where the log diverges; a positive weight on a zero degree drives the
/// average to `-inf`.
pub fn average_semantic_information(
    t: &ContingencyTable,
    ta: &TruthAssignment,
    evidence: EventRole,
    log_base: f64,
) -> Result<f64> {
    validate_log_base(log_base)?;
    let total = logical_probability(t, ta, evidence);
    if total == 0.0 {
        return Err(Error::ZeroLogicalProbability);
    }
    let mut sum = 0.0;
    for hypothesis in [EventRole::H1, EventRole::H0] {
        let weight = t.conditional(hypothesis, evidence)?;
        let degree = ta.truth_degree(evidence, hypothesis);
        sum += weighted_log(weight, degree / total, log_base);
    }
    Ok(sum)
}

/// The hard-reading ceiling: `sum_h P(h|e) log(P(h|e) / P(h))`. The
/// optimizing truth assignment attains exactly this relative entropy
/// whenever the reading's own-side conditional is at least the other
/// side's; a reading pointing the wrong way saturates below it.
pub fn relative_entropy_information(
    t: &ContingencyTable,
    evidence: EventRole,
    log_base: f64,
) -> Result<f64> {
    validate_log_base(log_base)?;
    let mut sum = 0.0;
    for hypothesis in [EventRole::H1, EventRole::H0] {
        let weight = t.conditional(hypothesis, evidence)?;
        sum += weighted_log(weight, weight / t.prior(hypothesis), log_base);
    }
    Ok(sum)
}
