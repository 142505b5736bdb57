//! Iterative binary classification by information maximization.
//!
//! Input is a binned feature distribution for each hypothesis plus a prior.
//! A partition assigns every bin to one evidence side (`e1` or `e0`); the
//! partition induces an expected 2x2 table, the table yields a per-cell
//! information matrix, and each bin is then re-assigned to the side whose
//! matrix column scores higher under the bin's posterior weights. Repeating
//! this drives the partition's mutual information upward until the partition
//! reproduces itself.

use std::fmt;

use serde::Serialize;

use crate::contingency::{ContingencyTable, EventRole, Family};
use crate::error::{Error, Result};
use crate::util::{log_with, validate_log_base, weighted_log};
use crate::value::ConfirmationValue;

/// One feature bin: the probability of landing in it under each hypothesis.
#[derive(Debug, Clone, Serialize)]
pub struct Bin {
    pub label: String,
    /// P(bin | h1)
    pub p1: f64,
    /// P(bin | h0)
    pub p0: f64,
}

/// A binned two-hypothesis feature distribution with a prior for h1.
#[derive(Debug, Clone)]
pub struct Dataset {
    bins: Vec<Bin>,
    prior_h1: f64,
}

const COLUMN_SUM_TOLERANCE: f64 = 1e-6;

impl Dataset {
    pub fn new(bins: Vec<Bin>, prior_h1: f64) -> Result<Self> {
        if bins.is_empty() {
            return Err(Error::MalformedDataset("no bins".into()));
        }
        if !(prior_h1 > 0.0 && prior_h1 < 1.0) {
            return Err(Error::MalformedDataset(format!(
                "prior_h1 must lie strictly between 0 and 1, got {prior_h1}"
            )));
        }
        let mut seen: Vec<&str> = Vec::with_capacity(bins.len());
        for bin in &bins {
            for (col, v) in [("p1", bin.p1), ("p0", bin.p0)] {
                if !v.is_finite() || v < 0.0 {
                    return Err(Error::MalformedDataset(format!(
                        "bin {:?}: {col} must be a finite non-negative probability, got {v}",
                        bin.label
                    )));
                }
            }
            if seen.contains(&bin.label.as_str()) {
                return Err(Error::MalformedDataset(format!(
                    "duplicate bin label {:?}",
                    bin.label
                )));
            }
            seen.push(&bin.label);
        }
        for (col, sum) in [
            ("p1", bins.iter().map(|b| b.p1).sum::<f64>()),
            ("p0", bins.iter().map(|b| b.p0).sum::<f64>()),
        ] {
            if (sum - 1.0).abs() > COLUMN_SUM_TOLERANCE {
                return Err(Error::MalformedDataset(format!(
                    "column {col} sums to {sum}, expected 1"
                )));
            }
        }
        Ok(Dataset { bins, prior_h1 })
    }

    /// Parse the dataset CSV format: a `# prior_h1=<value>` comment line, a
    /// `bin,p1,p0` header, then one row per bin.
    pub fn from_csv_str(content: &str) -> Result<Self> {
        let mut prior: Option<f64> = None;
        let mut body = String::new();
        for line in content.lines() {
            let trimmed = line.trim();
            if let Some(rest) = trimmed.strip_prefix('#') {
                if let Some((key, value)) = rest.split_once('=') {
                    if key.trim() == "prior_h1" {
                        if prior.is_some() {
                            return Err(Error::MalformedDataset(
                                "multiple prior_h1 lines".into(),
                            ));
                        }
                        prior = Some(value.trim().parse::<f64>().map_err(|_| {
                            Error::MalformedDataset(format!(
                                "unparsable prior_h1 value {:?}",
                                value.trim()
                            ))
                        })?);
                    }
                }
                continue;
            }
            if trimmed.is_empty() {
                continue;
            }
            body.push_str(line);
            body.push('\n');
        }
        let prior = prior.ok_or_else(|| {
            Error::MalformedDataset("missing \"# prior_h1=<value>\" line".into())
        })?;

        let mut reader = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .flexible(true)
            .from_reader(body.as_bytes());
        let headers = reader.headers()?.clone();
        let names: Vec<String> = headers.iter().map(|h| h.to_ascii_lowercase()).collect();
        if names != ["bin", "p1", "p0"] {
            return Err(Error::MalformedDataset(format!(
                "expected header bin,p1,p0 but found {}",
                headers.iter().collect::<Vec<_>>().join(",")
            )));
        }
        let mut bins = Vec::new();
        for (idx, record) in reader.records().enumerate() {
            let record = record?;
            if record.len() != 3 {
                return Err(Error::MalformedDataset(format!(
                    "row {} has {} fields, expected 3",
                    idx + 1,
                    record.len()
                )));
            }
            let parse = |field: &str, col: &str| {
                field.parse::<f64>().map_err(|_| {
                    Error::MalformedDataset(format!(
                        "row {} column {col}: unparsable number {field:?}",
                        idx + 1
                    ))
                })
            };
            bins.push(Bin {
                label: record[0].to_string(),
                p1: parse(&record[1], "p1")?,
                p0: parse(&record[2], "p0")?,
            });
        }
        Dataset::new(bins, prior)
    }

    pub fn from_csv_path(path: &std::path::Path) -> Result<Self> {
        Dataset::from_csv_str(&std::fs::read_to_string(path)?)
    }

    pub fn bins(&self) -> &[Bin] {
        &self.bins
    }

    pub fn prior_h1(&self) -> f64 {
        self.prior_h1
    }

    pub fn len(&self) -> usize {
        self.bins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bins.is_empty()
    }
}

/// How the starting partition is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InitialPartition {
    /// Bin goes to e1 when `P(h1|bin) >= P(h0|bin)`.
    #[default]
    MaxPosterior,
    /// Bin goes to e1 when `P(bin|h1) >= P(bin|h0)`.
    MaxLikelihood,
}

/// The side each bin maps to; `true` means e1. Ties go to e1 so the start is
/// deterministic.
pub fn initial_partition(ds: &Dataset, criterion: InitialPartition) -> Vec<bool> {
    let prior = ds.prior_h1();
    ds.bins()
        .iter()
        .map(|bin| match criterion {
            InitialPartition::MaxPosterior => bin.p1 * prior >= bin.p0 * (1.0 - prior),
            InitialPartition::MaxLikelihood => bin.p1 >= bin.p0,
        })
        .collect()
}

/// Expected 2x2 table of the partition at the given total count, rounded to
/// integers that sum exactly to `scale` (floor everything, then hand out the
/// remainder by descending fractional part, ties in cell order a,b,c,d).
pub fn induced_table(ds: &Dataset, partition: &[bool], scale: u64) -> Result<ContingencyTable> {
    assert_eq!(partition.len(), ds.len(), "partition length must match bin count");
    let prior = ds.prior_h1();
    let side = |on_e1: bool, of: fn(&Bin) -> f64| -> f64 {
        ds.bins()
            .iter()
            .zip(partition)
            .filter(|(_, &in_e1)| in_e1 == on_e1)
            .map(|(bin, _)| of(bin))
            .sum()
    };
    let reals = [
        scale as f64 * prior * side(true, |b| b.p1),
        scale as f64 * prior * side(false, |b| b.p1),
        scale as f64 * (1.0 - prior) * side(true, |b| b.p0),
        scale as f64 * (1.0 - prior) * side(false, |b| b.p0),
    ];
    let mut cells = [0u64; 4];
    let mut fracs = [0f64; 4];
    for i in 0..4 {
        cells[i] = reals[i].floor() as u64;
        fracs[i] = reals[i] - reals[i].floor();
    }
    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&i, &j| fracs[j].partial_cmp(&fracs[i]).unwrap().then(i.cmp(&j)));
    let mut excess = scale as i64 - cells.iter().sum::<u64>() as i64;
    while excess > 0 {
        for &i in &order {
            if excess == 0 {
                break;
            }
            cells[i] += 1;
            excess -= 1;
        }
    }
    // Column sums within tolerance can leave the floors a hair over scale.
    while excess < 0 {
        for &i in order.iter().rev() {
            if excess == 0 {
                break;
            }
            if cells[i] > 0 {
                cells[i] -= 1;
                excess += 1;
            }
        }
    }
    ContingencyTable::new(cells[0], cells[1], cells[2], cells[3])
}

/// Shannon mutual information of the table's two margins. Always finite;
/// empty cells contribute nothing.
pub fn mutual_information(t: &ContingencyTable, log_base: f64) -> f64 {
    let n = t.n() as f64;
    let mut total = 0.0;
    for hypothesis in [EventRole::H1, EventRole::H0] {
        for evidence in [EventRole::E1, EventRole::E0] {
            let joint = t.pair_count(hypothesis, evidence) as f64 / n;
            let ph = t.marginal_count(hypothesis) as f64 / n;
            let pe = t.marginal_count(evidence) as f64 / n;
            total += weighted_log(joint, joint / (ph * pe), log_base);
        }
    }
    total
}

/// Per-cell pointwise information `log(P(h,e) / (P(h)P(e)))`. A zero joint
/// over positive margins is `-inf`; a zero margin makes the whole matrix
/// undefined.
#[derive(Debug, Clone, Copy)]
pub struct InfoMatrix {
    entries: [[ConfirmationValue; 2]; 2],
}

impl InfoMatrix {
    pub fn get(&self, hypothesis: EventRole, evidence: EventRole) -> ConfirmationValue {
        assert_eq!(hypothesis.family(), Family::Hypothesis);
        assert_eq!(evidence.family(), Family::Evidence);
        let h = if hypothesis == EventRole::H1 { 0 } else { 1 };
        let e = if evidence == EventRole::E1 { 0 } else { 1 };
        self.entries[h][e]
    }
}

pub fn info_matrix(t: &ContingencyTable, log_base: f64) -> Result<InfoMatrix> {
    validate_log_base(log_base)?;
    for role in [EventRole::H1, EventRole::H0, EventRole::E1, EventRole::E0] {
        if t.marginal_count(role) == 0 {
            return Err(Error::ZeroMarginal { given: role });
        }
    }
    let n = t.n() as f64;
    let mut entries = [[ConfirmationValue::Undefined; 2]; 2];
    for (h, hypothesis) in [EventRole::H1, EventRole::H0].into_iter().enumerate() {
        for (e, evidence) in [EventRole::E1, EventRole::E0].into_iter().enumerate() {
            let joint = t.pair_count(hypothesis, evidence) as f64 / n;
            entries[h][e] = if joint == 0.0 {
                ConfirmationValue::NegInfinite
            } else {
                let ph = t.marginal_count(hypothesis) as f64 / n;
                let pe = t.marginal_count(evidence) as f64 / n;
                ConfirmationValue::Finite(log_with(joint / (ph * pe), log_base))
            };
        }
    }
    Ok(InfoMatrix { entries })
}

/// Re-assign every bin to the evidence side whose matrix column maximizes
/// the bin's posterior-weighted information. Ties and zero-mass bins go
/// to e1.
fn reclassify(ds: &Dataset, matrix: &InfoMatrix) -> Result<Vec<bool>> {
    let prior = ds.prior_h1();
    let entry = |h, e| match matrix.get(h, e) {
        ConfirmationValue::Finite(v) => v,
        ConfirmationValue::NegInfinite => f64::NEG_INFINITY,
        // Excluded by the margin checks in info_matrix.
        _ => unreachable!("info matrix entries are finite or -inf"),
    };
    let mut assignment = Vec::with_capacity(ds.len());
    for bin in ds.bins() {
        let mass = bin.p1 * prior + bin.p0 * (1.0 - prior);
        if mass == 0.0 {
            assignment.push(true);
            continue;
        }
        let (w1, w0) = (bin.p1 * prior / mass, bin.p0 * (1.0 - prior) / mass);
        let score = |evidence| {
            let mut s = 0.0;
            for (w, hypothesis) in [(w1, EventRole::H1), (w0, EventRole::H0)] {
                if w > 0.0 {
                    s += w * entry(hypothesis, evidence);
                }
            }
            s
        };
        let (s1, s0) = (score(EventRole::E1), score(EventRole::E0));
        if s1 == f64::NEG_INFINITY && s0 == f64::NEG_INFINITY {
            return Err(Error::Degenerate(
                "both evidence sides have zero probability for an occupied bin",
            ));
        }
        assignment.push(s1 >= s0);
    }
    Ok(assignment)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassifierOptions {
    pub initial: InitialPartition,
    /// Total expected count the partition is rounded to.
    pub scale: u64,
    pub max_iterations: usize,
    pub log_base: f64,
}

impl Default for ClassifierOptions {
    fn default() -> Self {
        ClassifierOptions {
            initial: InitialPartition::MaxPosterior,
            scale: 10_000,
            max_iterations: 100,
            log_base: 2.0,
        }
    }
}

/// One evaluated partition: its induced table and mutual information.
#[derive(Debug, Clone, Serialize)]
pub struct IterationRecord {
    pub partition: Vec<bool>,
    pub table: ContingencyTable,
    pub mutual_information: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    /// Re-assignment reproduced the current partition.
    Converged,
    /// Re-assignment revisited an earlier partition without converging.
    Cycled { period: usize },
    /// Gave up after `max_iterations` evaluated partitions.
    IterationLimit,
    /// The process cannot continue from the last partition.
    Degenerate { reason: String },
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Converged => write!(f, "converged"),
            Outcome::Cycled { period } => write!(f, "cycled (period {period})"),
            Outcome::IterationLimit => write!(f, "iteration limit reached"),
            Outcome::Degenerate { reason } => write!(f, "degenerate: {reason}"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifierRun {
    pub iterations: Vec<IterationRecord>,
    pub outcome: Outcome,
}

impl ClassifierRun {
    pub fn final_record(&self) -> &IterationRecord {
        self.iterations.last().expect("at least one iteration is always recorded")
    }
}

fn degenerate_reason(err: Error) -> Outcome {
    let reason = match err {
        Error::ZeroMarginal { given: EventRole::E1 } => {
            "the e1 side of the partition has no expected mass".to_string()
        }
        Error::ZeroMarginal { given: EventRole::E0 } => {
            "the e0 side of the partition has no expected mass".to_string()
        }
        Error::ZeroMarginal { given } => format!("hypothesis {given} has no expected mass"),
        Error::Degenerate(reason) => reason.to_string(),
        other => other.to_string(),
    };
    Outcome::Degenerate { reason }
}

/// Iterate until the partition reproduces itself, a cycle closes, or the
/// step fails; every evaluated partition leaves a record even when the run
/// ends degenerate.
pub fn run(ds: &Dataset, opts: &ClassifierOptions) -> Result<ClassifierRun> {
    validate_log_base(opts.log_base)?;
    if opts.scale == 0 || opts.scale > 1_000_000_000_000 {
        return Err(Error::OutOfRange {
            what: "scale",
            value: opts.scale as f64,
            expected: "between 1 and 10^12",
        });
    }
    if opts.max_iterations == 0 {
        return Err(Error::OutOfRange {
            what: "max iterations",
            value: 0.0,
            expected: "at least 1",
        });
    }
    let mut partition = initial_partition(ds, opts.initial);
    let mut iterations: Vec<IterationRecord> = Vec::new();
    let outcome = loop {
        let table = induced_table(ds, &partition, opts.scale)?;
        iterations.push(IterationRecord {
            partition: partition.clone(),
            table,
            mutual_information: mutual_information(&table, opts.log_base),
        });
        let next = match info_matrix(&table, opts.log_base).and_then(|m| reclassify(ds, &m)) {
            Ok(next) => next,
            Err(err @ (Error::ZeroMarginal { .. } | Error::Degenerate(_))) => {
                break degenerate_reason(err);
            }
            Err(err) => return Err(err),
        };
        if next == partition {
            break Outcome::Converged;
        }
        if let Some(pos) = iterations.iter().position(|r| r.partition == next) {
            break Outcome::Cycled { period: iterations.len() - pos };
        }
        if iterations.len() == opts.max_iterations {
            break Outcome::IterationLimit;
        }
        partition = next;
    };
    Ok(ClassifierRun { iterations, outcome })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bins(p1: &[f64], p0: &[f64]) -> Vec<Bin> {
        p1.iter()
            .zip(p0)
            .enumerate()
            .map(|(i, (&p1, &p0))| Bin { label: format!("x{}", i + 1), p1, p0 })
            .collect()
    }

    fn overlapping() -> Dataset {
        Dataset::new(
            bins(
                &[0.005, 0.01, 0.02, 0.04, 0.07, 0.11, 0.15, 0.19, 0.21, 0.195],
                &[0.30, 0.24, 0.17, 0.11, 0.08, 0.05, 0.03, 0.013, 0.005, 0.002],
            ),
            0.3,
        )
        .unwrap()
    }

    fn separable() -> Dataset {
        Dataset::new(
            bins(
                &[0.0, 0.0, 0.0, 0.0, 0.0, 0.1, 0.2, 0.3, 0.25, 0.15],
                &[0.35, 0.25, 0.2, 0.12, 0.08, 0.0, 0.0, 0.0, 0.0, 0.0],
            ),
            0.3,
        )
        .unwrap()
    }

    fn identical() -> Dataset {
        let p = [0.30, 0.24, 0.17, 0.11, 0.08, 0.05, 0.03, 0.013, 0.005, 0.002];
        Dataset::new(bins(&p, &p), 0.3).unwrap()
    }

    #[test]
    fn validation_rejects_bad_datasets() {
        assert!(matches!(Dataset::new(vec![], 0.3), Err(Error::MalformedDataset(_))));
        let ok = bins(&[0.4, 0.6], &[0.7, 0.3]);
        assert!(matches!(Dataset::new(ok.clone(), 0.0), Err(Error::MalformedDataset(_))));
        assert!(matches!(Dataset::new(ok.clone(), 1.0), Err(Error::MalformedDataset(_))));
        assert!(Dataset::new(ok, 0.5).is_ok());
        assert!(matches!(
            Dataset::new(bins(&[0.4, 0.5], &[0.7, 0.3]), 0.5),
            Err(Error::MalformedDataset(_))
        ));
        assert!(matches!(
            Dataset::new(bins(&[-0.1, 1.1], &[0.7, 0.3]), 0.5),
            Err(Error::MalformedDataset(_))
        ));
        let mut dup = bins(&[0.4, 0.6], &[0.7, 0.3]);
        dup[1].label = "x1".into();
        assert!(matches!(Dataset::new(dup, 0.5), Err(Error::MalformedDataset(_))));
    }

    #[test]
    fn csv_round_trip_and_errors() {
        let text = "\
# prior_h1 = 0.3
bin,p1,p0
x1, 0.4, 0.7
x2, 0.6, 0.3
";
        let ds = Dataset::from_csv_str(text).unwrap();
        assert_eq!(ds.len(), 2);
        assert_eq!(ds.prior_h1(), 0.3);
        assert_eq!(ds.bins()[1].label, "x2");
        assert_eq!(ds.bins()[1].p1, 0.6);

        let no_prior = "bin,p1,p0\nx1,1.0,1.0\n";
        assert!(matches!(Dataset::from_csv_str(no_prior), Err(Error::MalformedDataset(_))));
        let bad_header = "# prior_h1=0.3\nbin,q1,q0\nx1,1.0,1.0\n";
        assert!(matches!(Dataset::from_csv_str(bad_header), Err(Error::MalformedDataset(_))));
        let bad_number = "# prior_h1=0.3\nbin,p1,p0\nx1,one,1.0\n";
        assert!(matches!(Dataset::from_csv_str(bad_number), Err(Error::MalformedDataset(_))));
        let two_priors = "# prior_h1=0.3\n# prior_h1=0.4\nbin,p1,p0\nx1,1.0,1.0\n";
        assert!(matches!(Dataset::from_csv_str(two_priors), Err(Error::MalformedDataset(_))));
        let short_row = "# prior_h1=0.3\nbin,p1,p0\nx1,1.0\n";
        assert!(matches!(Dataset::from_csv_str(short_row), Err(Error::MalformedDataset(_))));
    }

    #[test]
    fn initial_partitions() {
        let ds = overlapping();
        let by_posterior = initial_partition(&ds, InitialPartition::MaxPosterior);
        assert_eq!(by_posterior, [false, false, false, false, false, false, true, true, true, true]);
        let by_likelihood = initial_partition(&ds, InitialPartition::MaxLikelihood);
        assert_eq!(by_likelihood, [false, false, false, false, false, true, true, true, true, true]);
    }

    #[test]
    fn rounding_preserves_scale_and_breaks_ties_by_cell_order() {
        let ds = overlapping();
        let part = initial_partition(&ds, InitialPartition::MaxPosterior);
        assert_eq!(induced_table(&ds, &part, 10_000).unwrap().cells(), [2235, 765, 350, 6650]);
        assert_eq!(induced_table(&ds, &part, 1000).unwrap().cells(), [223, 77, 35, 665]);
        assert_eq!(induced_table(&ds, &part, 100).unwrap().cells(), [22, 8, 3, 67]);

        // Dyadic probabilities make the fractional parts exact: two cells at
        // .75 and two at .25 with two units to hand out.
        let dyadic = Dataset::new(bins(&[0.25, 0.75], &[0.75, 0.25]), 0.5).unwrap();
        assert_eq!(induced_table(&dyadic, &[true, false], 10).unwrap().cells(), [1, 4, 4, 1]);
        // A four-way .25 tie: the single remainder unit goes to cell a.
        let flat = Dataset::new(bins(&[0.5, 0.5], &[0.5, 0.5]), 0.5).unwrap();
        assert_eq!(induced_table(&flat, &[true, false], 5).unwrap().cells(), [2, 1, 1, 1]);
    }

    #[test]
    fn mutual_information_cases() {
        let independent = ContingencyTable::new(3, 7, 3, 7).unwrap();
        assert_eq!(mutual_information(&independent, 2.0), 0.0);
        let separated = ContingencyTable::new(3000, 0, 0, 7000).unwrap();
        assert!((mutual_information(&separated, 2.0) - 0.8812908992306926).abs() < 1e-15);
        let t0 = ContingencyTable::new(2235, 765, 350, 6650).unwrap();
        assert!((mutual_information(&t0, 2.0) - 0.37826438181609373).abs() < 1e-15);
    }

    #[test]
    fn info_matrix_entries() {
        let t = ContingencyTable::new(2235, 765, 350, 6650).unwrap();
        let m = info_matrix(&t, 2.0).unwrap();
        let expect = |joint: f64, ph: f64, pe: f64| (joint / (ph * pe)).log2();
        assert!(m
            .get(EventRole::H1, EventRole::E1)
            .approx_eq(ConfirmationValue::Finite(expect(0.2235, 0.3, 0.2585)), 1e-12));
        assert!(m
            .get(EventRole::H0, EventRole::E0)
            .approx_eq(ConfirmationValue::Finite(expect(0.665, 0.7, 0.7415)), 1e-12));

        let separated = ContingencyTable::new(3000, 0, 0, 7000).unwrap();
        let m = info_matrix(&separated, 2.0).unwrap();
        assert_eq!(m.get(EventRole::H1, EventRole::E0), ConfirmationValue::NegInfinite);
        assert_eq!(m.get(EventRole::H0, EventRole::E1), ConfirmationValue::NegInfinite);
        assert!(m.get(EventRole::H1, EventRole::E1).is_finite());

        let empty_side = ContingencyTable::new(0, 3000, 0, 7000).unwrap();
        assert!(matches!(
            info_matrix(&empty_side, 2.0),
            Err(Error::ZeroMarginal { given: EventRole::E1 })
        ));
    }

    #[test]
    fn overlapping_run_improves_then_converges() {
        let run = run(&overlapping(), &ClassifierOptions::default()).unwrap();
        assert_eq!(run.outcome, Outcome::Converged);
        assert_eq!(run.iterations.len(), 2);
        assert_eq!(run.iterations[0].table.cells(), [2235, 765, 350, 6650]);
        assert!((run.iterations[0].mutual_information - 0.37826438181609373).abs() < 1e-15);
        assert_eq!(run.final_record().table.cells(), [2565, 435, 700, 6300]);
        assert!((run.final_record().mutual_information - 0.4038579725646842).abs() < 1e-15);
        assert_eq!(
            run.final_record().partition,
            [false, false, false, false, false, true, true, true, true, true]
        );
    }

    #[test]
    fn likelihood_start_is_already_optimal_here() {
        let opts = ClassifierOptions {
            initial: InitialPartition::MaxLikelihood,
            ..ClassifierOptions::default()
        };
        let run = run(&overlapping(), &opts).unwrap();
        assert_eq!(run.outcome, Outcome::Converged);
        assert_eq!(run.iterations.len(), 1);
        assert!((run.final_record().mutual_information - 0.4038579725646842).abs() < 1e-15);
    }

    #[test]
    fn separable_data_reaches_the_prior_entropy() {
        let run = run(&separable(), &ClassifierOptions::default()).unwrap();
        assert_eq!(run.outcome, Outcome::Converged);
        assert_eq!(run.iterations.len(), 1);
        assert_eq!(run.final_record().table.cells(), [3000, 0, 0, 7000]);
        assert!((run.final_record().mutual_information - 0.8812908992306926).abs() < 1e-15);
    }

    #[test]
    fn identical_distributions_go_degenerate() {
        let run = run(&identical(), &ClassifierOptions::default()).unwrap();
        assert_eq!(run.iterations.len(), 1);
        assert_eq!(run.iterations[0].table.cells(), [0, 3000, 0, 7000]);
        assert_eq!(run.iterations[0].mutual_information, 0.0);
        assert!(matches!(&run.outcome, Outcome::Degenerate { reason } if reason.contains("e1 side")));
    }

    #[test]
    fn option_validation() {
        let ds = overlapping();
        let bad_scale = ClassifierOptions { scale: 0, ..ClassifierOptions::default() };
        assert!(matches!(run(&ds, &bad_scale), Err(Error::OutOfRange { .. })));
        let bad_base = ClassifierOptions { log_base: 1.0, ..ClassifierOptions::default() };
        assert!(matches!(run(&ds, &bad_base), Err(Error::OutOfRange { .. })));
        let bad_iters = ClassifierOptions { max_iterations: 0, ..ClassifierOptions::default() };
        assert!(matches!(run(&ds, &bad_iters), Err(Error::OutOfRange { .. })));
        // A cap of 1 stops the overlapping fixture before convergence.
        let capped = ClassifierOptions { max_iterations: 1, ..ClassifierOptions::default() };
        let run = run(&ds, &capped).unwrap();
        assert_eq!(run.outcome, Outcome::IterationLimit);
        assert_eq!(run.iterations.len(), 1);
    }
}
