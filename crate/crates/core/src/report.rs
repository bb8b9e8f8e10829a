//! Structured results of a verification suite.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::tolerance::ToleranceConfig;

/// How many comparisons a check made, and whether they covered every case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleCount {
    Sampled(u64),
    Exhaustive(u64),
}

impl SampleCount {
    pub fn count(&self) -> u64 {
        match *self {
            SampleCount::Sampled(n) | SampleCount::Exhaustive(n) => n,
        }
    }

    pub fn is_exhaustive(&self) -> bool {
        matches!(self, SampleCount::Exhaustive(_))
    }
}

/// The inputs of a failing comparison and the residual they produced.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub values: Vec<String>,
    pub residual: f64,
}

impl Witness {
    pub fn new(values: Vec<String>, residual: f64) -> Self {
        Self { values, residual }
    }

    // worse witnesses sort later
    fn rank(&self, other: &Witness) -> Ordering {
        self.residual
            .total_cmp(&other.residual)
            .then_with(|| other.values.cmp(&self.values))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckRecord {
    pub name: String,
    pub samples: SampleCount,
    pub max_residual: f64,
    /// The worst failing input, when the check failed.
    pub witness: Option<Witness>,
    pub pass: bool,
    pub note: Option<String>,
}

impl CheckRecord {
    pub fn passed(name: impl Into<String>, samples: SampleCount) -> Self {
        Self {
            name: name.into(),
            samples,
            max_residual: 0.0,
            witness: None,
            pass: true,
            note: None,
        }
    }

    pub fn failed(name: impl Into<String>, samples: SampleCount, witness: Vec<String>) -> Self {
        Self {
            name: name.into(),
            samples,
            max_residual: f64::INFINITY,
            witness: Some(Witness::new(witness, f64::INFINITY)),
            pass: false,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Combines two partial runs of the same check. Commutative and
    /// associative: residuals take the max, verdicts the logical AND, and
    /// the surviving witness is the one with the larger residual of its own
    /// (ties go to the lexicographically smaller one).
    pub fn merge(&self, other: &CheckRecord) -> CheckRecord {
        let samples = match (self.samples, other.samples) {
            (SampleCount::Exhaustive(a), SampleCount::Exhaustive(b)) => SampleCount::Exhaustive(a + b),
            (a, b) => SampleCount::Sampled(a.count() + b.count()),
        };
        let witness = match (&self.witness, &other.witness) {
            (None, None) => None,
            (Some(w), None) | (None, Some(w)) => Some(w.clone()),
            (Some(a), Some(b)) => Some(if a.rank(b) == Ordering::Less { b.clone() } else { a.clone() }),
        };
        let note = match (&self.note, &other.note) {
            (Some(a), Some(b)) => Some(if a <= b { a.clone() } else { b.clone() }),
            (a, b) => a.clone().or_else(|| b.clone()),
        };
        CheckRecord {
            name: self.name.clone(),
            samples,
            max_residual: max_residual(self.max_residual, other.max_residual),
            witness,
            pass: self.pass && other.pass,
            note,
        }
    }
}

fn max_residual(a: f64, b: f64) -> f64 {
    if a.total_cmp(&b) == Ordering::Less {
        b
    } else {
        a
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<CheckRecord>,
    pub seed: Option<u64>,
    pub tolerances: Option<ToleranceConfig>,
    /// Dyadic depth used by prenorm-based suites.
    pub depth: Option<u32>,
    /// Filled in by callers that time the run; excluded from determinism.
    pub wall_time_seconds: Option<f64>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            checks: Vec::new(),
            seed: None,
            tolerances: None,
            depth: None,
            wall_time_seconds: None,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn with_tolerances(mut self, tol: ToleranceConfig) -> Self {
        self.tolerances = Some(tol);
        self
    }

    pub fn with_depth(mut self, depth: u32) -> Self {
        self.depth = Some(depth);
        self
    }

    pub fn push(&mut self, check: CheckRecord) {
        self.checks.push(check);
    }

    /// Overall verdict: true iff every check passes.
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// Largest residual over all checks.
    pub fn max_residual(&self) -> f64 {
        self.checks
            .iter()
            .map(|c| c.max_residual)
            .fold(0.0, max_residual)
    }

    /// Merges a partial report over a disjoint share of the samples.
    /// Checks are matched by name; the result does not depend on which
    /// side is `self` when both carry the same checks.
    pub fn merge(&self, other: &VerificationReport) -> VerificationReport {
        let mut out = self.clone();
        for c in &other.checks {
            match out.checks.iter_mut().find(|x| x.name == c.name) {
                Some(slot) => *slot = slot.merge(c),
                None => out.checks.push(c.clone()),
            }
        }
        out.wall_time_seconds = match (self.wall_time_seconds, other.wall_time_seconds) {
            (Some(a), Some(b)) => Some(a + b),
            (a, b) => a.or(b),
        };
        out
    }

    /// Names of all checks, in suite order.
    pub fn check_names(&self) -> Vec<String> {
        self.checks.iter().map(|c| c.name.to_string()).collect()
    }
}

/// Streams residual observations into a [`CheckRecord`].
pub(crate) struct CheckAccumulator {
    name: String,
    count: u64,
    exhaustive: bool,
    max_residual: f64,
    worst_failure: Option<Witness>,
    pass: bool,
}

impl CheckAccumulator {
    pub(crate) fn new(name: impl Into<String>, exhaustive: bool) -> Self {
        Self {
            name: name.into(),
            count: 0,
            exhaustive,
            max_residual: 0.0,
            worst_failure: None,
            pass: true,
        }
    }

    /// Records one comparison. `witness` is only evaluated on failure.
    pub(crate) fn observe(&mut self, residual: f64, ok: bool, witness: impl FnOnce() -> Vec<String>) {
        self.count += 1;
        let residual = if residual.is_nan() { f64::INFINITY } else { residual };
        self.max_residual = max_residual(self.max_residual, residual);
        if !ok {
            self.pass = false;
            let replace = match &self.worst_failure {
                None => true,
                Some(w) => residual > w.residual,
            };
            if replace {
                self.worst_failure = Some(Witness::new(witness(), residual));
            }
        }
    }

    pub(crate) fn finish(self) -> CheckRecord {
        CheckRecord {
            name: self.name,
            samples: if self.exhaustive {
                SampleCount::Exhaustive(self.count)
            } else {
                SampleCount::Sampled(self.count)
            },
            max_residual: self.max_residual,
            witness: self.worst_failure,
            pass: self.pass,
            note: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn record(name: &str, n: u64, res: f64, pass: bool, w: Option<&str>) -> CheckRecord {
        CheckRecord {
            name: name.into(),
            samples: SampleCount::Sampled(n),
            max_residual: res,
            witness: w.map(|s| Witness::new(vec![s.into()], res)),
            pass,
            note: None,
        }
    }

    #[test]
    fn overall_pass_is_conjunction() {
        let mut r = VerificationReport::new("x");
        assert!(r.pass());
        r.push(record("a", 1, 0.0, true, None));
        assert!(r.pass());
        r.push(record("b", 1, 1.0, false, Some("w")));
        assert!(!r.pass());
        assert_eq!(r.failures().count(), 1);
        assert_eq!(r.max_residual(), 1.0);
    }

    #[test]
    fn accumulator_keeps_worst_failure() {
        let mut acc = CheckAccumulator::new("c", false);
        acc.observe(0.1, true, || vec!["never".into()]);
        acc.observe(0.5, false, || vec!["first".into()]);
        acc.observe(0.3, false, || vec!["smaller".into()]);
        acc.observe(f64::NAN, true, Vec::new);
        let r = acc.finish();
        assert!(!r.pass);
        assert_eq!(r.samples, SampleCount::Sampled(4));
        assert_eq!(r.witness.map(|w| w.values), Some(vec!["first".into()]));
        assert_eq!(r.max_residual, f64::INFINITY);
    }

    fn arb_record() -> impl Strategy<Value = CheckRecord> {
        (0u64..100, 0.0f64..1.0, 0.0f64..1.0, any::<bool>(), proptest::option::of("[a-c]{1,3}")).prop_map(
            |(n, res, extra, pass, w)| {
                // the record's max may come from a comparison that left no witness
                let mut r = record("c", n, res, pass, w.as_deref());
                r.max_residual = res.max(extra);
                r
            },
        )
    }

    proptest! {
        #[test]
        fn merge_is_order_independent(a in arb_record(), b in arb_record(), c in arb_record()) {
            prop_assert_eq!(a.merge(&b), b.merge(&a));
            prop_assert_eq!(a.merge(&b).merge(&c), a.merge(&b.merge(&c)));
            let m = a.merge(&b);
            prop_assert_eq!(m.pass, a.pass && b.pass);
            prop_assert_eq!(m.samples.count(), a.samples.count() + b.samples.count());
        }
    }
}
