use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::table::CayleyTable;
use crate::error::GyroError;
use crate::report::{CheckRecord, SampleCount, VerificationReport, Witness};
use crate::tolerance::ToleranceConfig;

pub const CHECKS: [&str; 6] = [
    "G1_identity",
    "G2_inverse",
    "left_translations_bijective",
    "G3_gyr_automorphism",
    "G3_left_gyroassociativity",
    "G4_loop_property",
];

/// The unique two-sided inverse of every element, or the first element
/// without one.
pub(crate) fn inverses(t: &CayleyTable, e: usize) -> Result<Vec<usize>, usize> {
    let n = t.order();
    let mut inv = vec![0; n];
    for (a, slot) in inv.iter_mut().enumerate() {
        let mut left = (0..n).filter(|&b| t.op(b, a) == e);
        let mut right = (0..n).filter(|&b| t.op(a, b) == e);
        match (left.next(), left.next(), right.next(), right.next()) {
            (Some(l), None, Some(r), None) if l == r => *slot = l,
            _ => return Err(a),
        }
    }
    Ok(inv)
}

/// `(a, b, c)` with `a ⊕ b = a ⊕ c`, `b ≠ c`, if some left translation is
/// not a bijection.
pub(crate) fn non_bijective_row(t: &CayleyTable) -> Option<[usize; 3]> {
    let n = t.order();
    for a in 0..n {
        let mut seen = vec![None; n];
        for b in 0..n {
            let v = t.op(a, b);
            if let Some(c) = seen[v] {
                return Some([a, c, b]);
            }
            seen[v] = Some(b);
        }
    }
    None
}

/// `gyr[x, y](z) = ⊖(x⊕y) ⊕ (x ⊕ (y ⊕ z))`.
#[inline]
pub(crate) fn derived_gyr(t: &CayleyTable, inv: &[usize], x: usize, y: usize, z: usize) -> usize {
    t.op(inv[t.op(x, y)], t.op(x, t.op(y, z)))
}

pub(crate) struct Failure {
    pub check: &'static str,
    pub witness: Vec<usize>,
}

struct Runner<'a> {
    t: &'a CayleyTable,
    report: VerificationReport,
    first: Option<Failure>,
}

impl Runner<'_> {
    fn record(&mut self, check: &'static str, count: u64, failure: Option<Vec<usize>>, note: Option<String>) {
        let rec = match failure {
            None => CheckRecord::passed(check, SampleCount::Exhaustive(count)),
            Some(w) => {
                let labels = w.iter().map(|&i| self.t.labels()[i].clone()).collect();
                if self.first.is_none() {
                    self.first = Some(Failure { check, witness: w });
                }
                CheckRecord {
                    max_residual: 1.0,
                    witness: Some(Witness::new(labels, 1.0)),
                    pass: false,
                    ..CheckRecord::passed(check, SampleCount::Exhaustive(count))
                }
            }
        };
        self.report.push(match note {
            Some(n) => rec.with_note(n),
            None => rec,
        });
    }

    fn skip(&mut self, from: usize, reason: &str) {
        for check in &CHECKS[from..] {
            let rec = CheckRecord {
                max_residual: f64::INFINITY,
                pass: false,
                ..CheckRecord::passed(*check, SampleCount::Exhaustive(0))
            };
            self.report.push(rec.with_note(format!("not evaluated: {reason}")));
        }
    }
}

pub(crate) fn run_validation(t: &CayleyTable) -> (VerificationReport, Option<Failure>) {
    let n = t.order();
    let n64 = n as u64;
    let mut r = Runner {
        t,
        report: VerificationReport::new("table-validate").with_tolerances(ToleranceConfig::EXACT),
        first: None,
    };

    let Some(e) = t.identity() else {
        // the candidate that acts as identity on the most elements, and an element it moves
        let score = |c: usize| (0..n).filter(|&a| t.op(c, a) == a && t.op(a, c) == a).count();
        let cand = (0..n).max_by_key(|&c| (score(c), core::cmp::Reverse(c))).unwrap_or(0);
        let moved = (0..n).find(|&a| t.op(cand, a) != a || t.op(a, cand) != a).unwrap_or(0);
        r.record(CHECKS[0], n64, Some(vec![cand, moved]), None);
        r.skip(1, "no two-sided identity");
        return (r.report, r.first);
    };
    r.record(CHECKS[0], n64, None, Some(format!("identity = {}", t.labels()[e])));

    let inv = match inverses(t, e) {
        Ok(inv) => {
            r.record(CHECKS[1], n64, None, None);
            inv
        }
        Err(a) => {
            r.record(CHECKS[1], n64, Some(vec![a]), None);
            r.skip(2, "inverses are not unique and two-sided");
            return (r.report, r.first);
        }
    };

    if let Some(w) = non_bijective_row(t) {
        r.record(CHECKS[2], n64, Some(w.to_vec()), None);
        r.skip(3, "a left translation is not a bijection");
        return (r.report, r.first);
    }
    r.record(CHECKS[2], n64, None, None);

    let perms: Vec<Vec<usize>> = (0..n * n)
        .map(|k| (0..n).map(|z| derived_gyr(t, &inv, k / n, k % n, z)).collect())
        .collect();
    let perm = |x: usize, y: usize| &perms[x * n + y];

    let mut auto = None;
    'auto: for x in 0..n {
        for y in 0..n {
            let p = perm(x, y);
            let mut hit = vec![false; n];
            for (z, &v) in p.iter().enumerate() {
                if core::mem::replace(&mut hit[v], true) {
                    let z0 = p.iter().position(|&w| w == v).unwrap_or(0);
                    auto = Some(vec![x, y, z0, z]);
                    break 'auto;
                }
            }
            for a in 0..n {
                for b in 0..n {
                    if p[t.op(a, b)] != t.op(p[a], p[b]) {
                        auto = Some(vec![x, y, a, b]);
                        break 'auto;
                    }
                }
            }
        }
    }
    r.record(CHECKS[3], n64.pow(4), auto, None);

    let mut assoc = None;
    'assoc: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if t.op(x, t.op(y, z)) != t.op(t.op(x, y), perm(x, y)[z]) {
                    assoc = Some(vec![x, y, z]);
                    break 'assoc;
                }
            }
        }
    }
    r.record(CHECKS[4], n64.pow(3), assoc, None);

    let mut lp = None;
    'lp: for x in 0..n {
        for y in 0..n {
            let (a, b) = (perm(t.op(x, y), y), perm(x, y));
            if let Some(z) = (0..n).find(|&z| a[z] != b[z]) {
                lp = Some(vec![x, y, z]);
                break 'lp;
            }
        }
    }
    r.record(CHECKS[5], n64.pow(3), lp, None);
    (r.report, r.first)
}

/// Checks a table against the gyrogroup axioms, exhaustively and exactly.
///
/// Checks run in the order of [`CHECKS`]; when the identity, the inverses
/// or the left translations fail, later checks are reported as not
/// evaluated (and failed).
pub fn validate_table(t: &CayleyTable) -> VerificationReport {
    run_validation(t).0
}

/// `Ok` when `t` is a gyrogroup, else the first failed axiom with its
/// witness indices.
pub fn require_gyrogroup(t: &CayleyTable) -> Result<(), GyroError> {
    match run_validation(t).1 {
        None => Ok(()),
        Some(f) => Err(GyroError::Axiom {
            axiom: f.check.into(),
            witness: f.witness,
        }),
    }
}
