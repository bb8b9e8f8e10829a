//! Axiom and identity suites shared by every model.
//!
//! Continuous models are checked on seeded samples; models that can list
//! their elements are checked exhaustively and exactly.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::GyroError;
use crate::model::{gyr, gyr_derived, CarrierKind, GyrogroupModel};
use crate::report::{CheckAccumulator, CheckRecord, SampleCount, VerificationReport, Witness};
use crate::sampling::{stream, Sampler};
use crate::tolerance::ToleranceConfig;

/// Parameters shared by the randomized suites.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteConfig {
    pub n_samples: u64,
    pub tol: ToleranceConfig,
    pub seed: u64,
    /// Extra witnesses `z` per sampled pair `(x, y)` when two gyrations are
    /// compared pointwise.
    pub witnesses_per_pair: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            n_samples: 10_000,
            tol: ToleranceConfig::default(),
            seed: 42,
            witnesses_per_pair: 3,
        }
    }
}

impl SuiteConfig {
    pub fn new(n_samples: u64, tol: ToleranceConfig, seed: u64) -> Self {
        Self {
            n_samples,
            tol,
            seed,
            ..Self::default()
        }
    }

    pub(crate) fn validate(&self) -> Result<(), GyroError> {
        self.tol.validate()?;
        if self.n_samples == 0 {
            return Err(GyroError::Precondition("n_samples must be at least 1".into()));
        }
        if self.witnesses_per_pair == 0 {
            return Err(GyroError::Precondition("witnesses_per_pair must be at least 1".into()));
        }
        Ok(())
    }
}

/// Residual of `lhs ≈ rhs`: the distance scaled by `max(1, magnitude)`, and
/// whether it is inside `tol`.
pub fn compare<M: GyrogroupModel + ?Sized>(
    model: &M,
    tol: &ToleranceConfig,
    lhs: &M::Element,
    rhs: &M::Element,
) -> (f64, bool) {
    let d = model.distance(lhs, rhs);
    let mag = model.magnitude(lhs).max(model.magnitude(rhs));
    if !mag.is_finite() {
        return (f64::INFINITY, false);
    }
    (d / mag.max(1.0), tol.accepts(d, mag))
}

/// [`compare`] with the magnitude raised to at least `scale`, for values
/// computed through intermediates larger than either side.
pub fn compare_scaled<M: GyrogroupModel + ?Sized>(
    model: &M,
    tol: &ToleranceConfig,
    lhs: &M::Element,
    rhs: &M::Element,
    scale: f64,
) -> (f64, bool) {
    let d = model.distance(lhs, rhs);
    let mag = model.magnitude(lhs).max(model.magnitude(rhs)).max(scale);
    if !mag.is_finite() {
        return (f64::INFINITY, false);
    }
    (d / mag.max(1.0), tol.accepts(d, mag))
}

/// Drives one check over either every tuple of a finite carrier or a seeded
/// sample of tuples.
pub(crate) struct TupleDriver<'a, M: GyrogroupModel + ?Sized, S> {
    pub model: &'a M,
    pub sampler: &'a mut S,
    pub cfg: SuiteConfig,
    pub suite: &'a str,
    pub elements: Option<Vec<M::Element>>,
}

impl<'a, M, S> TupleDriver<'a, M, S>
where
    M: GyrogroupModel + ?Sized,
    S: Sampler<M>,
{
    pub(crate) fn new(model: &'a M, sampler: &'a mut S, cfg: SuiteConfig, suite: &'a str) -> Self {
        let elements = match model.carrier_kind() {
            CarrierKind::Finite => model.elements(),
            CarrierKind::Continuous => None,
        };
        Self {
            model,
            sampler,
            cfg,
            suite,
            elements,
        }
    }

    pub(crate) fn tol(&self) -> ToleranceConfig {
        if self.elements.is_some() {
            ToleranceConfig::EXACT
        } else {
            self.cfg.tol
        }
    }

    pub(crate) fn is_exhaustive(&self) -> bool {
        self.elements.is_some()
    }

    /// Runs `body` on `K`-tuples. In sampled mode the first `fixed` entries
    /// are drawn once per sample and the rest are redrawn
    /// `witnesses_per_pair` times.
    pub(crate) fn run<const K: usize>(
        &mut self,
        check: &str,
        fixed: usize,
        mut body: impl FnMut(&M, &[M::Element; K], &mut CheckAccumulator),
    ) -> Result<CheckRecord, GyroError> {
        let model = self.model;
        if let Some(all) = &self.elements {
            let mut acc = CheckAccumulator::new(check, true);
            let n = all.len();
            let total = n.checked_pow(K as u32).unwrap_or(usize::MAX);
            let mut idx = [0usize; K];
            for _ in 0..total {
                let tuple: [M::Element; K] = core::array::from_fn(|i| all[idx[i]].clone());
                body(model, &tuple, &mut acc);
                for d in (0..K).rev() {
                    idx[d] += 1;
                    if idx[d] < n {
                        break;
                    }
                    idx[d] = 0;
                }
            }
            return Ok(acc.finish());
        }
        let mut rng = stream(self.cfg.seed, self.suite, check);
        let mut acc = CheckAccumulator::new(check, false);
        let reps = if fixed < K { self.cfg.witnesses_per_pair } else { 1 };
        for _ in 0..self.cfg.n_samples {
            let mut head = Vec::with_capacity(fixed);
            for _ in 0..fixed {
                head.push(self.sampler.sample(model, &mut rng)?);
            }
            for _ in 0..reps {
                let mut tuple: Vec<M::Element> = head.clone();
                for _ in fixed..K {
                    tuple.push(self.sampler.sample(model, &mut rng)?);
                }
                let arr: [M::Element; K] = match tuple.try_into() {
                    Ok(a) => a,
                    Err(_) => unreachable!("tuple has exactly K entries"),
                };
                body(model, &arr, &mut acc);
            }
        }
        Ok(acc.finish())
    }
}

fn describe_all<M: GyrogroupModel + ?Sized>(model: &M, xs: &[M::Element]) -> Vec<String> {
    xs.iter().map(|x| model.describe(x)).collect()
}

/// Checks the gyrogroup axioms: two-sided identity (G1), two-sided inverse
/// (G2), left gyroassociativity and the automorphism property of gyrations
/// (G3) and the loop property (G4).
pub fn check_axioms<M, S>(model: &M, sampler: &mut S, cfg: &SuiteConfig) -> Result<VerificationReport, GyroError>
where
    M: GyrogroupModel + ?Sized,
    S: Sampler<M>,
{
    cfg.validate()?;
    let mut d = TupleDriver::new(model, sampler, *cfg, "axioms");
    let tol = d.tol();
    let mut report = VerificationReport::new("axioms").with_seed(cfg.seed).with_tolerances(tol);
    let e = model.identity();

    report.push(d.run::<1>("G1_identity", 1, |m, [a], acc| {
        let (r1, ok1) = compare(m, &tol, &m.oplus(&e, a), a);
        let (r2, ok2) = compare(m, &tol, &m.oplus(a, &e), a);
        acc.observe(r1.max(r2), ok1 && ok2, || describe_all(m, core::slice::from_ref(a)));
    })?);

    report.push(d.run::<1>("G2_inverse", 1, |m, [a], acc| {
        let na = m.neg(a);
        let (r1, ok1) = compare(m, &tol, &m.oplus(&na, a), &e);
        let (r2, ok2) = compare(m, &tol, &m.oplus(a, &na), &e);
        acc.observe(r1.max(r2), ok1 && ok2, || describe_all(m, core::slice::from_ref(a)));
    })?);

    report.push(d.run::<3>("G3_left_gyroassociativity", 3, |m, t, acc| {
        let [x, y, z] = t;
        let lhs = m.oplus(x, &m.oplus(y, z));
        let rhs = m.oplus(&m.oplus(x, y), &gyr(m, x, y, z));
        let (r, ok) = compare(m, &tol, &lhs, &rhs);
        acc.observe(r, ok, || describe_all(m, t));
    })?);

    let exhaustive = d.is_exhaustive();
    let mut auto = d.run::<4>("G3_gyr_automorphism", 2, |m, t, acc| {
        let [x, y, a, b] = t;
        let lhs = gyr(m, x, y, &m.oplus(a, b));
        let rhs = m.oplus(&gyr(m, x, y, a), &gyr(m, x, y, b));
        let (r, ok) = compare(m, &tol, &lhs, &rhs);
        acc.observe(r, ok, || describe_all(m, t));
    })?;
    if exhaustive {
        // an automorphism must also be a bijection of the finite carrier
        if let Some(w) = non_bijective_gyration(model) {
            auto.pass = false;
            auto.max_residual = f64::INFINITY;
            auto.witness = Some(Witness::new(describe_all(model, &w), f64::INFINITY));
            auto.note = Some("gyration is not a bijection".into());
        }
    }
    report.push(auto);

    report.push(d.run::<3>("G4_loop_property", 2, |m, t, acc| {
        let [x, y, z] = t;
        let lhs = gyr(m, &m.oplus(x, y), y, z);
        let rhs = gyr(m, x, y, z);
        let (r, ok) = compare(m, &tol, &lhs, &rhs);
        acc.observe(r, ok, || describe_all(m, t));
    })?);

    Ok(report)
}

fn non_bijective_gyration<M: GyrogroupModel + ?Sized>(model: &M) -> Option<Vec<M::Element>> {
    let all = model.elements()?;
    for x in &all {
        for y in &all {
            let mut images: Vec<M::Element> = Vec::with_capacity(all.len());
            for z in &all {
                let g = gyr(model, x, y, z);
                if images.contains(&g) {
                    return Some(alloc::vec![x.clone(), y.clone()]);
                }
                images.push(g);
            }
        }
    }
    None
}

/// Checks left cancellation, the two right-cancellation forms, agreement of a
/// closed-form gyration with the derived one (judged at the magnitude of the
/// derived form's largest intermediate), and the gyro-triangle identity
/// `⊖x⊕y = (⊖x⊕z) ⊕ gyr[⊖x, z](⊖z⊕y)`.
pub fn check_identities<M, S>(model: &M, sampler: &mut S, cfg: &SuiteConfig) -> Result<VerificationReport, GyroError>
where
    M: GyrogroupModel + ?Sized,
    S: Sampler<M>,
{
    cfg.validate()?;
    let mut d = TupleDriver::new(model, sampler, *cfg, "identities");
    let tol = d.tol();
    let mut report = VerificationReport::new("identities")
        .with_seed(cfg.seed)
        .with_tolerances(tol);

    report.push(d.run::<2>("L1_left_cancellation", 2, |m, t, acc| {
        let [x, y] = t;
        let lhs = m.oplus(&m.neg(x), &m.oplus(x, y));
        let (r, ok) = compare(m, &tol, &lhs, y);
        acc.observe(r, ok, || describe_all(m, t));
    })?);

    report.push(d.run::<2>("L2_right_cancellation", 2, |m, t, acc| {
        let [x, y] = t;
        let ny = m.neg(y);
        let lhs = m.oplus(&m.oplus(x, &ny), &gyr(m, x, &ny, y));
        let (r, ok) = compare(m, &tol, &lhs, x);
        acc.observe(r, ok, || describe_all(m, t));
    })?);

    report.push(d.run::<2>("L3_gyr_right_cancellation", 2, |m, t, acc| {
        let [x, y] = t;
        let lhs = m.oplus(&m.oplus(x, &gyr(m, x, y, &m.neg(y))), y);
        let (r, ok) = compare(m, &tol, &lhs, x);
        acc.observe(r, ok, || describe_all(m, t));
    })?);

    if model.has_closed_form_gyr() {
        report.push(d.run::<3>("L4_gyr_closed_form", 2, |m, t, acc| {
            let [x, y, z] = t;
            match m.gyr_closed_form(x, y, z) {
                Some(closed) => {
                    // ⊖(x⊕y) ⊕ (x⊕(y⊕z)) carries the rounding of its largest intermediate
                    let yz = m.oplus(y, z);
                    let scale = [m.oplus(x, y), m.oplus(x, &yz), yz]
                        .iter()
                        .map(|w| m.magnitude(w))
                        .fold(0.0, f64::max);
                    let (r, ok) = compare_scaled(m, &tol, &closed, &gyr_derived(m, x, y, z), scale);
                    acc.observe(r, ok, || describe_all(m, t));
                }
                None => acc.observe(f64::INFINITY, false, || describe_all(m, t)),
            }
        })?);
    } else {
        let samples = if d.is_exhaustive() {
            SampleCount::Exhaustive(0)
        } else {
            SampleCount::Sampled(0)
        };
        report.push(
            CheckRecord::passed("L4_gyr_closed_form", samples)
                .with_note("no closed-form gyration; the derived gyration is normative"),
        );
    }

    report.push(d.run::<3>("gyro_triangle", 3, |m, t, acc| {
        let [x, y, z] = t;
        let nx = m.neg(x);
        let lhs = m.oplus(&nx, y);
        let nxz = m.oplus(&nx, z);
        let rhs = m.oplus(&nxz, &gyr(m, &nx, z, &m.oplus(&m.neg(z), y)));
        let (r, ok) = compare(m, &tol, &lhs, &rhs);
        acc.observe(r, ok, || describe_all(m, t));
    })?);

    Ok(report)
}
