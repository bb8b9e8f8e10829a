use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use super::chain::NeighborhoodChain;
use super::dyadic::{pseudometric_d, Prenorm};
use crate::error::GyroError;
use crate::model::{gyr, GyrogroupModel};
use crate::report::VerificationReport;
use crate::sampling::Sampler;
use crate::verify::{compare, SuiteConfig, TupleDriver};

const SUITE: &str = "metric";

type Elem<C> = <<C as NeighborhoodChain>::Model as GyrogroupModel>::Element;

/// An oracle for `ϱ(π(x), π(y))`.
pub type RhoOracle<'a, E> = Box<dyn Fn(&E, &E) -> f64 + 'a>;

/// The left coset space `G/P`, `P = ∩ U_n`, with
/// `ϱ(π(x), π(y)) = N(⊖x ⊕ y) + N(⊖y ⊕ x)`.
///
/// The coset-invariance argument for `ϱ` needs `P` to be an
/// L-subgyrogroup, which [`QuotientMetricSpace::new`] enforces for chains
/// that can check it.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientMetricSpace<C> {
    prenorm: Prenorm<C>,
}

impl<C: NeighborhoodChain> QuotientMetricSpace<C> {
    pub fn new(prenorm: Prenorm<C>) -> Result<Self, GyroError> {
        prenorm.chain().check_quotient()?;
        Ok(Self { prenorm })
    }

    pub fn prenorm(&self) -> &Prenorm<C> {
        &self.prenorm
    }

    pub fn model(&self) -> &C::Model {
        self.prenorm.chain().model()
    }

    /// `ϱ(π(x), π(y))`.
    pub fn rho(&self, x: &Elem<C>, y: &Elem<C>) -> f64 {
        let m = self.model();
        self.prenorm.eval(&m.oplus(&m.neg(x), y)) + self.prenorm.eval(&m.oplus(&m.neg(y), x))
    }

    /// `y ∈ x ⊕ P`.
    pub fn same_coset(&self, x: &Elem<C>, y: &Elem<C>) -> bool {
        let m = self.model();
        self.prenorm.chain().in_intersection(&m.oplus(&m.neg(x), y))
    }

    /// Slack granted to the metric inequalities: the absolute tolerance plus
    /// four grid steps (two prenorm evaluations on each side).
    pub fn slack(&self, abs_tol: f64) -> f64 {
        abs_tol + 4.0 * self.prenorm.resolution()
    }
}

/// `ϱ(π(x), π(y))` for a quotient space.
pub fn quotient_metric_rho<C: NeighborhoodChain>(space: &QuotientMetricSpace<C>, x: &Elem<C>, y: &Elem<C>) -> f64 {
    space.rho(x, y)
}

fn describe<M: GyrogroupModel>(m: &M, xs: &[&M::Element]) -> Vec<String> {
    xs.iter().map(|x| m.describe(x)).collect()
}

/// Checks that `ϱ` is a metric on `G/P` and that `d` is a coset-invariant
/// pseudometric, on sampled (or, for finite carriers, all) tuples:
///
/// * `rho_self_zero`, `rho_symmetry`, `rho_triangle`;
/// * `rho_zero_iff_same_coset`: `ϱ` vanishes (within the slack) exactly on
///   pairs in one coset;
/// * `gyro_triangle_identity`: `⊖x⊕y = (⊖x⊕z) ⊕ gyr[⊖x, z](⊖z⊕y)`, the
///   identity behind the triangle inequality, within `cfg.tol`;
/// * `d_triangle`, `d_coset_invariance`: `d(x⊕p, y⊕q) = d(x, y)` for
///   `p, q ∈ P`;
/// * `oracle_agreement` when an oracle for `ϱ` is given.
///
/// Inequalities and the oracle are accepted within
/// [`QuotientMetricSpace::slack`].
pub fn check_metric<C, S>(
    space: &QuotientMetricSpace<C>,
    sampler: &mut S,
    cfg: &SuiteConfig,
    oracle: Option<RhoOracle<'_, Elem<C>>>,
) -> Result<VerificationReport, GyroError>
where
    C: NeighborhoodChain,
    S: Sampler<C::Model>,
{
    cfg.validate()?;
    let model = space.model();
    let n = space.prenorm();
    let slack = space.slack(cfg.tol.abs_tol);
    let p_elems = n.chain().intersection_elements();
    let mut report = VerificationReport::new(SUITE)
        .with_seed(cfg.seed)
        .with_tolerances(cfg.tol)
        .with_depth(n.depth());
    let mut d = TupleDriver::new(model, sampler, *cfg, SUITE);

    report.push(d.run::<1>("rho_self_zero", 1, |m, [x], acc| {
        let r = space.rho(x, x);
        acc.observe(r, r <= slack, || describe(m, &[x]));
    })?);
    report.push(d.run::<2>("rho_symmetry", 2, |m, [x, y], acc| {
        let r = libm::fabs(space.rho(x, y) - space.rho(y, x));
        acc.observe(r, r <= slack, || describe(m, &[x, y]));
    })?);
    report.push(d.run::<3>("rho_triangle", 3, |m, [x, y, z], acc| {
        let r = (space.rho(x, z) - space.rho(x, y) - space.rho(y, z)).max(0.0);
        acc.observe(r, r <= slack, || describe(m, &[x, y, z]));
    })?);
    report.push(d.run::<2>("rho_zero_iff_same_coset", 2, |m, [x, y], acc| {
        let rho = space.rho(x, y);
        let ok = (rho <= slack) == space.same_coset(x, y);
        acc.observe(if ok { 0.0 } else { 1.0 }, ok, || describe(m, &[x, y]));
    })?);
    let tol = d.tol();
    report.push(d.run::<3>("gyro_triangle_identity", 3, |m, [x, y, z], acc| {
        let nx = m.neg(x);
        let lhs = m.oplus(&nx, y);
        let rhs = m.oplus(&m.oplus(&nx, z), &gyr(m, &nx, z, &m.oplus(&m.neg(z), y)));
        let (r, ok) = compare(m, &tol, &lhs, &rhs);
        acc.observe(r, ok, || describe(m, &[x, y, z]));
    })?);
    report.push(d.run::<3>("d_triangle", 3, |m, [x, y, z], acc| {
        let r = (pseudometric_d(n, x, z) - pseudometric_d(n, x, y) - pseudometric_d(n, y, z)).max(0.0);
        acc.observe(r, r <= slack, || describe(m, &[x, y, z]));
    })?);
    let mut k = 0usize;
    report.push(d.run::<2>("d_coset_invariance", 2, |m, [x, y], acc| {
        let base = pseudometric_d(n, x, y);
        for p in &p_elems {
            let q = &p_elems[k % p_elems.len()];
            k += 1;
            let r = libm::fabs(pseudometric_d(n, &m.oplus(x, p), &m.oplus(y, q)) - base);
            acc.observe(r, r <= slack, || describe(m, &[x, y, p, q]));
        }
    })?);
    if let Some(oracle) = oracle {
        report.push(d.run::<2>("oracle_agreement", 2, |m, [x, y], acc| {
            let r = libm::fabs(space.rho(x, y) - oracle(x, y));
            acc.observe(r, r <= slack, || describe(m, &[x, y]));
        })?);
    }
    Ok(report)
}
