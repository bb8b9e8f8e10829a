use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::chain::NeighborhoodChain;
use super::dyadic::Prenorm;
use crate::error::GyroError;
use crate::model::{gyr, GyrogroupModel};
use crate::report::{CheckAccumulator, VerificationReport};
use crate::sampling::{stream, Sampler};
use crate::verify::{SuiteConfig, TupleDriver};

const SUITE: &str = "prenorm";

type Elem<C> = <<C as NeighborhoodChain>::Model as GyrogroupModel>::Element;

fn describe<M: GyrogroupModel>(m: &M, xs: &[&M::Element]) -> Vec<String> {
    xs.iter().map(|x| m.describe(x)).collect()
}

/// Draws or enumerates the points for one sandwich level.
fn level_points<C: NeighborhoodChain>(chain: &C, level: usize, cfg: &SuiteConfig, check: &str) -> (Vec<Elem<C>>, bool) {
    if let Some(all) = chain.model().elements() {
        return (all, true);
    }
    let mut rng = stream(cfg.seed, SUITE, check);
    ((0..cfg.n_samples).map(|_| chain.probe(level, &mut rng)).collect(), false)
}

/// Checks the prenorm `N` on sampled (or, for finite carriers, all) points:
///
/// * `identity_zero`: `N(0) = 0`;
/// * `symmetry`: `N(⊖x) = N(x)`;
/// * `gyration_invariance`: `N(gyr[x, y](z)) = N(z)`;
/// * `subadditivity`: `N(x ⊕ y) ≤ N(x) + N(y)`, up to one grid step;
/// * `sandwich_level_n` for `n ≤ sandwich_levels`:
///   `{N < 2^−n} ⊆ U_n ⊆ {N ≤ 2·2^−n}`.
///
/// Equalities are accepted within the absolute tolerance.
pub fn check_prenorm_properties<C, S>(
    prenorm: &Prenorm<C>,
    sampler: &mut S,
    cfg: &SuiteConfig,
    sandwich_levels: usize,
) -> Result<VerificationReport, GyroError>
where
    C: NeighborhoodChain,
    S: Sampler<C::Model>,
{
    cfg.validate()?;
    let chain = prenorm.chain();
    let model = chain.model();
    let abs = cfg.tol.abs_tol;
    let step = prenorm.resolution();
    let mut report = VerificationReport::new(SUITE)
        .with_seed(cfg.seed)
        .with_tolerances(cfg.tol)
        .with_depth(prenorm.depth());

    let e = model.identity();
    let n0 = prenorm.eval(&e);
    let mut id = CheckAccumulator::new("identity_zero", true);
    id.observe(n0, n0 == 0.0, || describe(model, &[&e]));
    report.push(id.finish());

    let mut d = TupleDriver::new(model, sampler, *cfg, SUITE);
    report.push(d.run::<1>("symmetry", 1, |m, [x], acc| {
        let r = libm::fabs(prenorm.eval(&m.neg(x)) - prenorm.eval(x));
        acc.observe(r, r <= abs, || describe(m, &[x]));
    })?);
    report.push(d.run::<3>("gyration_invariance", 2, |m, [x, y, z], acc| {
        let r = libm::fabs(prenorm.eval(&gyr(m, x, y, z)) - prenorm.eval(z));
        acc.observe(r, r <= abs, || describe(m, &[x, y, z]));
    })?);
    report.push(d.run::<2>("subadditivity", 2, |m, [x, y], acc| {
        let excess = (prenorm.eval(&m.oplus(x, y)) - prenorm.eval(x) - prenorm.eval(y)).max(0.0);
        acc.observe(excess, excess <= step + abs, || describe(m, &[x, y]));
    })?);

    for level in 0..=sandwich_levels {
        let name = format!("sandwich_level_{level}");
        let (points, exhaustive) = level_points(chain, level, cfg, &name);
        let lower = libm::ldexp(1.0, -(level as i32));
        let mut acc = CheckAccumulator::new(name.as_str(), exhaustive);
        for x in &points {
            let n = prenorm.eval(x);
            let inside = chain.contains(level, x);
            let ok = (n >= lower || inside) && (!inside || n <= 2.0 * lower);
            acc.observe(if ok { 0.0 } else { 1.0 }, ok, || {
                let mut w = describe(model, &[x]);
                w.push(format!("N = {n:e}"));
                w
            });
        }
        report.push(acc.finish());
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::einstein::EinsteinModel;
    use crate::finite::{CayleyTable, FiniteGyrogroup};
    use crate::mobius::MobiusModel;
    use crate::prenorm::{build_dyadic, FiniteChain, RadialChain};
    use crate::sampling::{RapiditySampler, UniformElementSampler};
    use crate::tolerance::ToleranceConfig;

    fn cfg(n: u64) -> SuiteConfig {
        SuiteConfig::new(n, ToleranceConfig::uniform(1e-10), 11)
    }

    #[test]
    fn mobius_quartering_chain() {
        let c = RadialChain::new(MobiusModel::default(), 1.0, 0.25, 24).unwrap();
        let p = Prenorm::new(build_dyadic(c, 24).unwrap());
        let r = check_prenorm_properties(&p, &mut RapiditySampler::interior(1.5), &cfg(2_000), 8).unwrap();
        assert!(r.pass(), "{r:?}");
        assert_eq!(r.depth, Some(24));
        assert_eq!(r.checks.len(), 4 + 9);
    }

    #[test]
    fn einstein_halving_chain() {
        let c = RadialChain::new(EinsteinModel::default(), 2.0, 0.5, 24).unwrap();
        let p = Prenorm::new(build_dyadic(c, 24).unwrap());
        let r = check_prenorm_properties(&p, &mut RapiditySampler::interior(1.5), &cfg(1_000), 4).unwrap();
        assert!(r.pass(), "{r:?}");
    }

    #[test]
    fn finite_chain_is_exhaustive() {
        let g = FiniteGyrogroup::new(CayleyTable::cyclic(6).unwrap()).unwrap();
        let p = Prenorm::new(build_dyadic(FiniteChain::constant(g, &[0, 2, 4]).unwrap(), 24).unwrap());
        let r = check_prenorm_properties(&p, &mut UniformElementSampler, &cfg(10), 3).unwrap();
        assert!(r.pass(), "{r:?}");
        assert!(r.checks.iter().all(|c| c.samples.is_exhaustive()));
    }
}
