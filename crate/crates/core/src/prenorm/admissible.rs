use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::chain::{ChainKind, NeighborhoodChain};
use crate::error::GyroError;
use crate::model::GyrogroupModel;
use crate::report::{CheckAccumulator, VerificationReport};
use crate::sampling::stream;
use crate::verify::SuiteConfig;

const SUITE: &str = "admissible";

type Elem<C> = <<C as NeighborhoodChain>::Model as GyrogroupModel>::Element;

fn describe<M: GyrogroupModel>(m: &M, xs: &[&M::Element]) -> Vec<String> {
    xs.iter().map(|x| m.describe(x)).collect()
}

fn triples<C: NeighborhoodChain>(chain: &C, level: usize, cfg: &SuiteConfig) -> (Vec<[Elem<C>; 3]>, bool) {
    if let Some(m) = chain.members(level + 1) {
        let mut out = Vec::with_capacity(m.len().pow(3));
        for u in &m {
            for v in &m {
                for w in &m {
                    out.push([u.clone(), v.clone(), w.clone()]);
                }
            }
        }
        return (out, true);
    }
    let mut out = chain.extremal_triples(level + 1);
    let mut rng = stream(cfg.seed, SUITE, &format!("triple_level_{level}"));
    for _ in 0..cfg.n_samples {
        out.push(core::array::from_fn(|_| chain.sample_member(level + 1, &mut rng)));
    }
    (out, false)
}

/// Checks a chain for the triple condition
/// `u ⊕ (v ⊕ w) ∈ U_n` for `u, v, w ∈ U_{n+1}` at levels `0..levels`:
///
/// * `triple_level_n` on extremal and sampled triples, or on all triples of
///   a finite level; the residual is how far the sum lands outside `U_n`
///   (in rapidity for radial chains);
/// * `analytic_triple_condition` when the chain's parameters decide it;
/// * `intersection`: the identity lies in `∩ U_n` and, when the chain can
///   list it, `∩ U_n` is a subgyrogroup.
pub fn validate_admissible_chain<C>(chain: &C, cfg: &SuiteConfig, levels: usize) -> Result<VerificationReport, GyroError>
where
    C: NeighborhoodChain,
{
    cfg.validate()?;
    let model = chain.model();
    let mut report = VerificationReport::new(SUITE).with_seed(cfg.seed).with_tolerances(cfg.tol);

    for level in 0..levels {
        let (ts, exhaustive) = triples(chain, level, cfg);
        let mut acc = CheckAccumulator::new(format!("triple_level_{level}"), exhaustive);
        for [u, v, w] in &ts {
            let s = model.oplus(u, &model.oplus(v, w));
            let ok = chain.contains(level, &s);
            acc.observe(chain.level_excess(level, &s), ok, || describe(model, &[u, v, w, &s]));
        }
        report.push(acc.finish());
    }

    let analytic: Vec<(usize, bool)> = (0..levels).filter_map(|l| chain.triple_condition(l).map(|ok| (l, ok))).collect();
    if !analytic.is_empty() {
        let mut acc = CheckAccumulator::new("analytic_triple_condition", true);
        for (l, ok) in analytic {
            acc.observe(if ok { 0.0 } else { 1.0 }, ok, || alloc::vec![format!("level {l}")]);
        }
        report.push(acc.finish());
    }

    let e = model.identity();
    let mut acc = CheckAccumulator::new("intersection", true);
    let has_e = chain.in_intersection(&e);
    acc.observe(if has_e { 0.0 } else { 1.0 }, has_e, || describe(model, &[&e]));
    let mut rec = match chain.intersection_is_subgyrogroup() {
        Some(ok) => {
            let p = chain.intersection_elements();
            acc.observe(if ok { 0.0 } else { 1.0 }, ok, || describe_all(model, &p));
            let listed = describe_all(model, &p).join(", ");
            acc.finish().with_note(format!("P = {{{listed}}}"))
        }
        None => acc.finish(),
    };
    if rec.note.is_none() && chain.kind() == ChainKind::RadialRapidity {
        rec = rec.with_note("P = {0}");
    }
    report.push(rec);
    Ok(report)
}

fn describe_all<M: GyrogroupModel>(m: &M, xs: &[M::Element]) -> Vec<String> {
    xs.iter().map(|x| m.describe(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::einstein::EinsteinModel;
    use crate::finite::{CayleyTable, FiniteGyrogroup};
    use crate::mobius::MobiusModel;
    use crate::prenorm::{FiniteChain, RadialChain};
    use crate::tolerance::ToleranceConfig;
    use alloc::vec;

    fn cfg() -> SuiteConfig {
        SuiteConfig::new(500, ToleranceConfig::uniform(1e-10), 3)
    }

    #[test]
    fn quartering_chain_is_admissible() {
        let c = RadialChain::new(MobiusModel::default(), 1.0, 0.25, 24).unwrap();
        let r = validate_admissible_chain(&c, &cfg(), 6).unwrap();
        assert!(r.pass(), "{r:?}");
        assert!(r.check("analytic_triple_condition").unwrap().pass);
        assert_eq!(r.check("intersection").unwrap().note.as_deref(), Some("P = {0}"));
    }

    #[test]
    fn halving_chain_fails_the_triple_condition() {
        let c = RadialChain::new(EinsteinModel::default(), 1.0, 0.5, 24).unwrap();
        let r = validate_admissible_chain(&c, &cfg(), 3).unwrap();
        assert!(!r.pass());
        assert!(!r.check("triple_level_0").unwrap().pass);
        assert!(!r.check("analytic_triple_condition").unwrap().pass);
        assert!(r.check("triple_level_0").unwrap().witness.is_some());
    }

    #[test]
    fn finite_chain_is_checked_exhaustively() {
        let g = FiniteGyrogroup::new(CayleyTable::cyclic(8).unwrap()).unwrap();
        let c = FiniteChain::new(g, vec![(0..8).collect(), vec![0, 4]]).unwrap();
        let r = validate_admissible_chain(&c, &cfg(), 3).unwrap();
        assert!(r.pass(), "{r:?}");
        assert!(r.check("triple_level_0").unwrap().samples.is_exhaustive());
        assert_eq!(r.check("intersection").unwrap().note.as_deref(), Some("P = {0, 4}"));
        assert!(r.check("analytic_triple_condition").is_none());
    }
}
