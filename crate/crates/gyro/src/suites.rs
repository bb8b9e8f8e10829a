//! Dispatch from a [`RunConfig`] to the verification suites.

use std::time::Instant;

use gyro_core::finite::{
    coset_partition, enumerate_subgyrogroups, gyr_table, is_l_subgyrogroup, is_subgyrogroup, search_gyrogroups,
    validate_table, CayleyTable, FiniteGyrogroup, FiniteModel, SubgyrogroupSet, POWERSET_LIMIT,
};
use gyro_core::prenorm::{
    build_dyadic, check_metric, check_prenorm_properties, validate_admissible_chain, FiniteChain, NeighborhoodChain,
    Prenorm, QuotientMetricSpace, RadialChain, RhoOracle,
};
use gyro_core::report::CheckRecord;
use gyro_core::sampling::{Sampler, UniformElementSampler};
use gyro_core::{
    check_axioms, check_identities, check_strong_base, BallModel, BaseBall, GyroError, GyrogroupModel, PairSampler,
    ProductModel, RapiditySampler, SampleCount, SuiteConfig, VerificationReport,
};
use serde_json::{json, Value};

use crate::config::{Carrier, ChainSpec, RunConfig, Suite};
use crate::error::CliError;
use crate::json::float;
use crate::table_io::table_to_value;

/// Sandwich and triple conditions are checked on levels `0..=8` at most.
pub const MAX_CHECKED_LEVEL: u32 = 8;

/// A finished run: the report plus suite-specific results.
#[derive(Debug, Clone)]
pub struct SuiteOutput {
    pub report: VerificationReport,
    pub model: Option<String>,
    pub results: Option<Value>,
}

pub fn run_suite(cfg: &RunConfig) -> Result<SuiteOutput, CliError> {
    let start = Instant::now();
    cfg.tol.validate()?;
    let spec = cfg.model_spec()?;
    let scfg = SuiteConfig::new(cfg.n_samples, cfg.tol, cfg.seed);
    let mut out = match (cfg.suite, &spec) {
        (Suite::Search, _) => search(cfg)?,
        (_, None) => unreachable!("only search runs without a model"),
        (suite, Some(spec)) => {
            let carrier = Carrier::resolve(spec, &cfg.tol)?;
            let (report, results) = match suite {
                Suite::Axioms | Suite::Identities => (generic(suite, &carrier, &scfg)?, None),
                Suite::StrongBase => (strong_base(&carrier, &scfg)?, None),
                Suite::Prenorm | Suite::Metric | Suite::Admissible => chain_suite(suite, &carrier, cfg, &scfg)?,
                Suite::TableValidate => table_validate(table_of(&carrier, suite)?),
                Suite::Subgyrogroups => subgyrogroups(table_of(&carrier, suite)?, cfg)?,
                Suite::Cosets => cosets(table_of(&carrier, suite)?, cfg)?,
                Suite::Search => unreachable!(),
            };
            SuiteOutput {
                report,
                model: Some(spec.to_string()),
                results,
            }
        }
    };
    out.report.wall_time_seconds = Some(start.elapsed().as_secs_f64());
    Ok(out)
}

fn table_of(c: &Carrier, suite: Suite) -> Result<&CayleyTable, CliError> {
    match c {
        Carrier::Table(t) => Ok(t),
        _ => Err(CliError::usage(format!("suite {} needs a table model", suite.name()))),
    }
}

fn ball_sampler(cfg: &SuiteConfig) -> RapiditySampler {
    RapiditySampler {
        boundary_margin: cfg.tol.boundary_margin,
        ..RapiditySampler::default()
    }
}

fn run_generic<M, S>(suite: Suite, model: &M, sampler: &mut S, cfg: &SuiteConfig) -> Result<VerificationReport, GyroError>
where
    M: GyrogroupModel,
    S: Sampler<M>,
{
    match suite {
        Suite::Axioms => check_axioms(model, sampler, cfg),
        _ => check_identities(model, sampler, cfg),
    }
}

fn generic(suite: Suite, carrier: &Carrier, cfg: &SuiteConfig) -> Result<VerificationReport, CliError> {
    let r = match carrier {
        Carrier::Mobius(m) => run_generic(suite, m, &mut ball_sampler(cfg), cfg)?,
        Carrier::Einstein(e) => run_generic(suite, e, &mut ball_sampler(cfg), cfg)?,
        Carrier::Table(t) => run_generic(suite, &FiniteModel::new(t.clone())?, &mut UniformElementSampler, cfg)?,
        Carrier::Mixed(a, b) => mixed(suite, a, b, cfg)?,
    };
    Ok(r)
}

fn mixed(suite: Suite, a: &Carrier, b: &Carrier, cfg: &SuiteConfig) -> Result<VerificationReport, CliError> {
    macro_rules! pair {
        ($ma:expr, $sa:expr, $mb:expr, $sb:expr) => {
            run_generic(suite, &ProductModel::new($ma, $mb), &mut PairSampler::new($sa, $sb), cfg)?
        };
    }
    let finite = |c: &Carrier| match c {
        Carrier::Table(t) => FiniteModel::new(t.clone()).map(Some),
        _ => Ok(None),
    };
    let (fa, fb) = (finite(a)?, finite(b)?);
    let (sa, sb) = (ball_sampler(cfg), ball_sampler(cfg));
    let u = UniformElementSampler;
    Ok(match (a, b) {
        (Carrier::Mobius(x), Carrier::Mobius(y)) => pair!(*x, sa, *y, sb),
        (Carrier::Mobius(x), Carrier::Einstein(y)) => pair!(*x, sa, *y, sb),
        (Carrier::Einstein(x), Carrier::Mobius(y)) => pair!(*x, sa, *y, sb),
        (Carrier::Einstein(x), Carrier::Einstein(y)) => pair!(*x, sa, *y, sb),
        (Carrier::Table(_), Carrier::Mobius(y)) => pair!(fa.unwrap_or_else(|| unreachable!()), u, *y, sb),
        (Carrier::Table(_), Carrier::Einstein(y)) => pair!(fa.unwrap_or_else(|| unreachable!()), u, *y, sb),
        (Carrier::Mobius(x), Carrier::Table(_)) => pair!(*x, sa, fb.unwrap_or_else(|| unreachable!()), u),
        (Carrier::Einstein(x), Carrier::Table(_)) => pair!(*x, sa, fb.unwrap_or_else(|| unreachable!()), u),
        (Carrier::Table(_), Carrier::Table(_)) => pair!(
            fa.unwrap_or_else(|| unreachable!()),
            u.clone(),
            fb.unwrap_or_else(|| unreachable!()),
            u
        ),
        _ => return Err(CliError::usage("nested product models are not supported")),
    })
}

/// Centered balls at a quarter, half and nine tenths of the bound.
pub fn default_balls(bound: f64) -> Vec<BaseBall> {
    vec![
        BaseBall::centered(0.25 * bound),
        BaseBall::centered(0.5 * bound),
        BaseBall::centered(0.9 * bound),
    ]
}

fn strong_base(carrier: &Carrier, cfg: &SuiteConfig) -> Result<VerificationReport, CliError> {
    Ok(match carrier {
        Carrier::Mobius(m) => check_strong_base(m, &default_balls(m.bound()), cfg)?,
        Carrier::Einstein(e) => check_strong_base(e, &default_balls(e.bound()), cfg)?,
        _ => return Err(CliError::usage("suite strong-base needs the mobius or einstein model")),
    })
}

fn chain_suite(
    suite: Suite,
    carrier: &Carrier,
    cfg: &RunConfig,
    scfg: &SuiteConfig,
) -> Result<(VerificationReport, Option<Value>), CliError> {
    let spec = cfg.chain.clone().unwrap_or_else(|| match carrier {
        Carrier::Table(_) => ChainSpec::Finite {
            table: None,
            levels: None,
            subgyrogroup: None,
            depth: gyro_core::prenorm::DEFAULT_DEPTH,
        },
        _ => ChainSpec::default(),
    });
    let depth = cfg.depth.unwrap_or(spec.depth());
    let levels = depth.min(MAX_CHECKED_LEVEL);
    match (spec, carrier) {
        (ChainSpec::Radial { t0, ratio, .. }, Carrier::Mobius(m)) => {
            let chain = RadialChain::new(*m, t0, ratio, depth as usize)?;
            radial_suite(suite, chain, depth, levels, scfg)
        }
        (ChainSpec::Radial { t0, ratio, .. }, Carrier::Einstein(e)) => {
            let chain = RadialChain::new(*e, t0, ratio, depth as usize)?;
            radial_suite(suite, chain, depth, levels, scfg)
        }
        (ChainSpec::Radial { .. }, _) => Err(CliError::usage("radial_rapidity chains need the mobius or einstein model")),
        (ChainSpec::Finite { table, levels: lv, subgyrogroup, .. }, c) => {
            let table = match (table, c) {
                (Some(t), _) => t,
                (None, Carrier::Table(t)) => t.clone(),
                (None, _) => return Err(CliError::usage("finite_discrete chains need a table model or a \"table\" field")),
            };
            let g = FiniteGyrogroup::new(table)?;
            let e = g.identity_index();
            let chain_levels = match (lv, subgyrogroup.or_else(|| cfg.subgyrogroup.clone())) {
                (Some(l), _) => l,
                (None, Some(h)) => vec![h],
                (None, None) => vec![vec![e]],
            };
            let chain = FiniteChain::new(g, chain_levels)?;
            finite_suite(suite, chain, depth, levels, scfg)
        }
    }
}

fn radial_suite<M>(
    suite: Suite,
    chain: RadialChain<M>,
    depth: u32,
    levels: u32,
    cfg: &SuiteConfig,
) -> Result<(VerificationReport, Option<Value>), CliError>
where
    M: BallModel + Clone,
    RapiditySampler: Sampler<M>,
{
    let params = json!({
        "kind": "radial_rapidity",
        "t0": float(chain.t0()),
        "ratio": float(chain.ratio()),
        "depth": depth,
    });
    if suite == Suite::Admissible {
        let r = validate_admissible_chain(&chain, cfg, levels as usize)?;
        return Ok((r, Some(json!({ "chain": params }))));
    }
    let prenorm = Prenorm::new(build_dyadic(chain.clone(), depth)?);
    let mut sampler = ball_sampler(cfg);
    if suite == Suite::Prenorm {
        let r = check_prenorm_properties(&prenorm, &mut sampler, cfg, levels as usize)?;
        return Ok((r, Some(json!({ "chain": params, "resolution": float(prenorm.resolution()) }))));
    }
    let space = QuotientMetricSpace::new(prenorm)?;
    let model = chain.model().clone();
    let linear = chain.ratio() == 0.5;
    let t0 = chain.t0();
    // halving chains give N = rapidity / t0 below t0; other ratios give the
    // staircase of their digit sums
    let oracle: RhoOracle<'_, M::Element> = Box::new(move |x, y| {
        let one = |a: &M::Element, b: &M::Element| {
            let r = model.rapidity(&model.oplus(&model.neg(a), b));
            if linear {
                (r / t0).min(1.0)
            } else {
                chain.staircase(r, depth)
            }
        };
        one(x, y) + one(y, x)
    });
    let r = check_metric(&space, &mut sampler, cfg, Some(oracle))?;
    let results = json!({
        "chain": params,
        "p": ["identity"],
        "oracle": if linear { "2 rapidity(-x+y) / t0" } else { "digit-sum staircase of rapidity(-x+y)" },
        "resolution": float(space.prenorm().resolution()),
        "slack": float(space.slack(cfg.tol.abs_tol)),
    });
    Ok((r, Some(results)))
}

fn finite_suite(
    suite: Suite,
    chain: FiniteChain,
    depth: u32,
    levels: u32,
    cfg: &SuiteConfig,
) -> Result<(VerificationReport, Option<Value>), CliError> {
    let g = chain.group().clone();
    let labels = |xs: &[usize]| xs.iter().map(|&i| g.table().labels()[i].clone()).collect::<Vec<_>>();
    let p = chain.intersection_elements();
    let params = json!({
        "kind": "finite_discrete",
        "levels": (0..=chain.depth_available()).map(|l| chain.members(l).unwrap_or_default()).collect::<Vec<_>>(),
        "depth": depth,
    });
    if suite == Suite::Admissible {
        let r = validate_admissible_chain(&chain, cfg, levels as usize)?;
        return Ok((r, Some(json!({ "chain": params, "p": labels(&p) }))));
    }
    let prenorm = Prenorm::new(build_dyadic(chain.clone(), depth)?);
    if suite == Suite::Prenorm {
        let r = check_prenorm_properties(&prenorm, &mut UniformElementSampler, cfg, levels as usize)?;
        return Ok((r, Some(json!({ "chain": params, "resolution": float(prenorm.resolution()) }))));
    }
    let space = QuotientMetricSpace::new(prenorm)?;
    let constant = (0..=chain.depth_available()).all(|l| chain.members(l) == chain.members(0));
    let oracle: Option<RhoOracle<'_, usize>> = if constant {
        // N is the indicator of the complement of P
        let (gg, ch) = (g.clone(), chain.clone());
        Some(Box::new(move |x: &usize, y: &usize| {
            let off = |a: usize, b: usize| if ch.in_intersection(&gg.op(gg.inv(a), b)) { 0.0 } else { 1.0 };
            off(*x, *y) + off(*y, *x)
        }))
    } else {
        None
    };
    let r = check_metric(&space, &mut UniformElementSampler, cfg, oracle)?;
    Ok((r, Some(json!({ "chain": params, "p": labels(&p), "resolution": float(space.prenorm().resolution()) }))))
}

fn table_validate(t: &CayleyTable) -> (VerificationReport, Option<Value>) {
    let report = validate_table(t);
    let identity = t.identity().map(|e| t.labels()[e].clone());
    let gyrations = if report.pass() {
        gyr_table(t).ok().map(|g| g.is_all_identity())
    } else {
        None
    };
    let results = json!({
        "order": t.order(),
        "identity": identity,
        "gyrations_all_identity": gyrations,
        "canonical": t.with_identity_first().ok().map(|c| table_to_value(&c)),
    });
    (report, Some(results))
}

fn set_value(g: &FiniteGyrogroup, s: &SubgyrogroupSet) -> Value {
    json!({
        "members": s.members,
        "labels": s.members.iter().map(|&i| g.table().labels()[i].clone()).collect::<Vec<_>>(),
        "subgyrogroup": s.is_subgyrogroup,
        "l_subgyrogroup": s.is_l_subgyrogroup,
    })
}

fn subgyrogroups(t: &CayleyTable, cfg: &RunConfig) -> Result<(VerificationReport, Option<Value>), CliError> {
    let g = FiniteGyrogroup::new(t.clone())?;
    let n = g.order();
    let subs = enumerate_subgyrogroups(&g);
    let mut report = VerificationReport::new("subgyrogroups");
    let exhaustive = SampleCount::Exhaustive(subs.len() as u64);
    let whole: Vec<usize> = (0..n).collect();
    let ends = subs.first().map(|s| s.members == [g.identity_index()]) == Some(true)
        && subs.last().map(|s| s.members == whole) == Some(true);
    report.push(verdict("trivial_and_whole_present", exhaustive, ends, || vec![format!("{} sets", subs.len())]));
    let bad = subs.iter().find(|s| {
        !is_subgyrogroup(&g, &s.members) || is_l_subgyrogroup(&g, &s.members).ok() != Some(s.is_l_subgyrogroup)
    });
    report.push(verdict("listed_sets_verified", exhaustive, bad.is_none(), || {
        bad.map(|s| vec![format!("{:?}", s.members)]).unwrap_or_default()
    }));
    let mut results = json!({
        "count": subs.len(),
        "strategy": if n <= POWERSET_LIMIT { "powerset" } else { "closure" },
        "subgyrogroups": subs.iter().map(|s| set_value(&g, s)).collect::<Vec<_>>(),
    });
    if let Some(h) = &cfg.subgyrogroup {
        check_indices(h, n)?;
        let q = SubgyrogroupSet::classify(&g, h);
        report.push(verdict("query_is_subgyrogroup", SampleCount::Exhaustive(1), q.is_subgyrogroup, || {
            vec![format!("{h:?}")]
        }));
        results["query"] = set_value(&g, &q);
    }
    Ok((report, Some(results)))
}

fn check_indices(h: &[usize], n: usize) -> Result<(), CliError> {
    match h.iter().find(|&&a| a >= n) {
        Some(a) => Err(CliError::usage(format!("--subgyrogroup index {a} is out of range 0..{n}"))),
        None => Ok(()),
    }
}

fn verdict(name: &str, samples: SampleCount, ok: bool, witness: impl FnOnce() -> Vec<String>) -> CheckRecord {
    if ok {
        CheckRecord::passed(name, samples)
    } else {
        CheckRecord::failed(name, samples, witness())
    }
}

fn cosets(t: &CayleyTable, cfg: &RunConfig) -> Result<(VerificationReport, Option<Value>), CliError> {
    let g = FiniteGyrogroup::new(t.clone())?;
    let n = g.order();
    let targets: Vec<Vec<usize>> = match &cfg.subgyrogroup {
        Some(h) => {
            check_indices(h, n)?;
            let mut h = h.clone();
            h.sort_unstable();
            h.dedup();
            vec![h]
        }
        None => enumerate_subgyrogroups(&g)
            .into_iter()
            .filter(|s| s.is_l_subgyrogroup)
            .map(|s| s.members)
            .collect(),
    };
    let mut report = VerificationReport::new("cosets");
    let mut partitions = Vec::new();
    for h in targets {
        let p = coset_partition(&g, &h)?;
        let name = format!("partition_{}", h.iter().map(|a| a.to_string()).collect::<Vec<_>>().join("_"));
        let ok = p.is_partition(n, h.len());
        report.push(verdict(&name, SampleCount::Exhaustive(n as u64), ok, || {
            p.blocks.iter().map(|b| format!("{b:?}")).collect()
        }));
        let lab = |b: &Vec<usize>| b.iter().map(|&i| g.table().labels()[i].clone()).collect::<Vec<_>>();
        partitions.push(json!({
            "subgyrogroup": h,
            "blocks": p.blocks,
            "block_labels": p.blocks.iter().map(lab).collect::<Vec<_>>(),
            "projection": p.projection,
        }));
    }
    Ok((report, Some(json!({ "partitions": partitions }))))
}

fn search(cfg: &RunConfig) -> Result<SuiteOutput, CliError> {
    let order = cfg.order.ok_or_else(|| CliError::usage("suite search needs --order"))?;
    let max = cfg.max_results.unwrap_or(usize::MAX);
    let tables = search_gyrogroups(order, true, max)?;
    let mut report = VerificationReport::new("search");
    let mut groups = 0usize;
    for (i, t) in tables.iter().enumerate() {
        let v = validate_table(t);
        let ok = v.pass();
        if ok && gyr_table(t).map(|g| g.is_all_identity()).unwrap_or(false) {
            groups += 1;
        }
        report.push(verdict(&format!("table_{i}_valid"), SampleCount::Exhaustive(1), ok, || {
            v.failures().map(|c| c.name.clone()).collect()
        }));
    }
    let results = json!({
        "order": order,
        "count": tables.len(),
        "groups": groups,
        "non_group_gyrogroups": tables.len() - groups,
        "tables": tables.iter().map(table_to_value).collect::<Vec<_>>(),
    });
    Ok(SuiteOutput {
        report,
        model: None,
        results: Some(results),
    })
}
