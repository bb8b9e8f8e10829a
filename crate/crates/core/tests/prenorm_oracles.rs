use gyro_core::prenorm::{
    build_dyadic, check_metric, pseudometric_d, validate_admissible_chain, NeighborhoodChain, Prenorm,
    QuotientMetricSpace, RadialChain, DEFAULT_DEPTH,
};
use gyro_core::sampling::stream;
use gyro_core::{gyr, BallModel, EinsteinModel, GyrogroupModel, MobiusModel, MobiusPoint, RapiditySampler, SuiteConfig, ToleranceConfig};
use proptest::prelude::*;

fn step() -> f64 {
    (-(DEFAULT_DEPTH as f64)).exp2()
}

fn halving<M: BallModel + Clone>(m: M, t0: f64) -> Prenorm<RadialChain<M>> {
    let c = RadialChain::new(m, t0, 0.5, DEFAULT_DEPTH as usize).unwrap();
    Prenorm::new(build_dyadic(c, DEFAULT_DEPTH).unwrap())
}

fn real(x: f64) -> MobiusPoint {
    MobiusPoint::new(x, 0.0)
}

#[test]
fn worked_values() {
    let n = halving(MobiusModel::default(), 1.0);
    assert_eq!(n.eval(&MobiusPoint::ZERO), 0.0);
    assert!((n.eval(&real(0.75f64.tanh())) - 0.75).abs() <= 2.0 * step());
    let d = pseudometric_d(&n, &real(0.5f64.tanh()), &real(0.2f64.tanh()));
    assert!((d - 0.3).abs() <= 2.0 * step());
    assert_eq!(pseudometric_d(&n, &real(0.4), &real(0.4)), 0.0);
}

#[test]
fn einstein_halving_chain_is_linear_in_rapidity() {
    let e = EinsteinModel::default();
    let n = halving(e, 2.0);
    let mut rng = stream(9, "oracle", "einstein");
    let chain = n.chain().clone();
    for _ in 0..2_000 {
        let x = chain.probe(0, &mut rng);
        let expect = (e.rapidity(&x) / 2.0).min(1.0);
        assert!((n.eval(&x) - expect).abs() <= 2.0 * step());
    }
}

#[test]
fn mobius_rho_is_scaled_hyperbolic_distance() {
    let m = MobiusModel::default();
    let t0 = 4.0;
    let space = QuotientMetricSpace::new(halving(m, t0)).unwrap();
    let oracle = Box::new(move |x: &MobiusPoint, y: &MobiusPoint| 2.0 * m.rapidity(&m.oplus(&m.neg(x), y)) / t0);
    let cfg = SuiteConfig::new(3_000, ToleranceConfig::uniform(1e-9), 21);
    let r = check_metric(&space, &mut RapiditySampler::interior(1.9), &cfg, Some(oracle)).unwrap();
    assert!(r.pass(), "{r:?}");
}

#[test]
fn admissibility_depends_on_the_ratio() {
    let cfg = SuiteConfig::new(2_000, ToleranceConfig::default(), 4);
    let quarter = RadialChain::new(MobiusModel::default(), 1.0, 0.25, 24).unwrap();
    assert!(validate_admissible_chain(&quarter, &cfg, 8).unwrap().pass());
    let half = RadialChain::new(MobiusModel::default(), 1.0, 0.5, 24).unwrap();
    let r = validate_admissible_chain(&half, &cfg, 8).unwrap();
    let w = r.check("triple_level_0").unwrap().witness.clone().unwrap();
    // the witness sum sits on the real axis at rapidity 3/2 > 1
    assert!(w.values.iter().all(|v| v.ends_with(", 0.0)")), "{w:?}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn real_axis_sums_are_additive(a in 0.0f64..0.45, b in 0.0f64..0.45) {
        let m = MobiusModel::default();
        let n = halving(m, 1.0);
        let s = m.oplus(&real(a.tanh()), &real(b.tanh()));
        prop_assert!((n.eval(&s) - (a + b)).abs() <= 3.0 * step());
        prop_assert!(n.eval(&s) <= n.eval(&real(a.tanh())) + n.eval(&real(b.tanh())) + step());
    }

    #[test]
    fn mobius_gyrations_leave_n_unchanged(r1 in 0.0f64..0.95, r2 in 0.0f64..0.95, r3 in 0.0f64..0.95,
                                          p1 in 0.0f64..6.3, p2 in 0.0f64..6.3, p3 in 0.0f64..6.3) {
        let m = MobiusModel::default();
        let c = RadialChain::new(m, 1.0, 0.25, 24).unwrap();
        let n = Prenorm::new(build_dyadic(c, 24).unwrap());
        let pt = |r: f64, p: f64| MobiusPoint::new(r * p.cos(), r * p.sin());
        let (x, y, z) = (pt(r1, p1), pt(r2, p2), pt(r3, p3));
        prop_assert!((n.eval(&gyr(&m, &x, &y, &z)) - n.eval(&z)).abs() <= 1e-10);
    }
}
