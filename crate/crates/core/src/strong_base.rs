//! The base condition of a strongly topological gyrogroup: each member `U`
//! of a neighborhood base at the identity satisfies `gyr[x, y](U) = U`.
//!
//! Inclusion is checked by pushing sampled points of `U` through sampled
//! gyrations; surjectivity by pulling sampled targets back through the
//! inverse gyration `gyr[y, x]` and checking the preimage lies in `U`.

use alloc::format;
use alloc::vec::Vec;

use crate::error::GyroError;
use crate::model::{gyr, BallModel};
use crate::report::{CheckAccumulator, VerificationReport};
use crate::sampling::{sample_in_ball, stream, RapiditySampler, Sampler};
use crate::verify::{compare, SuiteConfig};

/// A closed Euclidean ball `‖x − center‖ ≤ radius` in carrier coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BaseBall {
    pub center: [f64; 3],
    pub radius: f64,
}

impl BaseBall {
    pub fn centered(radius: f64) -> Self {
        Self {
            center: [0.0; 3],
            radius,
        }
    }

    pub fn new(center: [f64; 3], radius: f64) -> Self {
        Self { center, radius }
    }

    pub fn is_centered(&self) -> bool {
        self.center == [0.0; 3]
    }

    /// How far `p` lies outside the ball (0 inside).
    pub fn excess(&self, p: [f64; 3]) -> f64 {
        let d = [p[0] - self.center[0], p[1] - self.center[1], p[2] - self.center[2]];
        (libm::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]) - self.radius).max(0.0)
    }
}

const SUITE: &str = "strong-base";

/// Checks `gyr[x, y](U) = U` for every ball in `balls`.
///
/// Each ball gets an `inclusion` and a `surjectivity` check; centered balls
/// also get `norm_preservation`, the residual `|‖gyr[x,y](u)‖ − ‖u‖|`.
pub fn check_strong_base<M: BallModel>(model: &M, balls: &[BaseBall], cfg: &SuiteConfig) -> Result<VerificationReport, GyroError> {
    cfg.validate()?;
    let limit = model.bound() * (1.0 - model.boundary_margin());
    for (i, b) in balls.iter().enumerate() {
        let reach = libm::sqrt(b.center.iter().map(|c| c * c).sum::<f64>()) + b.radius;
        if !(b.radius > 0.0 && reach < limit) {
            return Err(GyroError::Precondition(format!(
                "ball {i} (center {:?}, radius {}) is not strictly inside the carrier (limit {limit})",
                b.center, b.radius
            )));
        }
    }
    let tol = cfg.tol;
    let mut sampler = RapiditySampler::default();
    let mut report = VerificationReport::new(SUITE).with_seed(cfg.seed).with_tolerances(tol);

    for (i, ball) in balls.iter().enumerate() {
        let inc_name = format!("ball{i}_inclusion");
        let mut rng = stream(cfg.seed, SUITE, &inc_name);
        let mut inc = CheckAccumulator::new(inc_name.as_str(), false);
        let mut norm = CheckAccumulator::new(format!("ball{i}_norm_preservation"), false);
        for _ in 0..cfg.n_samples {
            let x = sampler.sample(model, &mut rng)?;
            let y = sampler.sample(model, &mut rng)?;
            let u = sample_in_ball(model, ball.center, ball.radius, &mut rng);
            let g = gyr(model, &x, &y, &u);
            let ex = ball.excess(model.coords(&g));
            let witness = || [&x, &y, &u].iter().map(|e| model.describe(e)).collect::<Vec<_>>();
            inc.observe(ex, tol.accepts(ex, ball.radius), witness);
            if ball.is_centered() {
                let d = libm::fabs(model.norm(&g) - model.norm(&u));
                norm.observe(d, tol.accepts(d, model.norm(&u)), witness);
            }
        }
        report.push(inc.finish());
        if ball.is_centered() {
            report.push(norm.finish());
        }

        let sur_name = format!("ball{i}_surjectivity");
        let mut rng = stream(cfg.seed, SUITE, &sur_name);
        let mut sur = CheckAccumulator::new(sur_name.as_str(), false);
        for _ in 0..cfg.n_samples {
            let x = sampler.sample(model, &mut rng)?;
            let y = sampler.sample(model, &mut rng)?;
            let v = sample_in_ball(model, ball.center, ball.radius, &mut rng);
            let pre = gyr(model, &y, &x, &v);
            let ex = ball.excess(model.coords(&pre));
            let (back, back_ok) = compare(model, &tol, &gyr(model, &x, &y, &pre), &v);
            sur.observe(ex.max(back), tol.accepts(ex, ball.radius) && back_ok, || {
                [&x, &y, &v].iter().map(|e| model.describe(e)).collect()
            });
        }
        report.push(sur.finish());
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::einstein::EinsteinModel;
    use crate::mobius::MobiusModel;

    fn cfg() -> SuiteConfig {
        SuiteConfig::new(2_000, Default::default(), 7)
    }

    #[test]
    fn mobius_shrinking_balls_are_invariant() {
        let balls: Vec<_> = (1..=5).map(|n| BaseBall::centered(1.0 / n as f64 - 1e-3)).collect();
        let r = check_strong_base(&MobiusModel::default(), &balls, &cfg()).unwrap();
        assert!(r.pass(), "{r:?}");
        assert_eq!(r.checks.len(), 15);
    }

    #[test]
    fn einstein_centered_balls_are_invariant() {
        let balls = [BaseBall::centered(0.3), BaseBall::centered(0.9)];
        let r = check_strong_base(&EinsteinModel::default(), &balls, &cfg()).unwrap();
        assert!(r.pass(), "{r:?}");
    }

    #[test]
    fn off_center_ball_is_moved() {
        let balls = [BaseBall::new([0.3, 0.0, 0.0], 0.1)];
        let r = check_strong_base(&MobiusModel::default(), &balls, &cfg()).unwrap();
        assert!(!r.pass());
        let inc = r.check("ball0_inclusion").unwrap();
        assert!(!inc.pass);
        assert_eq!(inc.witness.as_ref().unwrap().values.len(), 3);
    }

    #[test]
    fn balls_must_fit_in_the_carrier() {
        let m = MobiusModel::default();
        assert!(check_strong_base(&m, &[BaseBall::centered(1.0)], &cfg()).is_err());
        assert!(check_strong_base(&m, &[BaseBall::new([0.5, 0.0, 0.0], 0.6)], &cfg()).is_err());
        assert!(check_strong_base(&m, &[BaseBall::centered(0.0)], &cfg()).is_err());
    }
}
