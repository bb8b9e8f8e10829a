//! Seeded sample streams and element samplers.
//!
//! Every check draws from its own stream, keyed by
//! `SHA-256(seed ‖ suite ‖ check)`, so adding or reordering checks never
//! changes the samples another check sees.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::error::GyroError;
use crate::model::{BallModel, GyrogroupModel};

pub type SampleRng = ChaCha8Rng;

/// The stream for one check of one suite.
pub fn stream(seed: u64, suite: &str, check: &str) -> SampleRng {
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    h.update((suite.len() as u64).to_le_bytes());
    h.update(suite.as_bytes());
    h.update((check.len() as u64).to_le_bytes());
    h.update(check.as_bytes());
    let digest = h.finalize();
    let mut key = [0u8; 32];
    key.copy_from_slice(&digest);
    ChaCha8Rng::from_seed(key)
}

/// Produces carrier elements for randomized suites.
pub trait Sampler<M: GyrogroupModel + ?Sized> {
    fn sample(&mut self, model: &M, rng: &mut SampleRng) -> Result<M::Element, GyroError>;
}

/// Uniform unit vector in `R^dim` (`dim` ∈ {1, 2, 3}), padded with zeros.
pub fn random_direction(dim: usize, rng: &mut SampleRng) -> [f64; 3] {
    match dim {
        1 => [if rng.random::<bool>() { 1.0 } else { -1.0 }, 0.0, 0.0],
        2 => {
            let th = rng.random::<f64>() * 2.0 * PI;
            [libm::cos(th), libm::sin(th), 0.0]
        }
        _ => {
            let z = 2.0 * rng.random::<f64>() - 1.0;
            let ph = rng.random::<f64>() * 2.0 * PI;
            let s = libm::sqrt((1.0 - z * z).max(0.0));
            [s * libm::cos(ph), s * libm::sin(ph), z]
        }
    }
}

/// Samples ball carriers by rapidity and direction: rapidity uniform in
/// `[0, t_max]`, direction uniform on the sphere. A fraction
/// `boundary_fraction` of draws is instead placed with norm in
/// `[bound·(1 − 2m), bound·(1 − m))`, `m` the boundary margin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RapiditySampler {
    pub t_max: f64,
    pub boundary_fraction: f64,
    pub boundary_margin: f64,
}

impl Default for RapiditySampler {
    fn default() -> Self {
        Self {
            t_max: 3.0,
            boundary_fraction: 0.01,
            boundary_margin: 1e-6,
        }
    }
}

impl RapiditySampler {
    /// Rapidity-uniform draws up to `t_max`, no forced boundary samples.
    pub fn interior(t_max: f64) -> Self {
        Self {
            t_max,
            boundary_fraction: 0.0,
            ..Self::default()
        }
    }
}

impl<M: BallModel + ?Sized> Sampler<M> for RapiditySampler {
    fn sample(&mut self, model: &M, rng: &mut SampleRng) -> Result<M::Element, GyroError> {
        let dir = random_direction(model.dim(), rng);
        let near_boundary = rng.random::<f64>() < self.boundary_fraction;
        let spread = rng.random::<f64>();
        let x = if near_boundary {
            let m = self.boundary_margin.max(model.boundary_margin());
            // (1 - spread) lies in (0, 1], so the norm stays strictly below bound·(1 - m)
            let r = model.bound() * (1.0 - m * (2.0 - spread));
            model.from_coords([r * dir[0], r * dir[1], r * dir[2]])
        } else {
            model.from_rapidity(spread * self.t_max, dir)
        };
        model
            .check_domain(&x)
            .map_err(|e| GyroError::Sampling(format!("sampled point rejected: {e}")))?;
        Ok(x)
    }
}

/// A point uniformly distributed (in volume) in the Euclidean ball
/// `‖x − center‖ ≤ radius`.
pub fn sample_in_ball<M: BallModel + ?Sized>(model: &M, center: [f64; 3], radius: f64, rng: &mut SampleRng) -> M::Element {
    let dir = random_direction(model.dim(), rng);
    let r = radius * libm::pow(rng.random::<f64>(), 1.0 / model.dim() as f64);
    model.from_coords([
        center[0] + r * dir[0],
        center[1] + r * dir[1],
        center[2] + r * dir[2],
    ])
}

/// Uniform draws from a finite carrier.
#[derive(Debug, Clone, Default)]
pub struct UniformElementSampler;

impl<M: GyrogroupModel + ?Sized> Sampler<M> for UniformElementSampler {
    fn sample(&mut self, model: &M, rng: &mut SampleRng) -> Result<M::Element, GyroError> {
        let all = model
            .elements()
            .ok_or_else(|| GyroError::Sampling("uniform element sampling needs a finite carrier".into()))?;
        if all.is_empty() {
            return Err(GyroError::Sampling("empty carrier".into()));
        }
        let i = rng.random_range(0..all.len());
        Ok(all[i].clone())
    }
}

/// Replays a fixed list of elements; running past its end is an error.
#[derive(Debug, Clone)]
pub struct ListSampler<E> {
    items: Vec<E>,
    next: usize,
}

impl<E> ListSampler<E> {
    pub fn new(items: Vec<E>) -> Self {
        Self { items, next: 0 }
    }
}

impl<M: GyrogroupModel + ?Sized> Sampler<M> for ListSampler<M::Element> {
    fn sample(&mut self, model: &M, _rng: &mut SampleRng) -> Result<M::Element, GyroError> {
        let x = self
            .items
            .get(self.next)
            .cloned()
            .ok_or_else(|| GyroError::Sampling(format!("sampler exhausted after {} elements", self.next)))?;
        self.next += 1;
        model
            .check_domain(&x)
            .map_err(|e| GyroError::Sampling(format!("listed point rejected: {e}")))?;
        Ok(x)
    }
}
