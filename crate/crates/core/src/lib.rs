//! Computational gyrogroups.
//!
//! This crate is `no_std` (it needs `alloc`). It provides
//!
//! * the [`GyrogroupModel`] abstraction together with the axiom and identity
//!   suites in [`verify`],
//! * the classical continuous models: the Möbius disk ([`mobius`]) and the
//!   Einstein velocity ball ([`einstein`]), plus the gyration-invariant base
//!   check in [`strong_base`],
//! * exact finite gyrogroups given by Cayley tables ([`finite`]),
//! * neighborhood chains, the dyadic family, the prenorm built from it and
//!   the quotient metric on a coset space ([`prenorm`]).
//!
//! Everything here is a pure function of its inputs. Randomized suites draw
//! from per-check ChaCha streams derived from a root seed (see [`sampling`]),
//! so a report is reproducible from `(seed, n_samples)`.

#![no_std]

extern crate alloc;

#[cfg(feature = "std")]
extern crate std;

pub mod complex;
pub mod einstein;
pub mod error;
pub mod finite;
pub mod mobius;
pub mod model;
pub mod prenorm;
pub mod product;
pub mod report;
pub mod sampling;
pub mod strong_base;
pub mod tolerance;
pub mod verify;

pub use complex::Complex;
pub use einstein::{EinsteinModel, EinsteinVelocity, LightSpeed};
pub use error::GyroError;
pub use mobius::{MobiusModel, MobiusPoint};
pub use model::{gyr, gyr_apply, gyr_derived, BallModel, CarrierKind, GyrogroupModel};
pub use product::{PairSampler, ProductModel};
pub use report::{CheckRecord, SampleCount, VerificationReport, Witness};
pub use sampling::{RapiditySampler, Sampler};
pub use strong_base::{check_strong_base, BaseBall};
pub use tolerance::ToleranceConfig;
pub use verify::{check_axioms, check_identities, SuiteConfig};
