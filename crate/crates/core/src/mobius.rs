//! The Möbius gyrogroup on the open complex unit disk,
//! `a ⊕ b = (a + b) / (1 + ā b)`.

use alloc::format;
use alloc::string::String;

use crate::complex::Complex;
use crate::error::GyroError;
use crate::model::{check_ball_norm, BallModel, CarrierKind, GyrogroupModel};
use crate::tolerance::ToleranceConfig;

/// A point of the disk, `|z| < 1`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct MobiusPoint(pub Complex);

impl MobiusPoint {
    pub const ZERO: Self = Self(Complex::ZERO);

    pub const fn new(re: f64, im: f64) -> Self {
        Self(Complex::new(re, im))
    }

    pub fn abs(&self) -> f64 {
        self.0.abs()
    }
}

/// The Möbius disk model. Inputs within `boundary_margin` (relative) of the
/// unit circle are rejected.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MobiusModel {
    pub boundary_margin: f64,
}

impl Default for MobiusModel {
    fn default() -> Self {
        Self {
            boundary_margin: ToleranceConfig::default().boundary_margin,
        }
    }
}

fn oplus_raw(a: Complex, b: Complex) -> Complex {
    (a + b) / (Complex::ONE + a.conj() * b)
}

/// The unimodular factor `(1 + a b̄) / (1 + ā b)` by which `gyr[a, b]` rotates.
pub fn gyration_factor(a: &MobiusPoint, b: &MobiusPoint) -> Complex {
    (Complex::ONE + a.0 * b.0.conj()) / (Complex::ONE + a.0.conj() * b.0)
}

impl MobiusModel {
    pub fn new(boundary_margin: f64) -> Self {
        Self { boundary_margin }
    }

    pub fn check(&self, a: &MobiusPoint) -> Result<(), GyroError> {
        check_ball_norm(a.abs(), 1.0, self.boundary_margin, || describe(a))
    }

    pub fn oplus_checked(&self, a: &MobiusPoint, b: &MobiusPoint) -> Result<MobiusPoint, GyroError> {
        self.check(a)?;
        self.check(b)?;
        Ok(MobiusPoint(oplus_raw(a.0, b.0)))
    }

    pub fn gyr_checked(
        &self,
        a: &MobiusPoint,
        b: &MobiusPoint,
        x: &MobiusPoint,
    ) -> Result<MobiusPoint, GyroError> {
        self.check(a)?;
        self.check(b)?;
        self.check(x)?;
        Ok(MobiusPoint(gyration_factor(a, b) * x.0))
    }
}

/// `a ⊕_M b` with the default boundary policy.
pub fn mobius_oplus(a: &MobiusPoint, b: &MobiusPoint) -> Result<MobiusPoint, GyroError> {
    MobiusModel::default().oplus_checked(a, b)
}

/// `gyr[a, b](x)` in closed form with the default boundary policy.
pub fn mobius_gyr(a: &MobiusPoint, b: &MobiusPoint, x: &MobiusPoint) -> Result<MobiusPoint, GyroError> {
    MobiusModel::default().gyr_checked(a, b, x)
}

fn describe(a: &MobiusPoint) -> String {
    format!("({:?}, {:?})", a.0.re, a.0.im)
}

impl GyrogroupModel for MobiusModel {
    type Element = MobiusPoint;

    fn carrier_kind(&self) -> CarrierKind {
        CarrierKind::Continuous
    }

    fn identity(&self) -> MobiusPoint {
        MobiusPoint::ZERO
    }

    fn oplus(&self, a: &MobiusPoint, b: &MobiusPoint) -> MobiusPoint {
        MobiusPoint(oplus_raw(a.0, b.0))
    }

    fn neg(&self, a: &MobiusPoint) -> MobiusPoint {
        MobiusPoint(-a.0)
    }

    fn gyr_closed_form(&self, x: &MobiusPoint, y: &MobiusPoint, z: &MobiusPoint) -> Option<MobiusPoint> {
        Some(MobiusPoint(gyration_factor(x, y) * z.0))
    }

    fn has_closed_form_gyr(&self) -> bool {
        true
    }

    fn eq_tolerance(&self) -> f64 {
        ToleranceConfig::default().abs_tol
    }

    fn check_domain(&self, a: &MobiusPoint) -> Result<(), GyroError> {
        self.check(a)
    }

    fn distance(&self, a: &MobiusPoint, b: &MobiusPoint) -> f64 {
        (a.0 - b.0).abs()
    }

    fn magnitude(&self, a: &MobiusPoint) -> f64 {
        let r = a.abs();
        (1.0 + r * r) / ((1.0 - r) * (1.0 + r))
    }

    fn describe(&self, a: &MobiusPoint) -> String {
        describe(a)
    }
}

impl BallModel for MobiusModel {
    fn dim(&self) -> usize {
        2
    }

    fn bound(&self) -> f64 {
        1.0
    }

    fn boundary_margin(&self) -> f64 {
        self.boundary_margin
    }

    fn coords(&self, a: &MobiusPoint) -> [f64; 3] {
        [a.0.re, a.0.im, 0.0]
    }

    fn from_coords(&self, c: [f64; 3]) -> MobiusPoint {
        MobiusPoint::new(c[0], c[1])
    }

    fn norm(&self, a: &MobiusPoint) -> f64 {
        a.abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{gyr_apply, gyr_derived};

    fn close(a: MobiusPoint, b: MobiusPoint, tol: f64) -> bool {
        (a.0 - b.0).abs() <= tol
    }

    #[test]
    fn identity_on_the_left() {
        let b = MobiusPoint::new(0.3, -0.4);
        assert_eq!(mobius_oplus(&MobiusPoint::ZERO, &b).unwrap(), b);
    }

    #[test]
    fn real_and_imaginary_halves() {
        // (0.5 + 0.5) / (1 + 0.25)
        let h = MobiusPoint::new(0.5, 0.0);
        assert!(close(mobius_oplus(&h, &h).unwrap(), MobiusPoint::new(0.8, 0.0), 1e-15));
        // conj(0.5i) * 0.5i = 0.25, numerator i
        let hi = MobiusPoint::new(0.0, 0.5);
        assert!(close(mobius_oplus(&hi, &hi).unwrap(), MobiusPoint::new(0.0, 0.8), 1e-15));
    }

    #[test]
    fn gyration_with_zero_is_identity() {
        let a = MobiusPoint::new(0.2, 0.7);
        let x = MobiusPoint::new(-0.1, 0.05);
        assert_eq!(mobius_gyr(&a, &MobiusPoint::ZERO, &x).unwrap(), x);
    }

    #[test]
    fn gyration_hand_value() {
        // 0.1 (1 - 0.25i)/(1 + 0.25i) = 0.1 (0.9375 - 0.5i) / 1.0625
        let g = mobius_gyr(
            &MobiusPoint::new(0.5, 0.0),
            &MobiusPoint::new(0.0, 0.5),
            &MobiusPoint::new(0.1, 0.0),
        )
        .unwrap();
        let expect = MobiusPoint::new(0.09375 / 1.0625, -0.05 / 1.0625);
        assert!(close(g, expect, 1e-15));
        assert!((g.0.re - 0.0882353).abs() < 1e-7);
        assert!((g.0.im + 0.0470588).abs() < 1e-7);
        let m = MobiusModel::default();
        let via_model = gyr_apply(&m, &MobiusPoint::new(0.5, 0.0), &MobiusPoint::new(0.0, 0.5), &MobiusPoint::new(0.1, 0.0)).unwrap();
        assert_eq!(via_model, g);
    }

    #[test]
    fn closed_form_matches_derived_at_a_point() {
        let m = MobiusModel::default();
        let (a, b, c) = (
            MobiusPoint::new(0.4, -0.2),
            MobiusPoint::new(-0.3, 0.6),
            MobiusPoint::new(0.1, 0.25),
        );
        let closed = m.gyr_closed_form(&a, &b, &c).unwrap();
        assert!(close(closed, gyr_derived(&m, &a, &b, &c), 1e-14));
    }

    #[test]
    fn rejects_points_at_or_outside_the_circle() {
        let m = MobiusModel::default();
        assert!(m.check(&MobiusPoint::new(1.0, 0.0)).is_err());
        assert!(m.check(&MobiusPoint::new(0.0, -1.5)).is_err());
        assert!(m.check(&MobiusPoint::new(1.0 - 1e-7, 0.0)).is_err());
        assert!(m.check(&MobiusPoint::new(f64::NAN, 0.0)).is_err());
        assert!(m.check(&MobiusPoint::new(1.0 - 1e-5, 0.0)).is_ok());
        let err = mobius_oplus(&MobiusPoint::new(2.0, 0.0), &MobiusPoint::ZERO).unwrap_err();
        assert!(matches!(err, GyroError::Domain { .. }));
    }

    #[test]
    fn tanh_additivity_on_the_real_axis() {
        for &(s, t) in &[(0.1, 0.2), (0.75, 0.5), (1.3, 2.1), (0.0, 3.0)] {
            let a = MobiusPoint::new(libm::tanh(s), 0.0);
            let b = MobiusPoint::new(libm::tanh(t), 0.0);
            let sum = mobius_oplus(&a, &b).unwrap();
            assert!((sum.0.re - libm::tanh(s + t)).abs() <= 1e-12);
            assert_eq!(sum.0.im, 0.0);
        }
    }
}
