//! Einstein velocity addition on the ball `‖v‖ < c` of `R^3`.
//!
//! ```text
//! u ⊕ v = 1/(1 + u·v/c²) · (u + v/γ_u + (1/c²) · γ_u/(1 + γ_u) · (u·v) · u)
//! γ_u   = 1/√(1 − u·u/c²)
//! ```
//!
//! [`einstein_gyr`] evaluates `gyr[u, v](w) = ⊖(u⊕v) ⊕ (u ⊕ (v ⊕ w))`.
//! The model also exposes a rotation form of the same map
//! ([`gyr_rotation`]), which stays accurate where the three nested sums of
//! the derived form run into the rounding wall at `‖·‖ → c`.

use alloc::format;
use alloc::string::String;

use crate::complex::Complex;
use crate::error::GyroError;
use crate::model::{check_ball_norm, gyr_derived, BallModel, CarrierKind, GyrogroupModel};
use crate::tolerance::ToleranceConfig;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct EinsteinVelocity(pub [f64; 3]);

impl EinsteinVelocity {
    pub const ZERO: Self = Self([0.0; 3]);

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self([x, y, z])
    }

    pub fn dot(&self, o: &Self) -> f64 {
        self.0[0] * o.0[0] + self.0[1] * o.0[1] + self.0[2] * o.0[2]
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.dot(self))
    }

    fn axpy(&self, k: f64, o: &Self) -> Self {
        Self([
            self.0[0] + k * o.0[0],
            self.0[1] + k * o.0[1],
            self.0[2] + k * o.0[2],
        ])
    }

    fn scale(&self, k: f64) -> Self {
        Self([k * self.0[0], k * self.0[1], k * self.0[2]])
    }
}

/// The speed bound `c > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LightSpeed(f64);

impl LightSpeed {
    pub fn new(c: f64) -> Result<Self, GyroError> {
        if c > 0.0 && c.is_finite() {
            Ok(Self(c))
        } else {
            Err(GyroError::Precondition(format!("light speed must be positive, got {c}")))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl Default for LightSpeed {
    fn default() -> Self {
        Self(1.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EinsteinModel {
    pub c: LightSpeed,
    pub boundary_margin: f64,
}

impl Default for EinsteinModel {
    fn default() -> Self {
        Self {
            c: LightSpeed::default(),
            boundary_margin: ToleranceConfig::default().boundary_margin,
        }
    }
}

fn gamma_raw(u: &EinsteinVelocity, c: f64) -> f64 {
    1.0 / libm::sqrt(1.0 - u.dot(u) / (c * c))
}

fn oplus_raw(u: &EinsteinVelocity, v: &EinsteinVelocity, c: f64) -> EinsteinVelocity {
    let c2 = c * c;
    let uv = u.dot(v);
    let g = gamma_raw(u, c);
    let inner = u.axpy(1.0 / g, v).axpy(g / (1.0 + g) * uv / c2, u);
    inner.scale(1.0 / (1.0 + uv / c2))
}

fn describe(u: &EinsteinVelocity) -> String {
    format!("({:?}, {:?}, {:?})", u.0[0], u.0[1], u.0[2])
}

impl EinsteinModel {
    pub fn new(c: LightSpeed, boundary_margin: f64) -> Self {
        Self { c, boundary_margin }
    }

    pub fn check(&self, u: &EinsteinVelocity) -> Result<(), GyroError> {
        check_ball_norm(u.norm(), self.c.get(), self.boundary_margin, || describe(u))
    }

    pub fn gamma(&self, u: &EinsteinVelocity) -> Result<f64, GyroError> {
        self.check(u)?;
        Ok(gamma_raw(u, self.c.get()))
    }

    pub fn oplus_checked(&self, u: &EinsteinVelocity, v: &EinsteinVelocity) -> Result<EinsteinVelocity, GyroError> {
        self.check(u)?;
        self.check(v)?;
        Ok(oplus_raw(u, v, self.c.get()))
    }

    pub fn gyr_checked(
        &self,
        u: &EinsteinVelocity,
        v: &EinsteinVelocity,
        w: &EinsteinVelocity,
    ) -> Result<EinsteinVelocity, GyroError> {
        self.check(u)?;
        self.check(v)?;
        self.check(w)?;
        Ok(gyr_derived(self, u, v, w))
    }
}

/// `gyr[u, v](w)` as a rotation.
///
/// The radial map `v ↦ γ_v v/(1 + γ_v)` carries Einstein addition onto
/// Möbius addition in the ball, and gyrations commute with it. A Möbius
/// gyration rotates the plane spanned by its arguments by the unimodular
/// factor `(1 + a b̄)/(1 + ā b)` and fixes the orthogonal complement, so the
/// Einstein gyration is that same rotation.
pub fn gyr_rotation(u: &EinsteinVelocity, v: &EinsteinVelocity, w: &EinsteinVelocity, c: f64) -> EinsteinVelocity {
    let nu = u.norm();
    if nu == 0.0 || v.norm() == 0.0 {
        return *w;
    }
    let e1 = u.scale(1.0 / nu);
    let along = v.dot(&e1);
    let perp = v.axpy(-along, &e1);
    let np = perp.norm();
    if np == 0.0 {
        return *w;
    }
    let e2 = perp.scale(1.0 / np);
    // |φ(x)| = (‖x‖/c) / (1 + √(1 − ‖x‖²/c²))
    let half = |s: f64| {
        let s = s / c;
        s / (1.0 + libm::sqrt((1.0 - s) * (1.0 + s)))
    };
    let nv = v.norm();
    let a = half(nu);
    let b = Complex::new(along / nv, np / nv).scale(half(nv));
    let factor = (Complex::ONE + b.conj().scale(a)) / (Complex::ONE + b.scale(a));
    let w1 = w.dot(&e1);
    let w2 = w.dot(&e2);
    let rot = Complex::new(w1, w2) * factor;
    w.axpy(rot.re - w1, &e1).axpy(rot.im - w2, &e2)
}

/// The gamma factor of `u` at light speed `c`.
pub fn gamma(u: &EinsteinVelocity, c: LightSpeed) -> Result<f64, GyroError> {
    EinsteinModel::new(c, ToleranceConfig::default().boundary_margin).gamma(u)
}

pub fn einstein_oplus(u: &EinsteinVelocity, v: &EinsteinVelocity, c: LightSpeed) -> Result<EinsteinVelocity, GyroError> {
    EinsteinModel::new(c, ToleranceConfig::default().boundary_margin).oplus_checked(u, v)
}

pub fn einstein_gyr(
    u: &EinsteinVelocity,
    v: &EinsteinVelocity,
    w: &EinsteinVelocity,
    c: LightSpeed,
) -> Result<EinsteinVelocity, GyroError> {
    EinsteinModel::new(c, ToleranceConfig::default().boundary_margin).gyr_checked(u, v, w)
}

impl GyrogroupModel for EinsteinModel {
    type Element = EinsteinVelocity;

    fn carrier_kind(&self) -> CarrierKind {
        CarrierKind::Continuous
    }

    fn identity(&self) -> EinsteinVelocity {
        EinsteinVelocity::ZERO
    }

    fn oplus(&self, a: &EinsteinVelocity, b: &EinsteinVelocity) -> EinsteinVelocity {
        oplus_raw(a, b, self.c.get())
    }

    fn neg(&self, a: &EinsteinVelocity) -> EinsteinVelocity {
        a.scale(-1.0)
    }

    fn gyr_closed_form(&self, x: &EinsteinVelocity, y: &EinsteinVelocity, z: &EinsteinVelocity) -> Option<EinsteinVelocity> {
        Some(gyr_rotation(x, y, z, self.c.get()))
    }

    fn has_closed_form_gyr(&self) -> bool {
        true
    }

    fn eq_tolerance(&self) -> f64 {
        ToleranceConfig::default().abs_tol
    }

    fn check_domain(&self, a: &EinsteinVelocity) -> Result<(), GyroError> {
        self.check(a)
    }

    fn distance(&self, a: &EinsteinVelocity, b: &EinsteinVelocity) -> f64 {
        a.axpy(-1.0, b).norm()
    }

    fn magnitude(&self, a: &EinsteinVelocity) -> f64 {
        let s = a.norm() / self.c.get();
        1.0 / libm::sqrt((1.0 - s) * (1.0 + s))
    }

    fn describe(&self, a: &EinsteinVelocity) -> String {
        describe(a)
    }
}

impl BallModel for EinsteinModel {
    fn dim(&self) -> usize {
        3
    }

    fn bound(&self) -> f64 {
        self.c.get()
    }

    fn boundary_margin(&self) -> f64 {
        self.boundary_margin
    }

    fn coords(&self, a: &EinsteinVelocity) -> [f64; 3] {
        a.0
    }

    fn from_coords(&self, c: [f64; 3]) -> EinsteinVelocity {
        EinsteinVelocity(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &EinsteinVelocity, b: &EinsteinVelocity, tol: f64) -> bool {
        a.axpy(-1.0, b).norm() <= tol
    }

    #[test]
    fn gamma_values() {
        let c = LightSpeed::default();
        assert_eq!(gamma(&EinsteinVelocity::ZERO, c).unwrap(), 1.0);
        let g = gamma(&EinsteinVelocity::new(0.5, 0.0, 0.0), c).unwrap();
        assert!((g - 2.0 / libm::sqrt(3.0)).abs() < 1e-15);
        assert!((g - 1.1547005).abs() < 1e-7);
        // scales with c
        let c2 = LightSpeed::new(2.0).unwrap();
        let g2 = gamma(&EinsteinVelocity::new(0.0, 1.0, 0.0), c2).unwrap();
        assert!((g2 - g).abs() < 1e-15);
    }

    #[test]
    fn gamma_pole_is_a_domain_error() {
        let c = LightSpeed::default();
        assert!(gamma(&EinsteinVelocity::new(1.0, 0.0, 0.0), c).is_err());
        assert!(gamma(&EinsteinVelocity::new(0.0, 1.0 - 1e-6, 0.0), c).is_err());
        assert!(gamma(&EinsteinVelocity::new(0.0, 1.0 - 2e-6, 0.0), c).is_ok());
        assert!(LightSpeed::new(0.0).is_err());
        assert!(LightSpeed::new(-1.0).is_err());
    }

    #[test]
    fn addition_examples() {
        let c = LightSpeed::default();
        let u = EinsteinVelocity::new(0.2, -0.3, 0.4);
        assert!(close(&einstein_oplus(&u, &EinsteinVelocity::ZERO, c).unwrap(), &u, 1e-16));
        assert!(close(&einstein_oplus(&EinsteinVelocity::ZERO, &u, c).unwrap(), &u, 1e-16));
        let h = EinsteinVelocity::new(0.5, 0.0, 0.0);
        assert!(close(&einstein_oplus(&h, &h, c).unwrap(), &EinsteinVelocity::new(0.8, 0.0, 0.0), 1e-15));
        let back = einstein_oplus(&u, &EinsteinVelocity::new(-0.2, 0.3, -0.4), c).unwrap();
        assert!(back.norm() < 1e-15);
    }

    #[test]
    fn collinear_addition_at_other_light_speed() {
        // (a + b) / (1 + ab/c²) along a line
        let c = LightSpeed::new(3.0).unwrap();
        let u = EinsteinVelocity::new(0.0, 0.0, 1.2);
        let v = EinsteinVelocity::new(0.0, 0.0, 2.1);
        let w = einstein_oplus(&u, &v, c).unwrap();
        let expect = (1.2 + 2.1) / (1.0 + 1.2 * 2.1 / 9.0);
        assert!(close(&w, &EinsteinVelocity::new(0.0, 0.0, expect), 1e-14));
    }

    #[test]
    fn gyration_trivial_cases() {
        let c = LightSpeed::default();
        let u = EinsteinVelocity::new(0.3, 0.1, -0.5);
        let v = EinsteinVelocity::new(-0.6, 0.2, 0.1);
        let w = EinsteinVelocity::new(0.05, 0.4, 0.2);
        assert!(einstein_gyr(&u, &v, &EinsteinVelocity::ZERO, c).unwrap().norm() < 1e-15);
        assert_eq!(einstein_gyr(&u, &EinsteinVelocity::ZERO, &w, c).unwrap(), w);
        let g = einstein_gyr(&u, &v, &w, c).unwrap();
        assert!((g.norm() - w.norm()).abs() < 1e-12);
        // non-collinear u, v: the gyration is a genuine rotation
        assert!(!close(&g, &w, 1e-6));
    }

    #[test]
    fn collinear_gyrations_are_trivial() {
        let c = LightSpeed::default();
        let dir = EinsteinVelocity::new(0.48, -0.6, 0.64);
        let w = EinsteinVelocity::new(0.1, 0.3, -0.2);
        for &(s, t) in &[(0.2, 0.7), (-0.9, 0.5), (0.99, 0.99), (0.3, -0.31)] {
            let g = einstein_gyr(&dir.scale(s), &dir.scale(t), &w, c).unwrap();
            assert!(close(&g, &w, 1e-12), "s={s} t={t}");
        }
    }
}

