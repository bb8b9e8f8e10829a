//! The gyrogroup abstraction every suite runs against.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Debug;

use crate::error::GyroError;

/// How elements are represented and compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CarrierKind {
    /// Real coordinates, compared up to a tolerance.
    Continuous,
    /// Indices into a finite table, compared exactly.
    Finite,
}

/// A gyrogroup `(G, ⊕)` given by its operation, inverse and identity.
///
/// `oplus`, `neg` and `gyr_closed_form` assume their arguments are already
/// in the carrier; use [`GyrogroupModel::check_domain`] (or the checked
/// free functions such as [`gyr_apply`]) at API boundaries.
pub trait GyrogroupModel {
    type Element: Clone + Debug + PartialEq;

    fn carrier_kind(&self) -> CarrierKind;

    fn identity(&self) -> Self::Element;

    fn oplus(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;

    fn neg(&self, a: &Self::Element) -> Self::Element;

    /// `gyr[x, y](z)` in closed form, when the model has one.
    fn gyr_closed_form(
        &self,
        _x: &Self::Element,
        _y: &Self::Element,
        _z: &Self::Element,
    ) -> Option<Self::Element> {
        None
    }

    /// Evaluates `⊖(x⊕y) ⊕ (x ⊕ (y ⊕ z))`. Models may override this to keep
    /// intermediate sums in a representation that does not round them.
    fn gyr_derived_eval(&self, x: &Self::Element, y: &Self::Element, z: &Self::Element) -> Self::Element {
        let xy = self.oplus(x, y);
        let inner = self.oplus(x, &self.oplus(y, z));
        self.oplus(&self.neg(&xy), &inner)
    }

    /// Whether a closed-form gyration is available at all.
    fn has_closed_form_gyr(&self) -> bool {
        false
    }

    /// Approximate-equality threshold intrinsic to the model (0 for finite carriers).
    fn eq_tolerance(&self) -> f64;

    /// Rejects elements outside the carrier.
    fn check_domain(&self, a: &Self::Element) -> Result<(), GyroError>;

    /// Distance used for residuals (Euclidean for balls, 0/1 for tables).
    fn distance(&self, a: &Self::Element, b: &Self::Element) -> f64;

    /// Scale used by the relative part of a tolerance.
    ///
    /// Ball models return `cosh` of the hyperbolic distance to the identity,
    /// which is how fast coordinate rounding grows toward the boundary.
    fn magnitude(&self, a: &Self::Element) -> f64;

    /// Every element, for finite carriers. Suites become exhaustive when this is `Some`.
    fn elements(&self) -> Option<Vec<Self::Element>> {
        None
    }

    /// Stable textual form used in witnesses.
    fn describe(&self, a: &Self::Element) -> String {
        format!("{a:?}")
    }
}

/// Models whose carrier is an open ball of radius [`BallModel::bound`] in
/// `R^dim`, with `⊖x = -x` and gyrations acting as rotations.
pub trait BallModel: GyrogroupModel {
    fn dim(&self) -> usize;

    fn bound(&self) -> f64;

    /// Minimum relative distance kept from the boundary.
    fn boundary_margin(&self) -> f64;

    /// Coordinates padded with zeros beyond `dim`.
    fn coords(&self, a: &Self::Element) -> [f64; 3];

    #[allow(clippy::wrong_self_convention)]
    fn from_coords(&self, c: [f64; 3]) -> Self::Element;

    fn norm(&self, a: &Self::Element) -> f64 {
        let c = self.coords(a);
        libm::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2])
    }

    /// `artanh(‖a‖ / bound)`.
    fn rapidity(&self, a: &Self::Element) -> f64 {
        libm::atanh(self.norm(a) / self.bound())
    }

    /// The point at rapidity `t` along the unit direction `dir`.
    #[allow(clippy::wrong_self_convention)]
    fn from_rapidity(&self, t: f64, dir: [f64; 3]) -> Self::Element {
        let r = self.bound() * libm::tanh(t);
        self.from_coords([r * dir[0], r * dir[1], r * dir[2]])
    }
}

/// `gyr[x, y](z) = ⊖(x⊕y) ⊕ (x ⊕ (y ⊕ z))`, short-circuiting to `z` when
/// `x` or `y` is the identity.
pub fn gyr_derived<M: GyrogroupModel + ?Sized>(
    model: &M,
    x: &M::Element,
    y: &M::Element,
    z: &M::Element,
) -> M::Element {
    let e = model.identity();
    if *x == e || *y == e {
        return z.clone();
    }
    model.gyr_derived_eval(x, y, z)
}

/// The gyration the model prefers: closed form when present, else derived.
pub fn gyr<M: GyrogroupModel + ?Sized>(
    model: &M,
    x: &M::Element,
    y: &M::Element,
    z: &M::Element,
) -> M::Element {
    model
        .gyr_closed_form(x, y, z)
        .unwrap_or_else(|| gyr_derived(model, x, y, z))
}

/// Domain-checked gyration.
pub fn gyr_apply<M: GyrogroupModel + ?Sized>(
    model: &M,
    x: &M::Element,
    y: &M::Element,
    z: &M::Element,
) -> Result<M::Element, GyroError> {
    model.check_domain(x)?;
    model.check_domain(y)?;
    model.check_domain(z)?;
    Ok(gyr(model, x, y, z))
}

/// Rejects a norm that is not strictly below `bound * (1 - margin)`.
pub(crate) fn check_ball_norm(norm: f64, bound: f64, margin: f64, point: impl FnOnce() -> String) -> Result<(), GyroError> {
    let limit = bound * (1.0 - margin);
    if norm.is_finite() && norm < limit {
        Ok(())
    } else {
        Err(GyroError::Domain {
            point: point(),
            norm,
            limit,
        })
    }
}
