//! Direct product of two gyrogroups with the coordinatewise operation.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::GyroError;
use crate::model::{gyr, CarrierKind, GyrogroupModel};
use crate::sampling::{SampleRng, Sampler};

/// `A × B` with `(a1, b1) ⊕ (a2, b2) = (a1 ⊕ a2, b1 ⊕ b2)`. The gyration is
/// coordinatewise, so it is exposed as the closed form.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductModel<A, B> {
    pub first: A,
    pub second: B,
}

impl<A: GyrogroupModel, B: GyrogroupModel> ProductModel<A, B> {
    pub fn new(first: A, second: B) -> Self {
        Self { first, second }
    }
}

impl<A: GyrogroupModel, B: GyrogroupModel> GyrogroupModel for ProductModel<A, B> {
    type Element = (A::Element, B::Element);

    fn carrier_kind(&self) -> CarrierKind {
        match (self.first.carrier_kind(), self.second.carrier_kind()) {
            (CarrierKind::Finite, CarrierKind::Finite) => CarrierKind::Finite,
            _ => CarrierKind::Continuous,
        }
    }

    fn identity(&self) -> Self::Element {
        (self.first.identity(), self.second.identity())
    }

    fn oplus(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        (self.first.oplus(&a.0, &b.0), self.second.oplus(&a.1, &b.1))
    }

    fn neg(&self, a: &Self::Element) -> Self::Element {
        (self.first.neg(&a.0), self.second.neg(&a.1))
    }

    fn gyr_closed_form(&self, x: &Self::Element, y: &Self::Element, z: &Self::Element) -> Option<Self::Element> {
        Some((gyr(&self.first, &x.0, &y.0, &z.0), gyr(&self.second, &x.1, &y.1, &z.1)))
    }

    fn has_closed_form_gyr(&self) -> bool {
        true
    }

    fn eq_tolerance(&self) -> f64 {
        self.first.eq_tolerance().max(self.second.eq_tolerance())
    }

    fn check_domain(&self, a: &Self::Element) -> Result<(), GyroError> {
        self.first.check_domain(&a.0)?;
        self.second.check_domain(&a.1)
    }

    fn distance(&self, a: &Self::Element, b: &Self::Element) -> f64 {
        self.first.distance(&a.0, &b.0).max(self.second.distance(&a.1, &b.1))
    }

    fn magnitude(&self, a: &Self::Element) -> f64 {
        self.first.magnitude(&a.0).max(self.second.magnitude(&a.1))
    }

    fn elements(&self) -> Option<Vec<Self::Element>> {
        let xs = self.first.elements()?;
        let ys = self.second.elements()?;
        let mut out = Vec::with_capacity(xs.len() * ys.len());
        for x in &xs {
            for y in &ys {
                out.push((x.clone(), y.clone()));
            }
        }
        Some(out)
    }

    fn describe(&self, a: &Self::Element) -> String {
        format!("({}, {})", self.first.describe(&a.0), self.second.describe(&a.1))
    }
}

/// Draws each coordinate of a product element from its own sampler.
#[derive(Debug, Clone, Default)]
pub struct PairSampler<S, T> {
    pub first: S,
    pub second: T,
}

impl<S, T> PairSampler<S, T> {
    pub fn new(first: S, second: T) -> Self {
        Self { first, second }
    }
}

impl<A, B, S, T> Sampler<ProductModel<A, B>> for PairSampler<S, T>
where
    A: GyrogroupModel,
    B: GyrogroupModel,
    S: Sampler<A>,
    T: Sampler<B>,
{
    fn sample(&mut self, model: &ProductModel<A, B>, rng: &mut SampleRng) -> Result<(A::Element, B::Element), GyroError> {
        let a = self.first.sample(&model.first, rng)?;
        let b = self.second.sample(&model.second, rng)?;
        Ok((a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::{CayleyTable, FiniteGyrogroup};
    use crate::sampling::{RapiditySampler, UniformElementSampler};
    use crate::tolerance::ToleranceConfig;
    use crate::verify::{check_axioms, check_identities, SuiteConfig};
    use crate::{EinsteinModel, MobiusModel, MobiusPoint};

    #[test]
    fn continuous_product_passes_the_suites() {
        let m = ProductModel::new(MobiusModel::default(), EinsteinModel::default());
        let mut s = PairSampler::new(RapiditySampler::interior(2.0), RapiditySampler::interior(2.0));
        let cfg = SuiteConfig::new(500, ToleranceConfig::uniform(1e-9), 8);
        assert!(check_axioms(&m, &mut s, &cfg).unwrap().pass());
        assert!(check_identities(&m, &mut s, &cfg).unwrap().pass());
    }

    #[test]
    fn group_factor_has_trivial_gyrations() {
        let z3 = FiniteGyrogroup::new(CayleyTable::cyclic(3).unwrap()).unwrap();
        let m = ProductModel::new(z3, MobiusModel::default());
        let x = (1, MobiusPoint::new(0.5, 0.0));
        let y = (2, MobiusPoint::new(0.0, 0.5));
        for k in 0..3 {
            let g = gyr(&m, &x, &y, &(k, MobiusPoint::new(0.1, 0.0)));
            assert_eq!(g.0, k);
            assert!((g.1 .0.im + 0.05 / 1.0625).abs() < 1e-15);
        }
    }

    #[test]
    fn finite_product_is_exhaustive() {
        let z2 = FiniteGyrogroup::new(CayleyTable::cyclic(2).unwrap()).unwrap();
        let k = FiniteGyrogroup::new(CayleyTable::klein()).unwrap();
        let m = ProductModel::new(z2, k);
        assert_eq!(m.elements().unwrap().len(), 8);
        let cfg = SuiteConfig::new(1, ToleranceConfig::EXACT, 0);
        let r = check_axioms(&m, &mut PairSampler::new(UniformElementSampler, UniformElementSampler), &cfg).unwrap();
        assert!(r.pass() && r.checks.iter().all(|c| c.samples.is_exhaustive()));
    }
}
