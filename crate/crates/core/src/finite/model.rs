use alloc::string::String;
use alloc::vec::Vec;

use super::gyration::{gyr_table, GyrationTable};
use super::table::CayleyTable;
use super::validate::{inverses, require_gyrogroup};
use crate::error::GyroError;
use crate::model::{CarrierKind, GyrogroupModel};

/// A table with a two-sided identity and two-sided inverses, which is all
/// the axiom suites need to evaluate it. It need not be a gyrogroup.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteModel {
    table: CayleyTable,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteModel {
    pub fn new(table: CayleyTable) -> Result<Self, GyroError> {
        let identity = table
            .identity()
            .ok_or_else(|| GyroError::Precondition("table has no two-sided identity".into()))?;
        let inverse = inverses(&table, identity)
            .map_err(|a| GyroError::Precondition(alloc::format!("element {a} has no unique two-sided inverse")))?;
        Ok(Self {
            table,
            identity,
            inverse,
        })
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }
}

impl GyrogroupModel for FiniteModel {
    type Element = usize;

    fn carrier_kind(&self) -> CarrierKind {
        CarrierKind::Finite
    }

    fn identity(&self) -> usize {
        self.identity
    }

    fn oplus(&self, a: &usize, b: &usize) -> usize {
        self.table.op(*a, *b)
    }

    fn neg(&self, a: &usize) -> usize {
        self.inverse[*a]
    }

    fn eq_tolerance(&self) -> f64 {
        0.0
    }

    fn check_domain(&self, a: &usize) -> Result<(), GyroError> {
        if *a < self.order() {
            Ok(())
        } else {
            Err(GyroError::Domain {
                point: alloc::format!("{a}"),
                norm: *a as f64,
                limit: self.order() as f64,
            })
        }
    }

    fn distance(&self, a: &usize, b: &usize) -> f64 {
        if a == b {
            0.0
        } else {
            1.0
        }
    }

    fn magnitude(&self, _a: &usize) -> f64 {
        0.0
    }

    fn elements(&self) -> Option<Vec<usize>> {
        Some((0..self.order()).collect())
    }

    fn describe(&self, a: &usize) -> String {
        self.table.labels()[*a].clone()
    }
}

/// A table that has passed every check of
/// [`validate_table`](super::validate_table), with its gyrations tabulated.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteGyrogroup {
    model: FiniteModel,
    gyr: GyrationTable,
}

impl FiniteGyrogroup {
    pub fn new(table: CayleyTable) -> Result<Self, GyroError> {
        require_gyrogroup(&table)?;
        let gyr = gyr_table(&table)?;
        Ok(Self {
            model: FiniteModel::new(table)?,
            gyr,
        })
    }

    pub fn table(&self) -> &CayleyTable {
        self.model.table()
    }

    pub fn order(&self) -> usize {
        self.model.order()
    }

    pub fn gyrations(&self) -> &GyrationTable {
        &self.gyr
    }

    pub fn model(&self) -> &FiniteModel {
        &self.model
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.model.table.op(a, b)
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.model.inverse[a]
    }

    pub fn identity_index(&self) -> usize {
        self.model.identity
    }
}

impl GyrogroupModel for FiniteGyrogroup {
    type Element = usize;

    fn carrier_kind(&self) -> CarrierKind {
        CarrierKind::Finite
    }

    fn identity(&self) -> usize {
        self.model.identity
    }

    fn oplus(&self, a: &usize, b: &usize) -> usize {
        self.model.oplus(a, b)
    }

    fn neg(&self, a: &usize) -> usize {
        self.model.neg(a)
    }

    /// The tabulated gyration. It was computed from the derived formula,
    /// so this is a lookup rather than an independent closed form.
    fn gyr_closed_form(&self, x: &usize, y: &usize, z: &usize) -> Option<usize> {
        Some(self.gyr.apply(*x, *y, *z))
    }

    fn has_closed_form_gyr(&self) -> bool {
        true
    }

    fn eq_tolerance(&self) -> f64 {
        0.0
    }

    fn check_domain(&self, a: &usize) -> Result<(), GyroError> {
        self.model.check_domain(a)
    }

    fn distance(&self, a: &usize, b: &usize) -> f64 {
        self.model.distance(a, b)
    }

    fn magnitude(&self, a: &usize) -> f64 {
        self.model.magnitude(a)
    }

    fn elements(&self) -> Option<Vec<usize>> {
        self.model.elements()
    }

    fn describe(&self, a: &usize) -> String {
        self.model.describe(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::UniformElementSampler;
    use crate::verify::{check_axioms, check_identities, SuiteConfig};

    #[test]
    fn suites_run_exhaustively_on_tables() {
        let g = FiniteGyrogroup::new(CayleyTable::cyclic(5).unwrap()).unwrap();
        let cfg = SuiteConfig::default();
        let a = check_axioms(&g, &mut UniformElementSampler, &cfg).unwrap();
        assert!(a.pass(), "{a:?}");
        assert!(a.checks.iter().all(|c| c.samples.is_exhaustive()));
        assert!(check_identities(&g, &mut UniformElementSampler, &cfg).unwrap().pass());
    }

    #[test]
    fn axiom_suite_rejects_a_non_gyrogroup() {
        // identity and inverses exist but 1 ⊕ 2 and 2 ⊕ 1 are corrupted
        let mut t = CayleyTable::cyclic(4).unwrap();
        t.set(1, 2, 1).unwrap();
        t.set(2, 1, 1).unwrap();
        assert!(FiniteGyrogroup::new(t.clone()).is_err());
        let m = FiniteModel::new(t).unwrap();
        let r = check_axioms(&m, &mut UniformElementSampler, &SuiteConfig::default()).unwrap();
        assert!(!r.pass());
    }
}
