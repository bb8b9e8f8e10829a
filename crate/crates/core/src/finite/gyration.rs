use alloc::vec::Vec;

use super::table::CayleyTable;
use super::validate::{derived_gyr, inverses, non_bijective_row};
use crate::error::GyroError;

/// Every gyration `gyr[x, y]` of a table, as a permutation of `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GyrationTable {
    order: usize,
    perms: Vec<Vec<usize>>,
}

impl GyrationTable {
    pub fn order(&self) -> usize {
        self.order
    }

    /// `gyr[x, y]` as the list of images of `0..n`.
    pub fn get(&self, x: usize, y: usize) -> &[usize] {
        &self.perms[x * self.order + y]
    }

    #[inline]
    pub fn apply(&self, x: usize, y: usize, z: usize) -> usize {
        self.perms[x * self.order + y][z]
    }

    pub fn is_all_identity(&self) -> bool {
        self.perms.iter().all(|p| p.iter().enumerate().all(|(i, &v)| i == v))
    }
}

/// Tabulates `gyr[x, y](z) = ⊖(x⊕y) ⊕ (x ⊕ (y ⊕ z))` for all `x, y, z`.
///
/// Needs a two-sided identity and unique two-sided inverses; a left
/// translation that is not a bijection is reported as an axiom violation,
/// since the formula would then not define bijections.
pub fn gyr_table(t: &CayleyTable) -> Result<GyrationTable, GyroError> {
    let e = t
        .identity()
        .ok_or_else(|| GyroError::Precondition("table has no two-sided identity".into()))?;
    let inv = inverses(t, e).map_err(|a| GyroError::Precondition(alloc::format!("element {a} has no unique two-sided inverse")))?;
    if let Some(w) = non_bijective_row(t) {
        return Err(GyroError::Axiom {
            axiom: "left_translations_bijective".into(),
            witness: w.to_vec(),
        });
    }
    let n = t.order();
    let perms = (0..n * n)
        .map(|k| (0..n).map(|z| derived_gyr(t, &inv, k / n, k % n, z)).collect())
        .collect();
    Ok(GyrationTable { order: n, perms })
}
