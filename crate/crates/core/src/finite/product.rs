use alloc::format;
use alloc::vec::Vec;

use itertools::Itertools;

use super::table::CayleyTable;
use super::validate::require_gyrogroup;
use crate::error::GyroError;

/// The direct product table of two gyrogroups. The pair `(a, b)` gets index
/// `a · |B| + b` and the label `"(a,b)"`.
pub fn product_table(first: &CayleyTable, second: &CayleyTable) -> Result<CayleyTable, GyroError> {
    for (name, t) in [("first", first), ("second", second)] {
        require_gyrogroup(t).map_err(|e| GyroError::Precondition(format!("{name} factor is not a gyrogroup: {e}")))?;
    }
    let (n1, n2) = (first.order(), second.order());
    let labels = (0..n1)
        .cartesian_product(0..n2)
        .map(|(a, b)| format!("({},{})", first.labels()[a], second.labels()[b]))
        .collect();
    let rows = (0..n1)
        .cartesian_product(0..n2)
        .map(|(a1, a2)| {
            (0..n1)
                .cartesian_product(0..n2)
                .map(|(b1, b2)| first.op(a1, b1) * n2 + second.op(a2, b2))
                .collect()
        })
        .collect();
    CayleyTable::new(labels, rows)
}

/// Indices of `A × B` in a product table whose second factor has order `n2`.
pub fn product_subset(a: &[usize], b: &[usize], n2: usize) -> Vec<usize> {
    let mut out: Vec<usize> = a.iter().cartesian_product(b).map(|(x, y)| x * n2 + y).collect();
    out.sort_unstable();
    out
}
