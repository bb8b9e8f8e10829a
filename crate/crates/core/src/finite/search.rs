use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use itertools::Itertools;

use super::table::CayleyTable;
use super::validate::run_validation;
use crate::error::GyroError;

/// Largest order [`search_gyrogroups`] accepts.
pub const MAX_SEARCH_ORDER: usize = 6;

/// All gyrogroups of order `n` up to relabelings that fix the identity.
///
/// A gyrogroup is a loop (both translations are bijections), so the search
/// runs over Latin squares whose first row and column are the identity
/// `0`, keeps those passing every axiom, and groups them by their smallest
/// relabeling. With `canonical_identity` each class is returned in that
/// smallest form; otherwise as the first member the search met. Results are
/// sorted by their rows and cut to `max_results`.
pub fn search_gyrogroups(n: usize, canonical_identity: bool, max_results: usize) -> Result<Vec<CayleyTable>, GyroError> {
    if n == 0 {
        return Err(GyroError::Precondition("order must be at least 1".into()));
    }
    if n > MAX_SEARCH_ORDER {
        return Err(GyroError::ResourceLimit(format!(
            "exhaustive search is limited to order {MAX_SEARCH_ORDER}, got {n}"
        )));
    }
    let perms: Vec<Vec<usize>> = (1..n)
        .permutations(n - 1)
        .map(|p| core::iter::once(0).chain(p).collect())
        .collect();
    let mut classes: BTreeMap<Vec<Vec<usize>>, Vec<Vec<usize>>> = BTreeMap::new();
    let mut rows: Vec<Vec<usize>> = (0..n).map(|a| {
        let mut r = vec![usize::MAX; n];
        r[0] = a;
        r
    }).collect();
    rows[0] = (0..n).collect();
    let mut visit = |rows: &Vec<Vec<usize>>| -> Result<(), GyroError> {
        let t = CayleyTable::from_rows(rows.clone())?;
        if run_validation(&t).1.is_none() {
            let canon = perms
                .iter()
                .map(|p| relabel_rows(rows, p))
                .min()
                .unwrap_or_else(|| rows.clone());
            classes.entry(canon).or_insert_with(|| rows.clone());
        }
        Ok(())
    };
    fill(&mut rows, n, 1, 1, &mut visit)?;
    let mut out: Vec<Vec<Vec<usize>>> = classes
        .into_iter()
        .map(|(canon, first)| if canonical_identity { canon } else { first })
        .collect();
    out.sort();
    out.truncate(max_results);
    out.into_iter().map(CayleyTable::from_rows).collect()
}

fn relabel_rows(rows: &[Vec<usize>], p: &[usize]) -> Vec<Vec<usize>> {
    let n = rows.len();
    let mut out = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            out[p[a]][p[b]] = p[rows[a][b]];
        }
    }
    out
}

fn fill(
    rows: &mut Vec<Vec<usize>>,
    n: usize,
    a: usize,
    b: usize,
    visit: &mut impl FnMut(&Vec<Vec<usize>>) -> Result<(), GyroError>,
) -> Result<(), GyroError> {
    if a == n {
        return visit(rows);
    }
    let (na, nb) = if b + 1 == n { (a + 1, 1) } else { (a, b + 1) };
    for v in 0..n {
        let in_row = rows[a][..b].contains(&v);
        let in_col = (0..a).any(|r| rows[r][b] == v);
        if !in_row && !in_col {
            rows[a][b] = v;
            fill(rows, n, na, nb, visit)?;
        }
    }
    rows[a][b] = usize::MAX;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::validate_table;

    #[test]
    fn small_orders() {
        let one = search_gyrogroups(1, true, 10).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].rows(), &[vec![0]]);
        let two = search_gyrogroups(2, true, 10).unwrap();
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].rows(), CayleyTable::cyclic(2).unwrap().rows());
    }

    #[test]
    fn results_validate_and_respect_limits() {
        let four = search_gyrogroups(4, true, 10).unwrap();
        assert_eq!(four.len(), 2);
        assert!(four.iter().all(|t| validate_table(t).pass()));
        assert_eq!(search_gyrogroups(4, true, 1).unwrap().len(), 1);
        assert!(search_gyrogroups(4, true, 0).unwrap().is_empty());
        assert!(matches!(search_gyrogroups(7, true, 1), Err(GyroError::ResourceLimit(_))));
        assert!(search_gyrogroups(0, true, 1).is_err());
    }

    #[test]
    fn representatives_are_deterministic() {
        let a = search_gyrogroups(5, false, 10).unwrap();
        let b = search_gyrogroups(5, false, 10).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|t| validate_table(t).pass()));
    }
}
