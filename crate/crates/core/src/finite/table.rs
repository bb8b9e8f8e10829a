use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::GyroError;

/// A finite binary operation given by its multiplication table.
///
/// `rows[a][b]` is the index of `a ⊕ b`. Construction only checks shape;
/// axioms are checked by [`validate_table`](super::validate_table).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CayleyTable {
    labels: Vec<String>,
    rows: Vec<Vec<usize>>,
}

impl CayleyTable {
    pub fn new(labels: Vec<String>, rows: Vec<Vec<usize>>) -> Result<Self, GyroError> {
        let n = labels.len();
        if n == 0 {
            return Err(GyroError::Shape("a table needs at least one element".into()));
        }
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != n {
            let dup = labels.iter().enumerate().find(|(i, l)| labels[..*i].contains(l)).map(|(_, l)| l);
            return Err(GyroError::Shape(format!("duplicate label {:?}", dup.unwrap_or(&labels[0]))));
        }
        if rows.len() != n {
            return Err(GyroError::Shape(format!("expected {n} rows, found {}", rows.len())));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GyroError::Shape(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            if let Some(j) = row.iter().position(|&v| v >= n) {
                return Err(GyroError::Shape(format!("cell ({i}, {j}) = {} is out of range 0..{n}", row[j])));
            }
        }
        Ok(Self { labels, rows })
    }

    /// A table labelled `"0"`, `"1"`, ...
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self, GyroError> {
        let labels = (0..rows.len()).map(|i| i.to_string()).collect();
        Self::new(labels, rows)
    }

    /// The cyclic group `Z_n` under addition mod `n`.
    pub fn cyclic(n: usize) -> Result<Self, GyroError> {
        Self::from_rows((0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect())
    }

    /// The Klein four-group, `Z2 × Z2` with `a ⊕ b = a xor b`.
    pub fn klein() -> Self {
        let rows = (0..4).map(|a: usize| (0..4).map(|b| a ^ b).collect()).collect();
        let labels = ["e", "a", "b", "c"].iter().map(|s| s.to_string()).collect();
        Self { labels, rows }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.rows[a][b]
    }

    /// The two-sided identity, if any. (Two two-sided identities coincide,
    /// so at most one exists.)
    pub fn identity(&self) -> Option<usize> {
        let n = self.order();
        (0..n).find(|&e| (0..n).all(|a| self.op(e, a) == a && self.op(a, e) == a))
    }

    /// Replaces cell `(a, b)`.
    pub fn set(&mut self, a: usize, b: usize, value: usize) -> Result<(), GyroError> {
        let n = self.order();
        if a >= n || b >= n || value >= n {
            return Err(GyroError::Shape(format!("cell ({a}, {b}) = {value} is out of range 0..{n}")));
        }
        self.rows[a][b] = value;
        Ok(())
    }

    /// The isomorphic table in which old element `i` becomes `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, GyroError> {
        let n = self.order();
        let mut seen = alloc::vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || core::mem::replace(&mut seen[p], true)) {
            return Err(GyroError::Shape(format!("{perm:?} is not a permutation of 0..{n}")));
        }
        let mut labels = alloc::vec![String::new(); n];
        let mut rows = alloc::vec![alloc::vec![0; n]; n];
        for a in 0..n {
            labels[perm[a]] = self.labels[a].clone();
            for b in 0..n {
                rows[perm[a]][perm[b]] = perm[self.op(a, b)];
            }
        }
        Ok(Self { labels, rows })
    }

    /// The same table with its identity moved to index 0 by swapping it with
    /// the element there.
    pub fn with_identity_first(&self) -> Result<Self, GyroError> {
        let e = self
            .identity()
            .ok_or_else(|| GyroError::Precondition("table has no two-sided identity".into()))?;
        let mut perm: Vec<usize> = (0..self.order()).collect();
        perm.swap(0, e);
        self.relabel(&perm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn shape_errors() {
        assert!(CayleyTable::from_rows(vec![]).is_err());
        assert!(CayleyTable::from_rows(vec![vec![0, 1], vec![1]]).is_err());
        assert!(CayleyTable::from_rows(vec![vec![0, 1], vec![1, 2]]).is_err());
        let labels = vec!["x".to_string(), "x".to_string()];
        assert!(CayleyTable::new(labels, vec![vec![0, 1], vec![1, 0]]).is_err());
    }

    #[test]
    fn identity_detection_and_reindexing() {
        // Z3 with the identity stored at index 2
        let t = CayleyTable::from_rows(vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]]).unwrap();
        assert_eq!(t.identity(), Some(2));
        let u = t.with_identity_first().unwrap();
        assert_eq!(u.identity(), Some(0));
        assert_eq!(u.labels()[0], "2");
        assert_eq!(CayleyTable::cyclic(5).unwrap().identity(), Some(0));
        let none = CayleyTable::from_rows(vec![vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(none.identity(), None);
        assert!(none.with_identity_first().is_err());
    }

    #[test]
    fn relabel_is_an_isomorphism() {
        let t = CayleyTable::cyclic(4).unwrap();
        let perm = [0, 3, 1, 2];
        let u = t.relabel(&perm).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(u.op(perm[a], perm[b]), perm[t.op(a, b)]);
            }
        }
        assert!(t.relabel(&[0, 0, 1, 2]).is_err());
    }
}
