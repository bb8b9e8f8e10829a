use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::model::FiniteGyrogroup;
use super::subgyro::is_l_subgyrogroup;
use crate::error::GyroError;

/// The left cosets `a ⊕ H` and the projection `π(a)` onto them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetPartition {
    /// Sorted blocks, ordered by their smallest element.
    pub blocks: Vec<Vec<usize>>,
    /// `projection[a]` is the index of the block containing `a ⊕ H`.
    pub projection: Vec<usize>,
}

impl CosetPartition {
    /// Union is `0..n`, blocks are disjoint and all have `block_size` members.
    pub fn is_partition(&self, n: usize, block_size: usize) -> bool {
        let mut hit = vec![0usize; n];
        for b in &self.blocks {
            if b.len() != block_size {
                return false;
            }
            for &a in b {
                if a >= n {
                    return false;
                }
                hit[a] += 1;
            }
        }
        hit.iter().all(|&c| c == 1)
    }
}

/// Partitions `G` into the left cosets of an L-subgyrogroup `H`.
///
/// Non-L subgyrogroups are refused: their cosets need not partition `G`.
pub fn coset_partition(g: &FiniteGyrogroup, h: &[usize]) -> Result<CosetPartition, GyroError> {
    if !is_l_subgyrogroup(g, h)? {
        return Err(GyroError::Precondition(format!("{h:?} is not an L-subgyrogroup")));
    }
    let n = g.order();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut projection = vec![usize::MAX; n];
    for (a, slot) in projection.iter_mut().enumerate() {
        let mut coset: Vec<usize> = h.iter().map(|&x| g.op(a, x)).collect();
        coset.sort_unstable();
        coset.dedup();
        let idx = match blocks.iter().position(|b| *b == coset) {
            Some(i) => i,
            None => {
                if let Some(b) = blocks.iter().find(|b| b.iter().any(|x| coset.binary_search(x).is_ok())) {
                    let shared = *b.iter().find(|x| coset.binary_search(x).is_ok()).unwrap_or(&0);
                    return Err(GyroError::Axiom {
                        axiom: "coset_partition".into(),
                        witness: vec![a, b[0], shared],
                    });
                }
                blocks.push(coset);
                blocks.len() - 1
            }
        };
        *slot = idx;
    }
    Ok(CosetPartition { blocks, projection })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::CayleyTable;

    #[test]
    fn z4_mod_two() {
        let g = FiniteGyrogroup::new(CayleyTable::cyclic(4).unwrap()).unwrap();
        let p = coset_partition(&g, &[0, 2]).unwrap();
        assert_eq!(p.blocks, vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(p.projection, vec![0, 1, 0, 1]);
        assert!(p.is_partition(4, 2));
    }

    #[test]
    fn trivial_and_full_subgroups() {
        let g = FiniteGyrogroup::new(CayleyTable::cyclic(5).unwrap()).unwrap();
        let all: Vec<usize> = (0..5).collect();
        assert_eq!(coset_partition(&g, &all).unwrap().blocks, vec![all.clone()]);
        let singles = coset_partition(&g, &[0]).unwrap();
        assert_eq!(singles.blocks.len(), 5);
        assert!(singles.is_partition(5, 1));
    }

    #[test]
    fn non_subgyrogroups_are_refused() {
        let g = FiniteGyrogroup::new(CayleyTable::cyclic(4).unwrap()).unwrap();
        assert!(matches!(coset_partition(&g, &[0, 1]), Err(GyroError::Precondition(_))));
    }
}
