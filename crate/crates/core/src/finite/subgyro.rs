use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use super::model::FiniteGyrogroup;
use crate::error::GyroError;

/// Largest order for which subsets are enumerated by scanning the powerset.
pub const POWERSET_LIMIT: usize = 12;

/// A subset of a finite gyrogroup with its subgyrogroup flags.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SubgyrogroupSet {
    /// Sorted element indices.
    pub members: Vec<usize>,
    pub is_subgyrogroup: bool,
    pub is_l_subgyrogroup: bool,
}

impl SubgyrogroupSet {
    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Classifies an arbitrary set of indices.
    pub fn classify(g: &FiniteGyrogroup, members: &[usize]) -> Self {
        let mask = mask_of(g.order(), members);
        let members: Vec<usize> = (0..g.order()).filter(|&i| mask[i]).collect();
        let sub = is_subgyrogroup_mask(g, &mask);
        Self {
            is_l_subgyrogroup: sub && is_l_mask(g, &mask),
            members,
            is_subgyrogroup: sub,
        }
    }
}

fn mask_of(n: usize, members: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &a in members {
        if a < n {
            m[a] = true;
        }
    }
    m
}

/// Whether `gyr[a, b]` maps the set onto itself. Gyrations are bijections of
/// `G`, so mapping into the set is enough.
fn maps_onto(g: &FiniteGyrogroup, mask: &[bool], a: usize, b: usize) -> bool {
    let p = g.gyrations().get(a, b);
    (0..g.order()).filter(|&h| mask[h]).all(|h| mask[p[h]])
}

fn is_subgyrogroup_mask(g: &FiniteGyrogroup, mask: &[bool]) -> bool {
    let n = g.order();
    if mask.len() != n || !mask[g.identity_index()] {
        return false;
    }
    let hs: Vec<usize> = (0..n).filter(|&i| mask[i]).collect();
    hs.iter().all(|&a| mask[g.inv(a)])
        && hs.iter().all(|&a| hs.iter().all(|&b| mask[g.op(a, b)]))
        && hs.iter().all(|&a| hs.iter().all(|&b| maps_onto(g, mask, a, b)))
}

fn is_l_mask(g: &FiniteGyrogroup, mask: &[bool]) -> bool {
    let n = g.order();
    (0..n).all(|a| (0..n).filter(|&h| mask[h]).all(|h| maps_onto(g, mask, a, h)))
}

/// `H` contains the identity, is closed under `⊕` and `⊖`, and every
/// `gyr[a, b]` with `a, b ∈ H` restricts to a bijection of `H`. Because the
/// gyration is an automorphism of `G`, the restriction is then an
/// automorphism of `H`'s induced table.
pub fn is_subgyrogroup(g: &FiniteGyrogroup, members: &[usize]) -> bool {
    members.iter().all(|&a| a < g.order()) && is_subgyrogroup_mask(g, &mask_of(g.order(), members))
}

/// `gyr[a, h](H) = H` for every `a ∈ G` and `h ∈ H`.
pub fn is_l_subgyrogroup(g: &FiniteGyrogroup, members: &[usize]) -> Result<bool, GyroError> {
    if !is_subgyrogroup(g, members) {
        return Err(GyroError::Precondition(alloc::format!("{members:?} is not a subgyrogroup")));
    }
    Ok(is_l_mask(g, &mask_of(g.order(), members)))
}

/// The smallest set containing `seed` and the identity that is closed under
/// `⊕`, `⊖` and the gyrations of its own pairs.
pub fn closure(g: &FiniteGyrogroup, seed: &[usize]) -> Vec<usize> {
    let n = g.order();
    let mut mask = vec![false; n];
    let mut members = Vec::new();
    let mut queue = VecDeque::new();
    let add = |x: usize, mask: &mut Vec<bool>, members: &mut Vec<usize>, queue: &mut VecDeque<usize>| {
        if !mask[x] {
            mask[x] = true;
            members.push(x);
            queue.push_back(x);
        }
    };
    add(g.identity_index(), &mut mask, &mut members, &mut queue);
    for &s in seed {
        add(s, &mut mask, &mut members, &mut queue);
    }
    while let Some(x) = queue.pop_front() {
        add(g.inv(x), &mut mask, &mut members, &mut queue);
        let snapshot = members.clone();
        for &y in &snapshot {
            add(g.op(x, y), &mut mask, &mut members, &mut queue);
            add(g.op(y, x), &mut mask, &mut members, &mut queue);
            for &z in &snapshot {
                for (a, b, c) in [(x, y, z), (y, x, z), (y, z, x)] {
                    add(g.gyrations().apply(a, b, c), &mut mask, &mut members, &mut queue);
                }
            }
        }
    }
    members.sort_unstable();
    members
}

/// Every subgyrogroup, each flagged for the L-property, sorted by size and
/// then by members.
///
/// Orders up to [`POWERSET_LIMIT`] scan all subsets containing the
/// identity. Larger orders grow subgyrogroups from `{0}` by adjoining one
/// element and closing: every subgyrogroup `K` is reached, since closing any
/// found `H ⊆ K` together with some `a ∈ K \ H` stays inside `K`.
pub fn enumerate_subgyrogroups(g: &FiniteGyrogroup) -> Vec<SubgyrogroupSet> {
    let found = if g.order() <= POWERSET_LIMIT {
        powerset_scan(g)
    } else {
        closure_search(g)
    };
    let mut out: Vec<SubgyrogroupSet> = found
        .into_iter()
        .map(|members| {
            let mask = mask_of(g.order(), &members);
            SubgyrogroupSet {
                is_l_subgyrogroup: is_l_mask(g, &mask),
                members,
                is_subgyrogroup: true,
            }
        })
        .collect();
    out.sort_by(|a, b| (a.len(), &a.members).cmp(&(b.len(), &b.members)));
    out
}

pub(crate) fn powerset_scan(g: &FiniteGyrogroup) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    let e = g.identity_index();
    let others: Vec<usize> = (0..n).filter(|&i| i != e).collect();
    let mut out = BTreeSet::new();
    for bits in 0u64..(1u64 << others.len()) {
        let mut mask = vec![false; n];
        mask[e] = true;
        for (k, &a) in others.iter().enumerate() {
            if bits >> k & 1 == 1 {
                mask[a] = true;
            }
        }
        if is_subgyrogroup_mask(g, &mask) {
            out.insert((0..n).filter(|&i| mask[i]).collect());
        }
    }
    out
}

pub(crate) fn closure_search(g: &FiniteGyrogroup) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    let start = closure(g, &[]);
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(h) = queue.pop_front() {
        for a in 0..n {
            if h.binary_search(&a).is_ok() {
                continue;
            }
            let mut seed = h.clone();
            seed.push(a);
            let k = closure(g, &seed);
            if seen.insert(k.clone()) {
                queue.push_back(k);
            }
        }
    }
    seen
}
