use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::error::GyroError;
use crate::finite::{is_l_subgyrogroup, is_subgyrogroup, FiniteGyrogroup};
use crate::model::{BallModel, GyrogroupModel};
use crate::sampling::{random_direction, SampleRng};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainKind {
    /// Centered balls `{x : rapidity(x) ≤ t_n}`.
    RadialRapidity,
    /// Explicit subsets of a finite table.
    FiniteDiscrete,
}

/// A decreasing sequence `U_0 ⊇ U_1 ⊇ …` of symmetric neighborhoods of the
/// identity.
pub trait NeighborhoodChain {
    type Model: GyrogroupModel;

    fn model(&self) -> &Self::Model;

    fn kind(&self) -> ChainKind;

    /// Levels `0..=depth_available()` are described explicitly; finite
    /// chains repeat their last level beyond that.
    fn depth_available(&self) -> usize;

    /// `x ∈ U_level`.
    fn contains(&self, level: usize, x: &<Self::Model as GyrogroupModel>::Element) -> bool;

    /// How far `x` lies outside `U_level`: 0 inside, positive outside. The
    /// default only distinguishes the two cases.
    fn level_excess(&self, level: usize, x: &<Self::Model as GyrogroupModel>::Element) -> f64 {
        if self.contains(level, x) {
            0.0
        } else {
            1.0
        }
    }

    /// `x ∈ U_{l_k} ⊕ (… ⊕ (U_{l_2} ⊕ U_{l_1}))` for strictly increasing
    /// `levels = [l_1, …, l_k]`, the set the dyadic recursion assigns to a
    /// rational whose binary digits sit at those levels.
    fn contains_sum(&self, levels: &[usize], x: &<Self::Model as GyrogroupModel>::Element) -> bool;

    /// `x ∈ ∩ U_n`.
    fn in_intersection(&self, x: &<Self::Model as GyrogroupModel>::Element) -> bool;

    /// The members of `∩ U_n` that the chain can list.
    fn intersection_elements(&self) -> Vec<<Self::Model as GyrogroupModel>::Element>;

    /// `U_{n+1} ⊕ U_{n+1} ⊆ U_n` for every level; otherwise a chain error
    /// naming the level and a witness.
    fn check_doubling(&self) -> Result<(), GyroError>;

    /// Extra conditions the quotient by `∩ U_n` needs.
    fn check_quotient(&self) -> Result<(), GyroError> {
        Ok(())
    }

    /// Every member of `U_level`, when the carrier is finite.
    fn members(&self, level: usize) -> Option<Vec<<Self::Model as GyrogroupModel>::Element>>;

    /// A draw spread around `U_level`, both inside and outside it.
    fn probe(&self, level: usize, rng: &mut SampleRng) -> <Self::Model as GyrogroupModel>::Element;

    /// A draw from `U_level`.
    fn sample_member(&self, level: usize, rng: &mut SampleRng) -> <Self::Model as GyrogroupModel>::Element;

    /// Triples of `U_level` chosen to make `u ⊕ (v ⊕ w)` as large as possible.
    fn extremal_triples(&self, level: usize) -> Vec<[<Self::Model as GyrogroupModel>::Element; 3]>;

    /// `U_{level+1} ⊕ (U_{level+1} ⊕ U_{level+1}) ⊆ U_level` decided from the
    /// chain's parameters, when they determine it.
    fn triple_condition(&self, _level: usize) -> Option<bool> {
        None
    }

    /// Whether `∩ U_n` is a subgyrogroup, when the chain can decide it.
    fn intersection_is_subgyrogroup(&self) -> Option<bool> {
        None
    }
}

/// `U_n = {x : rapidity(x) ≤ t0 · ratio^n}` on a ball model.
///
/// Collinear same-direction addition adds rapidities and any sum is bounded
/// by the sum of rapidities, so a ball of rapidity `a` plus a ball of
/// rapidity `b` is exactly the ball of rapidity `a + b`. Membership in the
/// nested sums is therefore a single comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialChain<M> {
    model: M,
    t0: f64,
    ratio: f64,
    depth: usize,
}

impl<M: BallModel> RadialChain<M> {
    pub fn new(model: M, t0: f64, ratio: f64, depth: usize) -> Result<Self, GyroError> {
        if !(t0 > 0.0 && t0.is_finite()) {
            return Err(GyroError::Precondition(format!("t0 must be positive and finite, got {t0}")));
        }
        if !(ratio > 0.0 && ratio < 1.0) {
            return Err(GyroError::Precondition(format!("ratio must lie in (0, 1), got {ratio}")));
        }
        Ok(Self { model, t0, ratio, depth })
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    pub fn ratio(&self) -> f64 {
        self.ratio
    }

    /// `t_n = t0 · ratio^n`.
    pub fn radius(&self, level: usize) -> f64 {
        self.t0 * libm::pow(self.ratio, level as f64)
    }

    /// The depth-`depth` prenorm of a point at rapidity `rho`, computed by
    /// choosing binary digits greedily instead of searching.
    ///
    /// The largest dyadic `r' = k/2^depth` whose rapidity sum stays below
    /// `rho` is built digit by digit; the prenorm is the next dyadic up.
    pub fn staircase(&self, rho: f64, depth: u32) -> f64 {
        if rho <= 0.0 {
            return 0.0;
        }
        if rho > self.t0 {
            return 1.0;
        }
        let mut sum = 0.0;
        let mut below = 0.0;
        let mut weight = 1.0;
        for j in 1..=depth as usize {
            weight *= 0.5;
            let t = self.radius(j);
            if sum + t < rho {
                sum += t;
                below += weight;
            }
        }
        below + weight
    }
}

impl<M: BallModel> NeighborhoodChain for RadialChain<M> {
    type Model = M;

    fn model(&self) -> &M {
        &self.model
    }

    fn kind(&self) -> ChainKind {
        ChainKind::RadialRapidity
    }

    fn depth_available(&self) -> usize {
        self.depth
    }

    fn contains(&self, level: usize, x: &M::Element) -> bool {
        self.model.rapidity(x) <= self.radius(level)
    }

    fn contains_sum(&self, levels: &[usize], x: &M::Element) -> bool {
        let reach: f64 = levels.iter().map(|&l| self.radius(l)).sum();
        self.model.rapidity(x) <= reach
    }

    fn in_intersection(&self, x: &M::Element) -> bool {
        self.model.norm(x) == 0.0
    }

    fn intersection_elements(&self) -> Vec<M::Element> {
        vec![self.model.identity()]
    }

    fn check_doubling(&self) -> Result<(), GyroError> {
        if 2.0 * self.ratio <= 1.0 {
            return Ok(());
        }
        let t1 = self.radius(1);
        Err(GyroError::Chain {
            level: 0,
            detail: format!(
                "u = v at rapidity t_1 = {t1} on the real axis give u ⊕ v at rapidity {} > t_0 = {}",
                2.0 * t1,
                self.t0
            ),
        })
    }

    fn members(&self, _level: usize) -> Option<Vec<M::Element>> {
        None
    }

    fn probe(&self, level: usize, rng: &mut SampleRng) -> M::Element {
        let dir = random_direction(self.model.dim(), rng);
        let t = 2.0 * self.radius(level) * rng.random::<f64>();
        self.model.from_rapidity(t, dir)
    }

    fn sample_member(&self, level: usize, rng: &mut SampleRng) -> M::Element {
        let dir = random_direction(self.model.dim(), rng);
        let t = self.radius(level) * rng.random::<f64>();
        self.model.from_rapidity(t, dir)
    }

    fn extremal_triples(&self, level: usize) -> Vec<[M::Element; 3]> {
        let t = self.radius(level) * (1.0 - 1e-12);
        let e = self.model.from_rapidity(t, [1.0, 0.0, 0.0]);
        vec![[e.clone(), e.clone(), e]]
    }

    fn level_excess(&self, level: usize, x: &M::Element) -> f64 {
        if self.contains(level, x) {
            0.0
        } else {
            (self.model.rapidity(x) - self.radius(level)).max(f64::MIN_POSITIVE)
        }
    }

    fn triple_condition(&self, level: usize) -> Option<bool> {
        Some(3.0 * self.radius(level + 1) <= self.radius(level) * (1.0 + 1e-12))
    }
}

/// Explicit levels of a finite gyrogroup; the last level repeats forever.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteChain {
    group: FiniteGyrogroup,
    levels: Vec<Vec<bool>>,
}

impl FiniteChain {
    /// Checks each level contains the identity, is symmetric, and is
    /// contained in the previous one.
    pub fn new(group: FiniteGyrogroup, levels: Vec<Vec<usize>>) -> Result<Self, GyroError> {
        let n = group.order();
        if levels.is_empty() {
            return Err(GyroError::Precondition("a chain needs at least one level".into()));
        }
        let mut masks = Vec::with_capacity(levels.len());
        for (l, members) in levels.iter().enumerate() {
            let mut m = vec![false; n];
            for &a in members {
                if a >= n {
                    return Err(GyroError::Chain {
                        level: l,
                        detail: format!("index {a} is out of range 0..{n}"),
                    });
                }
                m[a] = true;
            }
            if !m[group.identity_index()] {
                return Err(GyroError::Chain {
                    level: l,
                    detail: "level does not contain the identity".into(),
                });
            }
            if let Some(a) = (0..n).find(|&a| m[a] && !m[group.inv(a)]) {
                return Err(GyroError::Chain {
                    level: l,
                    detail: format!("level holds {a} but not its inverse"),
                });
            }
            if let Some(prev) = masks.last() {
                let prev: &Vec<bool> = prev;
                if let Some(a) = (0..n).find(|&a| m[a] && !prev[a]) {
                    return Err(GyroError::Chain {
                        level: l,
                        detail: format!("{a} lies in this level but not the previous one"),
                    });
                }
            }
            masks.push(m);
        }
        Ok(Self { group, levels: masks })
    }

    /// `U_n = H` for every `n`.
    pub fn constant(group: FiniteGyrogroup, h: &[usize]) -> Result<Self, GyroError> {
        Self::new(group, vec![h.to_vec()])
    }

    pub fn group(&self) -> &FiniteGyrogroup {
        &self.group
    }

    fn level(&self, l: usize) -> &[bool] {
        &self.levels[l.min(self.levels.len() - 1)]
    }

    fn sum(&self, a: &[bool], b: &[bool]) -> Vec<bool> {
        let n = self.group.order();
        let mut out = vec![false; n];
        for x in (0..n).filter(|&x| a[x]) {
            for y in (0..n).filter(|&y| b[y]) {
                out[self.group.op(x, y)] = true;
            }
        }
        out
    }

    fn listed(&self, mask: &[bool]) -> Vec<usize> {
        (0..self.group.order()).filter(|&i| mask[i]).collect()
    }
}

impl NeighborhoodChain for FiniteChain {
    type Model = FiniteGyrogroup;

    fn model(&self) -> &FiniteGyrogroup {
        &self.group
    }

    fn kind(&self) -> ChainKind {
        ChainKind::FiniteDiscrete
    }

    fn depth_available(&self) -> usize {
        self.levels.len() - 1
    }

    fn contains(&self, level: usize, x: &usize) -> bool {
        self.level(level)[*x]
    }

    fn contains_sum(&self, levels: &[usize], x: &usize) -> bool {
        let Some((&first, rest)) = levels.split_first() else {
            return false;
        };
        let mut acc = self.level(first).to_vec();
        for &l in rest {
            acc = self.sum(self.level(l), &acc);
        }
        acc[*x]
    }

    fn in_intersection(&self, x: &usize) -> bool {
        self.level(usize::MAX)[*x]
    }

    fn intersection_elements(&self) -> Vec<usize> {
        self.listed(self.level(usize::MAX))
    }

    fn check_doubling(&self) -> Result<(), GyroError> {
        for l in 0..self.levels.len() {
            let next = self.level(l + 1);
            let sum = self.sum(next, next);
            let cur = self.level(l);
            if let Some(z) = (0..self.group.order()).find(|&z| sum[z] && !cur[z]) {
                let (x, y) = self
                    .listed(next)
                    .into_iter()
                    .flat_map(|x| self.listed(next).into_iter().map(move |y| (x, y)))
                    .find(|&(x, y)| self.group.op(x, y) == z)
                    .unwrap_or((z, z));
                return Err(GyroError::Chain {
                    level: l,
                    detail: format!("{x} ⊕ {y} = {z} leaves level {l}"),
                });
            }
        }
        Ok(())
    }

    fn check_quotient(&self) -> Result<(), GyroError> {
        let p = self.intersection_elements();
        if is_l_subgyrogroup(&self.group, &p)? {
            Ok(())
        } else {
            Err(GyroError::Precondition(format!("∩U_n = {p:?} is not an L-subgyrogroup")))
        }
    }

    fn members(&self, level: usize) -> Option<Vec<usize>> {
        Some(self.listed(self.level(level)))
    }

    fn probe(&self, _level: usize, rng: &mut SampleRng) -> usize {
        rng.random_range(0..self.group.order())
    }

    fn sample_member(&self, level: usize, rng: &mut SampleRng) -> usize {
        let m = self.listed(self.level(level));
        m[rng.random_range(0..m.len())]
    }

    fn extremal_triples(&self, _level: usize) -> Vec<[usize; 3]> {
        Vec::new()
    }

    fn intersection_is_subgyrogroup(&self) -> Option<bool> {
        Some(is_subgyrogroup(&self.group, &self.intersection_elements()))
    }
}
