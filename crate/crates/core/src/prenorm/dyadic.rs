use alloc::format;
use alloc::vec::Vec;

use super::chain::NeighborhoodChain;
use crate::error::GyroError;
use crate::model::GyrogroupModel;

/// Deepest supported dyadic level; `k / 2^n` stays exact in an `f64`.
pub const MAX_DEPTH: u32 = 52;

/// Default evaluation depth.
pub const DEFAULT_DEPTH: u32 = 24;

type Elem<C> = <<C as NeighborhoodChain>::Model as GyrogroupModel>::Element;

/// The sets `V(m/2^n)` of a chain:
///
/// * `V(1) = U_0` and `V(1/2^n) = U_n`,
/// * `V(2m/2^n) = V(m/2^{n−1})`,
/// * `V((2m+1)/2^n) = U_n ⊕ V(m/2^{n−1})`,
/// * `V(m/2^n) = G` when `m > 2^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct DyadicFamily<C> {
    chain: C,
    max_depth: u32,
}

/// Builds the dyadic family of `chain`, after checking the doubling
/// condition `U_{n+1} ⊕ U_{n+1} ⊆ U_n` the recursion relies on.
pub fn build_dyadic<C: NeighborhoodChain>(chain: C, max_depth: u32) -> Result<DyadicFamily<C>, GyroError> {
    if max_depth == 0 || max_depth > MAX_DEPTH {
        return Err(GyroError::Precondition(format!("depth must lie in 1..={MAX_DEPTH}, got {max_depth}")));
    }
    chain.check_doubling()?;
    Ok(DyadicFamily { chain, max_depth })
}

/// Levels of the binary digits of `m/2^n ∈ (0, 1]`, shallowest first; `1`
/// itself is level 0.
pub fn digit_levels(m: u64, n: u32) -> Vec<usize> {
    if m == 0 {
        return Vec::new();
    }
    let (mut m, mut n) = (m, n);
    while n > 0 && m % 2 == 0 {
        m /= 2;
        n -= 1;
    }
    if n == 0 {
        return alloc::vec![0];
    }
    (1..=n as usize).filter(|&j| (m >> (n as usize - j)) & 1 == 1).collect()
}

impl<C: NeighborhoodChain> DyadicFamily<C> {
    pub fn chain(&self) -> &C {
        &self.chain
    }

    pub fn max_depth(&self) -> u32 {
        self.max_depth
    }

    /// `x ∈ V(m/2^n)`, `n ≤ 63`. `V(0)` is taken to be `∩ U_n`.
    pub fn contains(&self, m: u64, n: u32, x: &Elem<C>) -> bool {
        if m == 0 {
            return self.chain.in_intersection(x);
        }
        if n < 64 && m > (1u64 << n) {
            return true;
        }
        self.chain.contains_sum(&digit_levels(m, n), x)
    }
}

/// `N(x) = inf { r : x ∈ V(r) }` over dyadics of depth at most `max_depth`.
///
/// Values lie in `[0, 1]`: points of `∩ U_n` get 0, points outside `V(1)`
/// get 1 (they lie in `V(r)` for every `r > 1`), and everything else the
/// smallest `k/2^depth` whose set holds it.
#[derive(Debug, Clone, PartialEq)]
pub struct Prenorm<C> {
    family: DyadicFamily<C>,
}

impl<C: NeighborhoodChain> Prenorm<C> {
    pub fn new(family: DyadicFamily<C>) -> Self {
        Self { family }
    }

    pub fn family(&self) -> &DyadicFamily<C> {
        &self.family
    }

    pub fn chain(&self) -> &C {
        self.family.chain()
    }

    pub fn depth(&self) -> u32 {
        self.family.max_depth
    }

    /// `2^−depth`, the grid spacing of the values.
    pub fn resolution(&self) -> f64 {
        libm::ldexp(1.0, -(self.depth() as i32))
    }

    pub fn eval(&self, x: &Elem<C>) -> f64 {
        if self.family.chain.in_intersection(x) {
            return 0.0;
        }
        let d = self.depth();
        let full = 1u64 << d;
        if !self.family.contains(full, d, x) {
            return 1.0;
        }
        // V is monotone in r, so the first k with x ∈ V(k/2^d) is a boundary
        let (mut lo, mut hi) = (1u64, full);
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if self.family.contains(mid, d, x) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        lo as f64 * self.resolution()
    }
}

/// `d(x, y) = |N(x) − N(y)|`.
pub fn pseudometric_d<C: NeighborhoodChain>(n: &Prenorm<C>, x: &Elem<C>, y: &Elem<C>) -> f64 {
    libm::fabs(n.eval(x) - n.eval(y))
}
