//! Prenorms built from neighborhood chains, and the metrics they induce.
//!
//! A chain `U_0 ⊇ U_1 ⊇ …` of symmetric neighborhoods of the identity with
//! `U_{n+1} ⊕ U_{n+1} ⊆ U_n` yields dyadic sets `V(r)` and the prenorm
//! `N(x) = inf { r : x ∈ V(r) }`, evaluated to a fixed dyadic depth.

mod admissible;
mod chain;
mod dyadic;
mod metric;
mod properties;

pub use admissible::validate_admissible_chain;
pub use chain::{ChainKind, FiniteChain, NeighborhoodChain, RadialChain};
pub use dyadic::{build_dyadic, digit_levels, pseudometric_d, DyadicFamily, Prenorm, DEFAULT_DEPTH, MAX_DEPTH};
pub use metric::{check_metric, quotient_metric_rho, QuotientMetricSpace, RhoOracle};
pub use properties::check_prenorm_properties;
