//! Finite gyrogroups given by Cayley tables.
//!
//! Everything here is exact and exhaustive: tables are validated against
//! the gyrogroup axioms, gyrations are tabulated from
//! `gyr[x, y](z) = ⊖(x⊕y) ⊕ (x ⊕ (y ⊕ z))`, and subgyrogroups, cosets and
//! small-order searches are computed by enumeration.

mod coset;
mod gyration;
mod model;
mod product;
mod search;
mod subgyro;
mod table;
mod validate;

pub use coset::{coset_partition, CosetPartition};
pub use gyration::{gyr_table, GyrationTable};
pub use model::{FiniteGyrogroup, FiniteModel};
pub use product::{product_subset, product_table};
pub use search::{search_gyrogroups, MAX_SEARCH_ORDER};
pub use subgyro::{closure, enumerate_subgyrogroups, is_l_subgyrogroup, is_subgyrogroup, SubgyrogroupSet, POWERSET_LIMIT};
pub use table::CayleyTable;
pub use validate::{require_gyrogroup, validate_table, CHECKS as VALIDATION_CHECKS};
