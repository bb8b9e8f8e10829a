use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

/// Errors raised by the algebra, the finite-table machinery and the suites.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GyroError {
    /// An element lies outside its carrier (or inside the rejected boundary band).
    #[error("carrier-domain violation: {point} has norm {norm} (limit {limit})")]
    Domain { point: String, norm: f64, limit: f64 },

    #[error("sampling failed: {0}")]
    Sampling(String),

    /// Malformed Cayley table (ragged rows, out-of-range cells, duplicate labels).
    #[error("table shape error: {0}")]
    Shape(String),

    /// A gyrogroup axiom fails; `witness` lists the offending element indices.
    #[error("axiom {axiom} violated, witness {witness:?}")]
    Axiom { axiom: String, witness: Vec<usize> },

    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A neighborhood chain does not satisfy the inclusion it was built for.
    #[error("chain condition violated at level {level}: {detail}")]
    Chain { level: usize, detail: String },

    #[error("resource limit: {0}")]
    ResourceLimit(String),

    #[error("invalid tolerance: {0}")]
    Tolerance(String),
}
