use thiserror::Error;

use crate::field::FieldTower;

/// Errors shared by the whole kernel.
///
/// Axiom violations carry the offending basis indices so a failing fixture can
/// be reported with the exact triple that broke the law.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("mixed field towers: {0} vs {1}")]
    FieldMismatch(FieldTower, FieldTower),

    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} is not a usable prime modulus (need an odd-or-2 prime below 2^31)")]
    BadModulus(u64),

    #[error("{law} fails at basis triple ({i}, {j}, {k})")]
    AxiomViolation {
        law: &'static str,
        i: usize,
        j: usize,
        k: usize,
    },

    #[error("invalid involution: {0}")]
    BadInvolution(String),

    #[error("unit law fails at basis index {0}")]
    BadUnit(usize),

    #[error("structure constant index out of range: ({i}, {j}, {k}) for dimension {dim}")]
    IndexOutOfRange {
        i: usize,
        j: usize,
        k: usize,
        dim: usize,
    },

    #[error("subspace is not closed under the product: basis pair ({0}, {1}) leaves the span")]
    NotSubalgebra(usize, usize),

    #[error("subspace is not an ideal: product at basis pair ({0}, {1}) leaves the subspace")]
    NotIdeal(usize, usize),

    #[error("invalid grading: {0}")]
    InvalidGrading(String),

    #[error("invalid idempotent family: {0}")]
    BadIdempotents(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("certificate unavailable: {0}")]
    Inconclusive(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, AlgError>;
