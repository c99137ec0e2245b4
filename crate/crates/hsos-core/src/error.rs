//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,

    #[error("polynomials belong to different rings ({left} vs {right})")]
    RingMismatch { left: String, right: String },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("polynomial is not homogeneous: has terms of degree {lo} and {hi}")]
    NotHomogeneous { lo: u32, hi: u32 },

    #[error("expected a homogeneous polynomial of degree {expected}, found degree {found}")]
    WrongDegree { expected: u32, found: u32 },

    #[error("ideal has no nonzero generator")]
    ZeroIdeal,

    #[error("ideal is the unit ideal")]
    UnitIdeal,

    #[error("generating set is not minimal: degree-{degree} generators span {actual} new dimensions, {given} given")]
    NonMinimalGenerators { degree: u32, given: usize, actual: usize },

    #[error("matrix is not Hermitian at entry ({row}, {col})")]
    NotHermitian { row: usize, col: usize },

    #[error("matrix is not positive semidefinite: principal minor on rows {indices:?} equals {minor}")]
    NotPsd { indices: Vec<usize>, minor: String },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("necessity check failed: the product form is PSD but graded containment does not hold")]
    NecessityViolated,

    #[error("no scaling exists: graded containment fails, so no multiple of the positive part dominates")]
    ScalingImpossible,

    #[error("scaling search reached the cap 2^{cap_log2} without finding a PSD certificate")]
    ScalingCapReached { cap_log2: u32 },

    #[error("search space of {estimate} generator tuples exceeds budget {budget}")]
    BudgetExceeded { estimate: u128, budget: u64 },

    #[error("verification failed at stage {stage} ({name})")]
    StageFailed { stage: usize, name: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
