use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A `GraphFamily` violates one of its parameter invariants.
    #[error("invalid family: {0}")]
    InvalidFamily(String),

    /// A column-pair request named an out-of-range or repeated column.
    #[error("bad column pair: {0}")]
    BadColumn(String),

    /// A cycle is malformed (too short, repeated vertex).
    #[error("bad cycle: {0}")]
    BadCycle(String),

    /// The requested construction exists only under a congruence or parity
    /// condition that the arguments fail.
    #[error("not applicable: {0}")]
    NotApplicable(String),

    /// A graph order is outside the range the operation is defined for.
    #[error("bad order: {0}")]
    BadOrder(String),

    /// The decider rejected the instance, so no construction is attempted.
    #[error("not decomposable: {0}")]
    NotDecomposable(String),

    /// A lift was asked to expand a cycle length it has no piece for.
    #[error("no piece constructor registered for cycle length {0}")]
    MissingPieceConstructor(u32),

    /// The exact solver hit its node or time budget before finishing.
    #[error("search budget exceeded")]
    BudgetExceeded,

    /// A decomposition that was required to verify VALID did not.
    #[error("decomposition failed verification: {0}")]
    InvalidDecomposition(String),

    /// A condition the constructions guarantee was observed to fail.
    #[error("internal error: {0}")]
    Internal(String),

    /// Malformed textual family spec or interchange content.
    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
