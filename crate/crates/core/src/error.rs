//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by model construction, algorithm stepping, bound
/// calculators, and the experiment harness.
#[derive(Debug, Error)]
pub enum Error {
    /// Instance construction rejected the weight vector.
    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    /// A subset argument was empty, contained duplicates, or referenced
    /// unknown items.
    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    /// A ranking argument was inconsistent with its played set.
    #[error("invalid ranking: {0}")]
    InvalidRanking(String),

    /// An item index was outside `0..n`.
    #[error("item index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },

    /// A scalar or size parameter violated its documented range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A pairwise outcome named the same item as winner and loser.
    #[error("self-comparison: item {0} cannot beat itself")]
    SelfComparison(usize),

    /// Subset construction was asked for more items than the pool holds.
    #[error("insufficient pool: need {need} items but pool has {available}")]
    InsufficientPool { need: usize, available: usize },

    /// Exhaustive enumeration was asked for a support too large to enumerate.
    #[error("support too large: |S| = {size} exceeds the enumeration limit {limit}")]
    SupportTooLarge { size: usize, limit: usize },

    /// Total-variation comparison received distributions over different
    /// outcome spaces.
    #[error("mismatched outcome spaces: {0}")]
    MismatchedOutcomeSpace(String),

    /// A bound constant requires a strictly positive gap the instance lacks.
    #[error("degenerate gap: {0}")]
    DegenerateGap(String),

    /// The named environment preset does not exist.
    #[error("unknown environment '{name}' (valid: g1, g4, arith, geo, har, arithb, geob)")]
    UnknownEnvironment { name: String },

    /// A config or instance document failed to parse.
    #[error("config error at line {line}: {msg}")]
    Config { line: usize, msg: String },

    /// Filesystem failure while reading or writing artifacts.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

/// Convenience alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
