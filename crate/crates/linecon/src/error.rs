use thiserror::Error;

use crate::congruence::ValidationReport;

/// Errors surfaced by fallible operations across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground-set size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("partition is not a congruence of the frame")]
    NotACongruence,

    #[error("invalid congruence form: {0}")]
    Invalid(ValidationReport),

    #[error("cannot restrict to {a}: not an extreme, or the right part of a rest")]
    BadRestriction { a: usize },

    #[error(
        "no catalog case matches the pair ({a}, {b}) on L_{n}; \
         under a nontrivial join with common extremes {{0,n}} this would falsify the catalog"
    )]
    CatalogMismatch { n: usize, a: String, b: String },

    #[error("operation requires a nontrivial join, but the join of {a} and {b} on L_{n} is total")]
    TrivialJoin { n: usize, a: String, b: String },

    #[error("rest profile is irregular; no simplified form applies")]
    IrregularProfile,

    #[error(
        "brute-force enumeration for n = {n} means {partitions} partitions, above the \
         cap n ≤ {cap}; raise the cap explicitly (CLI: LINECON_MAX_N) if this is intended"
    )]
    CapExceeded { n: usize, cap: usize, partitions: u128 },

    #[error("cannot parse congruence spec {text:?}: {reason}")]
    Parse { text: String, reason: String },
}
