use thiserror::Error;

use crate::matroid::RankViolation;
use crate::subset::Subset;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("subset {bits:#b} has an element outside the ground set of size {n}")]
    SubsetOutOfRange { bits: u64, n: usize },

    #[error("{op}: ground set of size {n} exceeds the size guard of {max}")]
    SizeGuard {
        op: &'static str,
        n: usize,
        max: usize,
    },

    #[error("rank table violates the matroid axioms ({} violation(s), first: {})", .0.len(), .0[0])]
    InvalidRankTable(Vec<RankViolation>),

    #[error("table has {found} entries, expected {expected}")]
    TableLength { expected: usize, found: usize },

    #[error("multiplicity of {0} must be a positive integer")]
    NonPositiveMultiplicity(Subset),

    #[error("{op} requires a loopless matroid, loops: {loops}")]
    HasLoops { op: &'static str, loops: Subset },

    #[error("{op} requires a matroid without coloops, coloops: {coloops}")]
    HasColoops { op: &'static str, coloops: Subset },

    #[error("{0} is not a flat")]
    NotAFlat(Subset),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for size-guard refusals.
    pub fn is_size_guard(&self) -> bool {
        matches!(self, Error::SizeGuard { .. })
    }
}
