use thiserror::Error;

use crate::siegel::FourierIndex;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("kronecker symbol needs D = 0, 1 mod 4, got {0}")]
    BadDiscriminant(i64),

    #[error("weight {0} must be even and at least 4")]
    BadWeight(i64),

    #[error("k = {k} is even; the degree-2 lift needs k odd (weight 2k = {two_k})")]
    ParityGate { two_k: i64, k: i64 },

    #[error("S_{two_k} has dimension {dim}; only one-dimensional cusp spaces are supported")]
    DimensionGate { two_k: i64, dim: usize },

    #[error("insufficient precision: need {needed}, have {available}")]
    Truncation { needed: usize, available: usize },

    #[error("series is not a Hecke eigenform: T_{p} ratio breaks at n = {n}")]
    NotEigen { p: u64, n: usize },

    #[error("leading coefficient a(1) vanishes, cannot normalize")]
    ZeroLeading,

    #[error("Ramanujan bound violated at p = {p}")]
    Ramanujan { p: u64 },

    #[error("index {0} is not positive semi-definite")]
    Indefinite(FourierIndex),

    #[error("index {0} is not positive definite")]
    NotPositiveDefinite(FourierIndex),

    #[error("index {0} lies outside the expansion range")]
    OutOfRange(FourierIndex),

    #[error("interpolation system for p = {p} is inconsistent at weight k' = {k}")]
    Inconsistent { p: u64, k: i64 },

    #[error("interpolation system for p = {p} has rank {rank} < {unknowns} unknowns")]
    Underdetermined { p: u64, unknowns: usize, rank: usize },

    #[error("local polynomial at p = {p} is not symmetric under X -> 1/X")]
    Asymmetric { p: u64 },

    #[error("p^(1/2) residue survived in the lift coefficient at {t}, p = {p}")]
    HalfPowerResidue { t: FourierIndex, p: u64 },

    #[error("lift expansion is empty at trace bound {0}")]
    EmptyExpansion(i64),

    #[error("index S = {0} is outside the supported scope (only S = 1)")]
    UnsupportedIndex(i64),

    #[error("unknown group tag {0:?}")]
    UnknownGroup(String),

    #[error("structural check failed: {0}")]
    Structural(String),

    #[error("{0}")]
    Parse(String),
}
