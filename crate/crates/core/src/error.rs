use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition size exceeds 63-bit range")]
    SizeOverflow,
    #[error("invalid beta-set: {0}")]
    InvalidBetaSet(String),
    #[error("invalid s-set: {0}")]
    InvalidSSet(String),
    #[error("invalid s-point: {0}")]
    InvalidSPoint(String),
    #[error("invalid rim hook for this partition")]
    InvalidHook,
    #[error("invalid hyperplane: {0}")]
    InvalidHyperplane(String),
    #[error("generator index {index} out of range for s = {s}")]
    InvalidGenerator { index: usize, s: usize },
    #[error("residue {k} out of range for s = {s}")]
    InvalidResidue { k: usize, s: usize },
    #[error("partition is not a {s}-core")]
    NotCore { s: usize },
    #[error("s = {s} and t = {t} are not coprime")]
    NotCoprime { s: usize, t: usize },
    #[error("s must be at least {min}, got {s}")]
    ModulusTooSmall { s: usize, min: usize },
    #[error("level t must be positive")]
    ZeroLevel,
    #[error("mismatched dimensions: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("point is not dominant")]
    NotDominant,
    #[error("point does not lie in the level-{t} rhomboid")]
    OutsideRhomboid { t: usize },
    #[error("integer overflow in coordinate arithmetic")]
    Overflow,
    #[error("orbit descent ended away from a t-core: {0}")]
    DescentStuck(String),
    #[error("gallery walk stuck: {0}")]
    ChainStuck(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
