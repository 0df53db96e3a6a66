use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported ambient dimension {0}; only P^2 and P^3 are supported")]
    UnsupportedDimension(i64),

    #[error("ambient dimension mismatch: P^{left} vs P^{right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("expected {expected} components for P^{dim}, got {got}")]
    ComponentCount { dim: usize, expected: usize, got: usize },

    #[error("rank ch_0 = {0} is not an integer")]
    NonIntegralRank(String),

    #[error("Chern class c_{index} = {value} is not an integer")]
    NonIntegralChern { index: usize, value: String },

    #[error("rank mismatch: splitting type has {splitting} entries but rank is {rank}")]
    RankMismatch { splitting: usize, rank: String },

    #[error("rank must be positive, got {0}")]
    NonPositiveRank(String),

    #[error("splitting type ({entries}) is not valid for rank {rank} and c_1 = {c1}")]
    InvalidSplittingType { entries: String, rank: i64, c1: i64 },

    #[error("splitting type must have at least one entry")]
    EmptySplittingType,

    #[error("s = {s} is not admissible for c_2 = {c2}")]
    InadmissibleResolution { c2: i64, s: i64 },

    #[error("(rank {rank}, c_1 {d}) is not normalized")]
    NotNormalized { rank: i64, d: i64 },

    #[error("no linear monad: {0}")]
    NotRealizable(String),

    #[error("negative value {value} for {what}")]
    Negative { what: &'static str, value: i64 },

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("cannot parse {0:?} as a rational number")]
    ParseRational(String),

    #[error("malformed shape: {0}")]
    MalformedShape(String),
}
