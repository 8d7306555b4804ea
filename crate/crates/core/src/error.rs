use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("radius {radius} is outside the supported range 0..={max}")]
    RadiusOutOfRange { radius: u64, max: u64 },

    #[error("dimension {0} is outside the supported range 1..=10")]
    DimensionOutOfRange(u32),

    #[error("{what} {value} exceeds the guard of {limit}")]
    GuardExceeded {
        what: &'static str,
        value: u64,
        limit: u64,
    },

    #[error("sweep to {n_max} needs about {needed} bytes of column state, cap is {cap}")]
    MemoryCap { n_max: u64, needed: u64, cap: u64 },

    #[error("{n} is beyond the sieve limit {limit}")]
    BeyondTable { n: u64, limit: u64 },

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("count stream ended at r = {got}, expected coverage up to r = {expected}")]
    IncompleteCounts { expected: u64, got: u64 },

    #[error("count stream is out of order: expected r = {expected}, found r = {found}")]
    UnorderedCounts { expected: u64, found: u64 },

    #[error("count record for r = {0} carries no primality verdict")]
    MissingVerdict(u64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
