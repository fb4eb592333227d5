use thiserror::Error;

/// Every failure the engine can report.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("rank n must be at least 1")]
    ZeroRank,
    #[error("expected {expected} weight entries, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("{0} is only defined for odd parity")]
    OddOnly(&'static str),
    #[error("{0} is only defined for even parity")]
    EvenOnly(&'static str),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("singular input: {0}")]
    Singular(String),
    #[error("[nu:sigma] = 0, the c-function is defined to be zero")]
    ZeroMultiplicity,
    #[error("cannot parse {0}")]
    Parse(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("numeric failure: {0}")]
    Numeric(String),
    #[error("brute-force oracle refused: {0}")]
    CostGuard(String),
}

pub type Result<T> = std::result::Result<T, Error>;
