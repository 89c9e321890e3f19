use thiserror::Error;

/// Errors raised by the library. Matrix and permutation indices are reported
/// 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not {n}x{n}: row {row} has {len} entries")]
    NotSquare { n: usize, row: usize, len: usize },

    #[error("expected {n} rows, found {rows}")]
    WrongRowCount { n: usize, rows: usize },

    #[error("matrix size must be at least 2, got {0}")]
    TooSmall(usize),

    #[error("diagonal entry ({0},{0}) is nonzero")]
    NonzeroDiagonal(usize),

    #[error("ring condition fails at ({0},{1},{2}): mu_ij + mu_jk < mu_ik")]
    RingConditionViolated(usize, usize, usize),

    #[error("entry ({0},{1}) does not fit in 32 bits")]
    EntryOutOfRange(usize, usize),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("{0} is not prime")]
    NotPrime(usize),

    #[error("n = {0} is too large for exhaustive enumeration")]
    TooLarge(usize),

    #[error("unsupported dimension {0}, only n = 3 is rendered")]
    UnsupportedDimension(usize),

    #[error("vertex {0} lies outside the drawing window")]
    OutsideWindow(String),

    #[error("invalid local exponent for prime {0}")]
    InvalidLocalExponent(String),

    #[error("invalid invariant factors: {0}")]
    InvalidInvariantFactors(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Variant name, for machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotSquare { .. } => "NotSquare",
            Error::WrongRowCount { .. } => "WrongRowCount",
            Error::TooSmall(_) => "TooSmall",
            Error::NonzeroDiagonal(_) => "NonzeroDiagonal",
            Error::RingConditionViolated(..) => "RingConditionViolated",
            Error::EntryOutOfRange(..) => "EntryOutOfRange",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NotPrime(_) => "NotPrime",
            Error::TooLarge(_) => "TooLarge",
            Error::UnsupportedDimension(_) => "UnsupportedDimension",
            Error::OutsideWindow(_) => "OutsideWindow",
            Error::InvalidLocalExponent(_) => "InvalidLocalExponent",
            Error::InvalidInvariantFactors(_) => "InvalidInvariantFactors",
            Error::InvalidPermutation(_) => "InvalidPermutation",
        }
    }
}
