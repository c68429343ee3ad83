use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("composition parts must be positive, found 0 at index {index}")]
    ZeroPart { index: usize },

    #[error("invalid family parameter k = {k}: {reason}")]
    InvalidFamilyParameter { k: i64, reason: &'static str },

    #[error("{0:?} is not anti-palindromic")]
    NotAntiPalindromic(Vec<u64>),

    #[error("{0:?} is not a reduced anti-palindromic representative")]
    NotReducedRepresentative(Vec<u64>),

    #[error("{0:?} is not an Arndt composition")]
    NotArndt(Vec<u64>),

    #[error("exhaustive enumeration of n = {n} exceeds the cap n <= {cap}")]
    BruteForceCap { n: usize, cap: usize },

    #[error("quotient is not a formal power series: {0}")]
    NotAPowerSeries(&'static str),

    #[error("coefficient [x^{n} y^{m}] = {value} is not a nonnegative integer")]
    NonIntegerCoefficient { n: usize, m: usize, value: String },

    #[error("negative count {value} at ({n}, {m})")]
    NegativeCount { n: usize, m: usize, value: String },

    #[error("table holds rows up to {available}, row {needed} is required")]
    InsufficientTable { needed: usize, available: usize },

    #[error("1/beta is not a root of the denominator of multiplicity {multiplicity} (residual {residual:e})")]
    InvalidPole { multiplicity: u32, residual: f64 },

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("b-file line {line}: {message}")]
    BFileParse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
