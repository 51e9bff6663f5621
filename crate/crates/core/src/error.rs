use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("degree {degree} exceeds the supported bound {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },
    #[error("code entry out of range: {0}")]
    CodeOutOfRange(String),
    #[error("rank {rank} out of range for degree {degree}")]
    RankOutOfRange { degree: usize, rank: u64 },
    #[error("malformed pattern {0:?}: {1}")]
    MalformedPattern(String, &'static str),
    #[error("parameter {param} out of range for {stat} at degree {degree}")]
    ParameterOutOfRange {
        stat: String,
        param: usize,
        degree: usize,
    },
    #[error("unknown statistic {0:?}")]
    UnknownStatistic(String),
    #[error("unknown map {0:?}")]
    UnknownMap(String),
    #[error("{k} does not divide {n}")]
    NotADivisor { n: usize, k: usize },
    #[error("orbit of {0} did not close within n! steps")]
    NonClosure(String),
    #[error("malformed formula {0:?}: {1}")]
    MalformedFormula(String, String),
    #[error("malformed results table, line {line}: {reason}")]
    MalformedTable { line: usize, reason: String },
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
