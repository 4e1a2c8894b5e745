use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("degree {0} outside supported range 1..={max}", max = crate::perm::MAX_DEGREE)]
    DegreeOutOfRange(usize),

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("rank {rank} out of range for degree {n}")]
    RankOutOfRange { n: usize, rank: u64 },

    #[error("malformed cycle type: {0}")]
    MalformedCycleType(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("parameter outside domain: {0}")]
    Domain(String),

    #[error("capacity exceeded: {what} needs {needed}, limit {limit}")]
    Capacity {
        what: &'static str,
        needed: u64,
        limit: u64,
    },

    #[error("vertices are not connected")]
    Unreachable,

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph is not simple: {0}")]
    NotSimple(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("bad cache file: {0}")]
    Cache(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
