use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(char),
    #[error("word of length {len} is too short (need at least {min})")]
    WordTooShort { len: usize, min: usize },
    #[error("text already contains the forbidden word")]
    ContainsForbidden,
    #[error("word set is not reduced: {0}")]
    NotReduced(String),
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("singular matrix")]
    SingularMatrix,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("function is not a power series at z = 0")]
    NotExpandable,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("params line {line}: {msg}")]
    Params { line: usize, msg: String },
    #[error("size guard exceeded: {0}")]
    Guard(String),
    #[error("no positive root of the denominator found in ({lo}, {hi})")]
    NoRoot { lo: f64, hi: f64 },
    #[error("dominant pole has unexpected order: {0}")]
    PoleOrder(String),
    #[error("rejection sampling gave up after {0} attempts")]
    Rejection(u64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
