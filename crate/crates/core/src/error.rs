use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("undefined degree: zero polynomial")]
    UndefinedDegree,

    #[error("pole at specialization: z = {0} is not invertible")]
    PoleAtSpecialization(String),

    #[error("{0} is not invertible in the coefficient ring")]
    NotInvertible(String),

    #[error("k must be at least {min}, got {k}")]
    KOutOfRange { k: u64, min: u64 },

    #[error("parse error at token {position} ({token:?}): {reason}")]
    Parse {
        position: usize,
        token: String,
        reason: String,
    },

    #[error("too large: {crossings} crossings exceeds the cap of {cap}")]
    TooLarge { crossings: usize, cap: usize },

    #[error("closure has {0} components")]
    NotAKnot(usize),

    #[error("internal consistency: {0}")]
    Inconsistent(String),

    #[error("vanishing specialization")]
    VanishingSpecialization,

    #[error("finite field root search exceeded {0} candidates")]
    SearchExhausted(u64),

    #[error("root was built for k = {root}, test asked for k = {asked}")]
    MismatchedRoot { root: u64, asked: u64 },

    #[error("table line {line}: {reason}")]
    Table { line: usize, reason: String },

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error("{0}")]
    Io(String),
}
