use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("generator index {index} out of range for {strands} strands")]
    LetterOutOfRange { index: usize, strands: usize },
    #[error("letter 0 is not a generator")]
    ZeroLetter,
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("{0}")]
    Invalid(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("word is not in the marked subgroup: {0}")]
    NotMarked(String),
    #[error("oracle mismatch: {0}")]
    Mismatch(String),
    #[error("free word length exceeded the cap of {cap} letters")]
    ResourceCap { cap: usize },
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub fn mismatch(msg: impl Into<String>) -> Self {
        Error::Mismatch(msg.into())
    }

    /// Process exit code used by the command line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Mismatch(_) => 2,
            Error::ResourceCap { .. } => 3,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
