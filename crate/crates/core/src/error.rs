use thiserror::Error;

/// Errors produced by the constructors and bijections of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("invalid bracket vector: {0}")]
    InvalidBracketVector(String),

    #[error("invalid Dyck word: {0}")]
    InvalidDyckWord(String),

    #[error("not a Tamari interval")]
    NotAnInterval,

    #[error("interval cannot be derised")]
    NotDerisable,

    #[error("invalid meandering diagram: {0}")]
    InvalidDiagram(String),

    #[error("meandering diagram is not a tree")]
    NotATree,

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("invalid blossoming tree: {0}")]
    InvalidBlossoming(String),

    #[error("closure could not be stretched into a meandering tree: {0}")]
    ClosureOrientation(String),

    #[error("invalid marked sequence: {0}")]
    InvalidSequence(String),

    #[error("cycle lemma violated: {0} valid shifts")]
    CycleLemmaViolation(usize),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("size {size} exceeds the configured cap {cap}")]
    SizeCapExceeded { size: usize, cap: usize },

    #[error("unsupported size {0}")]
    UnsupportedSize(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("oracle disagreement: {0}")]
    OracleDisagreement(String),
}

impl Error {
    /// Stable machine-readable identifier of the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::SizeMismatch(..) => "SizeMismatch",
            Error::InvalidBracketVector(_) => "InvalidBracketVector",
            Error::InvalidDyckWord(_) => "InvalidDyckWord",
            Error::NotAnInterval => "NotAnInterval",
            Error::NotDerisable => "NotDerisable",
            Error::InvalidDiagram(_) => "InvalidDiagram",
            Error::NotATree => "NotATree",
            Error::InvalidDecomposition(_) => "InvalidDecomposition",
            Error::InvalidBlossoming(_) => "InvalidBlossoming",
            Error::ClosureOrientation(_) => "ClosureOrientationError",
            Error::InvalidSequence(_) => "InvalidSequence",
            Error::CycleLemmaViolation(_) => "CycleLemmaViolation",
            Error::InvalidPartition(_) => "InvalidPartition",
            Error::SizeCapExceeded { .. } => "SizeCapExceeded",
            Error::UnsupportedSize(_) => "UnsupportedSize",
            Error::Parse(_) => "ParseError",
            Error::OracleDisagreement(_) => "OracleDisagreement",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
