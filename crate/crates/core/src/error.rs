use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("RefineNeeded: {0}")]
    RefineNeeded(String),
    #[error("Boundary: {0}")]
    Boundary(String),
    #[error("TooLarge: {0}")]
    TooLarge(String),
    #[error("LengthTooSmall: {0} does not fit in {1} bits")]
    LengthTooSmall(String, usize),
    #[error("NotAnInteger: {0}")]
    NotAnInteger(String),
    #[error("Incomparable: {0}")]
    Incomparable(String),
    #[error("OutOfRange: {0}")]
    OutOfRange(String),
    #[error("BadParameter: {0}")]
    BadParameter(String),
    #[error("LengthMismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("DepthInsufficient: {0}")]
    DepthInsufficient(String),
    #[error("Parse: {0}")]
    Parse(String),
}

impl Error {
    /// Variant name, as surfaced by the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            Error::RefineNeeded(_) => "RefineNeeded",
            Error::Boundary(_) => "Boundary",
            Error::TooLarge(_) => "TooLarge",
            Error::LengthTooSmall(..) => "LengthTooSmall",
            Error::NotAnInteger(_) => "NotAnInteger",
            Error::Incomparable(_) => "Incomparable",
            Error::OutOfRange(_) => "OutOfRange",
            Error::BadParameter(_) => "BadParameter",
            Error::LengthMismatch(..) => "LengthMismatch",
            Error::DepthInsufficient(_) => "DepthInsufficient",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
