use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Which side of a factor is extended by both letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => f.write_str("left"),
            Side::Right => f.write_str("right"),
        }
    }
}

/// The first Ostrowski condition a digit vector breaks.
///
/// Digit positions are 1-based, matching `b_1, b_2, ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DigitViolation {
    /// `b_1 > a_1 - 1`.
    FirstDigit { digit: u64, max: u64 },
    /// `b_i > a_i` for some `i >= 2`.
    DigitBound { index: usize, digit: u64, max: u64 },
    /// `b_{i+1} = a_{i+1}` while `b_i != 0`; `index` is `i + 1`.
    Carry { index: usize },
    /// The partial sum through level `level` reached `q_level`.
    PartialSum { level: usize },
    /// More digits than the slope has partial quotients.
    TooManyDigits { digits: usize, depth: usize },
    /// `ρ_{level+1} ≢ ρ_level (mod q_level)`.
    Coherence { level: usize },
}

impl fmt::Display for DigitViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DigitViolation::FirstDigit { digit, max } => {
                write!(f, "b_1 = {digit} exceeds a_1 - 1 = {max}")
            }
            DigitViolation::DigitBound { index, digit, max } => {
                write!(f, "b_{index} = {digit} exceeds a_{index} = {max}")
            }
            DigitViolation::Carry { index } => {
                write!(f, "b_{index} = a_{index} requires b_{} = 0", index - 1)
            }
            DigitViolation::PartialSum { level } => {
                write!(
                    f,
                    "partial sum through level {level} is not below q_{level}"
                )
            }
            DigitViolation::TooManyDigits { digits, depth } => {
                write!(
                    f,
                    "{digits} digits but the slope has only {depth} partial quotients"
                )
            }
            DigitViolation::Coherence { level } => {
                write!(
                    f,
                    "rho_{} is not congruent to rho_{level} modulo q_{level}",
                    level + 1
                )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("depth exceeded: need {needed} partial quotients, slope has {available}")]
    DepthExceeded { needed: usize, available: usize },

    #[error("insufficient prefix: {0}")]
    InsufficientPrefix(String),

    #[error("more than one {side} special factor of length {m}")]
    MultipleSpecialFactors { side: Side, m: usize },

    #[error("word is not central")]
    NotCentral,

    #[error("word is a power of a letter and has no 01-decomposition")]
    LetterPower,

    #[error("{value} is out of range, must be below {bound}")]
    OutOfRange { value: String, bound: String },

    #[error("invalid Ostrowski digits: {0}")]
    InvalidDigits(DigitViolation),

    #[error("word is not Sturmian of this slope (no match at level {level})")]
    NotThisSlope { level: usize },

    #[error("malformed Rauzy graph: {0}")]
    MalformedGraph(String),

    #[error("invalid slope: {0}")]
    InvalidSlope(String),

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("value does not fit in a machine word: {0}")]
    Overflow(String),
}

impl Error {
    /// Stable machine-readable code, used as the CLI error prefix.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DepthExceeded { .. } => "DEPTH_EXCEEDED",
            Error::InsufficientPrefix(_) => "INSUFFICIENT_PREFIX",
            Error::MultipleSpecialFactors { .. } => "MULTIPLE_SPECIAL_FACTORS",
            Error::NotCentral => "NOT_CENTRAL",
            Error::LetterPower => "LETTER_POWER",
            Error::OutOfRange { .. } => "OUT_OF_RANGE",
            Error::InvalidDigits(_) => "INVALID_DIGITS",
            Error::NotThisSlope { .. } => "NOT_THIS_SLOPE",
            Error::MalformedGraph(_) => "MALFORMED_GRAPH",
            Error::InvalidSlope(_) => "INVALID_SLOPE",
            Error::InvalidWord(_) => "INVALID_WORD",
            Error::Overflow(_) => "OVERFLOW",
        }
    }

    pub(crate) fn insufficient(msg: impl Into<String>) -> Self {
        Error::InsufficientPrefix(msg.into())
    }
}
