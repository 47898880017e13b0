use thiserror::Error;

use crate::poly::Parity;

/// Errors raised by the library. Parse failures carry their own position
/// information in [`ParseError`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("polynomial mixes even and odd exponents")]
    MixedParity,
    #[error("expected a polynomial of {expected} parity, found {found}")]
    WrongParity { expected: Parity, found: Parity },
    #[error("leading coefficient times alpha_{index} is {value}, which is not an integer")]
    NonIntegralBasis { index: usize, value: String },
    #[error("Fibonacci-basis vector must start with alpha_0 = 1")]
    AlphaHead,
    #[error("Fibonacci-basis vector has {found} entries, degree {degree} needs {expected}")]
    AlphaLength {
        degree: usize,
        expected: usize,
        found: usize,
    },
    #[error("leading coefficient must be nonzero")]
    ZeroLeading,
    #[error("a Conway form needs at least one entry")]
    EmptyForm,
    #[error("Conway entry {value} at position {position} must be even and nonzero")]
    BadLiteralEntry { position: usize, value: String },
    #[error("recursion parameter at position {position} is zero")]
    ZeroParameter { position: usize },
    #[error("index {k} is out of range 0..={max}")]
    IndexOutOfRange { k: usize, max: usize },
    #[error("monomial set needs m >= 2k, got m = {m}, k = {k}")]
    MonomialRange { m: usize, k: usize },
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("Alexander coefficient list is empty or has a zero top coefficient")]
    BadAlexander,
    #[error("operation expects a knot polynomial but the link factor is set")]
    LinkFactor,
    #[error("inverse transform term {j} is not integral ({value})")]
    NonIntegral { j: usize, value: String },
    #[error("fraction {p}/{q} is not reduced")]
    NotCoprime { p: String, q: String },
    #[error("fraction numerator must be at least 1")]
    DegenerateFraction,
    #[error("budget must be an even integer >= 2, got {0}")]
    InvalidBudget(u32),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A syntax error with the byte offset of the offending character.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at column {}", .offset + 1)]
pub struct ParseError {
    pub input: String,
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(input: &str, offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            input: input.to_string(),
            offset,
            message: message.into(),
        }
    }

    /// Two-line rendering: the input, then a caret under the offending column.
    pub fn diagnostic(&self) -> String {
        let column = self.input[..self.offset.min(self.input.len())]
            .chars()
            .count();
        format!(
            "error: {}\n  {}\n  {}^",
            self.message,
            self.input,
            " ".repeat(column)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
