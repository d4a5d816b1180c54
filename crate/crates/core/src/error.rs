use thiserror::Error;

/// Errors raised by the arithmetic, interpolation and engine layers.
///
/// Apart from parse errors, every variant signals a violated precondition or
/// an internal bug; a correct multiplication never produces one.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("subtraction underflow: minuend is smaller than subtrahend")]
    Underflow,

    #[error("inexact right shift by {shift} bits: dropped bits are nonzero")]
    InexactShift { shift: u64 },

    #[error("inexact division by {divisor}: remainder {remainder}")]
    InexactDivision { divisor: u128, remainder: u128 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("operand of {bits} bits does not fit in {blocks} blocks of {block_bits} bits")]
    OperandTooLarge {
        bits: u64,
        blocks: usize,
        block_bits: u64,
    },

    #[error("invalid block layout: {0}")]
    InvalidBlocks(&'static str),

    #[error("recombined value is negative")]
    NegativeResult,

    #[error("interpolation problem: {0}")]
    InvalidProblem(&'static str),

    #[error("abscissa difference {0} does not reduce to a shift and a single-word divisor")]
    AbscissaOutOfRange(i128),

    #[error("invalid plan: {0}")]
    InvalidPlan(String),

    #[error("inner multiplier `{0}` returned a wrong product during verification")]
    InexactMultiplier(String),

    #[error("invalid numeral: {0}")]
    Parse(String),
}

impl Error {
    /// True for the exactness failures that betray a bug in interpolation or
    /// in a point product.
    pub fn is_inexact(&self) -> bool {
        matches!(
            self,
            Error::InexactDivision { .. } | Error::InexactShift { .. } | Error::NegativeResult
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
