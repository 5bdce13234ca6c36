use thiserror::Error;

/// Errors raised by the forms, linear algebra and engine layers.
///
/// Exact values carried by variants (remainders, offending indices) are
/// rendered in the canonical text format so the enum stays independent of the
/// scalar type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: u32, right: u32 },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("expected {expected}, got {got}")]
    Structure { expected: String, got: String },

    #[error("the zero linear form does not define a line")]
    InvalidLine,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("degenerate nodes: h[{first}] = h[{second}] = {value}")]
    DegenerateNodes { first: usize, second: usize, value: String },

    #[error("coefficient alpha[{index}] is zero")]
    ZeroAlpha { index: usize },

    #[error("not divisible by the square of the line; remainder {remainder}")]
    NotDoubleLine { remainder: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("theorem violation (implementation bug): {0}")]
    TheoremViolation(String),

    #[error("generation failed after {attempts} attempts: {reason}")]
    GenerationFailure { attempts: usize, reason: String },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
