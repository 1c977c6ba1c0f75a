use thiserror::Error;

/// Errors surfaced by the algebra, braid, and oracle layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two operands live on a different number of strands.
    #[error("size mismatch: {0} vs {1} strands")]
    SizeMismatch(usize, usize),

    /// Exhaustive enumeration was asked for beyond the supported cap.
    #[error("enumeration cap exceeded: n = {n}, cap = {cap}")]
    CapExceeded { n: usize, cap: usize },

    /// Exact division has a nonzero remainder.
    #[error("not divisible: {0}")]
    NotDivisible(String),

    /// Division by the zero polynomial.
    #[error("division by zero polynomial")]
    DivisionByZero,

    /// A polynomial expected to lie in the subring generated by (UV)^±1 does not.
    #[error("not balanced: {0}")]
    NotBalanced(String),

    /// A braid-word token failed to parse as a nonzero integer.
    #[error("bad token in braid word: {0:?}")]
    BadToken(String),

    /// A generator index lies outside 1..n-1.
    #[error("generator index {index} out of range for {n} strands")]
    GeneratorOutOfRange { index: i64, n: usize },

    /// A strand or tensor position is out of range.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// A claimed algebraic relation failed to hold symbolically.
    #[error("relation failed: {0}")]
    RelationFailed(String),

    /// A verification suite reported a failing check.
    #[error("check failed: {0}")]
    CheckFailed(String),

    /// A partition is empty or contains a zero part.
    #[error("bad partition: {0}")]
    BadPartition(String),

    /// The state sum would exceed the crossing budget.
    #[error("too many crossings: {crossings} (cap {cap})")]
    TooManyCrossings { crossings: usize, cap: usize },

    /// Corpus file I/O or record parsing failed.
    #[error("corpus error: {0}")]
    Corpus(String),
}

pub type Result<T> = std::result::Result<T, Error>;
