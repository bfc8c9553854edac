use thiserror::Error;

/// Errors raised by the algebra, module and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two values built over different roots of unity were combined.
    #[error("mismatched root-order parameter: {left} vs {right}")]
    MismatchedP { left: u32, right: u32 },

    #[error("division by zero")]
    DivisionByZero,

    /// An argument violated an operation's precondition.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// Two linear-algebra operands had incompatible shapes.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    /// A computed quantity failed an identity the construction guarantees.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}
