use thiserror::Error;

/// Errors raised by the exact arithmetic, series, and Euler layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole: denominator vanishes at q = {0}")]
    Pole(String),
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("series constant term is not invertible")]
    NotInvertible,
    #[error("coefficient index {index} out of range for series of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("{count} compositions exceed the enumeration cap of {cap}")]
    CapExceeded { count: String, cap: u64 },
    #[error("modulus d = {0} must be an odd positive integer")]
    EvenModulus(u32),
    #[error("order v must be at least 1")]
    ZeroOrder,
    #[error("expected {expected} arguments, got {got}")]
    ArgumentCount { expected: usize, got: usize },
    #[error("alternating series requires |q0^h| < 1, got |q0^h| = {0}")]
    Divergent(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
