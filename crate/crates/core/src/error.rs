use thiserror::Error;

/// Errors raised by the exact and numerical layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("radicand must be nonzero")]
    ZeroRadicand,
    #[error("operands belong to different tower contexts")]
    ContextMismatch,
    #[error("operands belong to different curve configurations")]
    ConfigMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero divisor encountered: the tower context is not a field")]
    ZeroDivisor,
    #[error("negative radicand has no real embedding")]
    NegativeRadicand,
    #[error("beta must differ from 1 and -1")]
    DegenerateBeta,
    #[error("beta must be greater than 1 for the orthogonality integrals (got {0})")]
    BetaOutOfRange(String),
    #[error("configuration has no exponent r with a1^2 - b0^2 p = t^(2r)")]
    NoPellExponent,
    #[error("operation requires a configuration built from beta")]
    NotDjkm,
    #[error("operation requires b0 to be a constant")]
    NonConstantB0,
    #[error("the derivation t^(r+1)/(a1' t - r a1) d/dt is degenerate for this configuration")]
    DegenerateDerivation,
    #[error("n + m must be odd (got n={n}, m={m})")]
    Parity { n: usize, m: usize },
    #[error("t = {0} lies outside the open integration interval")]
    OutsideInterval(f64),
    #[error("element is not c*t^i*lambda1^j*lambda2^k within exponent bound {0}")]
    NotAUnit(i64),
    #[error("operator has a zero leading coefficient")]
    ZeroLeading,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
