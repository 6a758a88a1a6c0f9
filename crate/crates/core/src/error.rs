use thiserror::Error;

use crate::exact::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    /// Inverting a hyper-dual whose value part is zero: the expression has a pole there.
    #[error("hyper-dual value part is zero")]
    ZeroValuePart,

    #[error("negative harmonic index H_{0}")]
    NegativeIndex(i64),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("pole: {0}")]
    Pole(String),

    #[error("{id}: guard failed: {reason}")]
    GuardViolation { id: String, reason: String },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("{id}: parameter `{param}` missing or outside its domain")]
    Domain { id: String, param: &'static str },

    #[error("{id}: reconstruction {reconstruction} differs from catalogue value {catalogue}")]
    Mismatch {
        id: String,
        reconstruction: Box<Rational>,
        catalogue: Box<Rational>,
    },

    #[error("invalid rational literal `{0}`")]
    ParseRational(String),
}
