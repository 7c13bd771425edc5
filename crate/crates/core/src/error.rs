use thiserror::Error;

use crate::rational::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("polynomial is negative somewhere on [0, inf); no half-line certificate exists")]
    NotHalflineNonnegative,

    #[error("no certificate within tolerance: residual {residual} > {tolerance}")]
    CertificateNotFound {
        residual: Box<Rational>,
        tolerance: Box<Rational>,
    },

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("unsupported coefficient `{token}` at byte {position}: only rational values are accepted")]
    UnsupportedCoefficient { token: String, position: usize },
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
