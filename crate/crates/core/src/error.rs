use thiserror::Error;

use crate::arith::Rational;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("index {index} is not in the index group")]
    NotInGroup { index: Rational },

    #[error("`{symbol}` does not exist in the centerless algebra")]
    CentralInCenterless { symbol: String },

    #[error("value does not belong to this algebra configuration: {0}")]
    ConfigMismatch(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("table does not cover `{symbol}`")]
    Coverage { symbol: String },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
