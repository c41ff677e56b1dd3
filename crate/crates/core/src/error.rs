use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("denominator vanishes identically")]
    DenominatorVanishes,
    #[error("empty polynomial")]
    EmptyPolynomial,
    #[error("denominator is zero at the evaluation point")]
    EvaluationPole,
    #[error("variable `{0}` has no value at the evaluation point")]
    UnboundVariable(String),
    #[error("polynomial division leaves a remainder")]
    InexactDivision,
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("symbolic consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}
