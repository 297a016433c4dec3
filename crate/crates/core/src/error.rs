use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Euclidean division left a nonzero remainder.
    #[error("polynomial {dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: String, divisor: String },

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    /// Monomial probing produced a coefficient of too high a degree.
    #[error("inconsistent operator expansion at order {order}: coefficient has degree {degree}")]
    InconsistentExpansion { order: usize, degree: usize },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParam(msg.into())
    }
}
