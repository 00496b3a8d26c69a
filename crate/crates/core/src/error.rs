use crate::exactnum::Ring;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(Ring, Ring),
    #[error("truncation order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("invalid argument: {0}")]
    Usage(String),
    #[error("normalization failed at order {order}: {reason}")]
    NormalizationFailure { order: usize, reason: String },
    #[error("verification failed for {check}: {detail}")]
    Verification { check: String, detail: String },
    #[error("dimension did not stabilize at degree bound {bound}; increase the bound")]
    NotStabilized { bound: u32 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

pub(crate) fn verification(check: impl Into<String>, detail: impl Into<String>) -> Error {
    Error::Verification { check: check.into(), detail: detail.into() }
}
