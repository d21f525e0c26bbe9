use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An input outside the mathematical domain of the operation.
    #[error("{0}")]
    Domain(String),

    /// The splitting field needed to factor `x^n + 1` is larger than allowed.
    #[error("splitting field degree {required} exceeds the configured cap {cap}")]
    SplittingDegree { required: u64, cap: u64 },

    /// An enumeration would produce more items than the caller allowed.
    #[error("{what}: {count} exceeds the cap {cap}")]
    TooMany {
        what: &'static str,
        count: BigUint,
        cap: u64,
    },

    /// A mathematical guarantee was violated; indicates a bug, not bad input.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for errors caused by configured size limits rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::SplittingDegree { .. } | Error::TooMany { .. })
    }
}
