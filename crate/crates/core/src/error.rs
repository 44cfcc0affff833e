use thiserror::Error;

/// Errors produced by the arithmetic and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("division by zero")]
    DivisionByZero,

    /// A configured budget (sieve size, trial-division steps, subtraction
    /// steps, scan length) would be exceeded.
    #[error("resource limit exceeded: {what} (limit {limit})")]
    ResourceLimit { what: &'static str, limit: u64 },

    /// A Bezout certificate does not match the pair it is supplied for.
    #[error("certificate mismatch: {0}")]
    CertificateMismatch(String),

    /// A theorem hypothesis (e.g. primality of 2^p - 1) does not hold.
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),

    /// A checked mathematical invariant did not hold.
    #[error("invariant violated: {0}")]
    InvariantViolated(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
