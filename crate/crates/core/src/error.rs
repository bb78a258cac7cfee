use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The denominator of a rational is divisible by the modulus.
    #[error("{value} is not {p}-integral")]
    NotPIntegral { value: String, p: u32 },

    #[error("{0} is not prime")]
    NotPrime(u32),

    /// Polynomial division left a nonzero or non-integral remainder.
    #[error("polynomial {dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: String, divisor: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A value that must be an integer was not.
    #[error("expected an integer, got {0}")]
    NotInteger(String),

    /// Two independent computation routes disagreed.
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn precondition(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(msg()))
    }
}
