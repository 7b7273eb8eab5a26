use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// The variants line up with the CLI exit codes: input and unsupported
/// requests are usage problems, guards are resource problems, and
/// consistency failures mean an internal contract was violated.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("resource guard exceeded: {0}")]
    Resource(String),

    #[error("incomplete factorization: cofactor {0} has no factor below the trial bound and is not a perfect square")]
    IncompleteFactorization(String),

    #[error("ramified prime {0}: polynomial is not squarefree modulo {0}")]
    RamifiedPrime(u64),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("empty sieving set: no sieving prime is <= z = {0}")]
    EmptySievingSet(f64),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
