use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("expected a positive integer, got 0")]
    ZeroInput,

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("{0} divides 6; B_q is only defined for primes q >= 5")]
    ExcludedPrime(u64),

    #[error("exponent n = {0} must be an odd prime")]
    InvalidExponent(u32),

    #[error("v must be non-zero")]
    ZeroV,

    #[error("Lehmer index k = {0} must be odd")]
    EvenIndex(u32),

    #[error("Lehmer term at index {k} is not integral for u = {u}, v = {v}")]
    NonIntegralTerm { u: String, v: String, k: u32 },

    #[error("reference {path}: line {line}: {reason}")]
    Reference {
        path: PathBuf,
        line: u64,
        reason: String,
    },

    #[error("reading {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
