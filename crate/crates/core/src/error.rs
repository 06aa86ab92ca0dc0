use thiserror::Error;

use crate::numtheory::{Factorization, Nat};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// The Pollard-rho budget ran out before every cofactor was split.
    #[error("factorization of {} incomplete: cofactor {} left unfactored", .partial.base, .partial.cofactor)]
    FactorizationIncomplete { partial: Box<Factorization> },

    #[error("{value} and {modulus} are not coprime")]
    NotCoprime { value: Nat, modulus: Nat },

    #[error("{0} is not prime")]
    NotPrime(Nat),

    #[error("{what}: {requested} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        requested: u64,
        cap: u64,
    },

    #[error("k = {k} does not define an action of Z_{n} on Z_{m} (need gcd(k, m) = 1 and k^n = 1 mod m)")]
    BadAction { m: u64, n: u64, k: u64 },

    #[error("{0} is not a prime of the form 2^a * 3^b + 1")]
    NotCppPrime(Nat),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
