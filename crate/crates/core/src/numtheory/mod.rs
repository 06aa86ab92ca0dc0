//! Arbitrary-precision number theory: primality, factorization, cyclotomic
//! values and primitive prime divisors.

mod arith;
mod factor;
mod ppd;
mod primality;

/// Arbitrary-precision natural number.
pub type Nat = num_bigint::BigUint;

pub use arith::{
    catalan_solutions, cyclotomic_value, divisors, largest_prime_below, mobius,
    multiplicative_order, CatalanFamily, CatalanSolution, CATALAN_BOUND_CAP,
};
pub use factor::{
    factor, factor_partial, factor_with, primes_up_to, FactorConfig, Factorization,
    DEFAULT_RHO_BUDGET, DEFAULT_SEED, DEFAULT_TRIAL_BOUND,
};
pub use ppd::{
    is_mersenne_prime, ppd_exists_above, ppd_table, primitive_prime_divisors,
    primitive_prime_divisors_with, zsigmondy_exception, AboveThreshold, PpdMethod, PpdReport,
    ZsigmondyException,
};
pub use primality::{is_prime, is_prime_u64, primality, Primality, PROBABLE_ROUNDS};

pub(crate) use arith::factor_u64;
