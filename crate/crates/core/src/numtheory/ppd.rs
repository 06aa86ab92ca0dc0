//! Primitive prime divisors of `a^n - 1`.
//!
//! Two engines:
//!
//! * [`primitive_prime_divisors`] factors every `a^i - 1`, `i <= n`, and takes
//!   the set difference of prime sets, the same way the classic GAP loop does.
//! * [`ppd_exists_above`] never factors. Every prime factor of `Φ_n(a)` either
//!   divides `n` or is a primitive prime divisor of `a^n - 1`, and a prime
//!   factor of `Φ_n(a)` that divides `n` is never primitive (its order `d`
//!   satisfies `n = d r^k` with `k >= 1`). Stripping the primes of `n` from
//!   `Φ_n(a)` therefore leaves exactly the product of the primitive prime
//!   divisors, and sieving that residue by the primes `<= q` decides whether
//!   one of them exceeds `q`.

use std::collections::BTreeSet;

use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::arith::{cyclotomic_value, factor_u64, multiplicative_order};
use super::factor::{factor_partial, FactorConfig};
use super::primality::{is_prime_u64, primality, Primality};
use super::Nat;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ZsigmondyException {
    None,
    /// `(a, n) = (2, 6)`.
    A2N6,
    /// `n = 2` and `a` a Mersenne prime.
    MersenneSquare,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PpdMethod {
    FullFactorization,
    CyclotomicResidual,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AboveThreshold {
    #[serde(serialize_with = "crate::serde_nat::nat")]
    pub q: Nat,
    pub exists: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PpdReport {
    #[serde(serialize_with = "crate::serde_nat::nat")]
    pub a: Nat,
    pub n: u32,
    #[serde(serialize_with = "crate::serde_nat::set")]
    pub primitive_primes: BTreeSet<Nat>,
    /// False when some factorization stalled, or (cyclotomic method) when
    /// the residual above the threshold was left composite.
    pub primes_complete: bool,
    pub exception: ZsigmondyException,
    pub method: PpdMethod,
    /// Full factorization: the unfactored cofactor of `a^n - 1` (1 if none).
    /// Cyclotomic method: what remains of `Φ_n(a)` after stripping.
    #[serde(serialize_with = "crate::serde_nat::nat")]
    pub residual: Nat,
    pub above: Option<AboveThreshold>,
    /// Some reported prime is only a probable prime.
    pub probabilistic: bool,
}

impl PpdReport {
    pub fn exists_above_threshold(&self) -> Option<bool> {
        self.above.as_ref().map(|t| t.exists)
    }
}

pub fn is_mersenne_prime(a: &Nat) -> bool {
    let succ = a + 1u32;
    succ.count_ones() == 1 && primality(a).is_prime()
}

pub fn zsigmondy_exception(a: &Nat, n: u32) -> ZsigmondyException {
    if n == 6 && a == &Nat::from(2u32) {
        ZsigmondyException::A2N6
    } else if n == 2 && is_mersenne_prime(a) {
        ZsigmondyException::MersenneSquare
    } else {
        ZsigmondyException::None
    }
}

fn check_base(a: &Nat) -> Result<()> {
    if a < &Nat::from(2u32) {
        Err(Error::invalid("base a must be at least 2"))
    } else {
        Ok(())
    }
}

/// Primitive prime divisors of `a^i - 1` for every `i` in `1..=n`, sharing
/// the factorizations between rows.
pub fn ppd_table(a: &Nat, n: u32, cfg: &FactorConfig) -> Result<Vec<PpdReport>> {
    check_base(a)?;
    if n == 0 {
        return Err(Error::invalid("exponent n must be at least 1"));
    }
    let mut seen: BTreeSet<Nat> = BTreeSet::new();
    let mut earlier_complete = true;
    let mut rows = Vec::with_capacity(n as usize);
    for i in 1..=n {
        let value = num_traits::pow(a.clone(), i as usize) - 1u32;
        let f = factor_partial(&value, cfg)?;
        let current: BTreeSet<Nat> = f.primes().cloned().collect();
        let primitive: BTreeSet<Nat> = current.difference(&seen).cloned().collect();
        rows.push(PpdReport {
            a: a.clone(),
            n: i,
            probabilistic: f.probabilistic
                && primitive
                    .iter()
                    .any(|p| primality(p) == Primality::ProbablePrime),
            primitive_primes: primitive,
            primes_complete: f.complete && earlier_complete,
            exception: zsigmondy_exception(a, i),
            method: PpdMethod::FullFactorization,
            residual: f.cofactor.clone(),
            above: None,
        });
        earlier_complete &= f.complete;
        seen.extend(current);
    }
    Ok(rows)
}

pub fn primitive_prime_divisors(a: &Nat, n: u32) -> Result<PpdReport> {
    primitive_prime_divisors_with(a, n, &FactorConfig::default())
}

/// The primes dividing `a^n - 1` and no `a^i - 1` with `i < n`. For `n = 1`
/// this is every prime factor of `a - 1`.
///
/// A stalled factorization does not fail the call; the report comes back
/// with `primes_complete = false` and the stuck cofactor in `residual`.
pub fn primitive_prime_divisors_with(a: &Nat, n: u32, cfg: &FactorConfig) -> Result<PpdReport> {
    let mut rows = ppd_table(a, n, cfg)?;
    Ok(rows.pop().expect("n >= 1 rows"))
}

/// Decides whether some primitive prime divisor of `a^n - 1` exceeds `q`
/// without factoring `a^n - 1`.
///
/// The primes of `n` are stripped from `Φ_n(a)` to full multiplicity. None
/// of them can be primitive, but when `q < n` a stripped prime could in
/// principle exceed `q`, so each such prime is also run through the
/// definition (order of `a` modulo it equals `n`).
pub fn ppd_exists_above(a: &Nat, n: u32, q: u64) -> Result<PpdReport> {
    check_base(a)?;
    if n < 2 {
        return Err(Error::invalid("exponent n must be at least 2"));
    }
    if q < 2 {
        return Err(Error::invalid("threshold q must be at least 2"));
    }
    let mut residue = cyclotomic_value(n, a)?;
    let mut primitive = BTreeSet::new();
    let mut stripped_witness = false;

    for (r, _) in factor_u64(n as u64) {
        let mut hit = false;
        while super::factor::rem_u64(&residue, r) == 0 {
            residue /= r;
            hit = true;
        }
        if hit && r > q && !(a % r).is_zero() {
            let order = multiplicative_order(a, &Nat::from(r))?;
            if order == Nat::from(n) {
                stripped_witness = true;
                primitive.insert(Nat::from(r));
            }
        }
    }

    // Everything left is a product of primitive primes, all = 1 (mod n).
    let step = n as u64;
    let mut s = step + 1;
    while s <= q && !residue.is_one() {
        if residue.to_u64().is_some_and(|r| s.saturating_mul(s) > r) {
            // residue is a prime whose factors are all >= s
            break;
        }
        if is_prime_u64(s) && super::factor::rem_u64(&residue, s) == 0 {
            while super::factor::rem_u64(&residue, s) == 0 {
                residue /= s;
            }
            primitive.insert(Nat::from(s));
        }
        s = match s.checked_add(step) {
            Some(v) => v,
            None => break,
        };
    }
    if let Some(r) = residue.to_u64() {
        if r > 1 && r <= q {
            // loop stopped early on a prime residue not above q
            primitive.insert(Nat::from(r));
            residue = Nat::one();
        }
    }

    let residue_prime = primality(&residue);
    let primes_complete = residue.is_one() || residue_prime.is_prime();
    if residue_prime.is_prime() {
        primitive.insert(residue.clone());
    }
    Ok(PpdReport {
        a: a.clone(),
        n,
        primitive_primes: primitive,
        primes_complete,
        exception: zsigmondy_exception(a, n),
        method: PpdMethod::CyclotomicResidual,
        above: Some(AboveThreshold {
            q: Nat::from(q),
            exists: stripped_witness || !residue.is_one(),
        }),
        probabilistic: residue_prime == Primality::ProbablePrime,
        residual: residue,
    })
}
