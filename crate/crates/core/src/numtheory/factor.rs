//! Integer factorization: trial division by small primes followed by
//! Pollard's rho with Brent's cycle detection on the remaining cofactors.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::primality::{mul_mod, primality, Primality};
use super::Nat;
use crate::error::{Error, Result};

/// Default trial-division bound.
pub const DEFAULT_TRIAL_BOUND: u64 = 100_000;
/// Default Pollard-rho iteration budget per cofactor.
pub const DEFAULT_RHO_BUDGET: u64 = 10_000_000;
/// Seed used when none is supplied.
pub const DEFAULT_SEED: u64 = 0x5eed_2009;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorConfig {
    pub trial_bound: u64,
    pub rho_budget: u64,
    pub seed: u64,
}

impl Default for FactorConfig {
    fn default() -> Self {
        FactorConfig {
            trial_bound: DEFAULT_TRIAL_BOUND,
            rho_budget: DEFAULT_RHO_BUDGET,
            seed: DEFAULT_SEED,
        }
    }
}

/// A positive integer as a product of prime powers.
///
/// When `complete` is false, `cofactor` holds the part of `base` that could
/// not be split within the budget and the listed primes multiply to
/// `base / cofactor`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    #[serde(serialize_with = "crate::serde_nat::nat")]
    pub base: Nat,
    #[serde(serialize_with = "crate::serde_nat::pairs")]
    pub factors: Vec<(Nat, u32)>,
    pub complete: bool,
    #[serde(serialize_with = "crate::serde_nat::nat")]
    pub cofactor: Nat,
    /// Some listed prime is only a probable prime (above 2^64).
    pub probabilistic: bool,
}

impl Factorization {
    /// Builds a complete factorization from prime-exponent pairs, multiplying
    /// them out to get the base. Pairs are sorted and merged.
    pub fn from_pairs<I, P>(pairs: I) -> Factorization
    where
        I: IntoIterator<Item = (P, u32)>,
        P: Into<Nat>,
    {
        let mut map: BTreeMap<Nat, u32> = BTreeMap::new();
        for (p, e) in pairs {
            if e > 0 {
                *map.entry(p.into()).or_default() += e;
            }
        }
        let base = map
            .iter()
            .fold(Nat::one(), |acc, (p, &e)| acc * num_traits::pow(p.clone(), e as usize));
        Factorization {
            base,
            factors: map.into_iter().collect(),
            complete: true,
            cofactor: Nat::one(),
            probabilistic: false,
        }
    }

    pub fn primes(&self) -> impl Iterator<Item = &Nat> + '_ {
        self.factors.iter().map(|(p, _)| p)
    }

    pub fn exponent_of(&self, p: &Nat) -> u32 {
        self.factors
            .iter()
            .find(|(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    /// Product of the listed prime powers.
    pub fn product(&self) -> Nat {
        self.factors
            .iter()
            .fold(Nat::one(), |acc, (p, e)| acc * num_traits::pow(p.clone(), *e as usize))
    }
}

/// Renders in the dotted style `2^5.3.5^2`; the empty product renders as `1`.
impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() && self.cofactor.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (p, e) in &self.factors {
            if !first {
                write!(f, ".")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        if !self.cofactor.is_one() {
            if !first {
                write!(f, ".")?;
            }
            write!(f, "({})", self.cofactor)?;
        }
        Ok(())
    }
}

fn sieve(bound: u64) -> Vec<u64> {
    let bound = bound as usize;
    if bound < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; bound + 1];
    let mut primes = Vec::new();
    for i in 2..=bound {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= bound {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

fn default_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| sieve(DEFAULT_TRIAL_BOUND))
}

/// All primes `<= bound`.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound <= DEFAULT_TRIAL_BOUND {
        let all = default_primes();
        all[..all.partition_point(|&p| p <= bound)].to_vec()
    } else {
        sieve(bound)
    }
}

fn with_small_primes<R>(bound: u64, f: impl FnOnce(&[u64]) -> R) -> R {
    if bound == DEFAULT_TRIAL_BOUND {
        f(default_primes())
    } else {
        f(&primes_up_to(bound))
    }
}

/// `n mod d` without allocating.
pub(crate) fn rem_u64(n: &BigUint, d: u64) -> u64 {
    n.iter_u64_digits()
        .rev()
        .fold(0u128, |acc, limb| ((acc << 64) | limb as u128) % d as u128) as u64
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// One Brent-rho attempt on an odd composite `n < 2^64`. Returns a nontrivial
/// factor, or `None` when the walk collapsed (caller retries with a new
/// constant). `spent` is charged one unit per map evaluation.
fn brent_u64(n: u64, y0: u64, c: u64, spent: &mut u64, budget: u64) -> Option<u64> {
    const BATCH: u64 = 128;
    let f = |x: u64| ((mul_mod(x, x, n) as u128 + c as u128) % n as u128) as u64;
    let (mut y, mut r, mut q, mut g) = (y0, 1u64, 1u64, 1u64);
    let (mut x, mut ys) = (y, y);
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        *spent += r;
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            let steps = BATCH.min(r - k);
            for _ in 0..steps {
                y = f(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            *spent += steps;
            g = gcd_u64(q, n);
            k += steps;
        }
        r *= 2;
        if *spent > budget && g == 1 {
            return None;
        }
    }
    if g == n {
        loop {
            ys = f(ys);
            *spent += 1;
            g = gcd_u64(x.abs_diff(ys), n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

fn brent_big(n: &BigUint, y0: BigUint, c: &BigUint, spent: &mut u64, budget: u64) -> Option<BigUint> {
    const BATCH: u64 = 128;
    let f = |x: &BigUint| (x * x + c) % n;
    let abs_diff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
    let one = BigUint::one();
    let mut y = y0;
    let mut r = 1u64;
    let mut q = one.clone();
    let mut g = one.clone();
    let mut x = y.clone();
    let mut ys = y.clone();
    while g == one {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        *spent += r;
        let mut k = 0;
        while k < r && g == one {
            ys = y.clone();
            let steps = BATCH.min(r - k);
            for _ in 0..steps {
                y = f(&y);
                q = (q * abs_diff(&x, &y)) % n;
            }
            *spent += steps;
            g = q.gcd(n);
            k += steps;
        }
        r *= 2;
        if *spent > budget && g == one {
            return None;
        }
    }
    if &g == n {
        loop {
            ys = f(&ys);
            *spent += 1;
            g = abs_diff(&x, &ys).gcd(n);
            if g > one {
                break;
            }
        }
    }
    (&g != n).then_some(g)
}

/// Splits a composite `n` (no factor below the trial bound) into two
/// nontrivial factors, or gives up when the budget is exhausted.
fn split(n: &Nat, rng: &mut ChaCha8Rng, budget: u64) -> Option<Nat> {
    let mut spent = 0u64;
    while spent <= budget {
        if let Some(small) = n.to_u64() {
            if small % 2 == 0 {
                return Some(Nat::from(2u32));
            }
            let c = rng.gen_range(1..small);
            let y0 = rng.gen_range(0..small);
            if let Some(d) = brent_u64(small, y0, c, &mut spent, budget) {
                return Some(Nat::from(d));
            }
        } else {
            if n.is_even() {
                return Some(Nat::from(2u32));
            }
            let bits = n.bits();
            let c = rand_below(rng, n, bits).max(BigUint::one());
            let y0 = rand_below(rng, n, bits);
            if let Some(d) = brent_big(n, y0, &c, &mut spent, budget) {
                return Some(d);
            }
        }
    }
    None
}

fn rand_below(rng: &mut ChaCha8Rng, n: &BigUint, bits: u64) -> BigUint {
    let words = bits.div_ceil(32) as usize;
    let digits: Vec<u32> = (0..words).map(|_| rng.gen()).collect();
    BigUint::from_slice(&digits) % n
}

/// Factors `n` with the default configuration.
pub fn factor(n: &Nat) -> Result<Factorization> {
    factor_with(n, &FactorConfig::default())
}

/// Factors `n`. On budget exhaustion returns
/// [`Error::FactorizationIncomplete`] carrying the partial result.
pub fn factor_with(n: &Nat, cfg: &FactorConfig) -> Result<Factorization> {
    let f = factor_partial(n, cfg)?;
    if f.complete {
        Ok(f)
    } else {
        Err(Error::FactorizationIncomplete { partial: Box::new(f) })
    }
}

/// Like [`factor_with`] but returns an incomplete factorization as a value.
pub fn factor_partial(n: &Nat, cfg: &FactorConfig) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::invalid("cannot factor 0"));
    }
    let mut found: BTreeMap<Nat, u32> = BTreeMap::new();
    let mut rest = n.clone();
    let mut probabilistic = false;

    with_small_primes(cfg.trial_bound, |primes| {
        for &p in primes {
            if rest.is_one() {
                break;
            }
            if let Some(small) = rest.to_u64() {
                if p.saturating_mul(p) > small {
                    break;
                }
            }
            if rem_u64(&rest, p) == 0 {
                let mut e = 0;
                while rem_u64(&rest, p) == 0 {
                    rest /= p;
                    e += 1;
                }
                found.insert(Nat::from(p), e);
            }
        }
    });

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut stack = vec![rest];
    let mut stuck = Nat::one();
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        match primality(&m) {
            Primality::Prime => *found.entry(m).or_default() += 1,
            Primality::ProbablePrime => {
                probabilistic = true;
                *found.entry(m).or_default() += 1;
            }
            Primality::Composite => match split(&m, &mut rng, cfg.rho_budget) {
                Some(d) => {
                    let other = &m / &d;
                    stack.push(d);
                    stack.push(other);
                }
                None => stuck *= m,
            },
        }
    }

    Ok(Factorization {
        base: n.clone(),
        factors: found.into_iter().collect(),
        complete: stuck.is_one(),
        cofactor: stuck,
        probabilistic,
    })
}
