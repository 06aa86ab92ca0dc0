use std::collections::HashMap;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::factor::{factor, Factorization};
use super::primality::{is_prime, is_prime_u64};
use super::Nat;
use crate::error::{Error, Result};

/// Factors a machine integer. The default rho budget always suffices below
/// 2^64 (at most ~2^16 steps for the smaller factor).
pub(crate) fn factor_u64(n: u64) -> Vec<(u64, u32)> {
    factor(&Nat::from(n))
        .expect("u64 factorization finishes within the default budget")
        .factors
        .into_iter()
        .map(|(p, e)| (p.to_u64().expect("prime factor of a u64"), e))
        .collect()
}

fn divisors_from(f: &Factorization) -> Vec<Nat> {
    let mut divs = vec![Nat::one()];
    for (p, e) in &f.factors {
        let mut next = Vec::with_capacity(divs.len() * (*e as usize + 1));
        for d in &divs {
            let mut x = d.clone();
            next.push(x.clone());
            for _ in 0..*e {
                x *= p;
                next.push(x.clone());
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: &Nat) -> Result<Vec<Nat>> {
    Ok(divisors_from(&factor(n)?))
}

pub(crate) fn divisors_u64(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factor_u64(n) {
        let len = divs.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

pub fn mobius(n: u64) -> i8 {
    assert!(n >= 1, "mobius is defined for n >= 1");
    let f = factor_u64(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Carmichael's function from a factorization of the modulus.
fn carmichael(f: &Factorization) -> Nat {
    f.factors.iter().fold(Nat::one(), |acc, (p, e)| {
        let lambda = if p == &Nat::from(2u32) && *e >= 3 {
            Nat::one() << (e - 2)
        } else {
            (p - 1u32) * num_traits::pow(p.clone(), (*e - 1) as usize)
        };
        acc.lcm(&lambda)
    })
}

/// Least `k >= 1` with `a^k = 1 (mod modulus)`.
///
/// The order divides Carmichael's λ(modulus) (which is `modulus - 1` for a
/// prime modulus); λ is factored and reduced one prime at a time.
pub fn multiplicative_order(a: &Nat, modulus: &Nat) -> Result<Nat> {
    if modulus < &Nat::from(2u32) {
        return Err(Error::invalid("modulus must be at least 2"));
    }
    if !a.gcd(modulus).is_one() {
        return Err(Error::NotCoprime {
            value: a.clone(),
            modulus: modulus.clone(),
        });
    }
    let one = Nat::one();
    if (a % modulus).is_one() {
        return Ok(one);
    }
    let lambda = carmichael(&factor(modulus)?);
    let mut order = lambda.clone();
    for (r, _) in factor(&lambda)?.factors {
        while (&order % &r).is_zero() {
            let candidate = &order / &r;
            if a.modpow(&candidate, modulus) == one {
                order = candidate;
            } else {
                break;
            }
        }
    }
    Ok(order)
}

/// `Φ_n(a)` as the exact quotient of `∏_{d|n} (a^d - 1)^{μ(n/d)}`.
pub fn cyclotomic_value(n: u32, a: &Nat) -> Result<Nat> {
    if n == 0 {
        return Err(Error::invalid("cyclotomic index must be at least 1"));
    }
    if a < &Nat::from(2u32) {
        return Err(Error::invalid("cyclotomic argument must be at least 2"));
    }
    let mut num = Nat::one();
    let mut den = Nat::one();
    for d in divisors_u64(n as u64) {
        let term = num_traits::pow(a.clone(), d as usize) - 1u32;
        match mobius(n as u64 / d) {
            1 => num *= term,
            -1 => den *= term,
            _ => {}
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero(), "cyclotomic quotient must be exact");
    Ok(q)
}

/// The largest prime not exceeding `n`.
pub fn largest_prime_below(n: &Nat) -> Result<Nat> {
    if n < &Nat::from(2u32) {
        return Err(Error::invalid("no prime below 2"));
    }
    let mut m = n.clone();
    while !is_prime(&m) {
        m -= 1u32;
    }
    Ok(m)
}

/// Which family a solution of `p^m = q^n + 1` falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CatalanFamily {
    /// `n = 1`, `m` prime, `p = 2`, `q = 2^m - 1` a Mersenne prime.
    Mersenne,
    /// `m = 1`, `n` a power of two, `q = 2`, `p = 2^n + 1` a Fermat prime.
    Fermat,
    /// `3^2 = 2^3 + 1`.
    Exceptional,
    /// Fits none of the three; never expected.
    Unclassified,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CatalanSolution {
    pub p: u64,
    pub m: u32,
    pub q: u64,
    pub n: u32,
    pub family: CatalanFamily,
}

impl CatalanSolution {
    fn classify(p: u64, m: u32, q: u64, n: u32) -> CatalanFamily {
        let mersenne = n == 1
            && p == 2
            && is_prime_u64(m as u64)
            && m < 64
            && q == (1u64 << m) - 1;
        let fermat = m == 1 && q == 2 && n.is_power_of_two() && n < 64 && p == (1u64 << n) + 1;
        if mersenne {
            CatalanFamily::Mersenne
        } else if fermat {
            CatalanFamily::Fermat
        } else if (p, m, q, n) == (3, 2, 2, 3) {
            CatalanFamily::Exceptional
        } else {
            CatalanFamily::Unclassified
        }
    }
}

/// Largest value bound accepted by [`catalan_solutions`].
pub const CATALAN_BOUND_CAP: u64 = 100_000_000;

/// Every `(p, m, q, n)` with `p, q` prime, `m, n >= 1` and
/// `p^m = q^n + 1 <= value_bound`, ordered by `p^m`.
pub fn catalan_solutions(value_bound: u64) -> Result<Vec<CatalanSolution>> {
    if value_bound < 9 {
        return Err(Error::invalid("value bound must be at least 9"));
    }
    if value_bound > CATALAN_BOUND_CAP {
        return Err(Error::CapExceeded {
            what: "catalan value bound",
            requested: value_bound,
            cap: CATALAN_BOUND_CAP,
        });
    }
    let limit = value_bound as usize;
    let mut composite = vec![false; limit + 1];
    composite[0] = true;
    composite[1] = true;
    let mut i = 2;
    while i * i <= limit {
        if !composite[i] {
            (i * i..=limit).step_by(i).for_each(|j| composite[j] = true);
        }
        i += 1;
    }

    // proper prime powers (exponent >= 2); primes are read off the sieve
    let mut higher_powers: HashMap<u64, (u64, u32)> = HashMap::new();
    let mut p = 2u64;
    while p * p <= value_bound {
        if !composite[p as usize] {
            let (mut x, mut e) = (p * p, 2u32);
            while x <= value_bound {
                higher_powers.insert(x, (p, e));
                x = match x.checked_mul(p) {
                    Some(v) => v,
                    None => break,
                };
                e += 1;
            }
        }
        p += 1;
    }
    let as_prime_power = |x: u64| -> Option<(u64, u32)> {
        if !composite[x as usize] {
            Some((x, 1))
        } else {
            higher_powers.get(&x).copied()
        }
    };

    let mut out = Vec::new();
    for x in 3..=value_bound {
        let Some((p, m)) = as_prime_power(x) else {
            continue;
        };
        if let Some((q, n)) = as_prime_power(x - 1) {
            out.push(CatalanSolution {
                p,
                m,
                q,
                n,
                family: CatalanSolution::classify(p, m, q, n),
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(n: u64) -> Nat {
        Nat::from(n)
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(divisors(&nat(1)).unwrap(), vec![nat(1)]);
        assert_eq!(divisors(&nat(8)).unwrap(), [1, 2, 4, 8].map(nat).to_vec());
        assert_eq!(divisors(&nat(10)).unwrap(), [1, 2, 5, 10].map(nat).to_vec());
        assert_eq!(divisors_u64(12), vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(6), 1);
        assert_eq!(mobius(12), 0);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(7), -1);
    }

    #[test]
    fn order_examples() {
        assert_eq!(multiplicative_order(&nat(7), &nat(2801)).unwrap(), nat(5));
        assert_eq!(multiplicative_order(&nat(1), &nat(97)).unwrap(), nat(1));
        assert_eq!(multiplicative_order(&nat(13), &nat(30941)).unwrap(), nat(5));
        // composite moduli
        assert_eq!(multiplicative_order(&nat(3), &nat(8)).unwrap(), nat(2));
        assert_eq!(multiplicative_order(&nat(2), &nat(63)).unwrap(), nat(6));
    }

    #[test]
    fn order_matches_stepping() {
        for m in 2u64..200 {
            for a in 1..m {
                if a.gcd(&m) != 1 {
                    assert!(matches!(
                        multiplicative_order(&nat(a), &nat(m)),
                        Err(Error::NotCoprime { .. })
                    ));
                    continue;
                }
                let mut k = 1;
                let mut x = a % m;
                while x != 1 % m {
                    x = x * a % m;
                    k += 1;
                }
                assert_eq!(multiplicative_order(&nat(a), &nat(m)).unwrap(), nat(k), "{a} mod {m}");
            }
        }
    }

    #[test]
    fn order_rejects_small_modulus() {
        assert!(matches!(multiplicative_order(&nat(3), &nat(1)), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic_value(1, &nat(9)).unwrap(), nat(8));
        assert_eq!(cyclotomic_value(2, &nat(7)).unwrap(), nat(8));
        assert_eq!(cyclotomic_value(6, &nat(2)).unwrap(), nat(3));
        assert_eq!(cyclotomic_value(5, &nat(7)).unwrap(), nat(2801));
        assert!(cyclotomic_value(0, &nat(2)).is_err());
        assert!(cyclotomic_value(3, &nat(1)).is_err());
    }

    #[test]
    fn largest_prime_examples() {
        assert_eq!(largest_prime_below(&nat(10)).unwrap(), nat(7));
        assert_eq!(largest_prime_below(&nat(2)).unwrap(), nat(2));
        assert_eq!(largest_prime_below(&nat(13)).unwrap(), nat(13));
        assert!(largest_prime_below(&nat(1)).is_err());
    }

    #[test]
    fn catalan_small_bounds() {
        let sols = catalan_solutions(10).unwrap();
        let tuples: Vec<_> = sols.iter().map(|s| (s.p, s.m, s.q, s.n)).collect();
        assert!(tuples.contains(&(3, 2, 2, 3)));
        assert!(tuples.contains(&(2, 2, 3, 1)));
        assert!(catalan_solutions(20)
            .unwrap()
            .iter()
            .any(|s| (s.p, s.m, s.q, s.n) == (17, 1, 2, 4) && s.family == CatalanFamily::Fermat));
        assert!(catalan_solutions(8).is_err());
        assert!(matches!(
            catalan_solutions(CATALAN_BOUND_CAP + 1),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn catalan_matches_brute_force() {
        // independent oracle: test every pair of prime powers by direct arithmetic
        let bound = 5000u64;
        let pp: Vec<(u64, u32, u64)> = (2..=bound)
            .filter(|&p| is_prime_u64(p))
            .flat_map(|p| {
                (1u32..)
                    .map(move |e| (p, e, p.checked_pow(e)))
                    .take_while(|&(_, _, v)| v.is_some_and(|v| v <= bound))
                    .map(|(p, e, v)| (p, e, v.unwrap()))
            })
            .collect();
        let mut expected = Vec::new();
        for &(p, m, x) in &pp {
            for &(q, n, y) in &pp {
                if x == y + 1 {
                    expected.push((x, p, m, q, n));
                }
            }
        }
        expected.sort();
        let got: Vec<_> = catalan_solutions(bound)
            .unwrap()
            .iter()
            .map(|s| (s.p.pow(s.m), s.p, s.m, s.q, s.n))
            .collect();
        assert_eq!(got, expected);
    }
}
