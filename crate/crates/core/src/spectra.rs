//! Spectra: sets of element orders, stored by their maximal elements.
//!
//! A spectrum is closed under divisibility, so it is determined by the
//! elements that divide no other element. [`Spectrum`] keeps only those;
//! [`Spectrum::omega`] expands them back out.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numtheory::{divisors, is_prime, Nat};

/// Default largest `n` accepted by the partition-based spectra.
pub const DEFAULT_PARTITION_CAP: u32 = 40;

/// Default largest group order accepted by [`omega_metacyclic`].
pub const METACYCLIC_ORDER_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Spectrum {
    #[serde(serialize_with = "crate::serde_nat::set")]
    mu: BTreeSet<Nat>,
    label: String,
}

impl Spectrum {
    /// Reduces `orders` to its maximal elements under divisibility.
    pub fn new<I>(orders: I, label: impl Into<String>) -> Result<Spectrum>
    where
        I: IntoIterator,
        I::Item: Into<Nat>,
    {
        let all: BTreeSet<Nat> = orders.into_iter().map(Into::into).collect();
        if all.is_empty() {
            return Err(Error::invalid("a spectrum needs at least one order"));
        }
        if all.contains(&Nat::zero()) {
            return Err(Error::invalid("element orders are positive"));
        }
        // scan from the top; an element is maximal iff it divides no kept one
        let mut mu: BTreeSet<Nat> = BTreeSet::new();
        for x in all.iter().rev() {
            if !mu.iter().any(|m| (m % x).is_zero()) {
                mu.insert(x.clone());
            }
        }
        Ok(Spectrum {
            mu,
            label: label.into(),
        })
    }

    pub fn mu(&self) -> &BTreeSet<Nat> {
        &self.mu
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Spectrum {
        self.label = label.into();
        self
    }

    /// `x` is an element order iff it divides some maximal element.
    pub fn contains(&self, x: &Nat) -> bool {
        !x.is_zero() && self.mu.iter().any(|m| (m % x).is_zero())
    }

    /// The full divisor-closed set of orders, ascending.
    pub fn omega(&self) -> Result<Vec<Nat>> {
        let mut all = BTreeSet::new();
        for m in &self.mu {
            all.extend(divisors(m)?);
        }
        Ok(all.into_iter().collect())
    }

    /// Stable text form: a `label:` line, a `mu:` line and optionally an
    /// `omega:` line, each list ascending and space separated.
    pub fn to_text(&self, with_omega: bool) -> Result<String> {
        let join = |xs: &mut dyn Iterator<Item = &Nat>| {
            xs.map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
        };
        let mut out = String::new();
        writeln!(out, "label: {}", self.label).unwrap();
        writeln!(out, "mu: {}", join(&mut self.mu.iter())).unwrap();
        if with_omega {
            let omega = self.omega()?;
            writeln!(out, "omega: {}", join(&mut omega.iter())).unwrap();
        }
        Ok(out)
    }
}

/// Maximal elements of a set of orders, unlabelled.
pub fn maximal_elements<I>(orders: I) -> Result<Spectrum>
where
    I: IntoIterator,
    I::Item: Into<Nat>,
{
    Spectrum::new(orders, "")
}

pub fn omega_closure(s: &Spectrum) -> Result<Vec<Nat>> {
    s.omega()
}

fn field_label(p: &Nat, n: u32) -> String {
    if n == 1 {
        p.to_string()
    } else {
        format!("{p}^{n}")
    }
}

fn check_prime(p: &Nat) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p.clone()))
    }
}

fn check_degree(n: u32) -> Result<()> {
    if n == 0 {
        Err(Error::invalid("field degree n must be at least 1"))
    } else {
        Ok(())
    }
}

/// `μ(PGL(2,q)) = {q-1, p, q+1}` with `q = p^n`, reduced.
pub fn mu_pgl2(p: &Nat, n: u32) -> Result<Spectrum> {
    check_prime(p)?;
    check_degree(n)?;
    let q = num_traits::pow(p.clone(), n as usize);
    Spectrum::new(
        [&q - 1u32, p.clone(), q + 1u32],
        format!("PGL(2,{})", field_label(p, n)),
    )
}

/// `μ(L_2(q)) = {(q-1)/ε, p, (q+1)/ε}` with `ε = gcd(2, q-1)`, reduced.
pub fn mu_psl2(p: &Nat, n: u32) -> Result<Spectrum> {
    check_prime(p)?;
    check_degree(n)?;
    let q = num_traits::pow(p.clone(), n as usize);
    let eps = if q.is_odd() { 2u32 } else { 1 };
    Spectrum::new(
        [(&q - 1u32) / eps, p.clone(), (q + 1u32) / eps],
        format!("L2({})", field_label(p, n)),
    )
}

/// Partitions of `n` as non-increasing part lists, generated without
/// recursion.
#[derive(Debug, Clone)]
pub struct Partitions {
    parts: Vec<u32>,
    done: bool,
}

impl Partitions {
    pub fn new(n: u32) -> Partitions {
        Partitions {
            parts: if n == 0 { Vec::new() } else { vec![n] },
            done: false,
        }
    }
}

impl Iterator for Partitions {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        let current = self.parts.clone();
        // strip trailing ones, decrement the last part > 1, refill greedily
        let mut ones = 0;
        while self.parts.last() == Some(&1) {
            self.parts.pop();
            ones += 1;
        }
        match self.parts.last_mut() {
            None => self.done = true,
            Some(last) => {
                *last -= 1;
                let cap = *last;
                let mut rest = ones + 1;
                while rest > 0 {
                    let part = cap.min(rest);
                    self.parts.push(part);
                    rest -= part;
                }
            }
        }
        Some(current)
    }
}

fn partition_spectrum(n: u32, cap: u32, even_only: bool, label: String) -> Result<Spectrum> {
    if n == 0 {
        return Err(Error::invalid("degree must be at least 1"));
    }
    if n > cap {
        return Err(Error::CapExceeded {
            what: "partition degree",
            requested: n as u64,
            cap: cap as u64,
        });
    }
    let mut orders: BTreeSet<u64> = BTreeSet::new();
    for parts in Partitions::new(n) {
        // a permutation of cycle type `parts` is even iff n - #parts is even
        if even_only && (n as usize - parts.len()) % 2 == 1 {
            continue;
        }
        orders.insert(parts.iter().fold(1u64, |acc, &x| acc.lcm(&(x as u64))));
    }
    Spectrum::new(orders, label)
}

/// Spectrum of `S_n`: lcms of the parts of all partitions of `n`.
pub fn omega_symmetric(n: u32, cap: u32) -> Result<Spectrum> {
    partition_spectrum(n, cap, false, format!("S{n}"))
}

/// Spectrum of `A_n`: as for `S_n` but over partitions with `n - #parts` even.
pub fn omega_alternating(n: u32, cap: u32) -> Result<Spectrum> {
    partition_spectrum(n, cap, true, format!("A{n}"))
}

fn mod_inverse(k: u64, m: u64) -> Option<u64> {
    let g = (k as i128).extended_gcd(&(m as i128));
    g.gcd
        .is_one()
        .then(|| g.x.rem_euclid(m as i128) as u64)
}

/// Spectrum of `<a, b | a^n = b^m = 1, a^-1 b a = b^k>`, the split extension
/// `Z_m : Z_n`, by enumerating every normal form `b^i a^j`.
pub fn omega_metacyclic(m: u64, n: u64, k: u64) -> Result<Spectrum> {
    if m == 0 || n == 0 {
        return Err(Error::invalid("cyclic factors must have order at least 1"));
    }
    let bad = || Error::BadAction { m, n, k };
    let order = m.checked_mul(n).ok_or_else(bad)?;
    if order > METACYCLIC_ORDER_CAP {
        return Err(Error::CapExceeded {
            what: "metacyclic group order",
            requested: order,
            cap: METACYCLIC_ORDER_CAP,
        });
    }
    let k_inv = if m == 1 { 0 } else { mod_inverse(k % m, m).ok_or_else(bad)? };
    if m > 1 && crate::numtheory::multiplicative_order(&Nat::from(k % m), &Nat::from(m))
        .map(|o| !(Nat::from(n) % o).is_zero())
        .unwrap_or(true)
    {
        return Err(bad());
    }

    // a^j b^s a^-j = b^(s k_inv^j)
    let twist: Vec<u64> = std::iter::successors(Some(1 % m), |t| Some(t * k_inv % m))
        .take(n as usize)
        .collect();
    let mul = |(i, j): (u64, u64), (s, t): (u64, u64)| -> (u64, u64) {
        ((i + s * twist[j as usize]) % m, (j + t) % n)
    };
    let pow = |mut x: (u64, u64), mut e: u64| -> (u64, u64) {
        let mut acc = (0, 0);
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, x);
            }
            x = mul(x, x);
            e >>= 1;
        }
        acc
    };

    let mut orders = BTreeSet::new();
    for i in 0..m {
        for j in 0..n {
            // the image in Z_n has order n / gcd(j, n); its power lands in <b>
            let head = n / j.gcd(&n);
            let (c, _) = pow((i, j), head);
            orders.insert(head * (m / c.gcd(&m)));
        }
    }
    Spectrum::new(orders, format!("Z{m}:Z{n} (k={k})"))
}

/// The five odd-order torus values of `F_4(q)`, `q = 2^e`, in the order
/// `q^4-1, q^4+1, q^4-q^2+1, (q-1)(q^3+1), (q+1)(q^3-1)`.
pub fn psi_f4(e: u32) -> Result<[Nat; 5]> {
    if e == 0 {
        return Err(Error::invalid("e must be at least 1"));
    }
    let q = Nat::one() << e;
    let q2 = &q * &q;
    let q3 = &q2 * &q;
    let q4 = &q2 * &q2;
    Ok([
        &q4 - 1u32,
        &q4 + 1u32,
        &q4 - &q2 + 1u32,
        (&q - 1u32) * (&q3 + 1u32),
        (&q + 1u32) * (&q3 - 1u32),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(n: u64) -> Nat {
        Nat::from(n)
    }

    fn mu(s: &Spectrum) -> Vec<u64> {
        s.mu().iter().map(|x| x.try_into().unwrap()).collect()
    }

    fn omega(s: &Spectrum) -> Vec<u64> {
        s.omega().unwrap().iter().map(|x| x.try_into().unwrap()).collect()
    }

    #[test]
    fn closure_examples() {
        let s = maximal_elements([8u32, 3, 10]).unwrap();
        assert_eq!(omega(&s), vec![1, 2, 3, 4, 5, 8, 10]);
        assert_eq!(omega(&maximal_elements([1u32]).unwrap()), vec![1]);
        assert_eq!(omega(&maximal_elements([6u32, 7, 8]).unwrap()), vec![1, 2, 3, 4, 6, 7, 8]);
    }

    #[test]
    fn maximal_examples() {
        assert_eq!(mu(&maximal_elements([1u32, 2, 3, 4, 5, 8, 10]).unwrap()), vec![3, 8, 10]);
        assert_eq!(mu(&maximal_elements([1u32]).unwrap()), vec![1]);
        assert_eq!(mu(&maximal_elements([1u32, 2, 4]).unwrap()), vec![4]);
        assert!(maximal_elements(Vec::<u32>::new()).is_err());
        assert!(maximal_elements([0u32, 3]).is_err());
    }

    #[test]
    fn pgl2_examples() {
        assert_eq!(mu(&mu_pgl2(&nat(7), 1).unwrap()), vec![6, 7, 8]);
        assert_eq!(mu(&mu_pgl2(&nat(3), 2).unwrap()), vec![3, 8, 10]);
        assert_eq!(mu(&mu_pgl2(&nat(7), 4).unwrap()), vec![7, 2400, 2402]);
        assert_eq!(mu(&mu_pgl2(&nat(2), 1).unwrap()), vec![2, 3]);
        assert_eq!(mu_pgl2(&nat(7), 4).unwrap().label(), "PGL(2,7^4)");
        assert!(matches!(mu_pgl2(&nat(9), 1), Err(Error::NotPrime(_))));
    }

    #[test]
    fn psl2_examples() {
        assert_eq!(mu(&mu_psl2(&nat(3), 2).unwrap()), vec![3, 4, 5]);
        assert_eq!(mu(&mu_psl2(&nat(2), 3).unwrap()), vec![2, 7, 9]);
        assert_eq!(mu(&mu_psl2(&nat(5), 1).unwrap()), vec![2, 3, 5]);
        assert!(matches!(mu_psl2(&nat(15), 1), Err(Error::NotPrime(_))));
    }

    #[test]
    fn partitions_of_five() {
        let all: Vec<_> = Partitions::new(5).collect();
        assert_eq!(
            all,
            vec![
                vec![5],
                vec![4, 1],
                vec![3, 2],
                vec![3, 1, 1],
                vec![2, 2, 1],
                vec![2, 1, 1, 1],
                vec![1, 1, 1, 1, 1],
            ]
        );
    }

    #[test]
    fn partition_counts() {
        // p(n) for n = 1..=12
        let expected = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        for (n, &count) in (1..).zip(&expected) {
            assert_eq!(Partitions::new(n).count(), count, "p({n})");
        }
        assert_eq!(Partitions::new(40).count(), 37338);
    }

    #[test]
    fn symmetric_and_alternating_examples() {
        assert_eq!(mu(&omega_symmetric(3, DEFAULT_PARTITION_CAP).unwrap()), vec![2, 3]);
        assert_eq!(mu(&omega_alternating(5, DEFAULT_PARTITION_CAP).unwrap()), vec![2, 3, 5]);
        let a7 = omega_alternating(7, DEFAULT_PARTITION_CAP).unwrap();
        let omega7 = omega(&a7);
        assert!(omega7.contains(&7));
        assert!(omega7.iter().all(|&x| x % 7 != 0 || x == 7));
        assert!(matches!(
            omega_symmetric(41, DEFAULT_PARTITION_CAP),
            Err(Error::CapExceeded { .. })
        ));
        assert_eq!(mu(&omega_symmetric(1, DEFAULT_PARTITION_CAP).unwrap()), vec![1]);
        assert_eq!(mu(&omega_alternating(2, DEFAULT_PARTITION_CAP).unwrap()), vec![1]);
    }

    #[test]
    fn metacyclic_examples() {
        assert_eq!(mu(&omega_metacyclic(5, 8, 2).unwrap()), vec![8, 10]);
        assert_eq!(mu(&omega_metacyclic(9, 1, 1).unwrap()), vec![9]);
        assert_eq!(mu(&omega_metacyclic(7, 3, 2).unwrap()), vec![3, 7]);
        // direct product Z_3 x Z_4 with trivial action
        assert_eq!(mu(&omega_metacyclic(3, 4, 1).unwrap()), vec![12]);
        assert!(matches!(omega_metacyclic(5, 3, 2), Err(Error::BadAction { .. })));
        assert!(matches!(omega_metacyclic(6, 2, 2), Err(Error::BadAction { .. })));
    }

    #[test]
    fn f4_examples() {
        let to_u64 = |xs: [Nat; 5]| xs.map(|x| u64::try_from(&x).unwrap());
        assert_eq!(to_u64(psi_f4(1).unwrap()), [15, 17, 13, 9, 21]);
        assert_eq!(to_u64(psi_f4(2).unwrap()), [255, 257, 241, 195, 315]);
        assert!(is_prime(&psi_f4(1).unwrap()[1]));
    }

    #[test]
    fn text_form() {
        let s = mu_pgl2(&nat(3), 2).unwrap();
        assert_eq!(
            s.to_text(true).unwrap(),
            "label: PGL(2,3^2)\nmu: 3 8 10\nomega: 1 2 3 4 5 8 10\n"
        );
    }
}
