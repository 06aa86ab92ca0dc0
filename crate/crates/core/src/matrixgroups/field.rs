//! Explicit finite fields `GF(p^n)` for small `p^n`.
//!
//! An element is the integer whose base-`p` digits are its polynomial
//! coefficients, constant term first: over `GF(9) = GF(3)[x]/(x^2+1)` the
//! element `2x + 1` is `1 + 2*3 = 7`. Zero is `0` and one is `1`.
//! Multiplication goes through discrete log tables built at construction.

use crate::error::{Error, Result};
use crate::numtheory::is_prime_u64;

/// Largest extension degree accepted by [`FieldCtx::new`].
pub const FIELD_DEGREE_CAP: u32 = 4;
/// Largest field size accepted by [`FieldCtx::new`].
pub const FIELD_SIZE_CAP: u64 = 10_000;

pub type Elem = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldCtx {
    p: u32,
    n: u32,
    q: u32,
    modulus: Vec<u32>,
    generator: Elem,
    exp: Vec<Elem>,
    log: Vec<u32>,
}

fn digits(x: u32, p: u32, n: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(n as usize);
    let mut x = x;
    for _ in 0..n {
        out.push(x % p);
        x /= p;
    }
    out
}

fn undigits(ds: &[u32], p: u32) -> u32 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Remainder of `a` modulo the monic polynomial `m` over `GF(p)`;
/// coefficients constant first.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let deg = m.len() - 1;
    let mut r = a.to_vec();
    while r.len() > deg {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let shift = r.len() - deg;
            for (i, &c) in m[..deg].iter().enumerate() {
                let t = &mut r[shift + i];
                *t = (*t + (p - c) * lead) % p;
            }
        }
    }
    r
}

fn poly_mul_mod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut prod = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    poly_rem(&prod, m, p)
}

/// Monic polynomials of degree `d` over `GF(p)` ordered by their base-`p`
/// encoding, constant term as the lowest digit.
fn monic(d: u32, p: u32) -> impl Iterator<Item = Vec<u32>> {
    (0..p.pow(d)).map(move |low| {
        let mut v = digits(low, p, d);
        v.push(1);
        v
    })
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let n = (f.len() - 1) as u32;
    (1..=n / 2).all(|d| monic(d, p).all(|g| poly_rem(f, &g, p).iter().any(|&c| c != 0)))
}

impl FieldCtx {
    /// `GF(p^n)` with the least monic irreducible modulus of degree `n`.
    pub fn new(p: u64, n: u32) -> Result<FieldCtx> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p.into()));
        }
        if n == 0 {
            return Err(Error::invalid("field degree must be at least 1"));
        }
        if n > FIELD_DEGREE_CAP {
            return Err(Error::CapExceeded {
                what: "field degree",
                requested: n as u64,
                cap: FIELD_DEGREE_CAP as u64,
            });
        }
        let q = p.checked_pow(n).filter(|&q| q <= FIELD_SIZE_CAP).ok_or(Error::CapExceeded {
            what: "field size",
            requested: p.saturating_pow(n),
            cap: FIELD_SIZE_CAP,
        })?;
        let (p, q) = (p as u32, q as u32);
        let modulus = monic(n, p)
            .find(|f| is_irreducible(f, p))
            .expect("an irreducible polynomial exists in every degree");

        // find the least primitive element and tabulate its powers
        for g in 1..q {
            let gd = digits(g, p, n);
            let mut exp = Vec::with_capacity(q as usize - 1);
            let mut x = digits(1, p, n);
            loop {
                exp.push(undigits(&x, p));
                x = poly_mul_mod(&x, &gd, &modulus, p);
                if x[0] == 1 && x[1..].iter().all(|&c| c == 0) {
                    break;
                }
            }
            if exp.len() == q as usize - 1 {
                let mut log = vec![0u32; q as usize];
                for (i, &e) in exp.iter().enumerate() {
                    log[e as usize] = i as u32;
                }
                return Ok(FieldCtx {
                    p,
                    n,
                    q,
                    modulus,
                    generator: g,
                    exp,
                    log,
                });
            }
        }
        unreachable!("the multiplicative group of a finite field is cyclic")
    }

    pub fn p(&self) -> u64 {
        self.p as u64
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> u64 {
        self.q as u64
    }

    /// Coefficients of the modulus, constant term first, leading 1 last.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The least element generating the multiplicative group.
    pub fn generator(&self) -> Elem {
        self.generator
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.q
    }

    /// The image of an integer in the prime field.
    pub fn from_int(&self, k: i64) -> Elem {
        k.rem_euclid(self.p as i64) as Elem
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.n == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b) = (a, b);
        let (mut out, mut place) = (0, 1);
        for _ in 0..self.n {
            out += (a % self.p + b % self.p) % self.p * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: Elem) -> Elem {
        let (mut a, mut out, mut place) = (a, 0, 1);
        for _ in 0..self.n {
            out += (self.p - a % self.p) % self.p * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        let e = (self.log[a as usize] + self.log[b as usize]) % (self.q - 1);
        self.exp[e as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        (a != 0).then(|| {
            let e = (self.q - 1 - self.log[a as usize]) % (self.q - 1);
            self.exp[e as usize]
        })
    }

    pub fn pow(&self, a: Elem, k: u64) -> Elem {
        if a == 0 {
            return if k == 0 { 1 } else { 0 };
        }
        let e = (self.log[a as usize] as u64 * (k % (self.q as u64 - 1))) % (self.q as u64 - 1);
        self.exp[e as usize]
    }

    /// `log_g(a)` for the tabulated generator `g`.
    pub fn log(&self, a: Elem) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }
}
