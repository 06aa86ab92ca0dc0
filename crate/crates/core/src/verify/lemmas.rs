//! Instance checks for the two number-theoretic lemmas: large primitive
//! prime divisors past a threshold, and the solutions of `p^m = q^n + 1`.

use std::collections::BTreeSet;

use super::report::Report;
use crate::error::{Error, Result};
use crate::numtheory::{catalan_solutions, ppd_exists_above, CatalanFamily, Nat};

/// `(p, m, q)`: the claim is that for every `n >= m` some primitive prime
/// divisor of `p^n - 1` exceeds `q`. The row `(17, 4, 19)` does not hold at
/// `n = 6`: the primitive prime divisors of `17^6 - 1` are 7 and 13.
pub const LEMMA1_ROWS: [(u64, u32, u64); 6] = [
    (7, 5, 13),
    (13, 5, 19),
    (17, 4, 19),
    (19, 7, 37),
    (37, 7, 109),
    (73, 5, 127),
];

/// Default upper end of the `n` range checked per row.
pub const LEMMA1_DEFAULT_N_MAX: u32 = 60;

/// Runs the cyclotomic-residual test for every row and every `n` in
/// `m..=n_max`; one check per row, listing any counterexample.
pub fn verify_lemma1(n_max: u32) -> Result<Report> {
    let top = LEMMA1_ROWS.iter().map(|r| r.1).max().unwrap();
    if n_max < top {
        return Err(Error::invalid(format!("n_max must be at least {top}")));
    }
    let mut report = Report::new("lemma1");
    for &(p, m, q) in &LEMMA1_ROWS {
        let a = Nat::from(p);
        let mut missing = Vec::new();
        for n in m..=n_max {
            let r = ppd_exists_above(&a, n, q)?;
            if r.exists_above_threshold() != Some(true) {
                missing.push(n);
            }
        }
        let label = format!("p={p} m={m} q={q}");
        if missing.is_empty() {
            report.check(label, true, format!("n = {m}..={n_max}: primitive divisor > {q} found"));
        } else {
            report.check(label, false, format!("no primitive divisor > {q} for n in {missing:?}"));
        }
    }
    Ok(report)
}

const FERMAT_PRIMES: [u64; 5] = [3, 5, 17, 257, 65537];
const MERSENNE_PRIMES: [u64; 8] = [3, 7, 31, 127, 8191, 131071, 524287, 2147483647];

/// Enumerates `p^m = q^n + 1` up to `value_bound` and checks that every
/// solution is Mersenne, Fermat or `3^2 = 2^3 + 1`.
pub fn verify_lemma2(value_bound: u64) -> Result<Report> {
    let sols = catalan_solutions(value_bound)?;
    let mut report = Report::new("lemma2");

    let unclassified: Vec<_> = sols
        .iter()
        .filter(|s| s.family == CatalanFamily::Unclassified)
        .map(|s| format!("{}^{} = {}^{} + 1", s.p, s.m, s.q, s.n))
        .collect();
    report.check(
        "every solution in a listed family",
        unclassified.is_empty(),
        if unclassified.is_empty() {
            format!("{} solutions up to {value_bound}", sols.len())
        } else {
            format!("unclassified: {}", unclassified.join(", "))
        },
    );

    let exceptional: Vec<_> = sols
        .iter()
        .filter(|s| s.family == CatalanFamily::Exceptional)
        .map(|s| (s.p, s.m, s.q, s.n))
        .collect();
    report.check(
        "exceptional solutions are exactly (3,2,2,3)",
        exceptional == [(3, 2, 2, 3)],
        format!("{exceptional:?}"),
    );

    let fermat: BTreeSet<u64> = sols
        .iter()
        .filter(|s| s.family == CatalanFamily::Fermat)
        .map(|s| s.p)
        .collect();
    report.check(
        "Fermat-family p are Fermat primes",
        fermat.iter().all(|p| FERMAT_PRIMES.contains(p)),
        format!("{fermat:?}"),
    );

    let mersenne: BTreeSet<u64> = sols
        .iter()
        .filter(|s| s.family == CatalanFamily::Mersenne)
        .map(|s| s.q)
        .collect();
    report.check(
        "Mersenne-family q are Mersenne primes",
        mersenne.iter().all(|q| MERSENNE_PRIMES.contains(q)),
        format!("{mersenne:?}"),
    );
    Ok(report)
}
