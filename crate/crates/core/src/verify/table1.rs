//! The published table of primitive prime divisors `p_n` for
//! `p in {7, 13, 17}` and `2 <= n <= 19`.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::Serialize;

use super::report::Report;
use crate::error::Result;
use crate::numtheory::{is_prime, multiplicative_order, ppd_table, FactorConfig, Nat};

const TABLE1: [(u64, [&[u64]; 18]); 3] = [
    (
        7,
        [
            &[],
            &[19],
            &[5],
            &[2801],
            &[43],
            &[29, 4733],
            &[1201],
            &[37, 1063],
            &[11, 191],
            &[1123, 293459],
            &[13, 181],
            &[16148168401],
            &[113, 911],
            &[31, 159871],
            &[17, 169553],
            &[14009, 2767631689],
            &[117307],
            &[419, 4534166740403],
        ],
    ),
    (
        13,
        [
            &[7],
            &[61],
            &[5, 17],
            &[30941],
            &[157],
            &[5229043],
            &[14281],
            &[1609669],
            &[11, 2411],
            &[23, 419, 859, 18041],
            &[28393],
            &[53, 264031, 1803647],
            &[29, 22079],
            &[4651, 161971],
            &[407865361],
            &[103, 443, 15798461357509],
            &[19, 271, 937],
            &[12865927, 9468940004449],
        ],
    ),
    (
        17,
        [
            &[3],
            &[307],
            &[5, 29],
            &[88741],
            &[7, 13],
            &[25646167],
            &[41761],
            &[19, 1270657],
            &[11, 71, 101],
            &[2141993519227],
            &[83233],
            &[212057, 2919196853],
            &[22796593],
            &[6566760001],
            &[18913, 184417],
            &[10949, 1749233, 2699538733],
            &[1423, 5653],
            &[229, 1103, 202607147, 291973723],
        ],
    ),
];

/// Smallest and largest `n` in the table.
pub const TABLE1_N: (u32, u32) = (2, 19);

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Cell {
    pub p: u64,
    pub n: u32,
    #[serde(serialize_with = "crate::serde_nat::set")]
    pub expected: BTreeSet<Nat>,
}

/// All 54 cells, row by row for `p = 7, 13, 17`.
pub fn table1_cells() -> Vec<Table1Cell> {
    TABLE1
        .iter()
        .flat_map(|(p, column)| {
            column.iter().zip(TABLE1_N.0..).map(move |(primes, n)| Table1Cell {
                p: *p,
                n,
                expected: primes.iter().map(|&s| Nat::from(s)).collect(),
            })
        })
        .collect()
}

/// Self-check of an embedded cell before it is used as a reference: each
/// listed `s` is prime, divides `p^n - 1`, and `p` has order exactly `n`
/// modulo `s` (so `s` divides no earlier `p^i - 1`).
pub fn cell_integrity(cell: &Table1Cell) -> std::result::Result<(), String> {
    let p = Nat::from(cell.p);
    let value = num_traits::pow(p.clone(), cell.n as usize) - Nat::one();
    for s in &cell.expected {
        if !is_prime(s) {
            return Err(format!("embedded {s} is not prime"));
        }
        if !(&value % s).is_zero() {
            return Err(format!("embedded {s} does not divide {}^{} - 1", cell.p, cell.n));
        }
        match multiplicative_order(&p, s) {
            Ok(o) if o == Nat::from(cell.n) => {}
            _ => return Err(format!("embedded {s} is not primitive for n = {}", cell.n)),
        }
    }
    Ok(())
}

fn show(set: &BTreeSet<Nat>) -> String {
    if set.is_empty() {
        "--".into()
    } else {
        set.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
    }
}

pub fn verify_table1() -> Result<Report> {
    verify_table1_with(&FactorConfig::default())
}

/// Recomputes every cell and compares with exact set equality.
pub fn verify_table1_with(cfg: &FactorConfig) -> Result<Report> {
    let mut report = Report::new("table1");
    let cells = table1_cells();
    for &(p, _) in &TABLE1 {
        let rows = ppd_table(&Nat::from(p), TABLE1_N.1, cfg)?;
        for cell in cells.iter().filter(|c| c.p == p) {
            let label = format!("{}_{}", cell.p, cell.n);
            if let Err(why) = cell_integrity(cell) {
                report.check(label, false, why);
                continue;
            }
            let row = &rows[cell.n as usize - 1];
            if !row.primes_complete {
                report.check(
                    label,
                    false,
                    format!("factorization incomplete, cofactor {}", row.residual),
                );
                continue;
            }
            let ok = row.primitive_primes == cell.expected;
            let detail = if ok {
                show(&cell.expected)
            } else {
                format!("expected {}, computed {}", show(&cell.expected), show(&row.primitive_primes))
            };
            report.check(label, ok, detail);
        }
    }
    Ok(report)
}
