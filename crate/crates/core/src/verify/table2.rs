//! Simple `C_pp`-groups for primes `p = 2^α 3^β + 1`, as published.
//!
//! Rows are kept as structured descriptors: a group name plus the printed
//! parameter condition, never expanded into instances.

use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numtheory::{is_prime, Nat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GroupDescriptor {
    pub name: &'static str,
    /// Parameter constraint as printed; empty when the group is fixed.
    pub condition: &'static str,
}

const fn g(name: &'static str) -> GroupDescriptor {
    GroupDescriptor { name, condition: "" }
}

const fn gc(name: &'static str, condition: &'static str) -> GroupDescriptor {
    GroupDescriptor { name, condition }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "p")]
pub enum RowKey {
    Fixed(u64),
    /// `p = 2^m + 1` with `m = 2^s`.
    Fermat,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CppTableEntry {
    pub key: RowKey,
    pub groups: &'static [GroupDescriptor],
}

pub const TABLE2: [CppTableEntry; 12] = [
    CppTableEntry {
        key: RowKey::Fixed(2),
        groups: &[
            g("A_5"),
            g("A_6"),
            gc("L_2(q)", "q a Fermat prime, a Mersenne prime or q = 2^m, m >= 3"),
            g("L_3(2^2)"),
            gc("Sz(2^(2m+1))", "m >= 1"),
        ],
    },
    CppTableEntry {
        key: RowKey::Fixed(3),
        groups: &[
            g("A_5"),
            g("A_6"),
            gc("L_2(q)", "q = 2^3, 3^m or 2.3^m +- 1 prime, m >= 1"),
            g("L_3(2^2)"),
        ],
    },
    CppTableEntry {
        key: RowKey::Fixed(5),
        groups: &[
            g("A_5"),
            g("A_6"),
            g("A_7"),
            g("M_11"),
            g("M_22"),
            gc("L_2(q)", "q = 7^2, 5^m or 2.5^m +- 1 prime, m >= 1"),
            g("L_3(2^2)"),
            gc("S_4(q)", "q = 3, 7"),
            g("U_4(3)"),
            gc("Sz(q)", "q = 2^3, 2^5"),
        ],
    },
    CppTableEntry {
        key: RowKey::Fixed(7),
        groups: &[
            g("A_7"),
            g("A_8"),
            g("A_9"),
            g("M_22"),
            g("J_1"),
            g("J_2"),
            g("HS"),
            gc("L_2(q)", "q = 2^3, 7^m or 2.7^m - 1 prime, m >= 1"),
            g("L_3(2^2)"),
            g("S_6(2)"),
            g("O_8^+(2)"),
            gc("G_2(q)", "q = 3, 19"),
            gc("U_3(q)", "q = 3, 5, 19"),
            g("U_4(3)"),
            g("U_6(2)"),
            g("Sz(2^3)"),
        ],
    },
    CppTableEntry {
        key: RowKey::Fixed(13),
        groups: &[
            g("A_13"),
            g("A_14"),
            g("A_15"),
            g("Suz"),
            g("Fi_22"),
            gc("L_2(q)", "q = 3^3, 5^2, 13^m or 2.13^m - 1 prime, m >= 1"),
            g("L_3(3)"),
            g("L_4(3)"),
            g("O_7(3)"),
            g("S_4(5)"),
            g("S_6(3)"),
            g("O_8^+(3)"),
            gc("G_2(q)", "q = 2^2, 3"),
            g("F_4(2)"),
            gc("U_3(q)", "q = 2^2, 23"),
            g("Sz(2^3)"),
            g("^3D_4(2)"),
            g("^2E_6(2)"),
            g("^2F_4(2)'"),
        ],
    },
    CppTableEntry {
        key: RowKey::Fixed(17),
        groups: &[
            g("A_17"),
            g("A_18"),
            g("A_19"),
            g("J_3"),
            g("He"),
            g("Fi_23"),
            g("Fi_24'"),
            gc("L_2(q)", "q = 2^4, 17^m or 2.17^m +- 1 prime, m >= 1"),
            g("S_4(4)"),
            g("S_8(2)"),
            g("F_4(2)"),
            g("O_8^-(2)"),
            g("O_10^-(2)"),
            g("^2E_6(2)"),
        ],
    },
    CppTableEntry {
        key: RowKey::Fixed(19),
        groups: &[
            g("A_19"),
            g("A_20"),
            g("A_21"),
            g("J_1"),
            g("J_3"),
            g("O'N"),
            g("Th"),
            g("HN"),
            gc("L_2(q)", "q = 19^m or 2.19^m - 1 prime, m >= 1"),
            g("L_3(7)"),
            g("U_3(2^3)"),
            g("R(3^3)"),
            g("^2E_6(2)"),
        ],
    },
    CppTableEntry {
        key: RowKey::Fixed(37),
        groups: &[
            g("A_37"),
            g("A_38"),
            g("A_39"),
            g("J_4"),
            g("Ly"),
            gc("L_2(q)", "q = 37^m or 2.37^m - 1 prime, m >= 1"),
            g("U_3(11)"),
            g("R(3^3)"),
            g("^2F_4(2^3)"),
        ],
    },
    CppTableEntry {
        key: RowKey::Fixed(73),
        groups: &[
            g("A_73"),
            g("A_74"),
            g("A_75"),
            gc("L_2(q)", "q = 73^m or 2.73^m - 1 prime, m >= 1"),
            g("L_3(2^3)"),
            g("S_6(2^3)"),
            gc("G_2(q)", "q = 2^3, 3^2"),
            g("F_4(3)"),
            g("E_6(2)"),
            g("E_7(2)"),
            g("U_3(3^2)"),
            g("^3D_4(3)"),
        ],
    },
    CppTableEntry {
        key: RowKey::Fixed(109),
        groups: &[
            g("A_109"),
            g("A_110"),
            g("A_111"),
            gc("L_2(q)", "q = 109^m or 2.109^m - 1 prime, m >= 1"),
            g("^2F_4(2^3)"),
        ],
    },
    CppTableEntry {
        key: RowKey::Fermat,
        groups: &[
            g("A_p"),
            g("A_(p+1)"),
            g("A_(p+2)"),
            gc("L_2(q)", "q = 2^m, p^k, 2p^k +- 1 prime, k >= 1"),
            gc("S_a(2^b)", "a = 2^(c+1), b = 2^d, c >= 1, c + d = s"),
            gc("F_4(2^e)", "e >= 1, 4e = 2^s"),
            gc("O_(2(m+1))^-(2)", "s >= 2"),
            gc("O_a^-(2^b)", "a = 2^(c+1), b = 2^d, c >= 2, c + d = s"),
        ],
    },
    CppTableEntry {
        key: RowKey::Other,
        groups: &[
            g("A_p"),
            g("A_(p+1)"),
            g("A_(p+2)"),
            gc("L_2(q)", "q = p^m or 2p^m - 1 prime, m >= 1"),
        ],
    },
];

/// The row that applies to one prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table2Match {
    #[serde(serialize_with = "crate::serde_nat::nat")]
    pub p: Nat,
    pub alpha: u32,
    pub beta: u32,
    /// For the Fermat row, `p = 2^m + 1` with `m = 2^s`.
    pub fermat_m: Option<u32>,
    pub fermat_s: Option<u32>,
    pub entry: CppTableEntry,
}

fn strip(n: &mut Nat, d: u32) -> u32 {
    let mut e = 0;
    while (&*n % d).is_zero() {
        *n /= d;
        e += 1;
    }
    e
}

/// Looks up the row for `p`: a fixed row if printed, else the Fermat row for
/// `p = 2^(2^s) + 1`, else the `Other` row.
pub fn table2_lookup(p: &Nat) -> Result<Table2Match> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p.clone()));
    }
    let mut rest = p - 1u32;
    let alpha = strip(&mut rest, 2);
    let beta = strip(&mut rest, 3);
    if rest != Nat::from(1u32) {
        return Err(Error::NotCppPrime(p.clone()));
    }
    let small = p.to_u64();
    let row = |key: RowKey| *TABLE2.iter().find(|e| e.key == key).expect("row present");
    let (entry, fermat_m, fermat_s) = match small.and_then(|v| TABLE2.iter().find(|e| e.key == RowKey::Fixed(v))) {
        Some(e) => (*e, None, None),
        None if beta == 0 && alpha.is_power_of_two() => {
            (row(RowKey::Fermat), Some(alpha), Some(alpha.trailing_zeros()))
        }
        None => (row(RowKey::Other), None, None),
    };
    Ok(Table2Match {
        p: p.clone(),
        alpha,
        beta,
        fermat_m,
        fermat_s,
        entry,
    })
}
