//! Embedded reference data and the batch checkers run against it.
//!
//! Every checker returns a [`Report`] with one [`Check`] per item. Printed
//! reference values are never trusted: they are diffed against fresh
//! arithmetic, and a mismatch fails unless it is a documented misprint.

mod cases;
mod lemmas;
mod report;
mod table1;
mod table2;

pub use cases::{
    audit_factorizations, case_factorizations, check_pgl2_component_structure, prime_set_cases,
    verify_case_factorizations, CaseFactorization, Claim, PrimeSetCase, PrimeSetKind, Side,
    KNOWN_ERRATA,
};
pub use lemmas::{verify_lemma1, verify_lemma2, LEMMA1_DEFAULT_N_MAX, LEMMA1_ROWS};
pub use report::{Check, Report, Verdict};
pub use table1::{cell_integrity, table1_cells, verify_table1, verify_table1_with, Table1Cell, TABLE1_N};
pub use table2::{table2_lookup, CppTableEntry, GroupDescriptor, RowKey, Table2Match, TABLE2};

/// `(p, n)` pairs whose prime-graph structure is checked by default.
pub const COMPONENT_CASES: [(u64, u32); 10] = [
    (7, 2),
    (7, 3),
    (7, 4),
    (13, 3),
    (13, 4),
    (19, 3),
    (37, 2),
    (73, 2),
    (73, 3),
    (73, 4),
];
