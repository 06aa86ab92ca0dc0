//! Element-order spectra of `PGL(2, q)` and the number theory behind them.
//!
//! * [`numtheory`]: primality, factorization, cyclotomic values and the two
//!   primitive-prime-divisor engines.
//! * [`spectra`]: spectra stored by their maximal elements, closed-form
//!   spectra of `PGL(2,q)` and `L_2(q)`, and partition-based spectra of
//!   symmetric and alternating groups.
//! * [`primegraph`]: Gruenberg-Kegel prime graphs and their components.
//! * [`matrixgroups`]: explicit `GF(p^n)` and a brute-force oracle over
//!   2x2 matrix groups.
//! * [`verify`]: embedded reference tables and the batch checkers.
//!
//! The guide under `book/` walks through each of these; its code listings
//! are compiled and run as doc-tests of this crate.

pub mod error;
pub mod matrixgroups;
pub mod numtheory;
pub mod primegraph;
pub(crate) mod serde_nat;
pub mod spectra;
pub mod verify;

pub use error::{Error, Result};
pub use numtheory::Nat;
pub use spectra::Spectrum;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/ppd.md")]
    mod ppd {}
    #[doc = include_str!("../../../book/src/spectra.md")]
    mod spectra {}
    #[doc = include_str!("../../../book/src/prime-graph.md")]
    mod prime_graph {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
