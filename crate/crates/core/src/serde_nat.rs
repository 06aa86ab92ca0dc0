//! Big integers serialize as decimal strings so no consumer loses precision.

use std::collections::BTreeSet;

use serde::ser::{SerializeSeq, Serializer};

use crate::numtheory::Nat;

pub fn nat<S: Serializer>(n: &Nat, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(n)
}

pub fn set<S: Serializer>(xs: &BTreeSet<Nat>, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(|x| x.to_string()))
}

pub fn pairs<S: Serializer>(xs: &[(Nat, u32)], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for (p, e) in xs {
        seq.serialize_element(&(p.to_string(), e))?;
    }
    seq.end()
}

pub fn sets<S: Serializer>(xs: &[BTreeSet<Nat>], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(
        xs.iter()
            .map(|set| set.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
    )
}
