//! Gruenberg-Kegel prime graphs.
//!
//! Two primes `r != s` are adjacent when `r*s` is an element order. Since a
//! spectrum is divisor closed this is the same as `r*s` dividing some maximal
//! element, so adjacency is decided on `μ` and `ω` is never expanded.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_traits::Zero;
use serde::Serialize;

use crate::error::Result;
use crate::numtheory::{factor, Nat};
use crate::spectra::Spectrum;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeGraph {
    #[serde(serialize_with = "crate::serde_nat::set")]
    vertices: BTreeSet<Nat>,
    #[serde(serialize_with = "serialize_edges")]
    edges: BTreeSet<(Nat, Nat)>,
}

fn serialize_edges<S: serde::Serializer>(
    edges: &BTreeSet<(Nat, Nat)>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(edges.iter().map(|(a, b)| [a.to_string(), b.to_string()]))
}

impl PrimeGraph {
    pub fn vertices(&self) -> &BTreeSet<Nat> {
        &self.vertices
    }

    /// Edges as ordered pairs `(r, s)` with `r < s`.
    pub fn edges(&self) -> &BTreeSet<(Nat, Nat)> {
        &self.edges
    }

    pub fn adjacent(&self, r: &Nat, s: &Nat) -> bool {
        let key = if r < s { (r.clone(), s.clone()) } else { (s.clone(), r.clone()) };
        self.edges.contains(&key)
    }

    pub fn is_isolated(&self, p: &Nat) -> bool {
        self.vertices.contains(p) && !self.edges.iter().any(|(a, b)| a == p || b == p)
    }

    fn neighbours(&self) -> BTreeMap<&Nat, Vec<&Nat>> {
        let mut adj: BTreeMap<&Nat, Vec<&Nat>> =
            self.vertices.iter().map(|v| (v, Vec::new())).collect();
        for (a, b) in &self.edges {
            adj.get_mut(a).unwrap().push(b);
            adj.get_mut(b).unwrap().push(a);
        }
        adj
    }
}

/// Builds `GK` from the maximal elements of `s`.
///
/// Fails with `FactorizationIncomplete` if some element of `μ` cannot be
/// factored; a graph is never built from a partial vertex set.
pub fn build_graph(s: &Spectrum) -> Result<PrimeGraph> {
    let mut vertices = BTreeSet::new();
    let mut edges = BTreeSet::new();
    for m in s.mu() {
        let primes: Vec<Nat> = factor(m)?.primes().cloned().collect();
        for (i, r) in primes.iter().enumerate() {
            for t in &primes[i + 1..] {
                edges.insert((r.clone(), t.clone()));
            }
        }
        vertices.extend(primes);
    }
    Ok(PrimeGraph { vertices, edges })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentPartition {
    #[serde(serialize_with = "crate::serde_nat::sets")]
    components: Vec<BTreeSet<Nat>>,
}

impl ComponentPartition {
    /// `π_1, ..., π_t`: the component holding 2 first, then the rest by
    /// smallest member.
    pub fn components(&self) -> &[BTreeSet<Nat>] {
        &self.components
    }

    /// The number of components `t`.
    pub fn t(&self) -> usize {
        self.components.len()
    }

    pub fn index_of(&self, p: &Nat) -> Option<usize> {
        self.components.iter().position(|c| c.contains(p))
    }
}

pub fn components(g: &PrimeGraph) -> ComponentPartition {
    let adj = g.neighbours();
    let mut seen: BTreeSet<&Nat> = BTreeSet::new();
    let mut comps: Vec<BTreeSet<Nat>> = Vec::new();
    // vertices are visited in ascending order, so components come out sorted
    // by smallest member and 2, when present, lands in the first one
    for start in &g.vertices {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = BTreeSet::new();
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            comp.insert(v.clone());
            for &w in &adj[v] {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        comps.push(comp);
    }
    ComponentPartition { components: comps }
}

/// `μ_i`: the maximal elements whose prime divisors all lie in `π_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MuComponent {
    #[serde(serialize_with = "crate::serde_nat::set")]
    pub primes: BTreeSet<Nat>,
    #[serde(serialize_with = "crate::serde_nat::set")]
    pub mu: BTreeSet<Nat>,
    /// Set for `i >= 2` when `μ_i` is a single element.
    pub singleton: bool,
}

pub fn mu_components(s: &Spectrum, part: &ComponentPartition) -> Result<Vec<MuComponent>> {
    let mut out: Vec<MuComponent> = part
        .components()
        .iter()
        .map(|c| MuComponent {
            primes: c.clone(),
            mu: BTreeSet::new(),
            singleton: false,
        })
        .collect();
    for m in s.mu() {
        let f = factor(m)?;
        // a maximal element lies inside one component: its primes are pairwise adjacent
        let Some(first) = f.primes().next() else {
            // μ = {1}
            if let Some(c) = out.first_mut() {
                c.mu.insert(m.clone());
            }
            continue;
        };
        if let Some(i) = part.index_of(first) {
            out[i].mu.insert(m.clone());
        }
    }
    for c in out.iter_mut().skip(1) {
        c.singleton = c.mu.len() == 1;
    }
    Ok(out)
}

/// The spectral necessary condition for `p` to be a `C_pp` prime: `p` is an
/// element order and an isolated vertex of the prime graph. This is only a
/// candidate test; the centralizer condition itself is not visible in `ω`.
pub fn is_cpp_candidate(s: &Spectrum, p: &Nat) -> Result<bool> {
    if !s.mu().iter().any(|m| (m % p).is_zero()) {
        return Ok(false);
    }
    Ok(build_graph(s)?.is_isolated(p))
}

/// Graphviz rendering: one cluster per component in partition order,
/// vertices ascending, edges ascending.
pub fn to_dot(g: &PrimeGraph, name: &str) -> String {
    let part = components(g);
    let mut out = String::new();
    writeln!(out, "graph \"{}\" {{", name.replace('"', "\\\"")).unwrap();
    for (i, comp) in part.components().iter().enumerate() {
        writeln!(out, "  subgraph cluster_{} {{", i + 1).unwrap();
        writeln!(out, "    label=\"pi_{}\";", i + 1).unwrap();
        for v in comp {
            writeln!(out, "    \"{v}\";").unwrap();
        }
        writeln!(out, "  }}").unwrap();
    }
    for (a, b) in &g.edges {
        writeln!(out, "  \"{a}\" -- \"{b}\";").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::{maximal_elements, mu_pgl2, mu_psl2};

    fn nat(n: u64) -> Nat {
        Nat::from(n)
    }

    fn set(xs: &[u64]) -> BTreeSet<Nat> {
        xs.iter().map(|&x| nat(x)).collect()
    }

    #[test]
    fn pgl2_7() {
        let g = build_graph(&mu_pgl2(&nat(7), 1).unwrap()).unwrap();
        assert_eq!(g.vertices(), &set(&[2, 3, 7]));
        assert_eq!(g.edges().len(), 1);
        assert!(g.adjacent(&nat(3), &nat(2)));
        assert!(g.is_isolated(&nat(7)));
    }

    #[test]
    fn pgl2_7_4() {
        let s = mu_pgl2(&nat(7), 4).unwrap();
        let g = build_graph(&s).unwrap();
        assert_eq!(g.vertices(), &set(&[2, 3, 5, 7, 1201]));
        let expected: BTreeSet<(Nat, Nat)> = [(2, 3), (2, 5), (3, 5), (2, 1201)]
            .iter()
            .map(|&(a, b)| (nat(a), nat(b)))
            .collect();
        assert_eq!(g.edges(), &expected);

        let part = components(&g);
        assert_eq!(part.t(), 2);
        assert_eq!(part.components()[0], set(&[2, 3, 5, 1201]));
        assert_eq!(part.components()[1], set(&[7]));

        let mus = mu_components(&s, &part).unwrap();
        assert_eq!(mus[0].mu, set(&[2400, 2402]));
        assert_eq!(mus[1].mu, set(&[7]));
        assert!(mus[1].singleton);
    }

    #[test]
    fn single_prime() {
        let s = maximal_elements([11u32]).unwrap();
        let g = build_graph(&s).unwrap();
        assert!(g.is_isolated(&nat(11)));
        let part = components(&g);
        assert_eq!(part.t(), 1);
        assert_eq!(mu_components(&s, &part).unwrap()[0].mu, set(&[11]));
    }

    #[test]
    fn psl2_9_has_three_components() {
        let g = build_graph(&mu_psl2(&nat(3), 2).unwrap()).unwrap();
        let part = components(&g);
        assert_eq!(part.components(), &[set(&[2]), set(&[3]), set(&[5])]);
    }

    #[test]
    fn pgl2_9_components() {
        let s = mu_pgl2(&nat(3), 2).unwrap();
        let part = components(&build_graph(&s).unwrap());
        let mus = mu_components(&s, &part).unwrap();
        assert_eq!(mus[0].mu, set(&[8, 10]));
        assert_eq!(mus[1].mu, set(&[3]));
    }

    #[test]
    fn odd_components_ordered_by_smallest_member() {
        let s = maximal_elements([4u32, 13, 15, 7]).unwrap();
        let part = components(&build_graph(&s).unwrap());
        assert_eq!(part.components(), &[set(&[2]), set(&[3, 5]), set(&[7]), set(&[13])]);
    }

    #[test]
    fn cpp_candidates() {
        assert!(is_cpp_candidate(&mu_pgl2(&nat(7), 3).unwrap(), &nat(7)).unwrap());
        assert!(is_cpp_candidate(&maximal_elements([2u32, 3]).unwrap(), &nat(3)).unwrap());
        assert!(!is_cpp_candidate(&maximal_elements([6u32, 7, 8]).unwrap(), &nat(3)).unwrap());
        assert!(!is_cpp_candidate(&maximal_elements([6u32, 7, 8]).unwrap(), &nat(5)).unwrap());
    }

    #[test]
    fn dot_output() {
        let g = build_graph(&mu_pgl2(&nat(7), 1).unwrap()).unwrap();
        let dot = to_dot(&g, "PGL(2,7)");
        assert_eq!(
            dot,
            "graph \"PGL(2,7)\" {\n  subgraph cluster_1 {\n    label=\"pi_1\";\n    \"2\";\n    \"3\";\n  }\n  subgraph cluster_2 {\n    label=\"pi_2\";\n    \"7\";\n  }\n  \"2\" -- \"3\";\n}\n"
        );
    }
}
