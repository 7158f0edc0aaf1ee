//! Generators for the extremal families, with machine-checked certificates.
//!
//! Vertex numbering:
//!
//! * `G1(δ)`: `X = 0..δ`. `Y` hubs `0..δ-1` are adjacent to all of `X`;
//!   pendant `δ-1+i` hangs off `x_i`.
//! * `G2(a, b, δ)`: `X = 0..a` is the first block, `a..a+b` the second.
//!   `Y` 0 is the shared (glued) vertex, `1..δ` belong to the first block and
//!   `δ..2δ-1` to the second.
//! * `G3(n1, n2, n3, δ)`: `X` blocks in order. `Y` 0 and 1 are the two
//!   universal vertices, followed by `δ-2` private vertices per block.
//! * Hypergraph 3 (`n`): `V1 = 0..k`, `V2 = k-1..n` with `k = ⌊(n+1)/2⌋`,
//!   sharing vertex `k-1`. Edges are the subsets of `V1` of size at least 2
//!   (by size, then lexicographic), then those of `V2`.
//! * Hypergraph 4 (`n`): `V1 = 0..⌈(n+2)/2⌉`, `V2` the rest. Edges are the
//!   `⌈n/4⌉`-sets with exactly one vertex in `V1` (ordered by that vertex,
//!   then lexicographically), then `V1` itself.

use serde::Serialize;

use crate::bitset::BitSet;
use crate::berge;
use crate::cycle::{self, combinations};
use crate::error::{invalid, Result};
use crate::format::GraphFile;
use crate::model::{BipartiteGraph, Hypergraph};
use crate::structure;

/// `G1(δ)`: `K_{δ,δ-1}` plus a pendant `Y` vertex on every `X` vertex.
pub fn gen_g1(delta: usize) -> Result<BipartiteGraph> {
    if delta < 2 {
        return invalid(format!("G1 needs δ ≥ 2, got {delta}"));
    }
    let hubs = delta - 1;
    let lists: Vec<Vec<usize>> = (0..delta)
        .map(|x| (0..hubs).chain([hubs + x]).collect())
        .collect();
    BipartiteGraph::from_lists(2 * delta - 1, &lists)
}

/// `G2(a, b)`: `K_{a,δ}` and `K_{b,δ}` glued at one vertex of their
/// `δ`-sides.
pub fn gen_g2(a: usize, b: usize, delta: usize) -> Result<BipartiteGraph> {
    if b < 1 || a < b {
        return invalid(format!("G2 needs a ≥ b ≥ 1, got a = {a}, b = {b}"));
    }
    if delta < 2 || delta < a {
        return invalid(format!("G2 needs δ ≥ max(2, a), got δ = {delta}, a = {a}"));
    }
    let first: Vec<usize> = (0..delta).collect();
    let second: Vec<usize> = [0].into_iter().chain(delta..2 * delta - 1).collect();
    let lists: Vec<Vec<usize>> = (0..a)
        .map(|_| first.clone())
        .chain((0..b).map(|_| second.clone()))
        .collect();
    BipartiteGraph::from_lists(2 * delta - 1, &lists)
}

/// `G3(n1, n2, n3)`: three copies `K_{δ-2, n_i}` plus two `Y` vertices
/// adjacent to every `X` vertex.
pub fn gen_g3(n1: usize, n2: usize, n3: usize, delta: usize) -> Result<BipartiteGraph> {
    if !(n1 >= n2 && n2 >= n3 && n3 >= 1) {
        return invalid(format!("G3 needs n1 ≥ n2 ≥ n3 ≥ 1, got ({n1}, {n2}, {n3})"));
    }
    if delta < 3 {
        return invalid(format!("G3 needs δ ≥ 3, got {delta}"));
    }
    let private = delta - 2;
    let mut lists = Vec::new();
    for (block, size) in [n1, n2, n3].into_iter().enumerate() {
        let own: Vec<usize> = [0, 1]
            .into_iter()
            .chain((0..private).map(|i| 2 + block * private + i))
            .collect();
        lists.extend(std::iter::repeat_n(own, size));
    }
    BipartiteGraph::from_lists(3 * delta - 4, &lists)
}

fn subsets_of_size_at_least_two(vertices: &[usize]) -> Vec<Vec<usize>> {
    (2..=vertices.len())
        .flat_map(|k| combinations(vertices, k))
        .collect()
}

/// Two cliques of all sets of size at least 2, on `V1` and `V2`, sharing one
/// vertex.
pub fn gen_construction3(n: usize) -> Result<Hypergraph> {
    if n < 4 {
        return invalid(format!("construction 3 needs n ≥ 4, got {n}"));
    }
    let k = n.div_ceil(2);
    let v1: Vec<usize> = (0..k).collect();
    let v2: Vec<usize> = (k - 1..n).collect();
    let mut edges = subsets_of_size_at_least_two(&v1);
    edges.extend(subsets_of_size_at_least_two(&v2));
    Hypergraph::from_lists(n, &edges)
}

/// Sizes `(|V1|, |V2|, edge size)` of construction 4.
pub fn construction4_parts(n: usize) -> (usize, usize, usize) {
    ((n + 2).div_ceil(2), (n - 2) / 2, n.div_ceil(4))
}

/// All `⌈n/4⌉`-sets meeting `V1` in exactly one vertex, plus `V1` itself.
pub fn gen_construction4(n: usize) -> Result<Hypergraph> {
    if n < 8 {
        return invalid(format!("construction 4 needs n ≥ 8, got {n}"));
    }
    let (s1, s2, k) = construction4_parts(n);
    if k - 1 > s2 {
        return invalid(format!("construction 4 infeasible: edge size {k} but |V2| = {s2}"));
    }
    let v2: Vec<usize> = (s1..n).collect();
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for v in 0..s1 {
        for rest in combinations(&v2, k - 1) {
            edges.push([v].into_iter().chain(rest).collect());
        }
    }
    edges.push((0..s1).collect());
    Hypergraph::from_lists(n, &edges)
}

/// Parameters of one extremal family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family")]
pub enum ConstructionSpec {
    G1 { delta: usize },
    G2 { a: usize, b: usize, delta: usize },
    G3 { n1: usize, n2: usize, n3: usize, delta: usize },
    H3 { n: usize },
    H4 { n: usize },
}

impl ConstructionSpec {
    /// Parity parameter of the `n ≥ δ` bound on `m`: 1 for even `δ`, 0 for odd.
    /// Recorded only; no generator here depends on it.
    pub fn alpha(&self) -> Option<usize> {
        match *self {
            ConstructionSpec::G1 { delta }
            | ConstructionSpec::G2 { delta, .. }
            | ConstructionSpec::G3 { delta, .. } => Some(usize::from(delta % 2 == 0)),
            _ => None,
        }
    }

    pub fn generate(&self) -> Result<GraphFile> {
        Ok(match *self {
            ConstructionSpec::G1 { delta } => gen_g1(delta)?.into(),
            ConstructionSpec::G2 { a, b, delta } => gen_g2(a, b, delta)?.into(),
            ConstructionSpec::G3 { n1, n2, n3, delta } => gen_g3(n1, n2, n3, delta)?.into(),
            ConstructionSpec::H3 { n } => gen_construction3(n)?.into(),
            ConstructionSpec::H4 { n } => gen_construction4(n)?.into(),
        })
    }

    pub fn label(&self) -> String {
        match *self {
            ConstructionSpec::G1 { delta } => format!("G1({delta})"),
            ConstructionSpec::G2 { a, b, delta } => format!("G2({a},{b}) with δ = {delta}"),
            ConstructionSpec::G3 { n1, n2, n3, delta } => {
                format!("G3({n1},{n2},{n3}) with δ = {delta}")
            }
            ConstructionSpec::H3 { n } => format!("construction 3 hypergraph, n = {n}"),
            ConstructionSpec::H4 { n } => format!("construction 4 hypergraph, n = {n}"),
        }
    }

    /// Generates the object and checks every stated property with the exact
    /// engines.
    pub fn certify(&self) -> Result<Certificate> {
        match *self {
            ConstructionSpec::G1 { delta } => {
                let g = gen_g1(delta)?;
                Ok(self.certify_graph(&g, (delta, 2 * delta - 1, delta), delta - 1, false))
            }
            ConstructionSpec::G2 { a, b, delta } => {
                let g = gen_g2(a, b, delta)?;
                Ok(self.certify_graph(&g, (a + b, 2 * delta - 1, delta), a, false))
            }
            ConstructionSpec::G3 { n1, n2, n3, delta } => {
                let g = gen_g3(n1, n2, n3, delta)?;
                Ok(self.certify_graph(&g, (n1 + n2 + n3, 3 * delta - 4, delta), n1 + n2, true))
            }
            ConstructionSpec::H3 { n } => {
                let h = gen_construction3(n)?;
                let claimed = (1usize << (n.div_ceil(2) - 1)) - 1;
                Ok(self.certify_hypergraph(&h, Some(claimed), false, false))
            }
            ConstructionSpec::H4 { n } => {
                let h = gen_construction4(n)?;
                Ok(self.certify_hypergraph(&h, None, true, true))
            }
        }
    }

    fn certify_graph(
        &self,
        g: &BipartiteGraph,
        (n, m, delta): (usize, usize, usize),
        longest: usize,
        two_connected: bool,
    ) -> Certificate {
        let observed = cycle::longest_cycle(g).map_or(0, |c| c.len());
        // ℓ < 2 means the graph should have no cycle at all
        let degenerate = longest < 2;
        let claimed_longest = if degenerate { 0 } else { longest };
        let observed_2c = structure::is_2connected(g).unwrap_or(false);
        let mut checks = vec![
            Check::new("n", n, g.n()),
            Check::new("m", m, g.m()),
            Check::new("min X degree", delta, g.min_x_degree()),
            Check::new("longest cycle ℓ", claimed_longest, observed),
            Check::new("2-connected", two_connected, observed_2c),
        ];
        if !two_connected {
            checks.push(Check::new(
                "has cut vertex",
                true,
                !structure::cut_vertices(g).is_empty(),
            ));
        }
        Certificate {
            spec: *self,
            label: self.label(),
            degenerate,
            checks,
        }
    }

    fn certify_hypergraph(
        &self,
        h: &Hypergraph,
        min_degree: Option<usize>,
        codegree_claim: bool,
        two_connected: bool,
    ) -> Certificate {
        let mut checks = Vec::new();
        if let Some(d) = min_degree {
            checks.push(Check::new("min degree", d, h.min_degree()));
        }
        let ham = berge::has_hamiltonian_berge_cycle(h).unwrap_or(false);
        checks.push(Check::new("Hamiltonian Berge cycle", false, ham));
        let g = h.incidence_graph();
        let observed_2c = structure::is_2connected(&g).unwrap_or(false);
        checks.push(Check::new("incidence graph 2-connected", two_connected, observed_2c));
        if codegree_claim {
            let all_pairs = combinations(&(0..h.n()).collect::<Vec<_>>(), 2)
                .iter()
                .all(|p| h.codegree(p).unwrap() > 0);
            checks.push(Check::new("every pair has positive codegree", true, all_pairs));
        }
        Certificate {
            spec: *self,
            label: self.label(),
            degenerate: false,
            checks,
        }
    }
}

/// One stated property and what the engines observed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub property: &'static str,
    pub claimed: String,
    pub observed: String,
    pub holds: bool,
}

impl Check {
    fn new<T: PartialEq + ToString>(property: &'static str, claimed: T, observed: T) -> Self {
        Self {
            property,
            holds: claimed == observed,
            claimed: claimed.to_string(),
            observed: observed.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub spec: ConstructionSpec,
    pub label: String,
    /// Parameters at which the stated longest cycle has fewer than two `X`
    /// vertices, so the graph is expected to be acyclic.
    pub degenerate: bool,
    pub checks: Vec<Check>,
}

impl Certificate {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn check(&self, property: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.property == property)
    }
}

/// Vertices of the shared vertex and the two sides of construction 3.
pub fn construction3_parts(n: usize) -> (BitSet, BitSet, usize) {
    let k = n.div_ceil(2);
    ((0..k).collect(), (k - 1..n).collect(), k - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g1_parameters() {
        for (delta, m, len) in [(3, 5, 2), (4, 7, 3)] {
            let g = gen_g1(delta).unwrap();
            assert!(g.in_class(delta, m, delta));
            assert_eq!(g.x_degrees(), vec![delta; delta]);
            assert_eq!(cycle::longest_cycle(&g).unwrap().len(), len);
        }
        assert!(gen_g1(1).is_err());
    }

    #[test]
    fn degenerate_boundaries_are_flagged() {
        let c = ConstructionSpec::G1 { delta: 2 }.certify().unwrap();
        assert!(c.degenerate && c.holds(), "{c:?}");
        let c = ConstructionSpec::G2 { a: 1, b: 1, delta: 2 }.certify().unwrap();
        assert!(c.degenerate && c.holds(), "{c:?}");
    }

    #[test]
    fn g2_parameters() {
        for (a, b, delta) in [(2, 1, 3), (3, 1, 4), (2, 2, 4)] {
            let c = ConstructionSpec::G2 { a, b, delta }.certify().unwrap();
            assert!(c.holds(), "{c:?}");
        }
        assert!(gen_g2(1, 2, 3).is_err());
        assert!(gen_g2(1, 0, 3).is_err());
        assert!(gen_g2(3, 1, 2).is_err());
    }

    #[test]
    fn g3_parameters() {
        for (n1, n2, n3, delta, n, m, len) in
            [(1, 1, 1, 3, 3, 5, 2), (2, 1, 1, 3, 4, 5, 3), (1, 1, 1, 4, 3, 8, 2)]
        {
            let g = gen_g3(n1, n2, n3, delta).unwrap();
            assert!(g.in_class(n, m, delta));
            assert_eq!(g.x_degrees(), vec![delta; n]);
            assert_eq!(cycle::longest_cycle(&g).unwrap().len(), len);
        }
        assert!(gen_g3(1, 2, 1, 3).is_err());
        assert!(gen_g3(1, 1, 1, 2).is_err());
        let c = ConstructionSpec::G3 { n1: 2, n2: 2, n3: 2, delta: 6 }.certify().unwrap();
        assert!(c.holds(), "{c:?}");
    }

    #[test]
    fn construction3_counts() {
        // independent count: subsets of size ≥ 2 of a k-set number 2^k - k - 1
        let count = |k: u32| 2usize.pow(k) - k as usize - 1;
        let h = gen_construction3(5).unwrap();
        assert_eq!(h.edge_count(), count(3) + count(3));
        assert_eq!(h.min_degree(), 3);
        let (_, _, v) = construction3_parts(5);
        assert_eq!(h.degree(v), (2usize.pow(2) - 1) + (2usize.pow(2) - 1));
        let h = gen_construction3(6).unwrap();
        assert_eq!(h.edge_count(), 15);
        assert_eq!(h.min_degree(), 3);
        let (v1, v2, _) = construction3_parts(5);
        assert_eq!(h.codegree(&[v1.first().unwrap(), v2.bound() - 1]).unwrap(), 0);
        assert!(gen_construction3(3).is_err());
    }

    #[test]
    fn construction4_counts() {
        let h = gen_construction4(8).unwrap();
        assert_eq!(construction4_parts(8), (5, 3, 2));
        assert_eq!(h.edge_count(), 5 * 3 + 1);
        assert_eq!(h.min_degree(), 4);
        assert!((0..5).all(|v| h.degree(v) == 4));
        assert!(gen_construction4(7).is_err());
    }

    #[test]
    fn alpha_is_recorded() {
        assert_eq!(ConstructionSpec::G1 { delta: 4 }.alpha(), Some(1));
        assert_eq!(ConstructionSpec::G1 { delta: 3 }.alpha(), Some(0));
        assert_eq!(ConstructionSpec::H3 { n: 5 }.alpha(), None);
    }
}
