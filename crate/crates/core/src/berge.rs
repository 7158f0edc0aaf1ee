//! Berge cycles in multihypergraphs.
//!
//! A Berge cycle `v1 e1 v2 e2 … vℓ eℓ v1` in `H` is the same thing as a cycle
//! of length `2ℓ` in the incidence graph, so every query here is a call to the
//! bipartite engine followed by a witness translation. Queries over edge sets
//! go through the dual incidence graph instead.
//!
//! The bipartite engine accepts `ℓ = 2`; the Berge layer requires `ℓ ≥ 3`.

use serde::Serialize;

use crate::bitset::BitSet;
use crate::cycle::{self, combinations, SubsetSweep};
use crate::error::{invalid, Error, Result};
use crate::model::{CycleWitness, Hypergraph};

/// Base vertices `v1..vℓ` and edge positions `e1..eℓ` with
/// `{v_i, v_{i+1}} ⊆ e_i` (indices mod ℓ).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BergeCycleWitness {
    base: Vec<usize>,
    edges: Vec<usize>,
}

impl BergeCycleWitness {
    pub fn new(h: &Hypergraph, base: Vec<usize>, edges: Vec<usize>) -> Result<Self> {
        let len = base.len();
        if len < 2 || edges.len() != len {
            return Err(Error::InvalidWitness(
                "a Berge cycle needs ℓ ≥ 2 base vertices and as many edges".into(),
            ));
        }
        let mut seen = BitSet::new();
        if !base.iter().all(|&v| v < h.n() && seen.insert(v)) {
            return Err(Error::InvalidWitness("base vertices repeat or are out of range".into()));
        }
        let mut seen = BitSet::new();
        if !edges.iter().all(|&e| e < h.edge_count() && seen.insert(e)) {
            return Err(Error::InvalidWitness("edges repeat or are out of range".into()));
        }
        for i in 0..len {
            let (u, v) = (base[i], base[(i + 1) % len]);
            let e = h.edge(edges[i]);
            if !e.contains(u) || !e.contains(v) {
                return Err(Error::InvalidWitness(format!(
                    "edge {} does not contain both {u} and {v}",
                    edges[i]
                )));
            }
        }
        Ok(Self { base, edges })
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn base_set(&self) -> BitSet {
        self.base.iter().copied().collect()
    }

    pub fn edge_set(&self) -> BitSet {
        self.edges.iter().copied().collect()
    }

    /// Cycle in the incidence graph: `X` vertex `v_i` sits between `e_{i-1}`
    /// and `e_i`.
    pub fn to_incidence_cycle(&self, h: &Hypergraph) -> CycleWitness {
        let mut ys = self.edges.clone();
        ys.rotate_right(1);
        CycleWitness::new(&h.incidence_graph(), self.base.clone(), ys)
            .expect("Berge cycle maps to an incidence cycle")
    }

    /// Reads an incidence-graph cycle `y1 x1 … yℓ xℓ` back as a Berge cycle.
    pub fn from_incidence_cycle(h: &Hypergraph, c: &CycleWitness) -> Result<Self> {
        let mut edges = c.ys().to_vec();
        edges.rotate_left(1);
        Self::new(h, c.xs().to_vec(), edges)
    }
}

fn index_set(a: &[usize], min: usize, what: &str) -> Result<BitSet> {
    let set: BitSet = a.iter().copied().collect();
    if set.len() != a.len() {
        return invalid(format!("{what} contains repeated indices"));
    }
    if set.len() < min {
        return invalid(format!("{what} needs at least {min} elements, got {}", set.len()));
    }
    Ok(set)
}

/// A Berge cycle whose base vertices are exactly `a` (`|a| ≥ 3`).
pub fn find_berge_cycle(h: &Hypergraph, a: &[usize]) -> Result<Option<BergeCycleWitness>> {
    let set = index_set(a, 3, "base vertex set")?;
    if set.bound() > h.n() {
        return invalid(format!("vertex index {} out of range", set.bound() - 1));
    }
    let g = h.incidence_graph();
    cycle::find_cycle_covering_exactly(&g, &set)?
        .map(|c| BergeCycleWitness::from_incidence_cycle(h, &c))
        .transpose()
}

/// A Berge cycle through every vertex. Needs `n ≥ 3`.
pub fn has_hamiltonian_berge_cycle(h: &Hypergraph) -> Result<bool> {
    hamiltonian_berge_cycle(h).map(|c| c.is_some())
}

pub fn hamiltonian_berge_cycle(h: &Hypergraph) -> Result<Option<BergeCycleWitness>> {
    if h.n() < 3 {
        return invalid(format!("Hamiltonian Berge cycles need n ≥ 3, got {}", h.n()));
    }
    find_berge_cycle(h, &(0..h.n()).collect::<Vec<_>>())
}

/// A Berge cycle whose edge set is exactly `b` (`|b| ≥ 3`), found as a cycle
/// of the dual incidence graph covering `b`.
pub fn find_berge_cycle_with_edges(
    h: &Hypergraph,
    b: &[usize],
) -> Result<Option<BergeCycleWitness>> {
    let set = index_set(b, 3, "edge set")?;
    if set.bound() > h.edge_count() {
        return invalid(format!("edge index {} out of range", set.bound() - 1));
    }
    let dual = h.dual_incidence_graph()?;
    // In the dual graph `y_i, y_{i+1} ∈ x_i`: base vertices are the `Y` side.
    cycle::find_cycle_covering_exactly(&dual, &set)?
        .map(|c| BergeCycleWitness::new(h, c.ys().to_vec(), c.xs().to_vec()))
        .transpose()
}

/// For every `A ⊆ V(H)` with `|A| ≥ 3`, is there a Berge cycle with base
/// vertex set `A`?
pub fn is_super_pancyclic(h: &Hypergraph) -> Result<SubsetSweep> {
    if h.n() < 3 {
        return invalid(format!("super-pancyclicity needs n ≥ 3, got {}", h.n()));
    }
    cycle::is_x_super_pancyclic(&h.incidence_graph())
}

/// Every vertex set `A` with `|A| ≥ 3` lacking a Berge cycle on it.
pub fn non_cyclic_sets(h: &Hypergraph) -> Result<Vec<Vec<usize>>> {
    let all: Vec<usize> = (0..h.n()).collect();
    let mut out = Vec::new();
    for k in 3..=h.n() {
        for a in combinations(&all, k) {
            if find_berge_cycle(h, &a)?.is_none() {
                out.push(a);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;

    fn triangle() -> Hypergraph {
        Hypergraph::from_lists(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
    }

    #[test]
    fn triangle_berge_cycle() {
        let h = triangle();
        let c = find_berge_cycle(&h, &[0, 1, 2]).unwrap().unwrap();
        assert_eq!(c.base_set(), (0..3).collect());
        assert_eq!(c.edge_set(), (0..3).collect());
        assert_eq!(BergeCycleWitness::from_incidence_cycle(&h, &c.to_incidence_cycle(&h)).unwrap(), c);
        let c = find_berge_cycle_with_edges(&h, &[0, 1, 2]).unwrap().unwrap();
        assert_eq!(c.base_set(), (0..3).collect());
    }

    #[test]
    fn pigeonhole_blocks_parallel_edges() {
        let h = Hypergraph::from_lists(2, &[vec![0, 1], vec![0, 1], vec![0, 1]]).unwrap();
        assert!(find_berge_cycle_with_edges(&h, &[0, 1, 2]).unwrap().is_none());
    }

    #[test]
    fn small_sets_rejected() {
        let h = triangle();
        assert!(find_berge_cycle(&h, &[0, 1]).is_err());
        assert!(find_berge_cycle(&h, &[0, 1, 1]).is_err());
        assert!(find_berge_cycle(&h, &[0, 1, 5]).is_err());
        assert!(find_berge_cycle_with_edges(&h, &[0, 1]).is_err());
        let small = Hypergraph::from_lists(2, &[vec![0, 1]]).unwrap();
        assert!(has_hamiltonian_berge_cycle(&small).is_err());
        assert!(is_super_pancyclic(&small).is_err());
    }

    #[test]
    fn complete_pairs_on_four_vertices_is_hamiltonian() {
        let pairs: Vec<Vec<usize>> = combinations(&[0, 1, 2, 3], 2);
        let h = Hypergraph::from_lists(4, &pairs).unwrap();
        assert!(has_hamiltonian_berge_cycle(&h).unwrap());
        assert!(is_super_pancyclic(&h).unwrap().holds());
    }

    #[test]
    fn constructions_three_and_four_are_not_hamiltonian() {
        assert!(!has_hamiltonian_berge_cycle(&constructions::gen_construction3(5).unwrap()).unwrap());
        assert!(!has_hamiltonian_berge_cycle(&constructions::gen_construction4(8).unwrap()).unwrap());
    }

    #[test]
    fn construction3_cycle_inside_first_part() {
        let h = constructions::gen_construction3(5).unwrap();
        // V1 = {0, 1, 2}
        let c = find_berge_cycle(&h, &[0, 1, 2]).unwrap().unwrap();
        for &e in c.edges() {
            assert!(h.edge(e).is_subset(&(0..3).collect()));
        }
    }
}
