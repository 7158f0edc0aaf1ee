//! Bipartite graphs with a distinguished part `X`, multihypergraphs, and the
//! incidence maps between them.

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// A bipartite graph with parts `X = {0..n}` and `Y = {0..m}`.
///
/// Only the `X` side is stored: row `x` is the neighbourhood `N(x) ⊆ Y`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BipartiteGraph {
    n: usize,
    m: usize,
    adj: Vec<BitSet>,
}

impl BipartiteGraph {
    pub fn new(m: usize, adj: Vec<BitSet>) -> Result<Self> {
        if adj.is_empty() {
            return Err(Error::InvalidGraph("X must contain at least one vertex".into()));
        }
        for (x, row) in adj.iter().enumerate() {
            if row.bound() > m {
                return Err(Error::InvalidGraph(format!(
                    "X vertex {x} has neighbour {} but m = {m}",
                    row.bound() - 1
                )));
            }
        }
        Ok(Self { n: adj.len(), m, adj })
    }

    /// Builds a graph from explicit neighbour lists; a repeated `Y` index in
    /// one list is rejected.
    pub fn from_lists<L: AsRef<[usize]>>(m: usize, lists: &[L]) -> Result<Self> {
        let mut adj = Vec::with_capacity(lists.len());
        for (x, list) in lists.iter().enumerate() {
            let mut row = BitSet::new();
            for &y in list.as_ref() {
                if y >= m {
                    return Err(Error::InvalidGraph(format!("Y index {y} out of range")));
                }
                if !row.insert(y) {
                    return Err(Error::InvalidGraph(format!(
                        "duplicate Y index {y} for X vertex {x}"
                    )));
                }
            }
            adj.push(row);
        }
        Self::new(m, adj)
    }

    /// Builds a graph with at most 64 `Y` vertices from row masks.
    pub fn from_masks(m: usize, masks: &[u64]) -> Result<Self> {
        Self::new(m, masks.iter().map(|&w| BitSet::from_word(w)).collect())
    }

    /// Complete bipartite graph `K_{n,m}`.
    pub fn complete(n: usize, m: usize) -> Result<Self> {
        Self::new(m, vec![BitSet::full(m); n])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, x: usize) -> &BitSet {
        &self.adj[x]
    }

    pub fn rows(&self) -> &[BitSet] {
        &self.adj
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.adj[x].contains(y)
    }

    pub fn degree(&self, x: usize) -> usize {
        self.adj[x].len()
    }

    pub fn x_degrees(&self) -> Vec<usize> {
        self.adj.iter().map(BitSet::len).collect()
    }

    pub fn y_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.m];
        for row in &self.adj {
            for y in row {
                deg[y] += 1;
            }
        }
        deg
    }

    /// `N(y) ⊆ X`.
    pub fn y_neighbors(&self, y: usize) -> BitSet {
        (0..self.n).filter(|&x| self.adj[x].contains(y)).collect()
    }

    pub fn min_x_degree(&self) -> usize {
        self.adj.iter().map(BitSet::len).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::len).sum()
    }

    /// Membership in the class of graphs with `|X| = n ≥ 2`, `|Y| = m` and
    /// every `X` degree at least `delta`.
    pub fn in_class(&self, n: usize, m: usize, delta: usize) -> bool {
        self.n == n && self.m == m && n >= 2 && self.min_x_degree() >= delta
    }

    /// Row masks, when `m ≤ 64`.
    pub fn masks(&self) -> Option<Vec<u64>> {
        self.adj.iter().map(BitSet::as_word).collect()
    }

    /// The same graph with the parts swapped.
    pub fn transpose(&self) -> Result<Self> {
        let mut adj = vec![BitSet::new(); self.m];
        for (x, row) in self.adj.iter().enumerate() {
            for y in row {
                adj[y].insert(x);
            }
        }
        Self::new(self.n, adj)
    }

    /// Relabels vertices: `X` vertex `x` becomes `x_perm[x]`, `Y` vertex `y`
    /// becomes `y_perm[y]`.
    pub fn relabeled(&self, x_perm: &[usize], y_perm: &[usize]) -> Result<Self> {
        check_permutation(x_perm, self.n)?;
        check_permutation(y_perm, self.m)?;
        let mut adj = vec![BitSet::new(); self.n];
        for (x, row) in self.adj.iter().enumerate() {
            adj[x_perm[x]] = row.iter().map(|y| y_perm[y]).collect();
        }
        Self::new(self.m, adj)
    }

    /// Adds a new `Y` vertex adjacent to `xs`.
    pub fn with_y_vertex(&self, xs: &BitSet) -> Result<Self> {
        if xs.bound() > self.n {
            return Err(Error::InvalidGraph("X index out of range".into()));
        }
        let mut adj = self.adj.clone();
        for x in xs {
            adj[x].insert(self.m);
        }
        Self::new(self.m + 1, adj)
    }

    /// The subgraph induced on `xs ∪ ys`, relabelled to `0..|xs|` and
    /// `0..|ys|` in ascending order.
    pub fn induced(&self, xs: &BitSet, ys: &BitSet) -> Result<Self> {
        let y_index: Vec<usize> = ys.iter().collect();
        let adj = xs
            .iter()
            .map(|x| {
                y_index
                    .iter()
                    .enumerate()
                    .filter(|(_, &y)| self.adj[x].contains(y))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        Self::new(y_index.len(), adj)
    }
}

fn check_permutation(perm: &[usize], len: usize) -> Result<()> {
    let mut seen = BitSet::new();
    if perm.len() != len || !perm.iter().all(|&p| p < len && seen.insert(p)) {
        return Err(Error::InvalidArgument(format!(
            "not a permutation of 0..{len}"
        )));
    }
    Ok(())
}

/// A multihypergraph on vertices `0..n`.
///
/// Edge identity is the position in the edge list, so repeated vertex sets are
/// distinct edges.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<BitSet>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<BitSet>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("hypergraph needs at least one vertex".into()));
        }
        for (i, e) in edges.iter().enumerate() {
            if e.is_empty() {
                return Err(Error::InvalidGraph(format!("edge {i} is empty")));
            }
            if e.bound() > n {
                return Err(Error::InvalidGraph(format!(
                    "edge {i} contains vertex {} but n = {n}",
                    e.bound() - 1
                )));
            }
        }
        Ok(Self { n, edges })
    }

    pub fn from_lists<L: AsRef<[usize]>>(n: usize, edges: &[L]) -> Result<Self> {
        let mut sets = Vec::with_capacity(edges.len());
        for (i, e) in edges.iter().enumerate() {
            let mut set = BitSet::new();
            for &v in e.as_ref() {
                if v >= n {
                    return Err(Error::InvalidGraph(format!("vertex index {v} out of range")));
                }
                if !set.insert(v) {
                    return Err(Error::InvalidGraph(format!(
                        "duplicate vertex {v} in edge {i}"
                    )));
                }
            }
            sets.push(set);
        }
        Self::new(n, sets)
    }

    /// Reads a bipartite graph as the incidence graph of a multihypergraph:
    /// `X` becomes the vertices and each `Y` vertex an edge.
    pub fn from_incidence_graph(g: &BipartiteGraph) -> Result<Self> {
        let mut edges = vec![BitSet::new(); g.m()];
        for x in 0..g.n() {
            for y in g.neighbors(x) {
                edges[y].insert(x);
            }
        }
        Self::new(g.n(), edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[BitSet] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &BitSet {
        &self.edges[i]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Number of edges containing every vertex of `set`.
    pub fn codegree(&self, set: &[usize]) -> Result<usize> {
        if set.is_empty() {
            return Err(Error::InvalidArgument(
                "co-degree is defined for non-empty vertex sets".into(),
            ));
        }
        if let Some(&v) = set.iter().find(|&&v| v >= self.n) {
            return Err(Error::InvalidArgument(format!("vertex index {v} out of range")));
        }
        let s: BitSet = set.iter().copied().collect();
        Ok(self.edges.iter().filter(|e| s.is_subset(e)).count())
    }

    /// Incidence graph: `X = V(H)`, `Y = E(H)`, `v ~ e` iff `v ∈ e`.
    pub fn incidence_graph(&self) -> BipartiteGraph {
        let mut adj = vec![BitSet::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for v in e {
                adj[v].insert(i);
            }
        }
        BipartiteGraph::new(self.edges.len(), adj).expect("incidence rows stay in range")
    }

    /// Dual incidence graph: `X = E(H)`, `Y = V(H)`. Needs at least one edge.
    pub fn dual_incidence_graph(&self) -> Result<BipartiteGraph> {
        if self.edges.is_empty() {
            return Err(Error::InvalidGraph(
                "dual incidence graph of an edgeless hypergraph has an empty X part".into(),
            ));
        }
        BipartiteGraph::new(self.n, self.edges.clone())
    }
}

/// A cycle `y1 x1 y2 x2 … yℓ xℓ y1` in a bipartite graph.
///
/// `x_i` is adjacent to `y_i` and `y_{i+1}` (indices mod ℓ).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct CycleWitness {
    xs: Vec<usize>,
    ys: Vec<usize>,
}

impl CycleWitness {
    pub fn new(g: &BipartiteGraph, xs: Vec<usize>, ys: Vec<usize>) -> Result<Self> {
        let len = xs.len();
        if len < 2 || ys.len() != len {
            return Err(Error::InvalidWitness(format!(
                "need ℓ ≥ 2 and equally many X and Y vertices, got {} and {}",
                xs.len(),
                ys.len()
            )));
        }
        let mut seen = BitSet::new();
        if !xs.iter().all(|&x| x < g.n() && seen.insert(x)) {
            return Err(Error::InvalidWitness("X vertices repeat or are out of range".into()));
        }
        let mut seen = BitSet::new();
        if !ys.iter().all(|&y| y < g.m() && seen.insert(y)) {
            return Err(Error::InvalidWitness("Y vertices repeat or are out of range".into()));
        }
        for i in 0..len {
            let next = ys[(i + 1) % len];
            if !g.has_edge(xs[i], ys[i]) || !g.has_edge(xs[i], next) {
                return Err(Error::InvalidWitness(format!(
                    "x{} is not adjacent to both y{} and y{}",
                    xs[i], ys[i], next
                )));
            }
        }
        Ok(Self { xs, ys })
    }

    /// Number of `X` vertices on the cycle; the cycle has `2ℓ` vertices.
    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn xs(&self) -> &[usize] {
        &self.xs
    }

    pub fn ys(&self) -> &[usize] {
        &self.ys
    }

    pub fn x_set(&self) -> BitSet {
        self.xs.iter().copied().collect()
    }

    pub fn y_set(&self) -> BitSet {
        self.ys.iter().copied().collect()
    }

    /// The same cycle started `k` steps later.
    pub fn rotated(&self, k: usize) -> Self {
        let k = k % self.len();
        let mut xs = self.xs.clone();
        let mut ys = self.ys.clone();
        xs.rotate_left(k);
        ys.rotate_left(k);
        Self { xs, ys }
    }

    /// The same cycle traversed in the opposite direction from `y1`.
    pub fn reversed(&self) -> Self {
        let xs = self.xs.iter().rev().copied().collect();
        let mut ys = vec![self.ys[0]];
        ys.extend(self.ys[1..].iter().rev());
        Self { xs, ys }
    }
}

/// Raw witness as read from structured input, before validation.
#[derive(Clone, Debug, Deserialize)]
pub struct RawCycleWitness {
    pub xs: Vec<usize>,
    pub ys: Vec<usize>,
}

impl RawCycleWitness {
    pub fn validate(self, g: &BipartiteGraph) -> Result<CycleWitness> {
        CycleWitness::new(g, self.xs, self.ys)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Hypergraph {
        Hypergraph::from_lists(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
    }

    #[test]
    fn triangle_incidence_is_a_six_cycle() {
        let g = triangle().incidence_graph();
        assert_eq!((g.n(), g.m()), (3, 3));
        assert_eq!(g.x_degrees(), vec![2, 2, 2]);
        assert_eq!(g.y_degrees(), vec![2, 2, 2]);
        let d = triangle().dual_incidence_graph().unwrap();
        assert_eq!(d, g.transpose().unwrap());
        assert_eq!(d.x_degrees(), vec![2, 2, 2]);
    }

    #[test]
    fn single_full_edge_is_a_star() {
        let h = Hypergraph::from_lists(4, &[vec![0, 1, 2, 3]]).unwrap();
        let g = h.incidence_graph();
        assert_eq!(g.m(), 1);
        assert_eq!(g.y_degrees(), vec![4]);
        assert_eq!(g.x_degrees(), vec![1; 4]);
        let h = Hypergraph::from_lists(3, &[vec![0, 1, 2]]).unwrap();
        let d = h.dual_incidence_graph().unwrap();
        assert_eq!(d.n(), 1);
        assert_eq!(d.degree(0), 3);
    }

    #[test]
    fn codegree_rejects_empty_set() {
        let h = triangle();
        assert!(h.codegree(&[]).is_err());
        assert!(h.codegree(&[5]).is_err());
        assert_eq!(h.codegree(&[0, 1]).unwrap(), 1);
        assert_eq!(h.codegree(&[0, 1, 2]).unwrap(), 0);
        assert_eq!(h.codegree(&[2]).unwrap(), 2);
    }

    #[test]
    fn hypergraph_rejects_empty_and_out_of_range_edges() {
        assert!(Hypergraph::from_lists(3, &[Vec::<usize>::new()]).is_err());
        assert!(Hypergraph::from_lists(3, &[vec![0, 3]]).is_err());
        assert!(Hypergraph::from_lists(3, &[vec![0, 0]]).is_err());
        // singleton edges and repeated edges are fine
        let h = Hypergraph::from_lists(2, &[vec![0], vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(h.degrees(), vec![3, 2]);
    }

    #[test]
    fn graph_rejects_out_of_range_neighbours() {
        assert!(BipartiteGraph::from_lists(2, &[vec![0, 3]]).is_err());
        assert!(BipartiteGraph::from_lists(2, &[vec![0, 0]]).is_err());
        assert!(BipartiteGraph::from_lists(2, &Vec::<Vec<usize>>::new()).is_err());
    }

    #[test]
    fn class_membership_is_checked() {
        let k = BipartiteGraph::complete(3, 3).unwrap();
        assert!(k.in_class(3, 3, 3));
        assert!(!k.in_class(3, 3, 4));
        let single = BipartiteGraph::complete(1, 3).unwrap();
        assert!(!single.in_class(1, 3, 1));
    }

    #[test]
    fn witness_validation() {
        let k = BipartiteGraph::complete(2, 2).unwrap();
        assert!(CycleWitness::new(&k, vec![0, 1], vec![0, 1]).is_ok());
        assert!(CycleWitness::new(&k, vec![0, 0], vec![0, 1]).is_err());
        assert!(CycleWitness::new(&k, vec![0], vec![0]).is_err());
        let path = BipartiteGraph::from_lists(2, &[vec![0, 1], vec![0]]).unwrap();
        assert!(CycleWitness::new(&path, vec![0, 1], vec![0, 1]).is_err());
    }

    #[test]
    fn reversal_and_rotation_keep_validity() {
        let k = BipartiteGraph::from_lists(
            4,
            &[vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
        )
        .unwrap();
        let c = CycleWitness::new(&k, vec![0, 1, 2, 3], vec![0, 1, 2, 3]).unwrap();
        let r = c.reversed();
        assert!(CycleWitness::new(&k, r.xs().to_vec(), r.ys().to_vec()).is_ok());
        assert_eq!(r.xs(), &[3, 2, 1, 0]);
        assert_eq!(r.ys(), &[0, 3, 2, 1]);
        let s = c.rotated(3);
        assert!(CycleWitness::new(&k, s.xs().to_vec(), s.ys().to_vec()).is_ok());
        assert_eq!(r.reversed(), c);
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = BipartiteGraph::from_lists(3, &[vec![0, 2], vec![1, 2], vec![0, 1]]).unwrap();
        let xs: BitSet = [0, 2].into_iter().collect();
        let ys: BitSet = [0, 2].into_iter().collect();
        let h = g.induced(&xs, &ys).unwrap();
        assert_eq!(h.rows(), &[[0, 1].into_iter().collect(), [0].into_iter().collect()]);
    }
}
