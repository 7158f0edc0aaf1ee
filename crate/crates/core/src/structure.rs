//! Structural predicates and certificates: 2-connectivity, condition (2) on
//! `X`-subsets, tight pairs, crossing pairs on a cycle, and runtime audits of
//! the degree and separation facts that tight pairs obey.

use std::fmt;
use std::ops::AddAssign;

use serde::{Serialize, Serializer};

use crate::bitset::BitSet;
use crate::canon::{is_isomorphic_with, CanonLimits};
use crate::constructions;
use crate::cycle::{self, combinations, SubsetSweep};
use crate::error::{invalid, Error, Result};
use crate::model::{BipartiteGraph, CycleWitness, Hypergraph};

/// A vertex of a bipartite graph, tagged with its part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Vertex {
    X(usize),
    Y(usize),
}

/// Adjacency lists over `X = 0..n` followed by `Y = n..n+m`.
fn flat_adjacency(g: &BipartiteGraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut adj = vec![Vec::new(); n + g.m()];
    for x in 0..n {
        for y in g.neighbors(x) {
            adj[x].push(n + y);
            adj[n + y].push(x);
        }
    }
    adj
}

fn unflatten(g: &BipartiteGraph, v: usize) -> Vertex {
    if v < g.n() {
        Vertex::X(v)
    } else {
        Vertex::Y(v - g.n())
    }
}

fn flatten(g: &BipartiteGraph, v: Vertex) -> usize {
    match v {
        Vertex::X(x) => x,
        Vertex::Y(y) => g.n() + y,
    }
}

struct Articulation<'a> {
    adj: &'a [Vec<usize>],
    disc: Vec<usize>,
    low: Vec<usize>,
    timer: usize,
    cut: Vec<bool>,
}

impl Articulation<'_> {
    fn dfs(&mut self, v: usize, parent: Option<usize>) {
        self.timer += 1;
        self.disc[v] = self.timer;
        self.low[v] = self.timer;
        let mut children = 0;
        for &w in &self.adj[v] {
            if self.disc[w] == 0 {
                children += 1;
                self.dfs(w, Some(v));
                self.low[v] = self.low[v].min(self.low[w]);
                if parent.is_some() && self.low[w] >= self.disc[v] {
                    self.cut[v] = true;
                }
            } else if Some(w) != parent {
                self.low[v] = self.low[v].min(self.disc[w]);
            }
        }
        if parent.is_none() && children > 1 {
            self.cut[v] = true;
        }
    }
}

/// Number of connected components and the cut vertices of `G`.
fn components_and_cuts(g: &BipartiteGraph) -> (usize, Vec<Vertex>) {
    let adj = flat_adjacency(g);
    let total = adj.len();
    let mut a = Articulation {
        adj: &adj,
        disc: vec![0; total],
        low: vec![0; total],
        timer: 0,
        cut: vec![false; total],
    };
    let mut components = 0;
    for v in 0..total {
        if a.disc[v] == 0 {
            components += 1;
            a.dfs(v, None);
        }
    }
    let cuts = (0..total).filter(|&v| a.cut[v]).map(|v| unflatten(g, v)).collect();
    (components, cuts)
}

pub fn cut_vertices(g: &BipartiteGraph) -> Vec<Vertex> {
    components_and_cuts(g).1
}

pub fn is_connected(g: &BipartiteGraph) -> bool {
    components_and_cuts(g).0 == 1
}

/// Connected with no cut vertex. Graphs with fewer than three vertices are
/// rejected.
pub fn is_2connected(g: &BipartiteGraph) -> Result<bool> {
    if g.n() + g.m() < 3 {
        return invalid("2-connectivity needs at least 3 vertices");
    }
    let (components, cuts) = components_and_cuts(g);
    Ok(components == 1 && cuts.is_empty())
}

/// A hypergraph is 2-connected when its incidence graph is.
pub fn is_2connected_hypergraph(h: &Hypergraph) -> Result<bool> {
    is_2connected(&h.incidence_graph())
}

/// Is every path from `from` to a vertex of `targets` forced through `via`?
pub fn separates(g: &BipartiteGraph, via: Vertex, from: Vertex, targets: &[Vertex]) -> bool {
    let adj = flat_adjacency(g);
    let (via, from) = (flatten(g, via), flatten(g, from));
    let mut seen = vec![false; adj.len()];
    seen[via] = true;
    seen[from] = true;
    let mut stack = vec![from];
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    targets
        .iter()
        .map(|&t| flatten(g, t))
        .filter(|&t| t != via)
        .all(|t| !seen[t])
}

/// Condition (2) for one `A ⊆ X`: some `B ⊆ Y` with `|B| ≥ |A|` and
/// `G[A ∪ B]` 2-connected.
///
/// Only `B_max = {y : |N(y) ∩ A| ≥ 2}` is tested. Every `y` in a valid `B` has
/// two neighbours in `A`, so `B ⊆ B_max`, and adding `Y` vertices with two
/// neighbours in `A` to a 2-connected graph keeps it 2-connected. Returns
/// `B_max` when it is valid.
pub fn check_condition_lll_for(g: &BipartiteGraph, a: &[usize]) -> Result<Option<BitSet>> {
    let xs: BitSet = a.iter().copied().collect();
    if xs.len() != a.len() {
        return invalid("A contains repeated indices");
    }
    if xs.len() < 3 {
        return invalid(format!("condition (2) needs |A| ≥ 3, got {}", xs.len()));
    }
    if xs.bound() > g.n() {
        return invalid(format!("X index {} out of range", xs.bound() - 1));
    }
    let b_max: BitSet = (0..g.m())
        .filter(|&y| a.iter().filter(|&&x| g.has_edge(x, y)).count() >= 2)
        .collect();
    if b_max.len() < xs.len() {
        return Ok(None);
    }
    let sub = g.induced(&xs, &b_max)?;
    Ok(is_2connected(&sub)?.then_some(b_max))
}

/// Condition (2) for every `A ⊆ X` with `|A| ≥ 3`.
pub fn satisfies_lll(g: &BipartiteGraph) -> Result<SubsetSweep> {
    if g.n() < 3 {
        return invalid(format!("condition (2) needs |X| ≥ 3, got {}", g.n()));
    }
    let all: Vec<usize> = (0..g.n()).collect();
    for k in 3..=g.n() {
        for a in combinations(&all, k) {
            if check_condition_lll_for(g, &a)?.is_none() {
                return Ok(SubsetSweep::FailsOn(a));
            }
        }
    }
    Ok(SubsetSweep::Holds)
}

/// Largest `|X|` for which all longest cycles are enumerated.
pub const TIGHT_PAIR_MAX_N: usize = 8;

/// A longest cycle together with an uncovered `X` vertex seeing the most
/// cycle vertices among all such pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TightPair {
    pub cycle: CycleWitness,
    pub x: usize,
    pub t: usize,
}

fn check_tight_guard(g: &BipartiteGraph) -> Result<()> {
    if g.n() > TIGHT_PAIR_MAX_N {
        return Err(Error::TooLarge {
            what: "tight-pair enumeration",
            detail: format!("n = {} exceeds n ≤ {TIGHT_PAIR_MAX_N}", g.n()),
        });
    }
    Ok(())
}

/// Every tight pair `(C, x)`, one per longest cycle and maximizing `x`.
pub fn all_tight_pairs(g: &BipartiteGraph) -> Result<Vec<TightPair>> {
    check_tight_guard(g)?;
    let mut pairs = Vec::new();
    for c in cycle::all_longest_cycles(g) {
        let on = c.x_set();
        let ys = c.y_set();
        for x in (0..g.n()).filter(|x| !on.contains(*x)) {
            let t = g.neighbors(x).intersection_len(&ys);
            pairs.push(TightPair {
                cycle: c.clone(),
                x,
                t,
            });
        }
    }
    let best = pairs.iter().map(|p| p.t).max();
    pairs.retain(|p| Some(p.t) == best);
    Ok(pairs)
}

/// A tight pair, or `None` when `G` has no cycle or a longest cycle covers `X`.
pub fn find_tight_pair(g: &BipartiteGraph) -> Result<Option<TightPair>> {
    Ok(all_tight_pairs(g)?.into_iter().next())
}

/// Result of testing whether `x_i` and `x_j` cross on a cycle. Positions are
/// 1-based as in `C = y1 x1 … yℓ xℓ y1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossingQuery {
    pub cycle: CycleWitness,
    pub i: usize,
    pub j: usize,
    pub crossing: bool,
    /// `(i', j')` with `y_{i'} ∈ N(x_i)` and `y_{j'} ∈ N(x_j)`.
    pub witness: Option<(usize, usize)>,
}

/// Positions `a, a+1, …, b` (mod ℓ, 1-based) of the segment `C[a, b]`.
fn segment(len: usize, a: usize, b: usize) -> BitSet {
    let wrap = |p: usize| (p - 1) % len + 1;
    let (mut p, end) = (wrap(a), wrap(b));
    let mut out = BitSet::new();
    loop {
        out.insert(p);
        if p == end {
            return out;
        }
        p = p % len + 1;
    }
}

/// Literal evaluation of the crossing definition for positions `i < j`.
pub fn are_crossing(
    g: &BipartiteGraph,
    cycle: &CycleWitness,
    i: usize,
    j: usize,
) -> Result<CrossingQuery> {
    let len = cycle.len();
    if !(1 <= i && i < j && j <= len) {
        return invalid(format!("need 1 ≤ i < j ≤ ℓ = {len}, got i = {i}, j = {j}"));
    }
    CycleWitness::new(g, cycle.xs().to_vec(), cycle.ys().to_vec())?;
    let y = |p: usize| cycle.ys()[p - 1];
    let x = |p: usize| cycle.xs()[p - 1];
    let next = |p: usize| p % len + 1;
    let excluded = |a: usize, b: usize| {
        let pair = |u: usize, v: usize| (a == u && b == v) || (a == v && b == u);
        pair(i, next(i)) || pair(j, next(j))
    };
    let hit = |ip: usize, jp: usize| {
        g.has_edge(x(i), y(ip)) && g.has_edge(x(j), y(jp)) && !excluded(ip, jp)
    };

    let mut witness = None;
    // i' = j' + 1 with i + 1 ≤ j' ≤ j − 1
    for jp in (i + 1)..j {
        if hit(jp + 1, jp) {
            witness = Some((jp + 1, jp));
            break;
        }
    }
    // j' = i' + 1 (mod ℓ) with y_{i'}, y_{j'} on C[j + 1, i]
    if witness.is_none() {
        let seg = segment(len, j + 1, i);
        for ip in 1..=len {
            let jp = next(ip);
            if seg.contains(ip) && seg.contains(jp) && hit(ip, jp) {
                witness = Some((ip, jp));
                break;
            }
        }
    }
    Ok(CrossingQuery {
        cycle: cycle.clone(),
        i,
        j,
        crossing: witness.is_some(),
        witness,
    })
}

fn check_longest(g: &BipartiteGraph, c: &CycleWitness) -> Result<()> {
    CycleWitness::new(g, c.xs().to_vec(), c.ys().to_vec())?;
    let best = cycle::longest_cycle(g).map_or(0, |c| c.len());
    if c.len() != best {
        return Err(Error::HypothesesNotSatisfied(format!(
            "cycle has ℓ = {} but a longest cycle has ℓ = {best}",
            c.len()
        )));
    }
    Ok(())
}

/// A pair of cycle positions whose degree sum broke the non-crossing bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundViolation {
    pub i: usize,
    pub j: usize,
    pub degree_sum: usize,
    pub bound: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct NoncrossingAudit {
    pub pairs: usize,
    pub noncrossing_pairs: usize,
    pub violations: Vec<BoundViolation>,
}

fn noncrossing_bound(g: &BipartiteGraph, c: &CycleWitness) -> NoncrossingAudit {
    let ys = c.y_set();
    let deg = |p: usize| g.neighbors(c.xs()[p - 1]).intersection_len(&ys);
    let mut audit = NoncrossingAudit::default();
    for i in 1..=c.len() {
        for j in (i + 1)..=c.len() {
            audit.pairs += 1;
            if are_crossing(g, c, i, j).expect("valid positions").crossing {
                continue;
            }
            audit.noncrossing_pairs += 1;
            let (sum, bound) = (deg(i) + deg(j), c.len() + 2);
            if sum > bound {
                audit.violations.push(BoundViolation {
                    i,
                    j,
                    degree_sum: sum,
                    bound,
                });
            }
        }
    }
    audit
}

/// Checks `|N(x_i) ∩ V(C)| + |N(x_j) ∩ V(C)| ≤ |V(C) ∩ Y| + 2` for every
/// non-crossing pair on a longest cycle.
pub fn audit_noncrossing_bound(g: &BipartiteGraph, c: &CycleWitness) -> Result<NoncrossingAudit> {
    check_longest(g, c)?;
    Ok(noncrossing_bound(g, c))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SeparationAudit {
    pub checks: usize,
    /// `(x_i, y)` pairs where `x_i` failed to separate `y` from the cycle.
    pub violations: Vec<(usize, usize)>,
}

fn separation(g: &BipartiteGraph, c: &CycleWitness) -> SeparationAudit {
    let ys = c.y_set();
    let cycle_vertices: Vec<Vertex> = c
        .xs()
        .iter()
        .map(|&x| Vertex::X(x))
        .chain(c.ys().iter().map(|&y| Vertex::Y(y)))
        .collect();
    let mut audit = SeparationAudit::default();
    for &xi in c.xs() {
        for y in &(g.neighbors(xi) - &ys) {
            audit.checks += 1;
            if !separates(g, Vertex::X(xi), Vertex::Y(y), &cycle_vertices) {
                audit.violations.push((xi, y));
            }
        }
    }
    audit
}

/// For a longest cycle `C` and an uncovered `x` with `Y ∩ V(C) ⊆ N(x)` and
/// `n ≤ δ`, every `x_i` on `C` separates each of its neighbours off `C` from
/// the rest of `C`. `δ` is taken as the minimum `X` degree of `G`.
pub fn audit_separation_property(
    g: &BipartiteGraph,
    c: &CycleWitness,
    x: usize,
) -> Result<SeparationAudit> {
    check_longest(g, c)?;
    if x >= g.n() || c.x_set().contains(x) {
        return Err(Error::HypothesesNotSatisfied(format!("x = {x} is not an X vertex off the cycle")));
    }
    if !c.y_set().is_subset(g.neighbors(x)) {
        return Err(Error::HypothesesNotSatisfied(
            "Y ∩ V(C) is not contained in N(x)".into(),
        ));
    }
    if g.n() > g.min_x_degree() {
        return Err(Error::HypothesesNotSatisfied(format!(
            "n = {} exceeds the minimum X degree {}",
            g.n(),
            g.min_x_degree()
        )));
    }
    Ok(separation(g, c))
}

/// Counters from auditing every tight pair of one or more graphs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LemmaAudit {
    pub graphs: usize,
    pub tight_pairs: usize,
    pub neighbor_checks: usize,
    pub neighbor_violations: usize,
    pub neighbor_pair_checks: usize,
    pub neighbor_pair_violations: usize,
    pub crossing_pairs: usize,
    pub crossing_violations: usize,
    pub degree_bound_applicable: usize,
    pub degree_bound_violations: usize,
    pub separation_applicable: usize,
    pub separation_checks: usize,
    pub separation_violations: usize,
    /// Canonical hex of the first graph with any violation.
    pub first_violation: Option<String>,
}

impl LemmaAudit {
    pub fn violations(&self) -> usize {
        self.neighbor_violations
            + self.neighbor_pair_violations
            + self.crossing_violations
            + self.degree_bound_violations
            + self.separation_violations
    }
}

impl AddAssign<&LemmaAudit> for LemmaAudit {
    fn add_assign(&mut self, o: &LemmaAudit) {
        self.graphs += o.graphs;
        self.tight_pairs += o.tight_pairs;
        self.neighbor_checks += o.neighbor_checks;
        self.neighbor_violations += o.neighbor_violations;
        self.neighbor_pair_checks += o.neighbor_pair_checks;
        self.neighbor_pair_violations += o.neighbor_pair_violations;
        self.crossing_pairs += o.crossing_pairs;
        self.crossing_violations += o.crossing_violations;
        self.degree_bound_applicable += o.degree_bound_applicable;
        self.degree_bound_violations += o.degree_bound_violations;
        self.separation_applicable += o.separation_applicable;
        self.separation_checks += o.separation_checks;
        self.separation_violations += o.separation_violations;
        if self.first_violation.is_none() {
            self.first_violation.clone_from(&o.first_violation);
        }
    }
}

/// Audits every tight pair of `G` against the disjointness claims, the
/// non-crossing degree bound (all rotations and both directions), the
/// `m ≥ 3δ − 4` consequence and the separation property. `δ` is the minimum
/// `X` degree of `G`.
pub fn audit_tight_pairs(g: &BipartiteGraph) -> Result<LemmaAudit> {
    let pairs = all_tight_pairs(g)?;
    let delta = g.min_x_degree();
    let mut audit = LemmaAudit {
        graphs: 1,
        tight_pairs: pairs.len(),
        ..LemmaAudit::default()
    };
    for TightPair { cycle: c, x, t } in &pairs {
        let len = c.len();
        let on_y = c.y_set();
        let off = |v: usize| g.neighbors(v) - &on_y;
        let off_x = off(*x);
        // positions i with y_i ∈ N(x)
        let hits: Vec<usize> = (0..len).filter(|&i| g.has_edge(*x, c.ys()[i])).collect();
        for &i in &hits {
            // x_i and, by reorientation, x_{i-1}
            for p in [i, (i + len - 1) % len] {
                audit.neighbor_checks += 1;
                if off(c.xs()[p]).intersects(&off_x) {
                    audit.neighbor_violations += 1;
                }
            }
        }
        for (a, &i) in hits.iter().enumerate() {
            for &j in &hits[a + 1..] {
                for (p, q) in [(i, j), ((i + len - 1) % len, (j + len - 1) % len)] {
                    audit.neighbor_pair_checks += 1;
                    if off(c.xs()[p]).intersects(&off(c.xs()[q])) {
                        audit.neighbor_pair_violations += 1;
                    }
                }
            }
        }
        for k in 0..len {
            for view in [c.rotated(k), c.rotated(k).reversed()] {
                let r = noncrossing_bound(g, &view);
                audit.crossing_pairs += r.noncrossing_pairs;
                audit.crossing_violations += r.violations.len();
            }
        }
        if 2 <= *t && *t < len && g.n() <= delta {
            audit.degree_bound_applicable += 1;
            if g.m() + 4 < 3 * delta {
                audit.degree_bound_violations += 1;
            }
        }
        if on_y.is_subset(g.neighbors(*x)) && g.n() <= delta {
            audit.separation_applicable += 1;
            let s = separation(g, c);
            audit.separation_checks += s.checks;
            audit.separation_violations += s.violations.len();
        }
    }
    if audit.violations() > 0 {
        audit.first_violation = Some(crate::canon::canonical_unchecked(g).to_hex());
    }
    Ok(audit)
}

/// Isomorphism type of a graph without a spanning `X` cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExceptionClass {
    G1 { n: usize },
    G2 { a: usize, b: usize },
    Other,
}

impl fmt::Display for ExceptionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExceptionClass::G1 { n } => write!(f, "iso-G1({n})"),
            ExceptionClass::G2 { a, b } => write!(f, "iso-G2({a},{b})"),
            ExceptionClass::Other => f.write_str("other"),
        }
    }
}

impl Serialize for ExceptionClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Compares `G` with `G1(n)` and every `G2(a, b)`, `a + b = n`, that has the
/// same part sizes.
pub fn classify_exception(g: &BipartiteGraph) -> Result<ExceptionClass> {
    classify_exception_with(g, CanonLimits::default())
}

pub fn classify_exception_with(g: &BipartiteGraph, limits: CanonLimits) -> Result<ExceptionClass> {
    limits.check(g.n(), g.m())?;
    let (n, m) = (g.n(), g.m());
    if n >= 2 && m == 2 * n - 1 && is_isomorphic_with(g, &constructions::gen_g1(n)?, limits)? {
        return Ok(ExceptionClass::G1 { n });
    }
    if m % 2 == 1 && m >= 3 {
        let delta = m.div_ceil(2);
        for b in 1..=n / 2 {
            let a = n - b;
            if delta < a {
                continue;
            }
            if is_isomorphic_with(g, &constructions::gen_g2(a, b, delta)?, limits)? {
                return Ok(ExceptionClass::G2 { a, b });
            }
        }
    }
    Ok(ExceptionClass::Other)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{gen_g1, gen_g2, gen_g3};
    use crate::oracle;

    fn plain_eight_cycle(chords: &[(usize, usize)]) -> (BipartiteGraph, CycleWitness) {
        // x_p adjacent to y_p and y_{p+1}, positions 1-based, stored 0-based
        let mut lists: Vec<Vec<usize>> = (0..4).map(|p| vec![p, (p + 1) % 4]).collect();
        for &(xp, yp) in chords {
            lists[xp - 1].push(yp - 1);
        }
        let g = BipartiteGraph::from_lists(4, &lists).unwrap();
        let c = CycleWitness::new(&g, vec![0, 1, 2, 3], vec![0, 1, 2, 3]).unwrap();
        (g, c)
    }

    #[test]
    fn two_connectivity_examples() {
        assert!(!is_2connected(&gen_g2(2, 1, 3).unwrap()).unwrap());
        assert!(is_2connected(&BipartiteGraph::complete(2, 2).unwrap()).unwrap());
        assert!(is_2connected(&BipartiteGraph::from_lists(0, &[Vec::<usize>::new()]).unwrap()).is_err());
        let g2 = gen_g2(2, 1, 3).unwrap();
        // b = 1: the lone second-block X vertex carries two pendant Y vertices
        assert_eq!(cut_vertices(&g2), vec![Vertex::X(2), Vertex::Y(0)]);
    }

    #[test]
    fn g3_with_singleton_blocks_has_pendant_cut_vertices() {
        // A block of one X vertex gives its private Y vertices degree 1.
        let g = gen_g3(1, 1, 1, 3).unwrap();
        assert!(!is_2connected(&g).unwrap());
        assert!(!oracle::is_2connected(&g));
        let g = gen_g3(2, 2, 2, 6).unwrap();
        assert!(is_2connected(&g).unwrap());
    }

    #[test]
    fn lll_examples() {
        let k33 = BipartiteGraph::complete(3, 3).unwrap();
        assert_eq!(check_condition_lll_for(&k33, &[0, 1, 2]).unwrap(), Some(BitSet::full(3)));
        let g1 = gen_g1(3).unwrap();
        assert_eq!(check_condition_lll_for(&g1, &[0, 1, 2]).unwrap(), None);
        assert!(!oracle::lll_for(&g1, &[0, 1, 2]));
        let g3 = gen_g3(1, 1, 1, 3).unwrap();
        assert_eq!(check_condition_lll_for(&g3, &[0, 1, 2]).unwrap(), None);
        assert!(!oracle::lll_for(&g3, &[0, 1, 2]));
        assert!(check_condition_lll_for(&k33, &[0, 1]).is_err());
        assert!(satisfies_lll(&BipartiteGraph::complete(4, 4).unwrap()).unwrap().holds());
        assert_eq!(satisfies_lll(&g1).unwrap(), SubsetSweep::FailsOn(vec![0, 1, 2]));
    }

    #[test]
    fn tight_pair_examples() {
        assert!(find_tight_pair(&BipartiteGraph::complete(3, 3).unwrap()).unwrap().is_none());
        let g1 = gen_g1(3).unwrap();
        let tp = find_tight_pair(&g1).unwrap().unwrap();
        assert_eq!(tp.t, 2);
        assert_eq!(Some(tp.t), oracle::max_tight_value(&g1));
        let g2 = gen_g2(2, 1, 3).unwrap();
        assert_eq!(find_tight_pair(&g2).unwrap().unwrap().t, 1);
        assert!(find_tight_pair(&BipartiteGraph::complete(9, 9).unwrap()).is_err());
    }

    #[test]
    fn crossing_on_the_eight_cycle() {
        let (g, c) = plain_eight_cycle(&[]);
        let q = are_crossing(&g, &c, 1, 3).unwrap();
        assert!(!q.crossing);
        let (g, c) = plain_eight_cycle(&[(1, 3), (3, 2)]);
        let q = are_crossing(&g, &c, 1, 3).unwrap();
        assert!(q.crossing);
        assert_eq!(q.witness, Some((3, 2)));
        let (g, c) = plain_eight_cycle(&[(1, 3)]);
        assert!(!are_crossing(&g, &c, 1, 3).unwrap().crossing);
        assert!(are_crossing(&g, &c, 3, 1).is_err());
        assert!(are_crossing(&g, &c, 1, 5).is_err());
    }

    #[test]
    fn crossing_through_the_wraparound_segment() {
        // y_4 ∈ N(x_1) and y_1 ∈ N(x_2): second clause with (i', j') = (4, 1)
        let (g, c) = plain_eight_cycle(&[(1, 4), (2, 1)]);
        let q = are_crossing(&g, &c, 1, 2).unwrap();
        assert_eq!(q.witness, Some((4, 1)));
    }

    #[test]
    fn noncrossing_bound_on_the_eight_cycle() {
        let (g, c) = plain_eight_cycle(&[]);
        let a = audit_noncrossing_bound(&g, &c).unwrap();
        assert_eq!(a.pairs, 6);
        assert!(a.violations.is_empty());
        let k = BipartiteGraph::complete(4, 4).unwrap();
        let short = CycleWitness::new(&k, vec![0, 1], vec![0, 1]).unwrap();
        assert!(matches!(
            audit_noncrossing_bound(&k, &short),
            Err(Error::HypothesesNotSatisfied(_))
        ));
    }

    #[test]
    fn separation_examples() {
        let g1 = gen_g1(3).unwrap();
        let tp = find_tight_pair(&g1).unwrap().unwrap();
        let a = audit_separation_property(&g1, &tp.cycle, tp.x).unwrap();
        assert_eq!(a.checks, 2);
        assert!(a.violations.is_empty());
        let k33 = BipartiteGraph::complete(3, 3).unwrap();
        let c = cycle::longest_cycle(&k33).unwrap();
        assert!(matches!(
            audit_separation_property(&k33, &c, 0),
            Err(Error::HypothesesNotSatisfied(_))
        ));
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_exception(&gen_g1(3).unwrap()).unwrap(), ExceptionClass::G1 { n: 3 });
        assert_eq!(
            classify_exception(&gen_g2(2, 1, 3).unwrap()).unwrap(),
            ExceptionClass::G2 { a: 2, b: 1 }
        );
        let full = BitSet::full(3);
        let k = BipartiteGraph::complete(3, 3)
            .unwrap()
            .with_y_vertex(&full)
            .unwrap()
            .with_y_vertex(&full)
            .unwrap();
        assert_eq!(classify_exception(&k).unwrap(), ExceptionClass::Other);
        assert_eq!(ExceptionClass::G2 { a: 2, b: 1 }.to_string(), "iso-G2(2,1)");
    }

    #[test]
    fn tight_pair_audits_are_clean_on_constructions() {
        for g in [gen_g1(3).unwrap(), gen_g1(4).unwrap(), gen_g2(2, 1, 3).unwrap()] {
            let a = audit_tight_pairs(&g).unwrap();
            assert_eq!(a.violations(), 0, "{a:?}");
            assert!(a.tight_pairs > 0);
        }
    }
}
