//! Exact cycle search in bipartite graphs.
//!
//! The core query asks for a cycle whose `X` vertices are exactly a given set
//! `X'`. It is answered by backtracking over cyclic orders of `X'` while
//! picking distinct connector vertices in `Y`. `X'` is visited in ascending
//! degree order and connectors are tried in ascending index order, so the
//! first witness found is deterministic.
//!
//! Every node of the search runs a Hall-type check: the vertices of `X'` not
//! yet placed must be matchable to distinct unused connectors, both on their
//! left and on their right. A failed matching cuts the branch. The check is
//! only a prune and can be switched off to confirm it never changes answers.

use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{invalid, Result};
use crate::model::{BipartiteGraph, CycleWitness};

/// Outcome of a sweep over vertex subsets, such as X-super-pancyclicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", content = "failing_subset", rename_all = "snake_case")]
pub enum SubsetSweep {
    Holds,
    /// The first subset (by size, then lexicographically) that fails.
    FailsOn(Vec<usize>),
}

impl SubsetSweep {
    pub fn holds(&self) -> bool {
        matches!(self, SubsetSweep::Holds)
    }
}

struct Search<'a> {
    g: &'a BipartiteGraph,
    order: Vec<usize>,
    remaining: BitSet,
    used: BitSet,
    xs: Vec<usize>,
    ys: Vec<usize>,
    hall: bool,
}

enum Flow {
    Stop,
    Continue,
}

impl<'a> Search<'a> {
    fn new(g: &'a BipartiteGraph, xset: &BitSet, hall: bool) -> Self {
        let mut order: Vec<usize> = xset.iter().collect();
        order.sort_by_key(|&x| (g.degree(x), x));
        Self {
            g,
            order,
            remaining: xset.clone(),
            used: BitSet::new(),
            xs: Vec::new(),
            ys: Vec::new(),
            hall,
        }
    }

    /// Runs the search, handing every completed cycle to `visit`. Each cycle
    /// is reported once per direction.
    fn run(&mut self, visit: &mut impl FnMut(&[usize], &[usize]) -> Flow) -> bool {
        let anchor = self.order[0];
        self.remaining.remove(anchor);
        self.xs.push(anchor);
        let nbrs: Vec<usize> = self.g.neighbors(anchor).iter().collect();
        for &y1 in &nbrs {
            self.used.insert(y1);
            self.ys.push(y1);
            for &y2 in &nbrs {
                if y2 == y1 {
                    continue;
                }
                self.used.insert(y2);
                self.ys.push(y2);
                let stop = self.feasible(y2) && self.extend(y2, visit);
                self.ys.pop();
                self.used.remove(y2);
                if stop {
                    return true;
                }
            }
            self.ys.pop();
            self.used.remove(y1);
        }
        false
    }

    /// `open` is the last connector, adjacent to the last placed `X` vertex.
    fn extend(&mut self, open: usize, visit: &mut impl FnMut(&[usize], &[usize]) -> Flow) -> bool {
        let first = self.ys[0];
        if self.remaining.len() == 1 {
            let x = self.remaining.first().unwrap();
            if self.g.has_edge(x, open) && self.g.has_edge(x, first) {
                self.xs.push(x);
                let flow = visit(&self.xs, &self.ys);
                self.xs.pop();
                return matches!(flow, Flow::Stop);
            }
            return false;
        }
        for i in 0..self.order.len() {
            let x = self.order[i];
            if !self.remaining.contains(x) || !self.g.has_edge(x, open) {
                continue;
            }
            self.remaining.remove(x);
            self.xs.push(x);
            let fresh = self.g.neighbors(x) - &self.used;
            for y in &fresh {
                self.used.insert(y);
                self.ys.push(y);
                let stop = self.feasible(y) && self.extend(y, visit);
                self.ys.pop();
                self.used.remove(y);
                if stop {
                    self.xs.pop();
                    self.remaining.insert(x);
                    return true;
                }
            }
            self.xs.pop();
            self.remaining.insert(x);
        }
        false
    }

    /// Necessary conditions for completing the current path into a cycle.
    fn feasible(&self, open: usize) -> bool {
        if !self.hall {
            return true;
        }
        let first = self.ys[0];
        let free = &BitSet::full(self.g.m()) - &self.used;
        let mut left = free.clone();
        left.insert(open);
        let mut right = free;
        right.insert(first);
        let rest: Vec<usize> = self.remaining.iter().collect();
        has_saturating_matching(self.g, &rest, &left) && has_saturating_matching(self.g, &rest, &right)
    }
}

/// Kuhn's augmenting-path test: can every vertex of `xs` be matched to a
/// distinct neighbour inside `allowed`?
fn has_saturating_matching(g: &BipartiteGraph, xs: &[usize], allowed: &BitSet) -> bool {
    fn augment(
        g: &BipartiteGraph,
        x: usize,
        allowed: &BitSet,
        seen: &mut BitSet,
        owner: &mut Vec<Option<usize>>,
    ) -> bool {
        let cand = g.neighbors(x) & allowed;
        for y in &cand {
            if seen.insert(y) && owner[y].is_none_or(|other| augment(g, other, allowed, seen, owner))
            {
                owner[y] = Some(x);
                return true;
            }
        }
        false
    }
    if xs.len() > allowed.len() {
        return false;
    }
    let mut owner = vec![None; g.m()];
    xs.iter().all(|&x| {
        let mut seen = BitSet::new();
        augment(g, x, allowed, &mut seen, &mut owner)
    })
}

fn check_xset(g: &BipartiteGraph, xset: &BitSet) -> Result<()> {
    if xset.len() < 2 {
        return invalid(format!("a cycle needs at least 2 X vertices, got {}", xset.len()));
    }
    if xset.bound() > g.n() {
        return invalid(format!("X index {} out of range", xset.bound() - 1));
    }
    Ok(())
}

/// A cycle `C` with `V(C) ∩ X = xset`, if one exists.
pub fn find_cycle_covering_exactly(
    g: &BipartiteGraph,
    xset: &BitSet,
) -> Result<Option<CycleWitness>> {
    find_covering(g, xset, true)
}

pub(crate) fn find_covering(
    g: &BipartiteGraph,
    xset: &BitSet,
    hall: bool,
) -> Result<Option<CycleWitness>> {
    check_xset(g, xset)?;
    let mut found = None;
    Search::new(g, xset, hall).run(&mut |xs, ys| {
        found = Some((xs.to_vec(), ys.to_vec()));
        Flow::Stop
    });
    Ok(found.map(|(xs, ys)| CycleWitness::new(g, xs, ys).expect("search emits valid cycles")))
}

/// Same as [`find_cycle_covering_exactly`] with the matching prune disabled.
pub fn find_cycle_covering_exactly_unpruned(
    g: &BipartiteGraph,
    xset: &BitSet,
) -> Result<Option<CycleWitness>> {
    find_covering(g, xset, false)
}

/// Every cycle with `V(C) ∩ X = xset`, one witness per cycle. Witnesses start
/// at the lowest-degree vertex of `xset`; the two directions of a cycle are
/// merged by keeping the lexicographically smaller one.
pub fn cycles_covering_exactly(g: &BipartiteGraph, xset: &BitSet) -> Result<Vec<CycleWitness>> {
    check_xset(g, xset)?;
    let mut out = Vec::new();
    Search::new(g, xset, true).run(&mut |xs, ys| {
        let here = CycleWitness::new(g, xs.to_vec(), ys.to_vec()).expect("valid cycle");
        let back = here.reversed().rotated(xs.len() - 1);
        if (here.xs(), here.ys()) <= (back.xs(), back.ys()) {
            out.push(here);
        }
        Flow::Continue
    });
    Ok(out)
}

/// Subsets of `pool` of size `k` in lexicographic order.
pub(crate) fn combinations(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(pool: &[usize], k: usize, start: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for i in start..pool.len() {
            if pool.len() - i < k - acc.len() {
                break;
            }
            acc.push(pool[i]);
            rec(pool, k, i + 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(pool, k, 0, &mut Vec::new(), &mut out);
    out
}

/// X vertices that can lie on a cycle at all.
fn cycle_candidates(g: &BipartiteGraph) -> Vec<usize> {
    (0..g.n()).filter(|&x| g.degree(x) >= 2).collect()
}

/// A cycle through the most `X` vertices, or `None` if `G` has no cycle.
///
/// Lengths are tried from the largest possible down; at each length the
/// `X`-subsets are tried in lexicographic order.
pub fn longest_cycle(g: &BipartiteGraph) -> Option<CycleWitness> {
    let cands = cycle_candidates(g);
    let top = cands.len().min(g.m());
    for len in (2..=top).rev() {
        for subset in combinations(&cands, len) {
            let xset: BitSet = subset.into_iter().collect();
            if let Some(c) = find_cycle_covering_exactly(g, &xset).expect("valid subset") {
                return Some(c);
            }
        }
    }
    None
}

/// Every longest cycle of `G`, one witness per cycle.
pub fn all_longest_cycles(g: &BipartiteGraph) -> Vec<CycleWitness> {
    let Some(best) = longest_cycle(g) else {
        return Vec::new();
    };
    combinations(&cycle_candidates(g), best.len())
        .into_iter()
        .flat_map(|subset| {
            let xset: BitSet = subset.into_iter().collect();
            cycles_covering_exactly(g, &xset).expect("valid subset")
        })
        .collect()
}

/// Is there a cycle of length `2n`, covering all of `X`?
pub fn has_spanning_x_cycle(g: &BipartiteGraph) -> bool {
    spanning_x_cycle(g).is_some()
}

pub fn spanning_x_cycle(g: &BipartiteGraph) -> Option<CycleWitness> {
    if g.n() < 2 || g.n() > g.m() {
        return None;
    }
    find_cycle_covering_exactly(g, &BitSet::full(g.n())).expect("valid subset")
}

/// For every `X' ⊆ X` with `|X'| ≥ 3`, is there a cycle `C` with
/// `V(C) ∩ X = X'`?
pub fn is_x_super_pancyclic(g: &BipartiteGraph) -> Result<SubsetSweep> {
    if g.n() < 3 {
        return invalid(format!("X-super-pancyclicity needs |X| ≥ 3, got {}", g.n()));
    }
    let all: Vec<usize> = (0..g.n()).collect();
    for k in 3..=g.n() {
        for subset in combinations(&all, k) {
            let xset: BitSet = subset.iter().copied().collect();
            if find_cycle_covering_exactly(g, &xset)?.is_none() {
                return Ok(SubsetSweep::FailsOn(subset));
            }
        }
    }
    Ok(SubsetSweep::Holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;
    use crate::oracle;

    fn set(v: &[usize]) -> BitSet {
        v.iter().copied().collect()
    }

    #[test]
    fn k33_spans_x() {
        let k = BipartiteGraph::complete(3, 3).unwrap();
        let c = find_cycle_covering_exactly(&k, &set(&[0, 1, 2])).unwrap().unwrap();
        assert_eq!(c.x_set(), set(&[0, 1, 2]));
        assert_eq!(c.y_set(), set(&[0, 1, 2]));
        assert!(has_spanning_x_cycle(&k));
    }

    #[test]
    fn g1_has_no_spanning_cycle_but_every_pair_closes() {
        let g = constructions::gen_g1(3).unwrap();
        assert!(find_cycle_covering_exactly(&g, &set(&[0, 1, 2])).unwrap().is_none());
        for pair in [[0, 1], [0, 2], [1, 2]] {
            let c = find_cycle_covering_exactly(&g, &set(&pair)).unwrap().unwrap();
            // only the two hubs 0 and 1 have degree above one
            assert_eq!(c.y_set(), set(&[0, 1]));
            assert!(oracle::has_cycle_covering_exactly(&g, &pair));
        }
    }

    #[test]
    fn rejects_short_subsets() {
        let k = BipartiteGraph::complete(3, 3).unwrap();
        assert!(find_cycle_covering_exactly(&k, &set(&[1])).is_err());
        assert!(find_cycle_covering_exactly(&k, &set(&[1, 7])).is_err());
    }

    #[test]
    fn longest_cycles_of_constructions() {
        assert_eq!(longest_cycle(&constructions::gen_g1(4).unwrap()).unwrap().len(), 3);
        assert_eq!(longest_cycle(&constructions::gen_g2(2, 1, 3).unwrap()).unwrap().len(), 2);
        assert_eq!(longest_cycle(&constructions::gen_g3(1, 1, 1, 3).unwrap()).unwrap().len(), 2);
        let path = BipartiteGraph::from_lists(3, &[vec![0, 1], vec![1, 2]]).unwrap();
        assert!(longest_cycle(&path).is_none());
    }

    #[test]
    fn spanning_examples() {
        for d in 2..5 {
            assert!(has_spanning_x_cycle(&BipartiteGraph::complete(d, d).unwrap()));
        }
        assert!(!has_spanning_x_cycle(&constructions::gen_g1(3).unwrap()));
        assert!(!has_spanning_x_cycle(&constructions::gen_g1(4).unwrap()));
        assert!(!has_spanning_x_cycle(&constructions::gen_g3(1, 1, 1, 3).unwrap()));
    }

    #[test]
    fn super_pancyclic_examples() {
        let k44 = BipartiteGraph::complete(4, 4).unwrap();
        assert_eq!(is_x_super_pancyclic(&k44).unwrap(), SubsetSweep::Holds);
        let g1 = constructions::gen_g1(3).unwrap();
        assert_eq!(is_x_super_pancyclic(&g1).unwrap(), SubsetSweep::FailsOn(vec![0, 1, 2]));
        assert!(is_x_super_pancyclic(&BipartiteGraph::complete(2, 4).unwrap()).is_err());
    }

    #[test]
    fn cycle_enumeration_counts() {
        // K_{2,3}: choose the two connectors (3 ways); each pair gives one cycle.
        let k = BipartiteGraph::complete(2, 3).unwrap();
        assert_eq!(cycles_covering_exactly(&k, &set(&[0, 1])).unwrap().len(), 3);
        // K_{3,3}: (3-1)!/2 cyclic orders of X times 3! connector arrangements.
        let k = BipartiteGraph::complete(3, 3).unwrap();
        assert_eq!(cycles_covering_exactly(&k, &set(&[0, 1, 2])).unwrap().len(), 6);
        // oracle lists each cycle 2ℓ times (rotations and directions)
        assert_eq!(oracle::all_longest_cycles(&k).len(), 6 * 6);
    }

    #[test]
    fn matching_prune_is_exact_on_small_cases() {
        let k = BipartiteGraph::from_lists(3, &[vec![0, 1], vec![0, 1], vec![0, 1, 2]]).unwrap();
        assert!(!has_saturating_matching(&k, &[0, 1, 2], &set(&[0, 1])));
        assert!(has_saturating_matching(&k, &[0, 1, 2], &set(&[0, 1, 2])));
    }
}
