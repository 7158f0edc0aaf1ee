//! Slow reference implementations used to cross-check the exact engines.
//!
//! Nothing here shares code with the engines it checks: cycles are found by
//! enumerating whole vertex sequences, isomorphism by trying every `Y`
//! permutation, and 2-connectivity by deleting each vertex in turn.

use crate::bitset::BitSet;
use crate::model::{BipartiteGraph, Hypergraph};

/// Calls `visit` with every permutation of `items`.
fn for_each_permutation(items: &[usize], visit: &mut impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(
        items: &[usize],
        used: &mut Vec<bool>,
        acc: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if acc.len() == items.len() {
            return visit(acc);
        }
        for i in 0..items.len() {
            if !used[i] {
                used[i] = true;
                acc.push(items[i]);
                let stop = rec(items, used, acc, visit);
                acc.pop();
                used[i] = false;
                if stop {
                    return true;
                }
            }
        }
        false
    }
    rec(items, &mut vec![false; items.len()], &mut Vec::new(), visit)
}

/// Calls `visit` with every injective sequence of length `k` drawn from `pool`.
fn for_each_arrangement(
    pool: &[usize],
    k: usize,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    fn rec(
        pool: &[usize],
        k: usize,
        used: &mut Vec<bool>,
        acc: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if acc.len() == k {
            return visit(acc);
        }
        for i in 0..pool.len() {
            if !used[i] {
                used[i] = true;
                acc.push(pool[i]);
                let stop = rec(pool, k, used, acc, visit);
                acc.pop();
                used[i] = false;
                if stop {
                    return true;
                }
            }
        }
        false
    }
    rec(pool, k, &mut vec![false; pool.len()], &mut Vec::new(), visit)
}

/// True iff some alternating sequence `y1 x1 … yk xk` with `{x_i} = xset`
/// closes into a cycle.
pub fn has_cycle_covering_exactly(g: &BipartiteGraph, xset: &[usize]) -> bool {
    let k = xset.len();
    if k < 2 {
        return false;
    }
    let ys: Vec<usize> = (0..g.m()).collect();
    let mut found = false;
    for_each_permutation(xset, &mut |xs| {
        for_each_arrangement(&ys, k, &mut |yseq| {
            found = (0..k).all(|i| g.has_edge(xs[i], yseq[i]) && g.has_edge(xs[i], yseq[(i + 1) % k]));
            found
        })
    });
    found
}

/// Largest `ℓ ≥ 2` with a cycle through `ℓ` vertices of `X`, or 0.
pub fn longest_cycle_len(g: &BipartiteGraph) -> usize {
    let mut best = 0;
    for mask in 1u32..(1 << g.n()) {
        let xs: Vec<usize> = (0..g.n()).filter(|x| mask >> x & 1 == 1).collect();
        if xs.len() > best && has_cycle_covering_exactly(g, &xs) {
            best = xs.len();
        }
    }
    best
}

/// All cycles of maximum length as `(xs, ys)` sequences, every rotation and
/// direction included.
pub fn all_longest_cycles(g: &BipartiteGraph) -> Vec<(Vec<usize>, Vec<usize>)> {
    let len = longest_cycle_len(g);
    let mut out = Vec::new();
    if len == 0 {
        return out;
    }
    let ys: Vec<usize> = (0..g.m()).collect();
    for mask in 1u32..(1 << g.n()) {
        let xset: Vec<usize> = (0..g.n()).filter(|x| mask >> x & 1 == 1).collect();
        if xset.len() != len {
            continue;
        }
        for_each_permutation(&xset, &mut |xs| {
            for_each_arrangement(&ys, len, &mut |yseq| {
                if (0..len)
                    .all(|i| g.has_edge(xs[i], yseq[i]) && g.has_edge(xs[i], yseq[(i + 1) % len]))
                {
                    out.push((xs.to_vec(), yseq.to_vec()));
                }
                false
            });
            false
        });
    }
    out
}

/// Largest `|N(x) ∩ V(C)|` over longest cycles `C` and `x` off `C`, or `None`
/// when no such pair exists.
pub fn max_tight_value(g: &BipartiteGraph) -> Option<usize> {
    all_longest_cycles(g)
        .iter()
        .flat_map(|(xs, ys)| {
            (0..g.n())
                .filter(|x| !xs.contains(x))
                .map(|x| ys.iter().filter(|&&y| g.has_edge(x, y)).count())
                .collect::<Vec<_>>()
        })
        .max()
}

/// Adjacency lists over `X = 0..n`, `Y = n..n+m`, skipping `removed`.
fn connected_without(g: &BipartiteGraph, keep: &dyn Fn(usize) -> bool) -> bool {
    let n = g.n();
    let total = n + g.m();
    let mut adj = vec![Vec::new(); total];
    for x in 0..n {
        for y in g.neighbors(x) {
            adj[x].push(n + y);
            adj[n + y].push(x);
        }
    }
    let Some(start) = (0..total).find(|&v| keep(v)) else {
        return true;
    };
    let mut seen = vec![false; total];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if keep(w) && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    (0..total).all(|v| !keep(v) || seen[v])
}

/// Connected, at least three vertices, and connected after deleting any one
/// vertex.
pub fn is_2connected(g: &BipartiteGraph) -> bool {
    let total = g.n() + g.m();
    total >= 3
        && connected_without(g, &|_| true)
        && (0..total).all(|r| connected_without(g, &|v| v != r))
}

/// Condition (2) for one `A`, by trying every `B ⊆ Y`.
pub fn lll_for(g: &BipartiteGraph, a: &[usize]) -> bool {
    let xs: BitSet = a.iter().copied().collect();
    (0u64..1 << g.m()).any(|b| {
        let ys = BitSet::from_word(b);
        ys.len() >= a.len() && is_2connected(&g.induced(&xs, &ys).unwrap())
    })
}

/// Isomorphism by trying every `Y` permutation and comparing sorted rows.
pub fn isomorphic(g: &BipartiteGraph, h: &BipartiteGraph) -> bool {
    if g.n() != h.n() || g.m() != h.m() {
        return false;
    }
    let sorted_rows = |rows: Vec<Vec<usize>>| {
        let mut r: Vec<Vec<usize>> = rows
            .into_iter()
            .map(|mut v| {
                v.sort_unstable();
                v
            })
            .collect();
        r.sort();
        r
    };
    let target = sorted_rows(h.rows().iter().map(BitSet::to_vec).collect());
    let ys: Vec<usize> = (0..g.m()).collect();
    for_each_permutation(&ys, &mut |perm| {
        let rows = g
            .rows()
            .iter()
            .map(|r| r.iter().map(|y| perm[y]).collect())
            .collect();
        sorted_rows(rows) == target
    })
}

/// Isomorphism classes among all labelled graphs with `|X| = n`, `|Y| = m`
/// and minimum `X` degree at least `delta`, grouped by [`isomorphic`].
pub fn labeled_classes(n: usize, m: usize, delta: usize) -> Vec<BipartiteGraph> {
    let masks: Vec<u64> = (0u64..1 << m)
        .filter(|w| w.count_ones() as usize >= delta)
        .collect();
    let mut reps: Vec<BipartiteGraph> = Vec::new();
    let mut idx = vec![0usize; n];
    if masks.is_empty() {
        return reps;
    }
    loop {
        let rows: Vec<u64> = idx.iter().map(|&i| masks[i]).collect();
        let g = BipartiteGraph::from_masks(m, &rows).unwrap();
        if !reps.iter().any(|r| isomorphic(r, &g)) {
            reps.push(g);
        }
        // odometer over all labelled tuples
        let mut pos = 0;
        loop {
            if pos == n {
                return reps;
            }
            idx[pos] += 1;
            if idx[pos] < masks.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Berge cycle with base set exactly `base`, by enumerating vertex orders and
/// edge sequences.
pub fn has_berge_cycle_on(h: &Hypergraph, base: &[usize]) -> bool {
    let k = base.len();
    let edges: Vec<usize> = (0..h.edge_count()).collect();
    let mut found = false;
    for_each_permutation(base, &mut |vs| {
        for_each_arrangement(&edges, k, &mut |es| {
            found = (0..k).all(|i| h.edge(es[i]).contains(vs[i]) && h.edge(es[i]).contains(vs[(i + 1) % k]));
            found
        })
    });
    found
}

/// Berge cycle whose edge set is exactly `edges`.
pub fn has_berge_cycle_with_edges(h: &Hypergraph, edges: &[usize]) -> bool {
    let k = edges.len();
    let vertices: Vec<usize> = (0..h.n()).collect();
    let mut found = false;
    for_each_permutation(edges, &mut |es| {
        for_each_arrangement(&vertices, k, &mut |vs| {
            found = (0..k).all(|i| h.edge(es[i]).contains(vs[i]) && h.edge(es[i]).contains(vs[(i + 1) % k]));
            found
        })
    });
    found
}
