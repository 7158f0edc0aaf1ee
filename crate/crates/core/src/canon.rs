//! Canonical forms of bipartite graphs under independent relabelling of `X`
//! and `Y`. The two parts are never swapped.
//!
//! `X` vertices are first sorted by an isomorphism invariant (degree, then the
//! sorted degrees of their neighbours). Every `X` order consistent with that
//! sort is tried; for each, `Y` is described by its column bit vectors, which
//! are sorted. The smallest resulting column list is the canonical form. `Y`
//! permutations never need to be enumerated because sorting the columns
//! removes them.

use std::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::model::BipartiteGraph;

/// Size limits for exact canonicalization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CanonLimits {
    pub max_n: usize,
    pub max_m: usize,
}

impl Default for CanonLimits {
    fn default() -> Self {
        Self { max_n: 8, max_m: 16 }
    }
}

impl CanonLimits {
    /// Largest sizes accepted with an explicit override.
    pub const OVERRIDE: CanonLimits = CanonLimits { max_n: 10, max_m: 64 };

    pub fn check(&self, n: usize, m: usize) -> Result<()> {
        if n > self.max_n || m > self.max_m {
            return Err(Error::TooLarge {
                what: "canonicalization",
                detail: format!(
                    "n = {n}, m = {m} exceeds n ≤ {}, m ≤ {}",
                    self.max_n, self.max_m
                ),
            });
        }
        Ok(())
    }
}

/// Canonical byte string: `n`, `m`, then the `m` sorted columns as
/// little-endian words over the canonical `X` order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    fn column_bytes(n: usize) -> usize {
        n.div_ceil(8).max(1)
    }

    pub fn n(&self) -> usize {
        self.0[0] as usize
    }

    pub fn m(&self) -> usize {
        self.0[1] as usize
    }

    fn columns(&self) -> impl Iterator<Item = u64> + '_ {
        self.0[2..]
            .chunks(Self::column_bytes(self.n()))
            .map(|chunk| {
                chunk
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (i, &b)| acc | (b as u64) << (8 * i))
            })
    }

    /// The canonically labelled representative of the isomorphism class.
    pub fn to_graph(&self) -> BipartiteGraph {
        let n = self.n();
        let mut adj = vec![BitSet::new(); n];
        for (y, col) in self.columns().enumerate() {
            for (x, row) in adj.iter_mut().enumerate() {
                if col >> x & 1 == 1 {
                    row.insert(y);
                }
            }
        }
        BipartiteGraph::new(self.m(), adj).expect("canonical form encodes a valid graph")
    }

    fn encode(n: usize, columns: &[u64]) -> Self {
        let width = Self::column_bytes(n);
        let mut bytes = Vec::with_capacity(2 + width * columns.len());
        bytes.push(n as u8);
        bytes.push(columns.len() as u8);
        for &c in columns {
            bytes.extend_from_slice(&c.to_le_bytes()[..width]);
        }
        Self(bytes)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

/// Canonical form under the default [`CanonLimits`].
pub fn canonical_form(g: &BipartiteGraph) -> Result<CanonicalForm> {
    canonical_form_with(g, CanonLimits::default())
}

pub fn canonical_form_with(g: &BipartiteGraph, limits: CanonLimits) -> Result<CanonicalForm> {
    limits.check(g.n(), g.m())?;
    if g.n() > 64 {
        return Err(Error::TooLarge {
            what: "canonicalization",
            detail: "columns are limited to 64 X vertices".into(),
        });
    }
    Ok(canonical_unchecked(g))
}

pub(crate) fn canonical_unchecked(g: &BipartiteGraph) -> CanonicalForm {
    let n = g.n();
    let m = g.m();
    let y_deg = g.y_degrees();
    let rows: Vec<Vec<usize>> = g.rows().iter().map(BitSet::to_vec).collect();

    let mut keyed: Vec<(Vec<usize>, usize)> = (0..n)
        .map(|x| {
            let mut key = vec![rows[x].len()];
            let mut nd: Vec<usize> = rows[x].iter().map(|&y| y_deg[y]).collect();
            nd.sort_unstable();
            key.extend(nd);
            (key, x)
        })
        .collect();
    keyed.sort();

    // Runs of equal invariant keys; only orders within a run are tried.
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        if i == 0 || keyed[i].0 != keyed[i - 1].0 {
            cells.push(Vec::new());
        }
        cells.last_mut().unwrap().push(keyed[i].1);
    }

    let mut order: Vec<usize> = cells.iter().flatten().copied().collect();
    let mut best: Option<Vec<u64>> = None;
    let mut cols = vec![0u64; m];
    let mut search = |order: &[usize]| {
        cols.iter_mut().for_each(|c| *c = 0);
        for (p, &x) in order.iter().enumerate() {
            for &y in &rows[x] {
                cols[y] |= 1 << p;
            }
        }
        cols.sort_unstable();
        if best.as_ref().is_none_or(|b| cols < *b) {
            best = Some(cols.clone());
        }
    };
    permute_cells(&cells, 0, 0, &mut order, &mut search);
    CanonicalForm::encode(n, &best.expect("at least one ordering"))
}

/// Calls `visit` once per ordering that permutes vertices only within cells.
fn permute_cells(
    cells: &[Vec<usize>],
    cell: usize,
    offset: usize,
    order: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if cell == cells.len() {
        visit(order);
        return;
    }
    let len = cells[cell].len();
    // Heap's algorithm over order[offset..offset + len].
    let mut c = vec![0usize; len];
    permute_cells(cells, cell + 1, offset + len, order, visit);
    let mut i = 0;
    while i < len {
        if c[i] < i {
            if i % 2 == 0 {
                order.swap(offset, offset + i);
            } else {
                order.swap(offset + c[i], offset + i);
            }
            permute_cells(cells, cell + 1, offset + len, order, visit);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

pub fn is_isomorphic(g: &BipartiteGraph, h: &BipartiteGraph) -> Result<bool> {
    is_isomorphic_with(g, h, CanonLimits::default())
}

pub fn is_isomorphic_with(
    g: &BipartiteGraph,
    h: &BipartiteGraph,
    limits: CanonLimits,
) -> Result<bool> {
    if g.n() != h.n() || g.m() != h.m() {
        limits.check(g.n(), g.m())?;
        limits.check(h.n(), h.m())?;
        return Ok(false);
    }
    Ok(canonical_form_with(g, limits)? == canonical_form_with(h, limits)?)
}
