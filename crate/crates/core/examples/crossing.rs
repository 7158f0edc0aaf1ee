//! Crossing pairs on a cycle and the non-crossing degree bound.
//!
//! cargo run --example crossing

use pancyclic::structure;
use pancyclic::{BipartiteGraph, CycleWitness};

fn main() -> pancyclic::Result<()> {
    // y1 x1 y2 x2 y3 x3 y4 x4 with chords x1y3 and x3y2, stored 0-based
    let g = BipartiteGraph::from_lists(4, &[vec![0, 1, 2], vec![1, 2], vec![2, 3, 1], vec![3, 0]])?;
    let c = CycleWitness::new(&g, vec![0, 1, 2, 3], vec![0, 1, 2, 3])?;
    for (i, j) in [(1, 2), (1, 3), (2, 4)] {
        let q = structure::are_crossing(&g, &c, i, j)?;
        println!("x{i}, x{j}: crossing {} witness {:?}", q.crossing, q.witness);
    }

    let g = BipartiteGraph::from_lists(5, &[vec![0, 1, 2], vec![1, 2, 3], vec![2, 3, 0], vec![0, 1, 4]])?;
    let c = pancyclic::cycle::longest_cycle(&g).unwrap();
    let audit = structure::audit_noncrossing_bound(&g, &c)?;
    println!("longest cycle xs {:?} ys {:?}: {audit:?}", c.xs(), c.ys());
    Ok(())
}
