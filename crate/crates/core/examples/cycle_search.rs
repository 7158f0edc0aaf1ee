//! Exact cycle queries on a bipartite graph: prescribed X-sets, longest
//! cycles, spanning cycles and X-super-pancyclicity.
//!
//! cargo run --example cycle_search

use pancyclic::constructions::{gen_g1, gen_g3};
use pancyclic::cycle::{self, SubsetSweep};
use pancyclic::{BipartiteGraph, BitSet};

fn main() -> pancyclic::Result<()> {
    let k44 = BipartiteGraph::complete(4, 4)?;
    let c = cycle::find_cycle_covering_exactly(&k44, &[0, 2, 3].into_iter().collect())?.unwrap();
    println!("K4,4 cycle on X' = {{0, 2, 3}}: xs {:?} ys {:?}", c.xs(), c.ys());
    println!("K4,4 X-super-pancyclic: {:?}", cycle::is_x_super_pancyclic(&k44)?);

    let g1 = gen_g1(4)?;
    let longest = cycle::longest_cycle(&g1).unwrap();
    println!("G1(4): longest cycle ℓ = {} (length {})", longest.len(), 2 * longest.len());
    println!("G1(4): spanning X cycle: {}", cycle::has_spanning_x_cycle(&g1));
    if let SubsetSweep::FailsOn(a) = cycle::is_x_super_pancyclic(&g1)? {
        println!("G1(4): no cycle with X-set {a:?}");
    }

    let g3 = gen_g3(2, 1, 1, 3)?;
    let all = BitSet::full(g3.n());
    println!(
        "G3(2,1,1): spanning cycle with pruning {:?}, without {:?}",
        cycle::find_cycle_covering_exactly(&g3, &all)?.is_some(),
        cycle::find_cycle_covering_exactly_unpruned(&g3, &all)?.is_some()
    );
    println!("G3(2,1,1): {} longest cycles", cycle::all_longest_cycles(&g3).len());
    Ok(())
}
