//! Connectivity, condition (2), tight pairs and exception classification.
//!
//! cargo run --example structure_checks

use pancyclic::constructions::{gen_g1, gen_g2};
use pancyclic::structure;
use pancyclic::BipartiteGraph;

fn main() -> pancyclic::Result<()> {
    let graphs = [
        ("K3,3", BipartiteGraph::complete(3, 3)?),
        ("G1(3)", gen_g1(3)?),
        ("G2(2,1)", gen_g2(2, 1, 3)?),
    ];
    for (name, g) in &graphs {
        println!("{name}");
        println!("  2-connected: {}, cut vertices {:?}", structure::is_2connected(g)?, structure::cut_vertices(g));
        println!("  condition (2): {:?}", structure::satisfies_lll(g)?);
        println!("  B for A = X: {:?}", structure::check_condition_lll_for(g, &[0, 1, 2])?);
        match structure::find_tight_pair(g)? {
            Some(p) => println!("  tight pair: x{} with t = {} on a cycle with ℓ = {}", p.x, p.t, p.cycle.len()),
            None => println!("  no tight pair"),
        }
        println!("  classification: {}", structure::classify_exception(g)?);
    }
    Ok(())
}
