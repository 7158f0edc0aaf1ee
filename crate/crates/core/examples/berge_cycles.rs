//! Berge cycles in hypergraphs through the incidence graph, and cycles with a
//! prescribed edge set through the dual incidence graph.
//!
//! cargo run --example berge_cycles

use pancyclic::berge;
use pancyclic::constructions::{construction3_parts, gen_construction3, gen_construction4};
use pancyclic::structure;
use pancyclic::Hypergraph;

fn main() -> pancyclic::Result<()> {
    let h = Hypergraph::from_lists(4, &[vec![0, 1], vec![1, 2, 3], vec![2, 3], vec![0, 3]])?;
    let c = berge::hamiltonian_berge_cycle(&h)?.unwrap();
    println!("Hamiltonian Berge cycle: base {:?} edges {:?}", c.base(), c.edges());
    let inc = c.to_incidence_cycle(&h);
    println!("  as an incidence cycle: xs {:?} ys {:?}", inc.xs(), inc.ys());
    let e = berge::find_berge_cycle_with_edges(&h, &[0, 1, 3])?;
    println!("cycle using exactly edges 0, 1, 3: {:?}", e.map(|c| c.base().to_vec()));

    let h3 = gen_construction3(6)?;
    let (v1, _, v) = construction3_parts(6);
    println!(
        "construction 3, n = 6: {} edges, min degree {}, shared vertex {v} is a cut vertex of the incidence graph: {}",
        h3.edge_count(),
        h3.min_degree(),
        !structure::is_2connected_hypergraph(&h3)?
    );
    println!("  cycle on V1 = {:?}: {}", v1.to_vec(), berge::find_berge_cycle(&h3, &v1.to_vec())?.is_some());
    println!("  Hamiltonian: {}", berge::has_hamiltonian_berge_cycle(&h3)?);

    let h4 = gen_construction4(8)?;
    println!(
        "construction 4, n = 8: min degree {}, Hamiltonian {}, sets without a Berge cycle {}",
        h4.min_degree(),
        berge::has_hamiltonian_berge_cycle(&h4)?,
        berge::non_cyclic_sets(&h4)?.len()
    );
    Ok(())
}
