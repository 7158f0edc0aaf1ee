//! Canonical enumeration of small classes and canonical forms.
//!
//! cargo run --release --example enumerate_classes

use pancyclic::canon::canonical_form;
use pancyclic::constructions::gen_g1;
use pancyclic::verify::{enumerate_canonical, enumerate_labeled, VerifyOptions};

fn main() -> pancyclic::Result<()> {
    let opts = VerifyOptions::default();
    for (n, m, delta) in [(2, 2, 2), (2, 3, 2), (3, 4, 3), (3, 5, 3), (4, 6, 3), (4, 7, 4)] {
        let classes = enumerate_canonical(n, m, delta, &opts)?;
        println!("𝒢({n},{m},{delta}): {} classes", classes.len());
    }
    println!("labelled graphs in 𝒢(3,4,3): {}", enumerate_labeled(3, 4, 3)?.len());
    let g1 = gen_g1(3)?;
    let form = canonical_form(&g1)?;
    println!("canonical form of G1(3): {}", form.to_hex());
    println!("representative rows: {:?}", form.to_graph().rows());
    Ok(())
}
