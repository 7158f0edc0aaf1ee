//! Searches small boxes for classes matching a predicate.
//!
//! cargo run --release --example scan

use pancyclic::verify::{scan, Predicate, VerifyOptions};

fn main() -> pancyclic::Result<()> {
    let opts = VerifyOptions::default();
    let queries = [
        ("¬spanning-x-cycle", 3..=3, 5..=5, 3),
        ("not spanning-x-cycle and not (iso-g1 or iso-g2)", 3..=4, 5..=7, 4),
        ("2-connected ∧ ¬spanning-x-cycle", 3..=3, 8..=8, 4),
        ("lll ∧ ¬x-super-pancyclic", 3..=3, 5..=7, 3),
    ];
    for (text, ns, ms, delta) in queries {
        let pred: Predicate = text.parse()?;
        let hits = scan(&pred, ns.clone(), ms.clone(), delta, &opts)?;
        println!("{text} over n ∈ {ns:?}, m ∈ {ms:?}, δ = {delta}: {} classes", hits.len());
        for h in hits.iter().take(5) {
            println!("  n={} m={} {} rows {:?}", h.n, h.m, h.canonical, h.graph().rows());
        }
    }
    Ok(())
}
