//! Generates every extremal family and prints its certificate.
//!
//! cargo run --example constructions

use pancyclic::constructions::ConstructionSpec;

fn main() -> pancyclic::Result<()> {
    let specs = [
        ConstructionSpec::G1 { delta: 3 },
        ConstructionSpec::G1 { delta: 5 },
        ConstructionSpec::G2 { a: 2, b: 1, delta: 3 },
        ConstructionSpec::G2 { a: 3, b: 1, delta: 4 },
        ConstructionSpec::G3 { n1: 1, n2: 1, n3: 1, delta: 3 },
        ConstructionSpec::G3 { n1: 2, n2: 2, n3: 2, delta: 6 },
        ConstructionSpec::H3 { n: 6 },
        ConstructionSpec::H4 { n: 8 },
        ConstructionSpec::H4 { n: 9 },
    ];
    for spec in specs {
        let cert = spec.certify()?;
        println!("{} [{}]", cert.label, if cert.holds() { "all claims hold" } else { "claim mismatch" });
        for c in &cert.checks {
            let mark = if c.holds { ' ' } else { '!' };
            println!("  {mark} {:<34} claimed {:<6} observed {}", c.property, c.claimed, c.observed);
        }
    }
    Ok(())
}
