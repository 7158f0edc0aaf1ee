//! Audits every tight pair of every class in a box against the structural
//! claims about longest cycles.
//!
//! cargo run --release --example lemma_audit

use pancyclic::constructions::gen_g3;
use pancyclic::structure::{audit_tight_pairs, LemmaAudit};
use pancyclic::verify::{audit_lemmas, VerifyOptions};

fn main() -> pancyclic::Result<()> {
    let opts = VerifyOptions::default();
    for (n, ms, delta) in [(3, 3..=5, 3), (4, 3..=6, 3), (4, 4..=7, 4)] {
        let a = audit_lemmas(n, ms.clone(), delta, &opts)?;
        print(&format!("n = {n}, m ∈ {ms:?}, δ = {delta}"), &a);
    }
    // below m = 3δ − 4 no tight pair has 2 ≤ t < ℓ; G3 sits exactly at the bound
    for (n1, n2, n3, delta) in [(2, 1, 1, 4), (2, 2, 1, 5)] {
        let a = audit_tight_pairs(&gen_g3(n1, n2, n3, delta)?)?;
        print(&format!("G3({n1},{n2},{n3}) with δ = {delta}"), &a);
    }
    Ok(())
}

fn print(title: &str, a: &LemmaAudit) {
    println!("{title}");
    println!("  classes {}, tight pairs {}", a.graphs, a.tight_pairs);
    println!("  neighbour checks {} / violations {}", a.neighbor_checks, a.neighbor_violations);
    println!("  pair checks {} / violations {}", a.neighbor_pair_checks, a.neighbor_pair_violations);
    println!("  non-crossing pairs {} / violations {}", a.crossing_pairs, a.crossing_violations);
    println!("  m ≥ 3δ − 4 cases {} / violations {}", a.degree_bound_applicable, a.degree_bound_violations);
    println!("  separation cases {} / violations {}", a.separation_applicable, a.separation_violations);
}
