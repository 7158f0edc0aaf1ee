//! Reading and writing the text and JSON graph formats.
//!
//! cargo run --example file_formats

use pancyclic::format::{self, Format};

fn main() -> pancyclic::Result<()> {
    let text = "# K2,2\nbigraph 2 2\n0: 0 1\n1: 0 1\n";
    let g = format::parse(text)?;
    println!("{}", format::serialize(&g, Format::Json));
    let h = format::parse(r#"{"kind": "hypergraph", "n": 3, "edges": [[0, 1], [1, 2], [0, 2]]}"#)?;
    print!("{}", format::serialize(&h, Format::Text));
    match format::parse("bigraph 2 2\n0: 0 3\n1: 0 1\n") {
        Err(e) => println!("error: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
