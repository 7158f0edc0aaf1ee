//! Exhaustive checks of the Dirac-type theorems on small boxes.
//!
//! cargo run --release --example verify_theorems

use pancyclic::verify::{verify_theorem, ParameterBox, Theorem, VerifyOptions};

fn main() -> pancyclic::Result<()> {
    let boxes = [
        (Theorem::Jackson, 3, 4, 3),
        (Theorem::Jackson2, 3, 5, 3),
        (Theorem::Jackson2, 4, 7, 4),
        (Theorem::Mainj, 4, 7, 4),
        (Theorem::Mainpan, 3, 7, 4),
        (Theorem::Mainj2, 4, 7, 4),
        (Theorem::Jackson22, 3, 5, 3),
    ];
    for (theorem, n, m, delta) in boxes {
        let pbox = ParameterBox::new(theorem, n, m, delta)?;
        let report = verify_theorem(&pbox, &VerifyOptions::default())?;
        print!("{}", report.to_table());
        println!("elapsed {:.2?}\n", report.elapsed);
    }
    match ParameterBox::new(Theorem::Mainj, 4, 8, 4) {
        Err(e) => println!("{e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
