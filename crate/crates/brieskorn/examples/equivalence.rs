//! Equivalence queries between families: topological, bi-Lipschitz, and the
//! one-directional outer/ambient obstruction tests, with their witnesses.
//!
//! Run with: cargo run --example equivalence

use brieskorn::{
    ambient_obstruction, bilipschitz_equivalent, outer_obstruction, topologically_equivalent,
    ExponentData, EquivalenceVerdict,
};

fn show(label: &str, verdict: &EquivalenceVerdict) {
    print!("  {label}: {:?} [{}]", verdict.status, verdict.reason.tag());
    match &verdict.witness {
        Some(w) => println!("  witness: {w:?}"),
        None => println!(),
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Same multiplicities through a coordinate swap: equivalent, with the
    // permutation as witness.
    let e1 = ExponentData::new(vec![2, 2], vec![1, 3])?;
    let e2 = ExponentData::new(vec![2, 2], vec![3, 1])?;
    println!("(2,2|1,3) vs (2,2|3,1):");
    show("topological", &topologically_equivalent(&e1, &e2)?);
    show("bi-Lipschitz", &bilipschitz_equivalent(&e1, &e2)?);
    println!();

    // Different normal forms: already topologically distinct.
    let e3 = ExponentData::new(vec![2, 3], vec![0, 0])?;
    let e4 = ExponentData::new(vec![2, 2], vec![0, 0])?;
    println!("(2,3|0,0) vs (2,2|0,0):");
    show("topological", &topologically_equivalent(&e3, &e4)?);
    println!();

    // A purely mixed surface against the zero set of its own topological
    // normal form: topologically the same, but the outer Lipschitz geometry
    // tells them apart.
    let mixed = ExponentData::new(vec![2, 2], vec![0, 1])?;
    let holo = ExponentData::new(vec![2, 2], vec![0, 0])?;
    println!("(2,2|0,1) vs its normal form (2,2|0,0):");
    show("topological", &topologically_equivalent(&mixed, &holo)?);
    show("outer (surfaces)", &outer_obstruction(&mixed, &holo)?);
    println!();

    // Ambient comparison requires both germs in the cuspidal classes.
    let c1 = ExponentData::new(vec![2, 3], vec![0, 0])?;
    let c2 = ExponentData::new(vec![2, 3], vec![1, 0])?;
    println!("(2,3|0,0) vs (2,3|1,0):");
    show("ambient (curves)", &ambient_obstruction(&c1, &c2)?);
    Ok(())
}
