//! Enumerates the bi-Lipschitz classes of all families sharing a holomorphic
//! exponent vector `a`, as the conjugate exponents range over a bounded grid.
//! Families in one such sweep are all topologically equivalent; the Lipschitz
//! geometry still splits them into finitely many classes.
//!
//! Run with: cargo run --example lipschitz_classes

use brieskorn::enumerate_lipschitz_classes;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (a, b_bound) in [(vec![2u32, 2], 2u32), (vec![2, 3], 1), (vec![2, 3], 2)] {
        let enumeration = enumerate_lipschitz_classes(&a, b_bound)?;
        println!(
            "a = {:?}, b_i <= {}: {} classes over {} valid members ({} grid points skipped)",
            a,
            b_bound,
            enumeration.classes.len(),
            enumeration
                .classes
                .iter()
                .map(|c| c.members.len())
                .sum::<usize>(),
            enumeration.skipped_invalid,
        );
        println!(
            "  every member topologically equivalent: {}",
            enumeration.topologically_trivial
        );
        for (idx, class) in enumeration.classes.iter().enumerate() {
            let members: Vec<String> = class
                .members
                .iter()
                .map(|b| format!("{b:?}"))
                .collect();
            println!(
                "  class {idx}: representative b = {:?}, members {}{}",
                class.representative.b(),
                members.join(" "),
                if class.undetermined_related {
                    "  (some cross-class pairs undetermined)"
                } else {
                    ""
                }
            );
        }
        println!();
    }
    Ok(())
}
