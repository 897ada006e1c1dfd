//! Normal embedding: does the inner (on-surface) metric agree with the
//! outer (ambient chord) metric up to a bounded factor? For each germ this
//! measures the inner/outer ratio between sheet points at shrinking scales
//! and fits its divergence exponent; exponent 0 means normally embedded.
//!
//! Two of the germs below are deliberate stress cases where the classical
//! class-membership rule and the measured geometry disagree; the report
//! prints both sides. See the README for the full account.
//!
//! Run with: cargo run --example normal_embedding

use brieskorn::{check_normal_embedding, default_t_grid, normally_embedded, ExponentData};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let germs: [(&[u32], &[u32], &str); 6] = [
        (&[2, 3], &[0, 0], "two sheets meeting at a tangency"),
        (&[2, 2], &[3, 0], "roles exchanged, steep tangency"),
        (&[2, 2], &[1, 1], "homogeneous cone"),
        (&[0, 1], &[1, 1], "single horn on one ray"),
        (&[0, 2], &[2, 0], "two rays sharing an axis circle"),
        (&[0, 2], &[2, 1], "balanced rays"),
    ];

    println!(
        "{:<22} {:>6} {:>10} {:>10} {:>9} {:>9}",
        "germ", "rule", "measured", "exponent", "expected", "agree"
    );
    for (a, b, label) in germs {
        let e = ExponentData::new(a.to_vec(), b.to_vec())?;
        let rule = normally_embedded(&e)?;
        let check = check_normal_embedding(&e, &default_t_grid(), 5)?;
        println!(
            "{:<22} {:>6} {:>10} {:>10.3} {:>9.3} {:>9}",
            format!("{a:?} {b:?}"),
            rule,
            check.normally_embedded,
            check.exponent,
            check.reference_exponent,
            if rule == check.normally_embedded {
                "yes"
            } else {
                "NO"
            },
        );
        if rule != check.normally_embedded {
            println!("    ^ {label}: the class rule predicts {rule}, but the measured");
            println!("      inner/outer ratio says otherwise; the geodesics behind the");
            println!("      measurement are straightforward to exhibit, so the measured");
            println!("      verdict stands.");
        }
    }
    Ok(())
}
