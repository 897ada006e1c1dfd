//! Contact orders of arc pairs: two arcs through the origin that first
//! separate at order t^{p/q} have contact order p/q, recovered here from a
//! log-log fit of their separation and snapped to a bounded-denominator
//! rational. Indistinguishable arcs report an infinite order.
//!
//! Run with: cargo run --example contact_orders

use brieskorn::{contact_order, default_t_grid, ArcSpec, ArcTerm, Error};
use num_rational::BigRational;

fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

fn arc(terms: &[([f64; 4], (i64, i64))]) -> ArcSpec {
    ArcSpec::new(
        terms
            .iter()
            .map(|&(coeff, (p, q))| ArcTerm {
                coeff,
                exponent: ratio(p, q),
            })
            .collect(),
    )
    .expect("well-formed arc")
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let grid = default_t_grid();
    let base = arc(&[([1.0, 0.0, 0.0, 0.0], (1, 1))]);

    // Pairs that agree to increasingly high order before splitting.
    let cases: [((i64, i64), ArcSpec); 4] = [
        ((3, 2), arc(&[([1.0, 0.0, 0.0, 0.0], (1, 1)), ([0.0, 0.0, 1.0, 0.0], (3, 2))])),
        ((5, 2), arc(&[([1.0, 0.0, 0.0, 0.0], (1, 1)), ([0.0, 1.0, 0.0, 0.0], (5, 2))])),
        ((7, 4), arc(&[([1.0, 0.0, 0.0, 0.0], (1, 1)), ([0.0, 0.0, 0.0, 1.0], (7, 4))])),
        ((11, 3), arc(&[([1.0, 0.0, 0.0, 0.0], (1, 1)), ([0.0, 0.0, 1.0, 0.0], (11, 3))])),
    ];

    for ((p, q), other) in &cases {
        let fit = contact_order(&base, other, &grid)?;
        println!(
            "expected order {p}/{q}: fitted {:.5}, snapped to {}",
            fit.slope,
            fit.rational_snap
                .as_ref()
                .map(|r| r.to_string())
                .unwrap_or_else(|| "none".into()),
        );
    }

    // Arcs that differ only in a coefficient at order 1 have contact order 1.
    let tilted = arc(&[([0.6, 0.8, 0.0, 0.0], (1, 1))]);
    let fit = contact_order(&base, &tilted, &grid)?;
    println!(
        "linearly separating arcs: fitted {:.5}, snapped to {}",
        fit.slope,
        fit.rational_snap
            .as_ref()
            .map(|r| r.to_string())
            .unwrap_or_else(|| "none".into()),
    );

    // Identical arcs are indistinguishable at every scale.
    match contact_order(&base, &base.clone(), &grid) {
        Err(Error::InfiniteContactOrder) => {
            println!("identical arcs: contact order reported as infinite")
        }
        other => println!("identical arcs: unexpected result {other:?}"),
    }
    Ok(())
}
