//! The inner horn index beta: the minimal order of contact of arc pairs on
//! the surface. For the ray class the exact value is m_2 / (2 b_1) > 1; for
//! every other class it is 1. The estimator samples arc pairs, fits the
//! contact order of each, takes the minimum, and snaps it to a bounded
//! denominator.
//!
//! Run with: cargo run --example beta_horns

use brieskorn::{estimate_beta, horn_index, surface_type, ExponentData, SurfaceClass};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let germs: [(&[u32], &[u32]); 6] = [
        (&[0, 1], &[1, 1]), // beta = 3/2
        (&[0, 1], &[1, 2]), // beta = 5/2
        (&[0, 1], &[2, 3]), // beta = 7/4
        (&[0, 2], &[1, 3]), // beta = 4
        (&[2, 3], &[0, 0]), // not a ray class: beta = 1
        (&[0, 2], &[2, 0]), // rays dominating: beta = 1
    ];

    for (a, b) in germs {
        let e = ExponentData::new(a.to_vec(), b.to_vec())?;
        let ty = surface_type(&e)?;
        let exact = if ty.class() == Some(SurfaceClass::T3) {
            horn_index(&e)?
        } else {
            num_rational::BigRational::from_integer(1.into())
        };
        let fit = estimate_beta(&e, 24, 5)?;
        println!(
            "a = {a:?}, b = {b:?} ({ty}): exact beta = {exact}, fitted slope = {:.4}, snap = {}  (r^2 = {:.6})",
            fit.slope,
            fit.rational_snap
                .as_ref()
                .map(|r| r.to_string())
                .unwrap_or_else(|| "none".into()),
            fit.r_squared,
        );
    }
    Ok(())
}
