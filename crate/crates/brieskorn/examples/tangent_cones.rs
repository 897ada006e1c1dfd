//! Tangent cones of the five surface classes, symbolically and as recovered
//! from scaled point clouds: the estimator rescales samples at shrinking
//! radii, clusters the limiting directions, and matches them against the
//! predicted cone.
//!
//! Run with: cargo run --example tangent_cones

use brieskorn::{
    default_scales, estimate_tangent_cone, surface_type, tangent_cone, ExponentData,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let germs: [(&[u32], &[u32], &str); 6] = [
        (&[2, 3], &[0, 0], "cusp family"),
        (&[2, 2], &[0, 0], "equal multiplicities"),
        (&[2, 2], &[3, 0], "roles exchanged"),
        (&[0, 1], &[1, 1], "ray class with a horn"),
        (&[0, 2], &[2, 0], "rays dominating"),
        (&[0, 2], &[2, 1], "balanced ray class"),
    ];

    for (a, b, label) in germs {
        let e = ExponentData::new(a.to_vec(), b.to_vec())?;
        let ty = surface_type(&e)?;
        let symbolic = tangent_cone(&e)?;
        let est = estimate_tangent_cone(&e, &default_scales(), 0.15)?;
        println!("a = {a:?}, b = {b:?}  ({label}, {ty})");
        println!("  symbolic cone:  {}", symbolic.kind);
        if !symbolic.rays.is_empty() {
            let rays: Vec<String> = symbolic.rays.iter().map(|r| format!("{r} pi")).collect();
            println!("  symbolic rays at angles: {}", rays.join(", "));
        }
        println!(
            "  estimated cone: {} (Hausdorff misfit {:.2e}, {} direction clusters)",
            est.matched.kind, est.hausdorff, est.cluster_count
        );
        println!(
            "  match: {}",
            if est.matched.kind == symbolic.kind {
                "yes"
            } else {
                "NO"
            }
        );
        println!();
    }
    Ok(())
}
