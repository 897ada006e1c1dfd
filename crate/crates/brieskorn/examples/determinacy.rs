//! Weighted-homogeneous structure and deformation triviality: the weights
//! (r_1, ..., r_n; d), the filtration of deformation terms, and the
//! threshold criterion that decides whether a deformation is bi-Lipschitz
//! trivial. Includes the sharpness example showing the criterion's threshold
//! cannot be lowered.
//!
//! Run with: cargo run --example determinacy

use brieskorn::{
    check_deformation_triviality, filtration, weighted_type, Component, DeformationTerm,
    DeterminacyConfig, ExponentData, GaussianRational, MixedMonomial,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let e = ExponentData::new(vec![1, 2], vec![1, 1])?;
    let w = weighted_type(&e)?;
    println!("family a = {:?}, b = {:?}", e.a(), e.b());
    println!("weighted homogeneous type (r_1, r_2; d) = {w}");
    println!();

    // Filtration of a few candidate deformation terms.
    let one = GaussianRational::integer(1);
    for (nu, mu, label) in [
        (vec![3u32, 0], vec![0u32, 0], "z1^3"),
        (vec![0, 2], vec![1, 0], "zbar1 z2^2"),
        (vec![1, 1], vec![0, 1], "z1 z2 zbar2"),
    ] {
        let m = MixedMonomial::new(one.clone(), nu.clone(), mu.clone())?;
        println!("fl({label}) = {}", filtration(&m, &w)?);
    }
    println!("threshold d + (r_max - r_min) = {}", {
        let cfg = DeterminacyConfig::default();
        // Reported inside the verdict below; shown here for orientation.
        let term = DeformationTerm::new(
            MixedMonomial::new(one.clone(), vec![3, 0], vec![0, 0])?,
            Component::Theta1,
        )?;
        check_deformation_triviality(&e, &[term], &cfg)?.threshold_used
    });
    println!();

    // A high-order perturbation is trivial along the whole interval.
    let deep = DeformationTerm::new(
        MixedMonomial::new(one.clone(), vec![8, 8], vec![0, 0])?,
        Component::Theta1,
    )?;
    let verdict = check_deformation_triviality(&e, &[deep], &DeterminacyConfig::default())?;
    println!(
        "deep term z1^8 z2^8: status {:?} (fl = {} vs threshold {})",
        verdict.status, verdict.filtration_found, verdict.threshold_used
    );

    // The sharpness example: deform a = (2,2), b = (0,0) by
    // -z1^2 + z1^{2k+1}. The term -z1^2 has filtration exactly d = 2, which
    // meets the threshold only with equality, so triviality is established
    // for small t but the full-interval question stays open -- and indeed at
    // t = 1 the deformation changes the germ, so the criterion's silence is
    // sharp, not conservative.
    let h = ExponentData::new(vec![2, 2], vec![0, 0])?;
    let hw = weighted_type(&h)?;
    println!();
    println!("sharpness germ a = (2,2), b = (0,0): weights {hw}");
    let minus_one = GaussianRational::integer(-1);
    let quad = DeformationTerm::new(
        MixedMonomial::new(minus_one, vec![2, 0], vec![0, 0])?, // -z1^2
        Component::Theta1,
    )?;
    let tail = DeformationTerm::new(
        MixedMonomial::new(one.clone(), vec![5, 0], vec![0, 0])?, // z1^5 (k = 2)
        Component::Theta1,
    )?;
    for lenient in [false, true] {
        let cfg = DeterminacyConfig {
            lenient_threshold: lenient,
        };
        let v = check_deformation_triviality(&h, &[quad.clone(), tail.clone()], &cfg)?;
        println!(
            "  threshold reading {}: fl = {} vs threshold {} -> {:?}, full interval established: {:?}",
            if lenient { "d - spread" } else { "d + spread" },
            v.filtration_found,
            v.threshold_used,
            v.status,
            v.along_interval(),
        );
    }
    Ok(())
}
