//! Contact orders of arc pairs and the horn exponent β recovered from them.

use crate::error::{Error, Result};
use crate::exponents::ExponentData;
use crate::numeric::fit::{fit_log_log, ExponentFit};
use crate::surface::{surface_type, ArcSpec, ArcTerm, SurfaceType};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Default geometric grid `2^-4, 2^-5, ..., 2^-16`. Deeper scales hit the
/// double-precision floor for exponents near 6.
pub fn default_t_grid() -> Vec<f64> {
    (4..=16).map(|k| 2f64.powi(-k)).collect()
}

fn validate_grid(t_grid: &[f64]) -> Result<()> {
    if t_grid.len() < 12 {
        return Err(Error::InvalidParameter(format!(
            "contact-order grids need at least 12 points, got {}",
            t_grid.len()
        )));
    }
    if t_grid
        .iter()
        .any(|&t| !(t > 0.0 && t < 1.0 && t.is_finite()))
    {
        return Err(Error::InvalidParameter(
            "grid values must lie strictly between 0 and 1".into(),
        ));
    }
    if t_grid.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::InvalidParameter(
            "grid values must be strictly decreasing".into(),
        ));
    }
    Ok(())
}

/// Order of contact of two arcs from the origin: the fitted exponent of
/// `‖γ_1(t) − γ_2(t)‖` against `t`, with a bounded-denominator rational
/// snap. Grid points whose separation sits at the floating-point
/// cancellation floor are excluded; if most of the grid is at the floor the
/// arcs are indistinguishable and the order is reported as infinite.
pub fn contact_order(arc1: &ArcSpec, arc2: &ArcSpec, t_grid: &[f64]) -> Result<ExponentFit> {
    validate_grid(t_grid)?;
    let mut ts = Vec::with_capacity(t_grid.len());
    let mut ds = Vec::with_capacity(t_grid.len());
    let mut floored = 0usize;
    for &t in t_grid {
        let p1 = arc1.eval(t);
        let p2 = arc2.eval(t);
        let d = p1.dist(&p2);
        let floor = (p1.norm() + p2.norm()) * 1e-13;
        if d <= floor {
            floored += 1;
            continue;
        }
        ts.push(t);
        ds.push(d);
    }
    if floored * 2 >= t_grid.len() {
        return Err(Error::InfiniteContactOrder);
    }
    fit_log_log(&ts, &ds).ok_or_else(|| {
        Error::EstimationFailed("contact-order fit needs at least two usable scales".into())
    })
}

/// A radius-parameterized arc on the surface: the parameter is (up to a
/// bounded factor) the distance to the origin, as required for contact
/// orders to be metrically meaningful.
fn radial_arc(
    e: &ExponentData,
    phase_z1: f64,
    phase_z2: f64,
) -> ArcSpec {
    let (a1, b1) = e.pair(0);
    let ms = e.multiplicities();
    let (m1, m2) = (BigInt::from(ms[0]), BigInt::from(ms[1]));
    // Raw exponents of (z_1, z_2) in the parameter rho.
    let (e1, e2) = if a1 >= 1 {
        (BigRational::new(m2, m1), BigRational::from(BigInt::from(1)))
    } else {
        (
            BigRational::new(m2, BigInt::from(2 * b1)),
            BigRational::from(BigInt::from(1)),
        )
    };
    // Rescale so the leading exponent is 1 (parameter = leading radius).
    let lead = if e1 < e2 { e1.clone() } else { e2.clone() };
    let (e1, e2) = (e1 / lead.clone(), e2 / lead);
    let c1 = [phase_z1.cos(), phase_z1.sin(), 0.0, 0.0];
    let c2 = [0.0, 0.0, phase_z2.cos(), phase_z2.sin()];
    let terms = if e1 == e2 {
        vec![ArcTerm {
            coeff: [c1[0], c1[1], c2[2], c2[3]],
            exponent: e1,
        }]
    } else if e1 < e2 {
        vec![
            ArcTerm { coeff: c1, exponent: e1 },
            ArcTerm { coeff: c2, exponent: e2 },
        ]
    } else {
        vec![
            ArcTerm { coeff: c2, exponent: e2 },
            ArcTerm { coeff: c1, exponent: e1 },
        ]
    };
    ArcSpec::new(terms).expect("radial arcs are well-formed")
}

/// Builds an on-surface radial arc for branch/ray `k`. For `a_1 >= 1` the
/// free datum is the `z_2`-phase `theta`; for `a_1 = 0` it is the free
/// `z_1`-phase.
pub(crate) fn component_arc(e: &ExponentData, theta: f64, k: u32) -> ArcSpec {
    let (a1, _) = e.pair(0);
    let a2 = e.a()[1];
    if a1 >= 1 {
        let phase_z1 = (std::f64::consts::PI
            + f64::from(a2) * theta
            + std::f64::consts::TAU * f64::from(k))
            / f64::from(a1);
        radial_arc(e, phase_z1, theta)
    } else {
        let ray = (1.0 + 2.0 * f64::from(k)) * std::f64::consts::PI / f64::from(a2);
        radial_arc(e, theta, ray)
    }
}

/// Estimates the inner horn exponent as the minimum snapped contact order
/// over seeded arc pairs drawn within one connected component (same
/// branch/ray, varying free phase). The ray class yields its horn index β;
/// every other class yields 1.
pub fn estimate_beta(e: &ExponentData, arc_pairs: usize, seed: u64) -> Result<ExponentFit> {
    if surface_type(e)? == SurfaceType::Regular {
        return Err(Error::RegularSurface);
    }
    if arc_pairs == 0 {
        return Err(Error::InvalidParameter(
            "at least one arc pair is required".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let grid = default_t_grid();
    let mut best: Option<ExponentFit> = None;
    let mut attempts = 0usize;
    while attempts < arc_pairs {
        attempts += 1;
        let th1 = rng.gen_range(0.0..std::f64::consts::TAU);
        let th2 = rng.gen_range(0.0..std::f64::consts::TAU);
        if (th1 - th2).abs() < 1e-3 {
            continue;
        }
        let arc1 = component_arc(e, th1, 0);
        let arc2 = component_arc(e, th2, 0);
        let fit = match contact_order(&arc1, &arc2, &grid) {
            Ok(f) => f,
            Err(Error::InfiniteContactOrder) => continue,
            Err(other) => return Err(other),
        };
        let replace = match &best {
            None => true,
            Some(b) => fit.value() < b.value(),
        };
        if replace {
            best = Some(fit);
        }
    }
    best.ok_or_else(|| Error::EstimationFailed("no usable arc pair was found".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::witness_arcs;

    fn e(a: &[u32], b: &[u32]) -> ExponentData {
        ExponentData::new(a.to_vec(), b.to_vec()).unwrap()
    }

    fn rational(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    fn line(coeff: [f64; 4]) -> ArcSpec {
        ArcSpec::new(vec![ArcTerm {
            coeff,
            exponent: rational(1, 1),
        }])
        .unwrap()
    }

    #[test]
    fn transversal_lines_have_contact_order_one() {
        let fit = contact_order(
            &line([1.0, 0.0, 0.0, 0.0]),
            &line([0.0, 0.0, 1.0, 0.0]),
            &default_t_grid(),
        )
        .unwrap();
        assert_eq!(fit.rational_snap, Some(rational(1, 1)));
        assert!(fit.r_squared > 0.999999);
    }

    #[test]
    fn sheet_witness_arcs_meet_at_order_three_halves() {
        let (g1, g2) = witness_arcs(&e(&[2, 3], &[0, 0])).unwrap();
        let fit = contact_order(&g1, &g2, &default_t_grid()).unwrap();
        assert_eq!(fit.rational_snap, Some(rational(3, 2)));
    }

    #[test]
    fn constructed_fifth_order_shift_is_recovered() {
        let base = line([1.0, 0.0, 0.0, 0.0]);
        let shifted = ArcSpec::new(vec![
            ArcTerm {
                coeff: [1.0, 0.0, 0.0, 0.0],
                exponent: rational(1, 1),
            },
            ArcTerm {
                coeff: [0.0, 0.0, 0.7, 0.0],
                exponent: rational(5, 1),
            },
        ])
        .unwrap();
        let fit = contact_order(&base, &shifted, &default_t_grid()).unwrap();
        assert_eq!(fit.rational_snap, Some(rational(5, 1)));
    }

    #[test]
    fn identical_arcs_report_infinite_order() {
        let a = line([1.0, 0.0, 0.0, 0.0]);
        assert!(matches!(
            contact_order(&a, &a.clone(), &default_t_grid()),
            Err(Error::InfiniteContactOrder)
        ));
    }

    #[test]
    fn contact_order_is_symmetric() {
        let (g1, g2) = witness_arcs(&e(&[0, 2], &[1, 2])).unwrap();
        let f12 = contact_order(&g1, &g2, &default_t_grid()).unwrap();
        let f21 = contact_order(&g2, &g1, &default_t_grid()).unwrap();
        assert_eq!(f12.rational_snap, f21.rational_snap);
        assert!((f12.slope - f21.slope).abs() < 1e-15);
    }

    #[test]
    fn short_grids_are_rejected() {
        let a = line([1.0, 0.0, 0.0, 0.0]);
        let b = line([0.0, 0.0, 1.0, 0.0]);
        assert!(contact_order(&a, &b, &[0.5, 0.25, 0.125]).is_err());
    }

    #[test]
    fn beta_estimates_match_horn_indices() {
        // Single horn with beta = 3/2.
        let fit = estimate_beta(&e(&[0, 1], &[1, 1]), 24, 5).unwrap();
        assert_eq!(fit.rational_snap, Some(rational(3, 2)));
        // Three-ray class with beta = 3.
        let fit = estimate_beta(&e(&[0, 2], &[1, 2]), 24, 5).unwrap();
        assert_eq!(fit.rational_snap, Some(rational(3, 1)));
        // Homogeneous cone: sanity value 1.
        let fit = estimate_beta(&e(&[2, 2], &[0, 0]), 24, 5).unwrap();
        assert_eq!(fit.rational_snap, Some(rational(1, 1)));
        // Sheet class and swapped sheet class: 1 as well.
        let fit = estimate_beta(&e(&[2, 3], &[0, 0]), 24, 5).unwrap();
        assert_eq!(fit.rational_snap, Some(rational(1, 1)));
        let fit = estimate_beta(&e(&[2, 2], &[3, 0]), 24, 5).unwrap();
        assert_eq!(fit.rational_snap, Some(rational(1, 1)));
        // Plane-sheet ray case: 1.
        let fit = estimate_beta(&e(&[0, 2], &[2, 0]), 24, 5).unwrap();
        assert_eq!(fit.rational_snap, Some(rational(1, 1)));
    }

    #[test]
    fn beta_estimation_rejects_regular_and_empty() {
        assert!(matches!(
            estimate_beta(&e(&[1, 3], &[0, 1]), 8, 0),
            Err(Error::RegularSurface)
        ));
        assert!(estimate_beta(&e(&[0, 1], &[1, 1]), 0, 0).is_err());
    }

    #[test]
    fn component_arcs_lie_on_the_surface() {
        use crate::mixed::MixedPolynomial;
        for data in [
            e(&[2, 3], &[0, 0]),
            e(&[2, 2], &[1, 1]),
            e(&[0, 2], &[1, 1]),
            e(&[0, 2], &[2, 0]),
            e(&[2, 2], &[3, 0]),
        ] {
            let f = MixedPolynomial::family(&data);
            let arc = component_arc(&data, 1.234, 0);
            for k in 2..16 {
                let t = 2f64.powi(-k);
                let p = arc.eval(t);
                let scale: f64 = data
                    .multiplicities()
                    .iter()
                    .zip(0..2)
                    .map(|(&m, i)| p[i].norm().powi(m as i32))
                    .sum();
                assert!(
                    f.eval_f64(&p).norm() <= 1e-10 * scale.max(1e-300),
                    "family {data} at t = {t}"
                );
            }
        }
    }
}
