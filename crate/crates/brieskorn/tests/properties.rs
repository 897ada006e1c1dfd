//! Randomized invariants: canonicalization, filtration additivity, verdict
//! symmetry, and the numeric fitting/snapping primitives.

use approx::assert_relative_eq;
use brieskorn::{
    bilipschitz_equivalent, filtration, fit_log_log, snap_rational, topologically_equivalent,
    weighted_type, ExponentData, GaussianRational, MixedMonomial, VerdictStatus,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Exponent pairs for a valid family: no `(0, 0)` coordinate, some `a_i > 0`.
fn valid_pairs(n_range: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<(u32, u32)>> {
    prop::collection::vec((0u32..=6, 0u32..=6), n_range)
        .prop_filter("no constant-term coordinate", |pairs| {
            pairs.iter().all(|&p| p != (0, 0))
        })
        .prop_filter("not identically radial", |pairs| {
            pairs.iter().any(|&(a, _)| a > 0)
        })
}

proptest! {
    /// Reordering the input coordinates yields a permutation-equivalent
    /// canonical object with the same invariants, and the recorded
    /// permutation maps each canonical slot back to the input position it
    /// came from. Full structural equality additionally requires that the
    /// stable sort leaves no freedom: within every block of tied `a`-values
    /// the `b`-values must all agree (`Eq` compares canonical forms, which
    /// keep tie blocks in input order by contract).
    #[test]
    fn canonicalization_is_permutation_invariant(
        pairs in valid_pairs(2..=4),
        shuffle_seed in any::<u64>(),
    ) {
        let a: Vec<u32> = pairs.iter().map(|p| p.0).collect();
        let b: Vec<u32> = pairs.iter().map(|p| p.1).collect();
        let e = ExponentData::new(a.clone(), b.clone()).unwrap();

        let mut order: Vec<usize> = (0..pairs.len()).collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(shuffle_seed));
        let pa: Vec<u32> = order.iter().map(|&i| a[i]).collect();
        let pb: Vec<u32> = order.iter().map(|&i| b[i]).collect();
        let pe = ExponentData::new(pa.clone(), pb.clone()).unwrap();

        prop_assert!(e.permutation_equivalent(&pe));
        prop_assert_eq!(e.multiplicity(), pe.multiplicity());
        prop_assert_eq!(e.multiplicity_multiset(), pe.multiplicity_multiset());
        prop_assert!(e.a().windows(2).all(|w| w[0] <= w[1]));
        for (k, &src) in pe.permutation().iter().enumerate() {
            prop_assert_eq!(pe.a()[k], pa[src]);
            prop_assert_eq!(pe.b()[k], pb[src]);
        }
        let ties_unambiguous = (0..e.n()).all(|i| {
            (0..e.n()).all(|j| e.a()[i] != e.a()[j] || e.b()[i] == e.b()[j])
        });
        if ties_unambiguous {
            prop_assert_eq!(&e, &pe);
        }
    }

    /// The filtration of a product of monomials is the sum of filtrations,
    /// exactly, for every weighted-homogeneous type.
    #[test]
    fn filtration_is_additive(
        pairs in valid_pairs(2..=2).prop_filter("weighted type needs a_i >= 1", |p| {
            p.iter().all(|&(a, _)| a >= 1)
        }),
        nu1 in prop::collection::vec(0u32..=6, 2),
        mu1 in prop::collection::vec(0u32..=6, 2),
        nu2 in prop::collection::vec(0u32..=6, 2),
        mu2 in prop::collection::vec(0u32..=6, 2),
    ) {
        prop_assume!(nu1.iter().chain(&mu1).sum::<u32>() > 0);
        prop_assume!(nu2.iter().chain(&mu2).sum::<u32>() > 0);
        let e = ExponentData::new(
            pairs.iter().map(|p| p.0).collect(),
            pairs.iter().map(|p| p.1).collect(),
        )
        .unwrap();
        let w = weighted_type(&e).unwrap();
        let one = GaussianRational::integer(1);
        let m1 = MixedMonomial::new(one.clone(), nu1.clone(), mu1.clone()).unwrap();
        let m2 = MixedMonomial::new(one.clone(), nu2.clone(), mu2.clone()).unwrap();
        let product = MixedMonomial::new(
            one,
            nu1.iter().zip(&nu2).map(|(x, y)| x + y).collect(),
            mu1.iter().zip(&mu2).map(|(x, y)| x + y).collect(),
        )
        .unwrap();
        let sum = filtration(&m1, &w).unwrap() + filtration(&m2, &w).unwrap();
        prop_assert_eq!(filtration(&product, &w).unwrap(), sum);
    }

    /// Equivalence verdicts are symmetric, bi-Lipschitz equivalence implies
    /// topological equivalence, and bi-Lipschitz equivalent families share
    /// their multiplicity multiset.
    #[test]
    fn verdicts_are_symmetric_and_coherent(
        p1 in valid_pairs(2..=2),
        p2 in valid_pairs(2..=2),
    ) {
        let e1 = ExponentData::new(
            p1.iter().map(|p| p.0).collect(),
            p1.iter().map(|p| p.1).collect(),
        )
        .unwrap();
        let e2 = ExponentData::new(
            p2.iter().map(|p| p.0).collect(),
            p2.iter().map(|p| p.1).collect(),
        )
        .unwrap();
        let top = topologically_equivalent(&e1, &e2).unwrap();
        let bilip = bilipschitz_equivalent(&e1, &e2).unwrap();
        prop_assert_eq!(top.status, topologically_equivalent(&e2, &e1).unwrap().status);
        prop_assert_eq!(bilip.status, bilipschitz_equivalent(&e2, &e1).unwrap().status);
        if bilip.status == VerdictStatus::Equivalent {
            prop_assert_eq!(top.status, VerdictStatus::Equivalent);
            prop_assert_eq!(e1.multiplicity_multiset(), e2.multiplicity_multiset());
        }
    }

    /// Snapping recovers a planted rational `p/q` (q ≤ 12) from any
    /// perturbation smaller than half the minimal gap between such rationals.
    #[test]
    fn snap_recovers_planted_rationals(
        q in 1i64..=12,
        num in 1i64..=72,
        jitter in -0.003f64..0.003,
    ) {
        prop_assume!(num <= 6 * q);
        let expected = BigRational::new(BigInt::from(num), BigInt::from(q));
        let x = num as f64 / q as f64 + jitter;
        prop_assert_eq!(snap_rational(x, 12), Some(expected));
    }

    /// The log-log fit recovers a planted power law to float accuracy with a
    /// perfect coefficient of determination.
    #[test]
    fn fit_recovers_planted_power_laws(
        slope in -3.0f64..3.0,
        intercept in -2.0f64..2.0,
    ) {
        let xs: Vec<f64> = (1..=10).map(|k| 2f64.powi(-k)).collect();
        let ys: Vec<f64> = xs.iter().map(|&x| intercept.exp() * x.powf(slope)).collect();
        let fit = fit_log_log(&xs, &ys).unwrap();
        assert_relative_eq!(fit.slope, slope, max_relative = 1e-9, epsilon = 1e-9);
        assert_relative_eq!(fit.intercept, intercept, max_relative = 1e-9, epsilon = 1e-9);
        prop_assert!(fit.r_squared > 1.0 - 1e-9);
    }
}
