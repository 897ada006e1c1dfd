//! Log-log regression and bounded-denominator rational rounding, the two
//! primitives every exponent estimator in this crate is built on.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// A fitted power law `y ≈ C · x^slope`, obtained by least squares on
/// `(log x, log y)`, together with the nearest simple rational exponent.
#[derive(Debug, Clone, PartialEq)]
pub struct ExponentFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    /// Best rational approximation of the slope with denominator at most 12,
    /// present when it lies within 0.02 of the slope.
    pub rational_snap: Option<BigRational>,
}

impl ExponentFit {
    /// The snapped exponent as a float, falling back to the raw slope.
    pub fn value(&self) -> f64 {
        self.rational_snap
            .as_ref()
            .and_then(|r| r.to_f64())
            .unwrap_or(self.slope)
    }
}

impl Serialize for ExponentFit {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ExponentFit", 4)?;
        s.serialize_field("slope", &self.slope)?;
        s.serialize_field("intercept", &self.intercept)?;
        s.serialize_field("r_squared", &self.r_squared)?;
        s.serialize_field(
            "rational_snap",
            &self.rational_snap.as_ref().map(|r| r.to_string()),
        )?;
        s.end()
    }
}

/// Denominator bound used by every snap in this crate: all exponents arising
/// on the supported grids are fractions `p/q` with `q <= 12`.
pub const SNAP_DENOMINATOR_BOUND: u32 = 12;

/// Acceptance window for rational snapping.
pub const SNAP_WINDOW: f64 = 0.02;

/// Best rational approximation `p/q` of `x` with `1 <= q <= max_denominator`
/// (the same optimum the continued-fraction expansion with bounded
/// denominator produces), accepted only within [`SNAP_WINDOW`].
pub fn snap_rational(x: f64, max_denominator: u32) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    let mut best: Option<(f64, i64, i64)> = None;
    for q in 1..=i64::from(max_denominator) {
        let p = (x * q as f64).round() as i64;
        let err = (x - p as f64 / q as f64).abs();
        let better = match best {
            None => true,
            Some((e, _, _)) => err + 1e-15 < e,
        };
        if better {
            best = Some((err, p, q));
        }
    }
    let (err, p, q) = best?;
    if err <= SNAP_WINDOW {
        Some(BigRational::new(BigInt::from(p), BigInt::from(q)))
    } else {
        None
    }
}

/// Least-squares fit of `log y = intercept + slope · log x` over the finite,
/// positive entries of the input. Returns `None` with fewer than two usable
/// points.
pub fn fit_log_log(xs: &[f64], ys: &[f64]) -> Option<ExponentFit> {
    let pts: Vec<(f64, f64)> = xs
        .iter()
        .zip(ys.iter())
        .filter(|(&x, &y)| x > 0.0 && y > 0.0 && x.is_finite() && y.is_finite())
        .map(|(&x, &y)| (x.ln(), y.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mean_x = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    if sxx == 0.0 {
        return None;
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let ss_tot: f64 = pts.iter().map(|p| (p.1 - mean_y).powi(2)).sum();
    let ss_res: f64 = pts
        .iter()
        .map(|p| (p.1 - (intercept + slope * p.0)).powi(2))
        .sum();
    let r_squared = if ss_tot == 0.0 {
        1.0
    } else {
        (1.0 - ss_res / ss_tot).clamp(0.0, 1.0)
    };
    Some(ExponentFit {
        slope,
        intercept,
        r_squared,
        rational_snap: snap_rational(slope, SNAP_DENOMINATOR_BOUND),
    })
}
