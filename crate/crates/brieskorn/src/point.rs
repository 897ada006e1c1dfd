//! Points of `C^n` used by the floating-point estimators.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// A point of `C^n`, stored as a vector of double-precision complex numbers.
///
/// The real-coordinate order used throughout the crate (sampling CSV files,
/// geodesic graphs) is `(x_1, y_1, ..., x_n, y_n)` with `z_j = x_j + i y_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexPoint(pub Vec<Complex64>);

impl ComplexPoint {
    pub fn new(coords: Vec<Complex64>) -> Self {
        Self(coords)
    }

    /// The origin of `C^n`.
    pub fn origin(n: usize) -> Self {
        Self(vec![Complex64::new(0.0, 0.0); n])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Builds a point from interleaved real coordinates `(x_1, y_1, ...)`.
    pub fn from_reals(reals: &[f64]) -> Result<Self> {
        if reals.len() % 2 != 0 {
            return Err(Error::InvalidParameter(format!(
                "real coordinate list must have even length, got {}",
                reals.len()
            )));
        }
        Ok(Self(
            reals
                .chunks_exact(2)
                .map(|xy| Complex64::new(xy[0], xy[1]))
                .collect(),
        ))
    }

    /// Interleaved real coordinates `(x_1, y_1, ..., x_n, y_n)`.
    pub fn to_reals(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(2 * self.0.len());
        for z in &self.0 {
            out.push(z.re);
            out.push(z.im);
        }
        out
    }

    /// Euclidean norm of the underlying point of `R^{2n}`.
    pub fn norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Euclidean distance to another point of the same dimension.
    pub fn dist(&self, other: &Self) -> f64 {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Coordinatewise scaling by a real factor.
    pub fn scale(&self, t: f64) -> Self {
        Self(self.0.iter().map(|z| z * t).collect())
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

impl std::ops::Index<usize> for ComplexPoint {
    type Output = Complex64;
    fn index(&self, i: usize) -> &Complex64 {
        &self.0[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_coordinate_roundtrip() {
        let p = ComplexPoint::new(vec![Complex64::new(1.0, -2.0), Complex64::new(0.5, 3.0)]);
        let reals = p.to_reals();
        assert_eq!(reals, vec![1.0, -2.0, 0.5, 3.0]);
        assert_eq!(ComplexPoint::from_reals(&reals).unwrap(), p);
    }

    #[test]
    fn odd_real_list_rejected() {
        assert!(ComplexPoint::from_reals(&[1.0, 2.0, 3.0]).is_err());
    }

    #[test]
    fn norm_and_distance() {
        let p = ComplexPoint::new(vec![Complex64::new(3.0, 0.0), Complex64::new(0.0, 4.0)]);
        assert_eq!(p.norm(), 5.0);
        let q = ComplexPoint::origin(2);
        assert_eq!(p.dist(&q), 5.0);
        assert_eq!(p.scale(2.0).norm(), 10.0);
    }
}
