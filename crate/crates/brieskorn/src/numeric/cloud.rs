//! Deterministic point clouds on a mixed surface, with CSV persistence.

use crate::error::{Error, Result};
use crate::exponents::ExponentData;
use crate::mixed::MixedPolynomial;
use crate::point::ComplexPoint;
use crate::surface::parameterize_surface;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::io::{BufRead, Write};

/// A seeded sample of surface points with cached Euclidean norms.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCloud {
    points: Vec<ComplexPoint>,
    radii: Vec<f64>,
    seed: u64,
    source: String,
}

impl PointCloud {
    /// Builds a cloud from raw points, caching norms. Used for synthetic
    /// validation shapes; surface clouds come from [`sample_surface`].
    pub fn from_points(points: Vec<ComplexPoint>, seed: u64, source: impl Into<String>) -> Self {
        let radii = points.iter().map(|p| p.norm()).collect();
        Self {
            points,
            radii,
            seed,
            source: source.into(),
        }
    }

    pub fn points(&self) -> &[ComplexPoint] {
        &self.points
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Writes the cloud as CSV with columns `x1,y1,x2,y2,radius` at 17
    /// significant digits.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "x1,y1,x2,y2,radius")?;
        for (p, r) in self.points.iter().zip(self.radii.iter()) {
            writeln!(
                w,
                "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
                p[0].re, p[0].im, p[1].re, p[1].im, r
            )?;
        }
        Ok(())
    }

    /// Reads a cloud written by [`PointCloud::write_csv`].
    pub fn read_csv<R: BufRead>(r: R) -> Result<Self> {
        let mut points = Vec::new();
        let mut radii = Vec::new();
        for (idx, line) in r.lines().enumerate() {
            let line = line?;
            let line = line.trim();
            if line.is_empty() || (idx == 0 && line.starts_with("x1")) {
                continue;
            }
            let fields: Vec<f64> = line
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<f64>()
                        .map_err(|e| Error::Malformed(format!("line {}: {e}", idx + 1)))
                })
                .collect::<Result<_>>()?;
            if fields.len() != 5 {
                return Err(Error::Malformed(format!(
                    "line {}: expected 5 columns, got {}",
                    idx + 1,
                    fields.len()
                )));
            }
            points.push(ComplexPoint::from_reals(&fields[..4])?);
            radii.push(fields[4]);
        }
        Ok(Self {
            points,
            radii,
            seed: 0,
            source: "csv".into(),
        })
    }
}

/// Solves `ρ^(2 e1) + ρ^2 = s^2` for `ρ` by bisection: the produced surface
/// point then has Euclidean norm exactly `s`.
fn radius_parameter(e1: f64, s: f64) -> f64 {
    let g = |rho: f64| (rho.powf(2.0 * e1) + rho * rho).sqrt();
    let (mut lo, mut hi) = (0.0f64, s.max(1.0));
    while g(hi) < s {
        hi *= 2.0;
    }
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if g(mid) < s {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Samples `count` surface points with Euclidean norms log-uniform in
/// `r_range` and phases/branches uniform over the admissible sets.
/// Deterministic given the seed.
pub fn sample_surface(
    e: &ExponentData,
    count: usize,
    r_range: (f64, f64),
    seed: u64,
) -> Result<PointCloud> {
    if e.n() != 2 {
        return Err(Error::NotSurface(e.n()));
    }
    let (r_min, r_max) = r_range;
    if !(r_min > 0.0 && r_min < r_max && r_max.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "degenerate radius range ({r_min}, {r_max})"
        )));
    }
    if count == 0 {
        return Err(Error::InvalidParameter("count must be positive".into()));
    }
    let (a1, b1) = e.pair(0);
    let a2 = e.a()[1];
    let ms = e.multiplicities();
    let e1 = if a1 >= 1 {
        f64::from(ms[1]) / f64::from(ms[0])
    } else {
        f64::from(ms[1]) / (2.0 * f64::from(b1))
    };
    let branches = if a1 >= 1 { a1 } else { a2 };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::with_capacity(count);
    let mut radii = Vec::with_capacity(count);
    let (ln_min, ln_max) = (r_min.ln(), r_max.ln());
    for _ in 0..count {
        let s = rng.gen_range(ln_min..=ln_max).exp();
        let rho = radius_parameter(e1, s);
        let theta = rng.gen_range(0.0..std::f64::consts::TAU);
        let k = rng.gen_range(0..branches);
        let p = parameterize_surface(e, rho, theta, k)?;
        radii.push(p.norm());
        points.push(p);
    }
    let cloud = PointCloud {
        points,
        radii,
        seed,
        source: format!("surface {e}"),
    };
    debug_assert!(cloud_residual_ok(e, &cloud));
    Ok(cloud)
}

fn cloud_residual_ok(e: &ExponentData, cloud: &PointCloud) -> bool {
    let f = MixedPolynomial::family(e);
    let m1 = e.multiplicity();
    cloud.points.iter().all(|p| {
        f.eval_f64(p).norm() <= 1e-8 * p.norm().powi(m1 as i32).max(1.0)
    })
}
