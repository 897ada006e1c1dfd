//! Numerical verification of symbolic predictions: conjugation residuals,
//! multiplicity recovery, and the inner/outer normal-embedding ratio test.

use crate::classify::{apply_phi, topological_normal_form};
use crate::error::{Error, Result};
use crate::exponents::ExponentData;
use crate::mixed::MixedPolynomial;
use crate::numeric::contact::component_arc;
use crate::numeric::fit::{fit_log_log, ExponentFit};
use crate::point::ComplexPoint;
use crate::surface::{
    parameterize_surface, surface_type, witness_arcs, ArcSpec, SurfaceClass, SurfaceType,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::f64::consts::{PI, TAU};

fn random_point(rng: &mut ChaCha8Rng, n: usize) -> ComplexPoint {
    let scale = 10f64.powf(rng.gen_range(-3.0..0.0));
    ComplexPoint::new(
        (0..n)
            .map(|_| {
                Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)) * scale
            })
            .collect(),
    )
}

/// Maximum relative residual of `g_normal(φ(z)) − f(z)` over seeded samples.
/// The conjugating map carries the family onto its topological normal form
/// exactly, so this measures only floating-point error.
pub fn verify_conjugation(e: &ExponentData, samples: usize, seed: u64) -> Result<f64> {
    if samples == 0 {
        return Err(Error::InvalidParameter("samples must be positive".into()));
    }
    let f = MixedPolynomial::family(e);
    let nf = topological_normal_form(e);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let z = random_point(&mut rng, e.n());
        let w = apply_phi(e, &z)?;
        let fz = f.eval_f64(&z);
        let gz = nf.eval_f64(&w);
        let residual = (gz - fz).norm() / (1.0 + fz.norm());
        worst = worst.max(residual);
    }
    Ok(worst)
}

/// Recovers the multiplicity as the minimum over random rays of the log-log
/// slope of `|f(t v)|`, snapped to the nearest integer. Rays with unstable
/// fits are discarded.
pub fn verify_multiplicity_numeric(e: &ExponentData, rays: usize, seed: u64) -> Result<u32> {
    if rays == 0 {
        return Err(Error::InvalidParameter("rays must be positive".into()));
    }
    let f = MixedPolynomial::family(e);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ts: Vec<f64> = (4..=16).map(|k| 2f64.powi(-k)).collect();
    let mut best: Option<u32> = None;
    for _ in 0..rays {
        let mut v = random_point(&mut rng, e.n());
        let n = v.norm();
        if n < 1e-6 {
            continue;
        }
        v = v.scale(1.0 / n);
        let ys: Vec<f64> = ts.iter().map(|&t| f.eval_f64(&v.scale(t)).norm()).collect();
        let Some(fit) = fit_log_log(&ts, &ys) else {
            continue;
        };
        if fit.r_squared < 0.999 {
            continue;
        }
        let m = fit.slope.round();
        if m < 0.0 || (fit.slope - m).abs() > 0.05 {
            continue;
        }
        let m = m as u32;
        best = Some(best.map_or(m, |b| b.min(m)));
    }
    best.ok_or_else(|| {
        Error::EstimationFailed("no ray produced a stable multiplicity slope".into())
    })
}

/// Outcome of the normal-embedding ratio test.
#[derive(Debug, Clone)]
pub struct EmbeddingCheck {
    /// Fit of the inner/outer distance ratio against `t`; the divergence
    /// exponent is `e = −slope` (ratio ~ `t^{−e}`).
    pub fit: ExponentFit,
    /// Measured divergence exponent `e`.
    pub exponent: f64,
    /// `true` when the measured ratio stays bounded (`e <= 0.05`).
    pub normally_embedded: bool,
    /// The exponent the symbolic rule predicts for this class: `α−1` for the
    /// sheet classes, `β−1` for the ray class, 0 otherwise. The measured
    /// exponent is reported independently and may disagree.
    pub reference_exponent: f64,
}

/// Arc pair used for the ratio test: the witness pair when one exists, and
/// otherwise (single-sheet or homogeneous classes) a same-component pair at
/// antipodal free phases, which honestly probes a surface with no second
/// sheet to diverge against.
fn embedding_arcs(e: &ExponentData) -> Result<(ArcSpec, ArcSpec)> {
    match witness_arcs(e) {
        Ok(pair) => Ok(pair),
        Err(Error::InvalidParameter(_)) | Err(Error::WrongSurfaceType { .. }) => {
            Ok((component_arc(e, 0.0, 0), component_arc(e, PI, 0)))
        }
        Err(other) => Err(other),
    }
}

/// Structured mesh on the surface's parameter chart `(ρ, θ, branch)`.
///
/// Vertices sit at exact `parameterize_surface` evaluations; edges join
/// parameter neighbors (with the θ-wraparound branch permutation of the
/// chart), so paths can never jump between sheets that only meet at the
/// origin — the failure mode of nearest-neighbor graphs once the sheet
/// separation drops below sampling resolution. An explicit origin vertex
/// joins the bottom rung so through-origin geodesics exist.
struct ChartMesh {
    rungs: Vec<f64>,
    angles: usize,
    offset: f64,
    branches: u32,
    positions: Vec<ComplexPoint>,
    adj: Vec<Vec<(usize, f64)>>,
    origin: usize,
}

/// Chart radius of an on-surface point: `ρ = |z_2|` in both chart families.
fn chart_rho(p: &ComplexPoint) -> f64 {
    p[1].norm()
}

/// Free chart angle of an on-surface point: the `z_2` phase when the first
/// exponent pair is non-degenerate, the free `z_1` phase otherwise.
fn chart_theta(e: &ExponentData, p: &ComplexPoint) -> f64 {
    if e.a()[0] >= 1 {
        p[1].arg()
    } else {
        p[0].arg()
    }
}

/// Branch/ray index of an on-surface point, derived from the constrained
/// phase (never by proximity, which could misbind tightly hugging sheets).
///
/// `theta` must be the same representative of the free angle that was used to
/// build the chart: when `a_1` does not divide `a_2`, replacing θ by θ + 2π
/// permutes the branch labels by `a_2 mod a_1`, so the index is only
/// meaningful relative to a fixed representative. (The `z_1` phase
/// representative does not matter: a 2π shift there moves `raw` by exactly
/// `a_1`.)
fn chart_branch(e: &ExponentData, p: &ComplexPoint, theta: f64) -> u32 {
    let a1 = e.a()[0];
    let a2 = e.a()[1];
    if a1 >= 1 {
        let phi = p[0].arg();
        let raw = (phi * f64::from(a1) - PI - f64::from(a2) * theta) / TAU;
        (raw.round() as i64).rem_euclid(i64::from(a1)) as u32
    } else {
        let psi = p[1].arg();
        let raw = (psi * f64::from(a2) - PI) / TAU;
        (raw.round() as i64).rem_euclid(i64::from(a2)) as u32
    }
}

fn build_mesh(e: &ExponentData, anchors: &[f64], offset: f64) -> Result<ChartMesh> {
    let a1 = e.a()[0];
    let a2 = e.a()[1];
    let branches = if a1 >= 1 { a1 } else { a2 };
    // θ resolution: a multiple of 2·a_2 at least 96, so antipodal phases and
    // every admissible ray angle land exactly on the grid.
    let base = (2 * a2.max(1)) as usize;
    let angles = base * 96usize.div_ceil(base);
    // θ → θ + 2π permutes the branches of the a_1 ≥ 1 chart by a_2.
    let shift = if a1 >= 1 { (a2 % a1) as usize } else { 0 };

    let lo = anchors.iter().cloned().fold(f64::INFINITY, f64::min) / 64.0;
    let hi = anchors.iter().cloned().fold(0.0f64, f64::max);
    if !(lo > 0.0 && hi.is_finite()) {
        return Err(Error::EstimationFailed("degenerate chart radii".into()));
    }
    let mut rungs: Vec<f64> = anchors.to_vec();
    let ratio = 2f64.powf(1.0 / 3.0);
    let mut v = lo;
    while v < hi {
        rungs.push(v);
        v *= ratio;
    }
    rungs.sort_by(f64::total_cmp);
    rungs.dedup_by(|a, b| (*a - *b).abs() <= 1e-9 * *b);
    if rungs.len() * angles * branches as usize > 2_000_000 {
        return Err(Error::EstimationFailed("chart mesh too large".into()));
    }

    let nr = rungs.len();
    let idx = |k: usize, i: usize, j: usize| (k * nr + i) * angles + j;
    let mut positions = Vec::with_capacity(branches as usize * nr * angles + 1);
    for k in 0..branches {
        for &rho in &rungs {
            for j in 0..angles {
                let theta = offset + TAU * j as f64 / angles as f64;
                positions.push(parameterize_surface(e, rho, theta, k)?);
            }
        }
    }
    let origin = positions.len();
    positions.push(ComplexPoint::origin(e.n()));

    let mut adj: Vec<Vec<(usize, f64)>> = vec![Vec::new(); positions.len()];
    let connect = |adj: &mut Vec<Vec<(usize, f64)>>, u: usize, w: usize| {
        let d = positions[u].dist(&positions[w]);
        adj[u].push((w, d));
        adj[w].push((u, d));
    };
    for k in 0..branches as usize {
        let kw = (k + shift) % branches as usize;
        for i in 0..nr {
            for j in 0..angles {
                let u = idx(k, i, j);
                // Radial neighbor.
                if i + 1 < nr {
                    connect(&mut adj, u, idx(k, i + 1, j));
                }
                // Angular neighbor (branch permutation when θ wraps).
                let (jn, kn) = if j + 1 < angles { (j + 1, k) } else { (0, kw) };
                connect(&mut adj, u, idx(kn, i, jn));
                // Diagonals, to keep mixed-direction paths short.
                if i + 1 < nr {
                    connect(&mut adj, u, idx(kn, i + 1, jn));
                    connect(&mut adj, idx(k, i + 1, j), idx(kn, i, jn));
                }
            }
        }
        for j in 0..angles {
            let u = idx(k, 0, j);
            let d = positions[u].norm();
            adj[u].push((origin, d));
            adj[origin].push((u, d));
        }
    }

    Ok(ChartMesh {
        rungs,
        angles,
        offset,
        branches,
        positions,
        adj,
        origin,
    })
}

impl ChartMesh {
    /// Locates an on-surface point as a mesh vertex by its chart parameters.
    /// Errors when the point is off-grid: the embedding arcs are constructed
    /// so that never happens, and a miss signals an internal inconsistency.
    fn locate(&self, e: &ExponentData, p: &ComplexPoint) -> Result<usize> {
        let rho = chart_rho(p);
        let miss = || Error::EstimationFailed("arc endpoint missed the chart mesh".into());
        let i = self
            .rungs
            .iter()
            .position(|&r| (r - rho).abs() <= 1e-9 * rho.max(r))
            .ok_or_else(miss)?;
        let jf = (chart_theta(e, p) - self.offset) / TAU * self.angles as f64;
        if (jf - jf.round()).abs() > 1e-6 {
            return Err(miss());
        }
        let j = (jf.round() as i64).rem_euclid(self.angles as i64) as usize;
        // Use the chart's own angle representative for the branch label; the
        // point's atan2 angle may differ from it by 2π, which relabels
        // branches whenever a_1 does not divide a_2.
        let theta_mesh = self.offset + TAU * j as f64 / self.angles as f64;
        let k = chart_branch(e, p, theta_mesh);
        if k >= self.branches {
            return Err(miss());
        }
        let v = (k as usize * self.rungs.len() + i) * self.angles + j;
        if self.positions[v].dist(p) > 1e-6 * (1.0 + p.norm()) {
            return Err(miss());
        }
        Ok(v)
    }

    /// Shortest-path distance between two vertices (Dijkstra, early exit).
    fn distance(&self, src: usize, dst: usize) -> f64 {
        #[derive(PartialEq, PartialOrd)]
        struct Cost(f64);
        impl Eq for Cost {}
        impl Ord for Cost {
            fn cmp(&self, other: &Self) -> std::cmp::Ordering {
                self.0.total_cmp(&other.0)
            }
        }
        let mut dist = vec![f64::INFINITY; self.positions.len()];
        dist[src] = 0.0;
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((Cost(0.0), src)));
        while let Some(Reverse((Cost(d), v))) = heap.pop() {
            if v == dst {
                return d;
            }
            if d > dist[v] {
                continue;
            }
            for &(w, len) in &self.adj[v] {
                let nd = d + len;
                if nd < dist[w] {
                    dist[w] = nd;
                    heap.push(Reverse((Cost(nd), w)));
                }
            }
        }
        f64::INFINITY
    }
}

/// Measures the growth of the inner/outer distance ratio between two arcs on
/// the surface along `t_grid`. Inner distances are shortest paths on a
/// structured parameter-chart mesh whose vertices include the arc endpoints
/// exactly; outer distances are Euclidean. The fitted exponent `e` of
/// ratio ~ `t^{−e}` decides the verdict: bounded ratio (`e ≤ 0.05`) means
/// normally embedded.
pub fn check_normal_embedding(
    e: &ExponentData,
    t_grid: &[f64],
    seed: u64,
) -> Result<EmbeddingCheck> {
    let ty = surface_type(e)?;
    if ty == SurfaceType::Regular {
        return Err(Error::RegularSurface);
    }
    if t_grid.len() < 4
        || t_grid.windows(2).any(|w| w[1] >= w[0])
        || t_grid.iter().any(|&t| !(t > 0.0 && t < 1.0))
    {
        return Err(Error::InvalidParameter(
            "t_grid must be at least 4 values strictly decreasing within (0, 1)".into(),
        ));
    }

    let (g1, g2) = embedding_arcs(e)?;
    let ends: Vec<(ComplexPoint, ComplexPoint)> =
        t_grid.iter().map(|&t| (g1.eval(t), g2.eval(t))).collect();
    let anchors: Vec<f64> = ends
        .iter()
        .flat_map(|(p, q)| [chart_rho(p), chart_rho(q)])
        .collect();
    let offset = chart_theta(e, &ends[0].0);
    let mesh = build_mesh(e, &anchors, offset)?;

    // Seeded spot-check that mesh vertices actually lie on the surface.
    let f = MixedPolynomial::family(e);
    let m1 = e.multiplicities()[0];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..50 {
        let p = &mesh.positions[rng.gen_range(0..mesh.origin)];
        let res = f.eval_f64(p).norm();
        if res > 1e-6 * p.norm().powi(m1 as i32).max(1.0) {
            return Err(Error::EstimationFailed(format!(
                "mesh vertex off the surface (residual {res:.3e})"
            )));
        }
    }

    let mut ts = Vec::with_capacity(t_grid.len());
    let mut ratios = Vec::with_capacity(t_grid.len());
    for (&t, (p, q)) in t_grid.iter().zip(&ends) {
        let outer = p.dist(q);
        if outer == 0.0 {
            return Err(Error::EstimationFailed(format!(
                "arc endpoints coincide at scale {t}"
            )));
        }
        let inner = mesh.distance(mesh.locate(e, p)?, mesh.locate(e, q)?);
        if !inner.is_finite() {
            return Err(Error::EstimationFailed(format!(
                "arc endpoints disconnected at scale {t}"
            )));
        }
        ts.push(t);
        ratios.push((inner / outer).max(1.0));
    }

    let fit = fit_log_log(&ts, &ratios)
        .ok_or_else(|| Error::EstimationFailed("ratio fit failed".into()))?;
    let exponent = -fit.slope;
    let ms = e.multiplicities();
    let (m1, m2) = (f64::from(ms[0]), f64::from(ms[1]));
    let reference_exponent = match ty.class() {
        Some(SurfaceClass::T1) => m1.max(m2) / m1.min(m2) - 1.0,
        Some(SurfaceClass::T3) => {
            let b1 = f64::from(e.b()[0]);
            m2 / (2.0 * b1) - 1.0
        }
        _ => 0.0,
    };
    Ok(EmbeddingCheck {
        normally_embedded: exponent <= 0.05,
        exponent,
        reference_exponent,
        fit,
    })
}
