//! k-nearest-neighbor geodesic graphs: a discrete surrogate for the inner
//! (length) metric of a sampled surface.

use crate::error::{Error, Result};
use crate::numeric::cloud::PointCloud;
use crate::point::ComplexPoint;
use std::cmp::Reverse;
use std::collections::BinaryHeap;

/// Wrapper giving `f64` a total order for the Dijkstra heap.
#[derive(PartialEq, PartialOrd)]
struct Cost(f64);
impl Eq for Cost {}
impl Ord for Cost {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.total_cmp(&other.0)
    }
}

/// Undirected k-nearest-neighbor graph over a point cloud, optionally with
/// extra vertices (e.g. arc endpoints) and an explicit origin vertex.
#[derive(Debug, Clone)]
pub struct GeodesicGraph {
    positions: Vec<ComplexPoint>,
    adj: Vec<Vec<(usize, f64)>>,
    k: usize,
    cloud_len: usize,
    origin: Option<usize>,
    component: Vec<usize>,
}

/// Builds the geodesic graph of a cloud.
///
/// Every non-origin vertex is joined to its `k` nearest neighbors
/// (symmetrized). When `include_origin` is set, the origin is added as an
/// explicit vertex joined to every vertex of radius at most twice the
/// smallest radius, so that through-origin geodesics exist even when the
/// surface's connected components meet only at the singular point.
pub fn build_graph(
    cloud: &PointCloud,
    k: usize,
    extras: &[ComplexPoint],
    include_origin: bool,
) -> Result<GeodesicGraph> {
    let mut positions: Vec<ComplexPoint> = cloud.points().to_vec();
    positions.extend(extras.iter().cloned());
    let n = positions.len();
    if n < 2 {
        return Err(Error::InvalidParameter(
            "a geodesic graph needs at least two vertices".into(),
        ));
    }
    if k == 0 || k >= n {
        return Err(Error::InvalidParameter(format!(
            "neighbor count {k} out of range for {n} vertices"
        )));
    }
    let mut adj: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
    let mut scratch: Vec<(f64, usize)> = Vec::with_capacity(n - 1);
    for i in 0..n {
        scratch.clear();
        for j in 0..n {
            if j != i {
                scratch.push((positions[i].dist(&positions[j]), j));
            }
        }
        scratch.select_nth_unstable_by(k - 1, |x, y| x.0.total_cmp(&y.0));
        for &(d, j) in &scratch[..k] {
            adj[i].push((j, d));
            adj[j].push((i, d));
        }
    }
    for list in &mut adj {
        list.sort_by(|x, y| x.0.cmp(&y.0).then(x.1.total_cmp(&y.1)));
        list.dedup_by(|x, y| x.0 == y.0);
    }

    let origin = if include_origin {
        let dim = positions[0].dim();
        let origin_pos = ComplexPoint::origin(dim);
        let r_min = positions
            .iter()
            .map(|p| p.norm())
            .fold(f64::INFINITY, f64::min);
        positions.push(origin_pos);
        adj.push(Vec::new());
        let o = n;
        for i in 0..n {
            let r = positions[i].norm();
            if r <= 2.0 * r_min {
                adj[o].push((i, r));
                adj[i].push((o, r));
            }
        }
        Some(o)
    } else {
        None
    };

    let total = positions.len();
    let mut component = vec![usize::MAX; total];
    let mut label = 0usize;
    for start in 0..total {
        if component[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        component[start] = label;
        while let Some(v) = stack.pop() {
            for &(w, _) in &adj[v] {
                if component[w] == usize::MAX {
                    component[w] = label;
                    stack.push(w);
                }
            }
        }
        label += 1;
    }

    Ok(GeodesicGraph {
        positions,
        adj,
        k,
        cloud_len: cloud.len(),
        origin,
        component,
    })
}

impl GeodesicGraph {
    pub fn vertex_count(&self) -> usize {
        self.positions.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn position(&self, i: usize) -> &ComplexPoint {
        &self.positions[i]
    }

    /// Vertex index of the `j`-th extra point passed to [`build_graph`].
    pub fn extra_index(&self, j: usize) -> usize {
        self.cloud_len + j
    }

    pub fn origin_index(&self) -> Option<usize> {
        self.origin
    }

    /// Connected-component label of a vertex.
    pub fn component(&self, i: usize) -> usize {
        self.component[i]
    }

    pub fn component_count(&self) -> usize {
        self.component.iter().copied().max().map_or(0, |m| m + 1)
    }

    /// Single-source shortest-path distances (Dijkstra).
    pub fn distances_from(&self, src: usize) -> Vec<f64> {
        let n = self.positions.len();
        let mut dist = vec![f64::INFINITY; n];
        dist[src] = 0.0;
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((Cost(0.0), src)));
        while let Some(Reverse((Cost(d), v))) = heap.pop() {
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
        dist
    }
}

/// Graph shortest-path length between two vertices: the discrete inner
/// distance. Disconnected pairs (distinct component labels) report infinity.
/// Always at least the Euclidean distance, up to float rounding.
pub fn inner_distance(g: &GeodesicGraph, i: usize, j: usize) -> f64 {
    if g.component(i) != g.component(j) {
        return f64::INFINITY;
    }
    let d = g.distances_from(i)[j];
    debug_assert!(
        !d.is_finite() || d >= g.position(i).dist(g.position(j)) * (1.0 - 1e-12),
        "inner distance below Euclidean"
    );
    d
}
