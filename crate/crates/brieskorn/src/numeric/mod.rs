//! Numerical laboratory: point-cloud sampling of the surfaces, tangent-cone
//! and horn-exponent estimators, graph geodesics, and verification drivers
//! that measure the quantities the symbolic layer predicts.

pub mod cloud;
pub mod cone;
pub mod contact;
pub mod fit;
pub mod graph;
pub mod verify;

pub use cloud::{sample_surface, PointCloud};
pub use cone::{default_scales, distance_to_surface, estimate_tangent_cone, ConeEstimate};
pub use contact::{contact_order, default_t_grid, estimate_beta};
pub use fit::{fit_log_log, snap_rational, ExponentFit, SNAP_DENOMINATOR_BOUND, SNAP_WINDOW};
pub use graph::{build_graph, inner_distance, GeodesicGraph};
pub use verify::{
    check_normal_embedding, verify_conjugation, verify_multiplicity_numeric, EmbeddingCheck,
};
