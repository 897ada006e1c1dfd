//! Symbolic classification and numerical verification for the mixed
//! polynomial family
//!
//! ```text
//! f(z) = z_1^(a_1 + b_1) conj(z_1)^(b_1) + ... + z_n^(a_n + b_n) conj(z_n)^(b_n)
//! ```
//!
//! with integer exponents `a_i >= 0`, `b_i >= 0`, not all `a_i` zero.
//!
//! The symbolic side classifies a family from its exponents alone: canonical
//! form and multiplicities ([`ExponentData`]), topological and bi-Lipschitz
//! equivalence verdicts with citation-tagged reasons ([`classify`]), the
//! five-class geometry of the surface germ in two variables — tangent cones,
//! horn index β, normal-embedding rule, witness arcs ([`surface`]) — and
//! weighted-homogeneous determinacy with exact rational filtrations
//! ([`determinacy`]).
//!
//! The numeric side independently measures what the symbolic side predicts:
//! conjugation residuals onto the normal form, multiplicity as a log-log
//! slope, tangent cones by rescaled distances, contact orders and β by arc
//! fits with exact rational snapping, and the inner/outer normal-embedding
//! ratio on a structured surface mesh ([`numeric`]). Where measurement and
//! rule disagree, both values are reported side by side rather than
//! reconciled.
//!
//! Every sampling routine takes an explicit seed, so all results are
//! reproducible; [`report::resolve_seed`] lets the `BRIESKORN_SEED`
//! environment variable override it. The `examples/` directory demonstrates
//! each capability end to end, and a thin `brieskorn` binary exposes the
//! same operations as JSON-reporting subcommands.

pub mod classify;
pub mod determinacy;
pub mod error;
pub mod exact;
pub mod exponents;
pub mod mixed;
pub mod numeric;
pub mod point;
pub mod report;
pub mod surface;

pub use classify::{
    apply_phi, apply_phi_inverse, bilip_vs_holomorphic, bilipschitz_equivalent,
    enumerate_lipschitz_classes, is_topological_submersion, topological_normal_form,
    topologically_equivalent, Citation, ClassEnumeration, EquivalenceVerdict, LipschitzClass,
    TopNormalForm, VerdictStatus, Witness,
};
pub use determinacy::{
    check_deffam_hypotheses, check_deformation_triviality, filtration, weighted_type, Component,
    DeffamReport, DeformationTerm, DeterminacyConfig, TrivialityStatus, TrivialityVerdict,
    WeightedHomType,
};
pub use error::{Error, Result};
pub use exact::GaussianRational;
pub use exponents::ExponentData;
pub use mixed::{
    build_family, family_block_determinant, has_isolated_singularity, jacobian_term,
    jacobian_term_determinant, MixedMonomial, MixedPolynomial, RealExpansion, RealTerm,
};
pub use numeric::{
    build_graph, check_normal_embedding, contact_order, default_scales, default_t_grid,
    distance_to_surface, estimate_beta, estimate_tangent_cone, fit_log_log, inner_distance,
    sample_surface, snap_rational, verify_conjugation, verify_multiplicity_numeric, ConeEstimate,
    EmbeddingCheck, ExponentFit, GeodesicGraph, PointCloud,
};
pub use point::ComplexPoint;
pub use report::{
    cmd_classify, cmd_compare, cmd_enumerate, cmd_sample, cmd_verify, cycle_notation,
    resolve_seed, CompareMode, Report, VerdictRow, VerifyCheck,
};
pub use surface::{
    ambient_obstruction, beta_horn_membership, horn_index, inner_class, never_ambient_complex_curve,
    normally_embedded, outer_obstruction, parameterize_surface, surface_profile, surface_type,
    tangent_cone, witness_arcs, ArcSpec, ArcTerm, ComponentBasis, ConeDescription, ConeKind,
    HornMembership, InnerClass, SurfaceClass, SurfaceProfile, SurfaceType,
};
