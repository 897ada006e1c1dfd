//! Symbolic geometry of the two-variable mixed surfaces `X = f^{-1}(0)`:
//! type classification, tangent cones, horn indices, inner classes, normal
//! embedding, outer/ambient obstructions, witness arcs, and an exact polar
//! parameterization of the surface.

use crate::classify::{Citation, EquivalenceVerdict, VerdictStatus, Witness};
use crate::error::{Error, Result};
use crate::exponents::ExponentData;
use crate::point::ComplexPoint;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use serde::Serialize;
use std::fmt;

/// The five structural classes of a singular mixed surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SurfaceClass {
    T1,
    T2,
    T3,
    T4,
    T5,
}

impl fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = match self {
            SurfaceClass::T1 => 1,
            SurfaceClass::T2 => 2,
            SurfaceClass::T3 => 3,
            SurfaceClass::T4 => 4,
            SurfaceClass::T5 => 5,
        };
        write!(f, "type ({n})")
    }
}

/// Classification outcome: a regular germ, one of the five classes, or a
/// class reached after exchanging the two coordinates (an ambient isometry).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SurfaceType {
    /// The surface is a regular manifold germ at the origin, which happens
    /// exactly when some coordinate has `(a_i, b_i) = (1, 0)`.
    Regular,
    Class(SurfaceClass),
    /// The classification hypotheses hold after swapping `z_1` and `z_2`.
    Swapped(SurfaceClass),
}

impl SurfaceType {
    /// The underlying class, if the surface is singular.
    pub fn class(&self) -> Option<SurfaceClass> {
        match self {
            SurfaceType::Regular => None,
            SurfaceType::Class(c) | SurfaceType::Swapped(c) => Some(*c),
        }
    }

    pub fn is_swapped(&self) -> bool {
        matches!(self, SurfaceType::Swapped(_))
    }
}

impl fmt::Display for SurfaceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceType::Regular => write!(f, "regular"),
            SurfaceType::Class(c) => write!(f, "{c}"),
            SurfaceType::Swapped(c) => write!(f, "{c} (coordinates swapped)"),
        }
    }
}

/// The geometric shape of a tangent cone at the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ConeKind {
    PlaneZ1Zero,
    PlaneZ2Zero,
    /// The surface is itself a cone (homogeneous case).
    WholeSurface,
    /// A union of rays inside the `z_2`-line `{z_1 = 0}`.
    RayUnion,
}

impl fmt::Display for ConeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConeKind::PlaneZ1Zero => write!(f, "plane {{z1 = 0}}"),
            ConeKind::PlaneZ2Zero => write!(f, "plane {{z2 = 0}}"),
            ConeKind::WholeSurface => write!(f, "the surface itself"),
            ConeKind::RayUnion => write!(f, "union of rays in {{z1 = 0}}"),
        }
    }
}

/// A tangent cone. For the ray-union kind both the constrained rays that
/// carry surface points (`a_2 θ ≡ π (mod 2π)`) and the full line set
/// `{Im z_2^{a_2} = 0}` are listed, because the two differ whenever some ray
/// of a line satisfies the phase condition and its opposite does not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeDescription {
    pub kind: ConeKind,
    /// Constrained ray angles as exact fractions of pi in `[0, 2)`:
    /// `θ_j = (1 + 2j) π / a_2`. Empty unless `kind = RayUnion`.
    pub rays: Vec<BigRational>,
    /// Line angles of `{Im z_2^{a_2} = 0}` as fractions of pi in `[0, 1)`:
    /// `k π / a_2`. Empty unless `kind = RayUnion`.
    pub stated_lines: Vec<BigRational>,
    /// 1 for a ray union, 2 otherwise.
    pub dimension: u8,
}

impl ConeDescription {
    fn plain(kind: ConeKind) -> Self {
        Self {
            kind,
            rays: Vec::new(),
            stated_lines: Vec::new(),
            dimension: 2,
        }
    }

    fn ray_union(a2: u32) -> Self {
        let rays = (0..a2)
            .map(|j| BigRational::new(BigInt::from(1 + 2 * j), BigInt::from(a2)))
            .collect();
        let stated_lines = (0..a2)
            .map(|k| BigRational::new(BigInt::from(k), BigInt::from(a2)))
            .collect();
        Self {
            kind: ConeKind::RayUnion,
            rays,
            stated_lines,
            dimension: 1,
        }
    }

    /// Constrained ray angles in radians.
    pub fn ray_angles(&self) -> Vec<f64> {
        self.rays
            .iter()
            .map(|r| r.to_f64().unwrap() * std::f64::consts::PI)
            .collect()
    }
}

/// How the component count of an inner class was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ComponentBasis {
    /// Counted from the phase condition `a_2 θ ≡ π (mod 2π)` (derived).
    PhaseCount,
    /// The connected-link assumption recorded by the source statements.
    LinkAssumption,
}

/// Inner bi-Lipschitz class: horn index per connected component, component
/// count, and how that count was established.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerClass {
    pub beta: BigRational,
    pub components: u32,
    pub basis: ComponentBasis,
}

/// Full symbolic profile of a singular mixed surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceProfile {
    pub surface_type: SurfaceType,
    pub cone: ConeDescription,
    /// Inner horn index (`> 1` only for the ray-union class).
    pub beta: BigRational,
    pub components: u32,
    pub component_basis: ComponentBasis,
    pub normally_embedded: bool,
}

fn require_surface(e: &ExponentData) -> Result<()> {
    if e.n() != 2 {
        return Err(Error::NotSurface(e.n()));
    }
    Ok(())
}

/// Classifies the surface. Coordinates arrive in canonical order (`a_1 <=
/// a_2`), and when `a_1 >= 1` with `m_1 > m_2` the roles are exchanged and
/// the result wrapped in `Swapped`; exchanging coordinates is an ambient
/// isometry, so every geometric conclusion transfers verbatim.
pub fn surface_type(e: &ExponentData) -> Result<SurfaceType> {
    require_surface(e)?;
    let (a1, b1) = e.pair(0);
    let (a2, b2) = e.pair(1);
    if (a1 == 1 && b1 == 0) || (a2 == 1 && b2 == 0) {
        return Ok(SurfaceType::Regular);
    }
    let (m1, m2) = (a1 + 2 * b1, a2 + 2 * b2);
    let ty = if a1 >= 1 {
        match m1.cmp(&m2) {
            std::cmp::Ordering::Less => SurfaceType::Class(SurfaceClass::T1),
            std::cmp::Ordering::Equal => SurfaceType::Class(SurfaceClass::T2),
            std::cmp::Ordering::Greater => SurfaceType::Swapped(SurfaceClass::T1),
        }
    } else {
        match (2 * b1).cmp(&m2) {
            std::cmp::Ordering::Less => SurfaceType::Class(SurfaceClass::T3),
            std::cmp::Ordering::Greater => SurfaceType::Class(SurfaceClass::T4),
            std::cmp::Ordering::Equal => SurfaceType::Class(SurfaceClass::T5),
        }
    };
    Ok(ty)
}

fn classified(e: &ExponentData) -> Result<SurfaceType> {
    let ty = surface_type(e)?;
    if ty == SurfaceType::Regular {
        return Err(Error::RegularSurface);
    }
    Ok(ty)
}

/// The tangent cone at the origin.
pub fn tangent_cone(e: &ExponentData) -> Result<ConeDescription> {
    let ty = classified(e)?;
    let a2 = e.a()[1];
    let cone = match ty {
        SurfaceType::Class(SurfaceClass::T1) => ConeDescription::plain(ConeKind::PlaneZ1Zero),
        SurfaceType::Swapped(SurfaceClass::T1) => ConeDescription::plain(ConeKind::PlaneZ2Zero),
        SurfaceType::Class(SurfaceClass::T2) | SurfaceType::Class(SurfaceClass::T5) => {
            ConeDescription::plain(ConeKind::WholeSurface)
        }
        SurfaceType::Class(SurfaceClass::T3) => ConeDescription::ray_union(a2),
        SurfaceType::Class(SurfaceClass::T4) => ConeDescription::plain(ConeKind::PlaneZ2Zero),
        _ => unreachable!("only T1 can be swapped"),
    };
    Ok(cone)
}

/// The horn index `β = (a_2 + 2 b_2) / (2 b_1)` of a surface with `a_1 = 0`,
/// defined for the ray-union (`β > 1`) and plane-sheet (`β < 1`) classes.
pub fn horn_index(e: &ExponentData) -> Result<BigRational> {
    let ty = classified(e)?;
    match ty.class() {
        Some(SurfaceClass::T3) | Some(SurfaceClass::T4) => {}
        _ => {
            return Err(Error::WrongSurfaceType {
                op: "horn_index",
                ty: ty.to_string(),
            })
        }
    }
    let (_, b1) = e.pair(0);
    let m2 = e.multiplicities()[1];
    Ok(BigRational::new(BigInt::from(m2), BigInt::from(2 * b1)))
}

/// The inner bi-Lipschitz class: horn index 1 per component except for the
/// ray-union class, whose components are `β`-horns. The component count is
/// the number of admissible phase rays (`a_2`) when `a_1 = 0` and `β != 1`,
/// and is otherwise reported as 1 under the connected-link assumption.
pub fn inner_class(e: &ExponentData) -> Result<InnerClass> {
    let ty = classified(e)?;
    let a2 = e.a()[1];
    let class = match ty.class() {
        Some(SurfaceClass::T3) => InnerClass {
            beta: horn_index(e)?,
            components: a2,
            basis: ComponentBasis::PhaseCount,
        },
        Some(SurfaceClass::T4) => InnerClass {
            beta: BigRational::one(),
            components: a2,
            basis: ComponentBasis::PhaseCount,
        },
        _ => InnerClass {
            beta: BigRational::one(),
            components: 1,
            basis: ComponentBasis::LinkAssumption,
        },
    };
    Ok(class)
}

/// Symbolic normal-embedding rule: `false` exactly for the classes with a
/// degenerate (lower-dimensional or plane) cone reached at distinct rates,
/// i.e. classes (1) and (3).
///
/// This mirrors the source classification verbatim. The numerical side of
/// this crate measures inner/outer divergence honestly and disagrees with
/// this rule on some inputs (single-sheet class-(1) germs, ray-union horns,
/// and multi-sheet class-(4) germs); see the normal-embedding estimator for
/// the measured behavior.
pub fn normally_embedded(e: &ExponentData) -> Result<bool> {
    let ty = classified(e)?;
    Ok(!matches!(
        ty.class(),
        Some(SurfaceClass::T1) | Some(SurfaceClass::T3)
    ))
}

/// Full profile of a singular surface.
pub fn surface_profile(e: &ExponentData) -> Result<SurfaceProfile> {
    let ty = classified(e)?;
    let inner = inner_class(e)?;
    Ok(SurfaceProfile {
        surface_type: ty,
        cone: tangent_cone(e)?,
        beta: inner.beta,
        components: inner.components,
        component_basis: inner.basis,
        normally_embedded: normally_embedded(e)?,
    })
}

/// One term of a semialgebraic arc `γ(t) = Σ c_k t^{q_k}` in real
/// coordinates `(x_1, y_1, x_2, y_2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ArcTerm {
    pub coeff: [f64; 4],
    pub exponent: BigRational,
}

/// A semialgebraic arc through the origin with strictly increasing rational
/// exponents and a non-zero leading coefficient.
#[derive(Debug, Clone, PartialEq)]
pub struct ArcSpec {
    terms: Vec<ArcTerm>,
}

impl ArcSpec {
    pub fn new(terms: Vec<ArcTerm>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidParameter("an arc needs at least one term".into()));
        }
        if terms[0].coeff.iter().all(|&c| c == 0.0) {
            return Err(Error::InvalidParameter(
                "the leading arc coefficient must be non-zero".into(),
            ));
        }
        for t in &terms {
            if !t.exponent.is_positive() {
                return Err(Error::InvalidParameter(
                    "arc exponents must be positive so that γ(0) = 0".into(),
                ));
            }
        }
        for pair in terms.windows(2) {
            if pair[0].exponent >= pair[1].exponent {
                return Err(Error::InvalidParameter(
                    "arc exponents must be strictly increasing".into(),
                ));
            }
        }
        Ok(Self { terms })
    }

    pub fn terms(&self) -> &[ArcTerm] {
        &self.terms
    }

    /// Evaluates the arc at parameter `t >= 0` as a point of `C^2`.
    pub fn eval(&self, t: f64) -> ComplexPoint {
        let mut reals = [0.0f64; 4];
        for term in &self.terms {
            let scale = t.powf(term.exponent.to_f64().unwrap());
            for (r, &c) in reals.iter_mut().zip(term.coeff.iter()) {
                *r += scale * c;
            }
        }
        ComplexPoint::new(vec![
            Complex64::new(reals[0], reals[1]),
            Complex64::new(reals[2], reals[3]),
        ])
    }

    pub fn leading_exponent(&self) -> &BigRational {
        &self.terms[0].exponent
    }
}

fn arc(terms: Vec<([f64; 4], BigRational)>) -> ArcSpec {
    let mut terms: Vec<ArcTerm> = terms
        .into_iter()
        .map(|(coeff, exponent)| ArcTerm { coeff, exponent })
        .collect();
    terms.sort_by(|x, y| x.exponent.cmp(&y.exponent));
    ArcSpec::new(terms).expect("internally built arcs are valid")
}

fn rational(p: u32, q: u32) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Admissible phase rays of the `z_2`-coordinate when `a_1 = 0`:
/// `θ_j = (1 + 2j) π / a_2`, the solutions of `a_2 θ ≡ π (mod 2π)`.
pub fn admissible_ray_angles(a2: u32) -> Vec<f64> {
    (0..a2)
        .map(|j| (1.0 + 2.0 * f64::from(j)) * std::f64::consts::PI / f64::from(a2))
        .collect()
}

/// A pair of arcs on the surface witnessing its metric structure.
///
/// - Class (1) with `a_1 >= 2`: two sheet branches over the `z_2`-ray
///   `θ = 0`, i.e. `γ_k(t) = (t^α e^{i(π + 2πk)/a_1}, t)` for `k = 0` and
///   `k = floor(a_1/2)`, with `α = m_2/m_1`. Their distance has order `α`.
///   For `a_1 = 1` the surface is a single sheet over the `z_2`-plane and no
///   pair of distinct-sheet arcs exists; this is reported as an error.
/// - Class (3): for `a_2 >= 2`, one arc on each of two distinct admissible
///   rays, `γ_j(t) = (t^β, t e^{iθ_j})`; for `a_2 = 1` (a single horn) the
///   two arcs sit on the unique ray with antipodal `z_1`-phases, the pair
///   attaining the horn's contact order `β`.
/// - Class (4): as class (3) with the roles reversed: `γ_j(t) =
///   (t, t^{1/β} e^{iθ_j})` on two distinct rays, or antipodal `z_1`-phases
///   when `a_2 = 1`.
///
/// Every returned arc lies on the surface exactly (up to floating-point
/// rounding in the trigonometric coefficients).
pub fn witness_arcs(e: &ExponentData) -> Result<(ArcSpec, ArcSpec)> {
    let ty = classified(e)?;
    let (a1, _) = e.pair(0);
    let a2 = e.a()[1];
    let ms = e.multiplicities();
    let (m1, m2) = (ms[0], ms[1]);
    match ty {
        SurfaceType::Class(SurfaceClass::T1) | SurfaceType::Swapped(SurfaceClass::T1) => {
            // For the swapped case exchange the coordinate roles.
            let swapped = ty.is_swapped();
            let (branches, alpha) = if swapped {
                (a2, rational(m1, m2))
            } else {
                (a1, rational(m2, m1))
            };
            if branches < 2 {
                return Err(Error::InvalidParameter(format!(
                    "witness_arcs: the sheet count of this class-(1) surface is \
                     {branches}; two arcs in distinct sheets require at least two sheets"
                )));
            }
            let make = |k: u32| {
                let phi = (std::f64::consts::PI + 2.0 * std::f64::consts::PI * f64::from(k))
                    / f64::from(branches);
                let (small, big) = (
                    ([phi.cos(), phi.sin(), 0.0, 0.0], alpha.clone()),
                    ([0.0, 0.0, 1.0, 0.0], BigRational::one()),
                );
                if swapped {
                    // Small coordinate is z_2, big coordinate is z_1.
                    arc(vec![
                        ([1.0, 0.0, 0.0, 0.0], BigRational::one()),
                        ([0.0, 0.0, phi.cos(), phi.sin()], alpha.clone()),
                    ])
                } else {
                    arc(vec![small, big])
                }
            };
            Ok((make(0), make(branches / 2)))
        }
        SurfaceType::Class(SurfaceClass::T3) | SurfaceType::Class(SurfaceClass::T4) => {
            let beta = horn_index(e)?;
            let t3 = ty.class() == Some(SurfaceClass::T3);
            // Exponents of (z_1, z_2) so that the z_2-norm is t for the horn
            // class and the z_1-norm is t for the sheet class.
            let (e1, e2) = if t3 {
                (beta.clone(), BigRational::one())
            } else {
                (BigRational::one(), beta.recip())
            };
            let rays = admissible_ray_angles(a2);
            if a2 >= 2 {
                let make = |theta: f64| {
                    arc(vec![
                        ([1.0, 0.0, 0.0, 0.0], e1.clone()),
                        ([0.0, 0.0, theta.cos(), theta.sin()], e2.clone()),
                    ])
                };
                Ok((make(rays[0]), make(rays[1])))
            } else {
                let theta = rays[0];
                let make = |sign: f64| {
                    arc(vec![
                        ([sign, 0.0, 0.0, 0.0], e1.clone()),
                        ([0.0, 0.0, theta.cos(), theta.sin()], e2.clone()),
                    ])
                };
                Ok((make(1.0), make(-1.0)))
            }
        }
        ty => Err(Error::WrongSurfaceType {
            op: "witness_arcs",
            ty: ty.to_string(),
        }),
    }
}

/// Closed-form point on the surface, in canonical coordinates.
///
/// For `a_1 >= 1` the surface is an `a_1`-fold branched cover of the
/// `z_2`-plane: given `z_2 = ρ e^{iθ}` and a branch `k ∈ [0, a_1)`,
///
/// ```text
/// z_1 = ρ^(m_2/m_1) exp(i (π + a_2 θ + 2πk) / a_1).
/// ```
///
/// For `a_1 = 0` the `z_2`-coordinate is confined to the `a_2` admissible
/// rays while the `z_1`-phase is free: `k ∈ [0, a_2)` selects the ray
/// `θ_k = (1 + 2k) π / a_2`, `θ` is the free `z_1`-phase, and
///
/// ```text
/// z_1 = ρ^(m_2 / (2 b_1)) e^{iθ},   z_2 = ρ e^{iθ_k}.
/// ```
///
/// In both cases `f(point) = 0` exactly, and every surface point with
/// `‖z_2‖ = ρ` (resp. a point on ray `k` at radius `ρ`) arises this way.
pub fn parameterize_surface(
    e: &ExponentData,
    rho: f64,
    theta: f64,
    k: u32,
) -> Result<ComplexPoint> {
    require_surface(e)?;
    if !(rho > 0.0 && rho.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "radius must be positive and finite, got {rho}"
        )));
    }
    let (a1, b1) = e.pair(0);
    let a2 = e.a()[1];
    let ms = e.multiplicities();
    let (m1, m2) = (f64::from(ms[0]), f64::from(ms[1]));
    if a1 >= 1 {
        if k >= a1 {
            return Err(Error::InvalidParameter(format!(
                "branch index {k} out of range; the cover has {a1} branches"
            )));
        }
        let phase = (std::f64::consts::PI
            + f64::from(a2) * theta
            + 2.0 * std::f64::consts::PI * f64::from(k))
            / f64::from(a1);
        let z1 = Complex64::from_polar(rho.powf(m2 / m1), phase);
        let z2 = Complex64::from_polar(rho, theta);
        Ok(ComplexPoint::new(vec![z1, z2]))
    } else {
        if k >= a2 {
            return Err(Error::InvalidParameter(format!(
                "ray index {k} out of range; there are {a2} admissible rays"
            )));
        }
        let ray = (1.0 + 2.0 * f64::from(k)) * std::f64::consts::PI / f64::from(a2);
        let z1 = Complex64::from_polar(rho.powf(m2 / (2.0 * f64::from(b1))), theta);
        let z2 = Complex64::from_polar(rho, ray);
        Ok(ComplexPoint::new(vec![z1, z2]))
    }
}

fn is_ray_class(ty: SurfaceType) -> bool {
    matches!(
        ty.class(),
        Some(SurfaceClass::T1) | Some(SurfaceClass::T3)
    )
}

/// Whether the exponents match one of the two mixed-versus-normal-form
/// obstruction patterns: `a_1 = a_2` with `m_1 < m_2`, or `a_1 < a_2` with
/// `m_1 = m_2` (a purely mixed surface in these patterns is not outer
/// bi-Lipschitz equivalent to the zero set of its topological normal form).
fn obstruction_pattern(e: &ExponentData) -> bool {
    let (a1, _) = e.pair(0);
    let (a2, _) = e.pair(1);
    let ms = e.multiplicities();
    (a1 == a2 && ms[0] < ms[1]) || (a1 < a2 && ms[0] == ms[1])
}

/// Obstructions to outer bi-Lipschitz equivalence of two singular surfaces.
///
/// Checked in order: identical germs are equivalent; a purely mixed surface
/// in an obstruction pattern is not equivalent to the zero set of its
/// topological normal form; membership in the non-normally-embedded classes
/// (1)/(3) must agree; tangent-cone dimension and ray counts must agree.
/// When no rule fires the result is undetermined.
pub fn outer_obstruction(
    e1: &ExponentData,
    e2: &ExponentData,
) -> Result<EquivalenceVerdict> {
    let ty1 = classified(e1)?;
    let ty2 = classified(e2)?;
    use VerdictStatus::*;

    if e1.permutation_equivalent(e2) {
        return Ok(EquivalenceVerdict::with_witness(
            Equivalent,
            Citation::Class1,
            Witness::Detail("identical germs up to coordinate relabeling".into()),
        ));
    }

    // Purely mixed surface against its own topological normal form.
    for (mixed, holo) in [(e1, e2), (e2, e1)] {
        if !mixed.is_holomorphic()
            && holo.is_holomorphic()
            && mixed.a() == holo.a()
            && obstruction_pattern(mixed)
        {
            return Ok(EquivalenceVerdict::with_witness(
                NotEquivalent,
                Citation::Su3,
                Witness::Detail(
                    "a purely mixed surface in this exponent pattern is not outer \
                     equivalent to the zero set of its topological normal form"
                        .into(),
                ),
            ));
        }
    }

    if is_ray_class(ty1) != is_ray_class(ty2) {
        return Ok(EquivalenceVerdict::with_witness(
            NotEquivalent,
            Citation::P2,
            Witness::Detail(format!(
                "classes (1)/(3) are preserved under outer equivalence: {ty1} vs {ty2}"
            )),
        ));
    }

    let c1 = tangent_cone(e1)?;
    let c2 = tangent_cone(e2)?;
    if c1.dimension != c2.dimension {
        return Ok(EquivalenceVerdict::with_witness(
            NotEquivalent,
            Citation::Tsam,
            Witness::Detail(format!(
                "tangent cones have different dimensions ({} vs {})",
                c1.dimension, c2.dimension
            )),
        ));
    }
    if c1.kind == ConeKind::RayUnion
        && c2.kind == ConeKind::RayUnion
        && c1.rays.len() != c2.rays.len()
    {
        return Ok(EquivalenceVerdict::with_witness(
            NotEquivalent,
            Citation::Tsam,
            Witness::Detail(format!(
                "tangent cones are ray unions with different ray counts ({} vs {})",
                c1.rays.len(),
                c2.rays.len()
            )),
        ));
    }

    Ok(EquivalenceVerdict::with_witness(
        Undetermined,
        Citation::Tsam,
        Witness::Detail(
            "no obstruction from surface classes or tangent cones; outer equivalence \
             is not decided"
                .into(),
        ),
    ))
}

/// Obstructions to ambient bi-Lipschitz equivalence for surfaces of classes
/// (1) and (2): the exponent vector `a` must agree, and every outer
/// obstruction applies (ambient equivalence implies outer equivalence).
pub fn ambient_obstruction(
    e1: &ExponentData,
    e2: &ExponentData,
) -> Result<EquivalenceVerdict> {
    for e in [e1, e2] {
        let ty = classified(e)?;
        if !matches!(ty.class(), Some(SurfaceClass::T1) | Some(SurfaceClass::T2)) {
            return Err(Error::WrongSurfaceType {
                op: "ambient_obstruction",
                ty: ty.to_string(),
            });
        }
    }
    use VerdictStatus::*;

    if e1.permutation_equivalent(e2) {
        return Ok(EquivalenceVerdict::with_witness(
            Equivalent,
            Citation::Class1,
            Witness::Detail("identical germs up to coordinate relabeling".into()),
        ));
    }
    if e1.a() != e2.a() {
        return Ok(EquivalenceVerdict::with_witness(
            NotEquivalent,
            Citation::Etsu,
            Witness::Detail(
                "ambient equivalence preserves the embedded topological type, which \
                 forces equal exponent vectors a"
                    .into(),
            ),
        ));
    }
    let outer = outer_obstruction(e1, e2)?;
    if outer.status == NotEquivalent {
        return Ok(outer);
    }
    Ok(EquivalenceVerdict::with_witness(
        Undetermined,
        Citation::Etsu,
        Witness::Detail(
            "necessary conditions (equal classes within (1)-(2), equal a, no outer \
             obstruction) hold; no sufficiency criterion is available"
                .into(),
        ),
    ))
}

/// Whether a purely mixed surface of class (1) or (2) in an obstruction
/// pattern is on record as never ambient bi-Lipschitz equivalent to any
/// complex analytic plane curve germ.
pub fn never_ambient_complex_curve(e: &ExponentData) -> Result<bool> {
    let _ = classified(e)?;
    Ok(e.all_positive() && !e.is_holomorphic() && obstruction_pattern(e))
}

/// Result of a horn membership/realization query.
#[derive(Debug, Clone, PartialEq)]
pub struct HornMembership {
    /// Whether the queried point lies on `H_β = {x^2 + y^2 = z^{2β}, z >= 0}`
    /// up to a relative tolerance of `1e-9`.
    pub on_horn: Option<bool>,
    /// A mixed surface whose zero set is the `β`-horn, available exactly when
    /// `β = p/q` in lowest terms has even denominator: then `p` is odd and
    /// `h = |z_1|^{2b} + z_2^{1+d} conj(z_2)^d` with `b = q/2`,
    /// `d = (p-1)/2` realizes `β = (2d+1)/(2b)`.
    pub realization: Option<ExponentData>,
}

/// Tests membership of a point of `R^3` on the `β`-horn and constructs the
/// mixed realization of the horn when one exists. Pass `None` as the point to
/// query only the realization.
pub fn beta_horn_membership(beta: &BigRational, p: Option<[f64; 3]>) -> Result<HornMembership> {
    if beta < &BigRational::one() {
        return Err(Error::InvalidParameter(format!(
            "horn index must be >= 1, got {beta}"
        )));
    }
    let on_horn = p.map(|[x, y, z]| {
        if z < 0.0 {
            return false;
        }
        let lhs = x * x + y * y;
        let rhs = z.powf(2.0 * beta.to_f64().unwrap());
        (lhs - rhs).abs() <= 1e-9 * lhs.max(rhs).max(1e-300)
    });
    let numer = beta.numer();
    let denom = beta.denom();
    let realization = if denom.is_even() {
        let b = (denom / BigInt::from(2)).to_u32().ok_or_else(|| {
            Error::InvalidParameter("horn denominator too large".into())
        })?;
        let d = ((numer - BigInt::one()) / BigInt::from(2))
            .to_u32()
            .ok_or_else(|| Error::InvalidParameter("horn numerator too large".into()))?;
        Some(ExponentData::new(vec![0, 1], vec![b, d])?)
    } else {
        None
    };
    Ok(HornMembership {
        on_horn,
        realization,
    })
}
