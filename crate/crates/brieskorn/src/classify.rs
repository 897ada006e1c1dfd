//! Decision procedures for topological and bi-Lipschitz equivalence within
//! the family, normal forms, the conjugating homeomorphism, and enumeration
//! of Lipschitz classes over a bounded grid of conjugate exponents.

use crate::error::{Error, Result};
use crate::exponents::ExponentData;
use crate::point::ComplexPoint;
use num_complex::Complex64;
use serde::Serialize;
use std::fmt;

/// Stable tags naming the criterion behind a verdict. These appear verbatim
/// in reports so that every decision can be traced to its source.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Citation {
    /// Rank and multiplicity invariance under bi-Lipschitz equivalence.
    Inva,
    /// Rescaling characterization of tangent vectors.
    Chale,
    /// Inclusion of the geometric tangent cone in the algebraic cone.
    Rem0,
    /// Invariance of the tangent cone under outer bi-Lipschitz maps.
    Tsam,
    /// Inner classification of surface germs by horn index.
    Inde1,
    /// Contact-order formula for the horn index.
    Inde,
    /// Determinacy of weighted homogeneous deformations.
    Def,
    /// Topological normal forms and the conjugating homeomorphism.
    Topfor,
    /// Topological classification of holomorphic Pham-Brieskorn germs.
    Etsu,
    /// Multiplicity-one preservation under homeomorphism.
    L0,
    /// Characterization of topological submersions in the family.
    Submfam,
    /// Topological classification of the mixed family.
    Cortop,
    /// Converse splitting: multiplicities of separable summands.
    Splitt2,
    /// Bi-Lipschitz classification of the mixed family.
    Class1,
    /// Topologically trivial families with infinitely many Lipschitz classes.
    Corfam,
    /// Weighted type and Jacobian determinant of the family.
    L1,
    /// Deformation normal forms under filtration hypotheses.
    Deffam,
    /// Tangent cones of the mixed surfaces, types (1)-(5).
    Tgcsup,
    /// Inner metric cone structure of the non-horn types.
    P1,
    /// Normal-embedding classification of the surface types.
    L17,
    /// Types (1) and (3) preserved under outer equivalence.
    P2,
    /// Obstruction between a purely mixed surface and its normal form.
    Su3,
    /// Ambient equivalence to complex curves forces normal-form equivalence.
    Su5,
}

impl Citation {
    pub fn tag(self) -> &'static str {
        match self {
            Citation::Inva => "inva",
            Citation::Chale => "chale",
            Citation::Rem0 => "rem0",
            Citation::Tsam => "tsam",
            Citation::Inde1 => "inde1",
            Citation::Inde => "inde",
            Citation::Def => "def",
            Citation::Topfor => "topfor",
            Citation::Etsu => "etsu",
            Citation::L0 => "l0",
            Citation::Submfam => "submfam",
            Citation::Cortop => "cortop",
            Citation::Splitt2 => "splitt2",
            Citation::Class1 => "class1",
            Citation::Corfam => "corfam",
            Citation::L1 => "l1",
            Citation::Deffam => "deffam",
            Citation::Tgcsup => "tgcsup",
            Citation::P1 => "p1",
            Citation::L17 => "l17",
            Citation::P2 => "p2",
            Citation::Su3 => "su3",
            Citation::Su5 => "su5",
        }
    }
}

impl fmt::Display for Citation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Tri-state outcome of an equivalence query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VerdictStatus {
    /// A sufficiency rule fired.
    Equivalent,
    /// A necessary condition failed.
    NotEquivalent,
    /// Necessary conditions hold but no sufficiency rule applies.
    Undetermined,
}

/// Evidence attached to a verdict: either the permutation realizing an
/// identity of germs, or a description of the condition that fired.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Witness {
    Permutation(Vec<usize>),
    Detail(String),
}

/// A verdict together with the criterion that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceVerdict {
    pub status: VerdictStatus,
    pub reason: Citation,
    pub witness: Option<Witness>,
}

impl EquivalenceVerdict {
    pub fn new(status: VerdictStatus, reason: Citation) -> Self {
        Self {
            status,
            reason,
            witness: None,
        }
    }

    pub fn with_witness(status: VerdictStatus, reason: Citation, witness: Witness) -> Self {
        Self {
            status,
            reason,
            witness: Some(witness),
        }
    }
}

/// The topological normal form: `sum_{i<=k} |z_i|^(2 b_i) + sum_{i>k} z_i^{a_i}`
/// in canonical coordinate order (the zero block leads).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TopNormalForm {
    /// Number of coordinates with `a_i = 0`.
    pub zero_count: usize,
    /// The conjugate exponents on the zero block (real radial terms).
    pub zero_block_b: Vec<u32>,
    /// The exponents of the holomorphic part.
    pub positive_a: Vec<u32>,
}

impl TopNormalForm {
    pub fn n(&self) -> usize {
        self.zero_count + self.positive_a.len()
    }

    /// Evaluates the normal form at a point in canonical coordinate order.
    pub fn eval_f64(&self, w: &ComplexPoint) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, &bi) in self.zero_block_b.iter().enumerate() {
            acc += Complex64::new(w[i].norm_sqr().powi(bi as i32), 0.0);
        }
        for (j, &ai) in self.positive_a.iter().enumerate() {
            acc += w[self.zero_count + j].powu(ai);
        }
        acc
    }
}

impl fmt::Display for TopNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &bi) in self.zero_block_b.iter().enumerate() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "|z{}|^{}", i + 1, 2 * bi)?;
        }
        for (j, &ai) in self.positive_a.iter().enumerate() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let idx = self.zero_count + j + 1;
            if ai == 1 {
                write!(f, "z{idx}")?;
            } else {
                write!(f, "z{idx}^{ai}")?;
            }
        }
        Ok(())
    }
}

/// The topological normal form of the family member: conjugate exponents are
/// dropped on every coordinate with `a_i >= 1` and kept as radial powers on
/// the zero block.
pub fn topological_normal_form(e: &ExponentData) -> TopNormalForm {
    let k = e.zero_block().len();
    TopNormalForm {
        zero_count: k,
        zero_block_b: e.b()[..k].to_vec(),
        positive_a: e.a()[k..].to_vec(),
    }
}

/// The conjugating homeomorphism: `w_i = z_i |z_i|^(2 b_i / a_i)` when
/// `a_i >= 1` and the identity on the zero block. It carries the zero set of
/// the family member onto the zero set of its normal form, and satisfies
/// `normal_form(phi(z)) = f(z)` everywhere.
pub fn apply_phi(e: &ExponentData, z: &ComplexPoint) -> Result<ComplexPoint> {
    if z.dim() != e.n() {
        return Err(Error::DimensionMismatch {
            expected: e.n(),
            got: z.dim(),
        });
    }
    let coords = (0..e.n())
        .map(|i| {
            let (ai, bi) = e.pair(i);
            if ai == 0 || z[i] == Complex64::new(0.0, 0.0) {
                z[i]
            } else {
                z[i] * z[i].norm().powf(2.0 * f64::from(bi) / f64::from(ai))
            }
        })
        .collect();
    Ok(ComplexPoint::new(coords))
}

/// Inverse of [`apply_phi`]: `z_i = w_i / |w_i|^(2 b_i / (a_i + 2 b_i))`,
/// extended by `0 -> 0` (continuous because `2 b_i < a_i + 2 b_i`).
pub fn apply_phi_inverse(e: &ExponentData, w: &ComplexPoint) -> Result<ComplexPoint> {
    if w.dim() != e.n() {
        return Err(Error::DimensionMismatch {
            expected: e.n(),
            got: w.dim(),
        });
    }
    let coords = (0..e.n())
        .map(|i| {
            let (ai, bi) = e.pair(i);
            let norm = w[i].norm();
            if ai == 0 || norm == 0.0 {
                w[i]
            } else {
                let exponent = 2.0 * f64::from(bi) / f64::from(ai + 2 * bi);
                w[i] / norm.powf(exponent)
            }
        })
        .collect();
    Ok(ComplexPoint::new(coords))
}

/// Whether the family member is topologically equivalent to a submersion,
/// which happens exactly when some `a_i = 1`.
pub fn is_topological_submersion(e: &ExponentData) -> bool {
    e.has_unit_a()
}

/// The three structural cases of the classification: some `a_i = 1`
/// (submersion), every `a_i >= 2`, or a zero block with the rest `>= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Category {
    Submersion,
    AllAtLeastTwo,
    ZeroBlock,
}

fn category(e: &ExponentData) -> Category {
    if e.has_unit_a() {
        Category::Submersion
    } else if e.a()[0] == 0 {
        Category::ZeroBlock
    } else {
        Category::AllAtLeastTwo
    }
}

/// Decides topological equivalence of two family members.
///
/// The case analysis is complete for this family: submersion-ness must agree,
/// and outside the submersion case the exponent vectors `a` (including the
/// zero-block size) must agree; conversely, equal `a` forces equal normal
/// forms up to the radial powers on the zero block.
pub fn topologically_equivalent(
    e1: &ExponentData,
    e2: &ExponentData,
) -> Result<EquivalenceVerdict> {
    if e1.n() != e2.n() {
        return Err(Error::DimensionMismatch {
            expected: e1.n(),
            got: e2.n(),
        });
    }
    use VerdictStatus::*;
    let (c1, c2) = (category(e1), category(e2));
    let verdict = match (c1, c2) {
        (Category::Submersion, Category::Submersion) => EquivalenceVerdict::with_witness(
            Equivalent,
            Citation::Submfam,
            Witness::Detail("both members are topological submersions".into()),
        ),
        (Category::Submersion, _) | (_, Category::Submersion) => EquivalenceVerdict::with_witness(
            NotEquivalent,
            Citation::Submfam,
            Witness::Detail("exactly one member is a topological submersion".into()),
        ),
        (Category::AllAtLeastTwo, Category::AllAtLeastTwo) => {
            if e1.a() == e2.a() {
                EquivalenceVerdict::with_witness(
                    Equivalent,
                    Citation::Topfor,
                    Witness::Detail("identical holomorphic normal forms".into()),
                )
            } else {
                EquivalenceVerdict::with_witness(
                    NotEquivalent,
                    Citation::Etsu,
                    Witness::Detail("normal forms have distinct exponent vectors".into()),
                )
            }
        }
        (Category::ZeroBlock, Category::ZeroBlock) => {
            let (k1, k2) = (e1.zero_block().len(), e2.zero_block().len());
            if k1 != k2 {
                EquivalenceVerdict::with_witness(
                    NotEquivalent,
                    Citation::Cortop,
                    Witness::Detail(format!("zero-block sizes differ ({k1} vs {k2})")),
                )
            } else if e1.a() != e2.a() {
                EquivalenceVerdict::with_witness(
                    NotEquivalent,
                    Citation::Cortop,
                    Witness::Detail("positive exponent vectors differ".into()),
                )
            } else {
                let mut b1: Vec<u32> = e1.b()[..k1].to_vec();
                let mut b2: Vec<u32> = e2.b()[..k1].to_vec();
                b1.sort_unstable();
                b2.sort_unstable();
                if b1 == b2 {
                    EquivalenceVerdict::with_witness(
                        Equivalent,
                        Citation::Topfor,
                        Witness::Detail("identical normal forms".into()),
                    )
                } else {
                    EquivalenceVerdict::with_witness(
                        Equivalent,
                        Citation::Topfor,
                        Witness::Detail(
                            "zero-block radial exponents differ; equivalence via the \
                             per-coordinate radial homeomorphism (design-level sufficiency)"
                                .into(),
                        ),
                    )
                }
            }
        }
        (Category::AllAtLeastTwo, Category::ZeroBlock)
        | (Category::ZeroBlock, Category::AllAtLeastTwo) => EquivalenceVerdict::with_witness(
            NotEquivalent,
            Citation::Cortop,
            Witness::Detail("zero-block sizes differ (one side has none)".into()),
        ),
    };
    Ok(verdict)
}

/// Finds a permutation carrying `(e1.a, e1.b)` onto `(e2.a, e2.b)` jointly,
/// assuming [`ExponentData::permutation_equivalent`] already holds.
fn matching_permutation(e1: &ExponentData, e2: &ExponentData) -> Vec<usize> {
    let n = e1.n();
    let mut sigma = vec![usize::MAX; n];
    let mut used = vec![false; n];
    for i in 0..n {
        for j in 0..n {
            if !used[j] && e1.pair(j) == e2.pair(i) {
                sigma[i] = j;
                used[j] = true;
                break;
            }
        }
    }
    sigma
}

/// Decides bi-Lipschitz equivalence of two family members.
///
/// Outside the submersion case the classification is complete: equivalence
/// holds exactly when a single permutation of coordinates identifies the two
/// exponent pairs. In the submersion case equality of the multiplicity
/// multisets `{a_i + 2 b_i}` is necessary; identity of germs up to
/// permutation is the only sufficiency available, so pairs with equal
/// multisets but distinct germs remain undetermined.
pub fn bilipschitz_equivalent(
    e1: &ExponentData,
    e2: &ExponentData,
) -> Result<EquivalenceVerdict> {
    use VerdictStatus::*;
    let top = topologically_equivalent(e1, e2)?;
    if top.status == NotEquivalent {
        return Ok(top);
    }
    let submersions = category(e1) == Category::Submersion;
    let verdict = if submersions {
        if e1.multiplicity_multiset() != e2.multiplicity_multiset() {
            EquivalenceVerdict::with_witness(
                NotEquivalent,
                Citation::Class1,
                Witness::Detail("multiplicity multisets {a_i + 2 b_i} differ".into()),
            )
        } else if e1.permutation_equivalent(e2) {
            EquivalenceVerdict::with_witness(
                Equivalent,
                Citation::Class1,
                Witness::Permutation(matching_permutation(e1, e2)),
            )
        } else {
            EquivalenceVerdict::with_witness(
                Undetermined,
                Citation::Class1,
                Witness::Detail(
                    "multiplicity multisets agree but the germs are not identical up to \
                     permutation; no sufficiency criterion applies"
                        .into(),
                ),
            )
        }
    } else if e1.permutation_equivalent(e2) {
        EquivalenceVerdict::with_witness(
            Equivalent,
            Citation::Class1,
            Witness::Permutation(matching_permutation(e1, e2)),
        )
    } else {
        EquivalenceVerdict::with_witness(
            NotEquivalent,
            Citation::Class1,
            Witness::Detail("no permutation matches (a, b) to (c, d) jointly".into()),
        )
    };
    Ok(verdict)
}

/// Decides bi-Lipschitz equivalence between a family member and the
/// holomorphic Pham-Brieskorn germ with exponents `c` (every `c_i >= 1`).
pub fn bilip_vs_holomorphic(e: &ExponentData, c: &[u32]) -> Result<EquivalenceVerdict> {
    if c.len() != e.n() {
        return Err(Error::DimensionMismatch {
            expected: e.n(),
            got: c.len(),
        });
    }
    if c.iter().any(|&ci| ci == 0) {
        return Err(Error::InvalidParameter(
            "holomorphic exponents must all be >= 1".into(),
        ));
    }
    let holomorphic = ExponentData::new(c.to_vec(), vec![0; c.len()])?;
    bilipschitz_equivalent(e, &holomorphic)
}

/// One equivalence class in a grid enumeration.
#[derive(Debug, Clone, Serialize)]
pub struct LipschitzClass {
    /// A member with the canonical exponent data.
    pub representative: ExponentData,
    /// All conjugate-exponent vectors (as entered, not canonicalized) that
    /// landed in this class.
    pub members: Vec<Vec<u32>>,
    /// Whether some pair between this class and another was undetermined;
    /// such classes are kept separate but might coincide.
    pub undetermined_related: bool,
}

/// Result of partitioning `{b : 0 <= b_i <= b_bound}` for a fixed `a`.
#[derive(Debug, Clone, Serialize)]
pub struct ClassEnumeration {
    pub a: Vec<u32>,
    pub b_bound: u32,
    pub classes: Vec<LipschitzClass>,
    /// How many `b`-vectors were skipped because some coordinate had
    /// `a_i = b_i = 0` (no valid family member exists for them).
    pub skipped_invalid: usize,
    /// Whether every pair of members is topologically equivalent (constant
    /// for a fixed `a`).
    pub topologically_trivial: bool,
}

impl ClassEnumeration {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
}

/// Partitions the conjugate-exponent grid `{b : 0 <= b_i <= b_bound}` for a
/// fixed `a` into bi-Lipschitz classes, flagging classes whose separation
/// rests on an undetermined verdict rather than a proved obstruction.
pub fn enumerate_lipschitz_classes(a: &[u32], b_bound: u32) -> Result<ClassEnumeration> {
    if a.is_empty() || a.iter().all(|&ai| ai == 0) {
        return Err(Error::DegenerateFamily);
    }
    let n = a.len();
    let grid_size = (u64::from(b_bound) + 1).pow(n as u32);
    if grid_size > 20_000 {
        return Err(Error::InvalidParameter(format!(
            "enumeration grid has {grid_size} vectors; bound the grid below 20000"
        )));
    }

    // Materialize the valid members of the grid in lexicographic order.
    let mut members: Vec<(Vec<u32>, ExponentData)> = Vec::new();
    let mut skipped_invalid = 0usize;
    let mut b = vec![0u32; n];
    loop {
        match ExponentData::new(a.to_vec(), b.clone()) {
            Ok(e) => members.push((b.clone(), e)),
            Err(_) => skipped_invalid += 1,
        }
        // Advance the counter.
        let mut i = n;
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            if b[i] < b_bound {
                b[i] += 1;
                break;
            }
            b[i] = 0;
        }
        if b.iter().all(|&bi| bi == 0) {
            break;
        }
    }

    // Union-find over proved equivalences; track undetermined pairs.
    let m = members.len();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut undetermined_pairs: Vec<(usize, usize)> = Vec::new();
    let mut topologically_trivial = true;
    for i in 0..m {
        for j in (i + 1)..m {
            let verdict = bilipschitz_equivalent(&members[i].1, &members[j].1)?;
            match verdict.status {
                VerdictStatus::Equivalent => {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    if ri != rj {
                        parent[ri.max(rj)] = ri.min(rj);
                    }
                }
                VerdictStatus::Undetermined => undetermined_pairs.push((i, j)),
                VerdictStatus::NotEquivalent => {}
            }
            if topologically_equivalent(&members[i].1, &members[j].1)?.status
                != VerdictStatus::Equivalent
            {
                topologically_trivial = false;
            }
        }
    }

    let mut flagged_roots: Vec<usize> = Vec::new();
    for &(i, j) in &undetermined_pairs {
        flagged_roots.push(find(&mut parent, i));
        flagged_roots.push(find(&mut parent, j));
    }

    let mut classes: Vec<LipschitzClass> = Vec::new();
    let mut root_to_class: std::collections::HashMap<usize, usize> =
        std::collections::HashMap::new();
    for i in 0..m {
        let root = find(&mut parent, i);
        let idx = *root_to_class.entry(root).or_insert_with(|| {
            classes.push(LipschitzClass {
                representative: members[i].1.clone(),
                members: Vec::new(),
                undetermined_related: flagged_roots.contains(&root),
            });
            classes.len() - 1
        });
        classes[idx].members.push(members[i].0.clone());
    }

    Ok(ClassEnumeration {
        a: a.to_vec(),
        b_bound,
        classes,
        skipped_invalid,
        topologically_trivial,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mixed::MixedPolynomial;

    fn e(a: &[u32], b: &[u32]) -> ExponentData {
        ExponentData::new(a.to_vec(), b.to_vec()).unwrap()
    }

    #[test]
    fn normal_form_shapes() {
        let nf = topological_normal_form(&e(&[2, 3], &[1, 0]));
        assert_eq!(nf.zero_count, 0);
        assert_eq!(nf.positive_a, vec![2, 3]);
        assert_eq!(nf.to_string(), "z1^2 + z2^3");

        let nf = topological_normal_form(&e(&[0, 3], &[2, 1]));
        assert_eq!(nf.zero_count, 1);
        assert_eq!(nf.zero_block_b, vec![2]);
        assert_eq!(nf.positive_a, vec![3]);
        assert_eq!(nf.to_string(), "|z1|^4 + z2^3");

        let nf = topological_normal_form(&e(&[1, 1], &[0, 0]));
        assert_eq!(nf.to_string(), "z1 + z2");
    }

    #[test]
    fn phi_examples_and_roundtrip() {
        let data = e(&[2, 2], &[1, 1]);
        let z = ComplexPoint::new(vec![Complex64::new(2.0, 0.0), Complex64::new(1.0, 0.0)]);
        let w = apply_phi(&data, &z).unwrap();
        assert!((w[0] - Complex64::new(4.0, 0.0)).norm() < 1e-12);
        let back = apply_phi_inverse(&data, &w).unwrap();
        assert!(back.dist(&z) < 1e-12);

        // Zero-block coordinates are untouched; the origin maps to itself.
        let data = e(&[0, 2], &[3, 1]);
        let z = ComplexPoint::new(vec![Complex64::new(0.3, -0.7), Complex64::new(0.0, 0.0)]);
        let w = apply_phi(&data, &z).unwrap();
        assert_eq!(w[0], z[0]);
        assert_eq!(w[1], Complex64::new(0.0, 0.0));

        // Dense round-trip over awkward points.
        let data = e(&[1, 3], &[2, 1]);
        for s in 0..50 {
            let t = 0.02 + 0.9 * (s as f64) / 50.0;
            let z = ComplexPoint::new(vec![
                Complex64::new(t, -0.3 * t),
                Complex64::new(0.1, t * t),
            ]);
            let w = apply_phi(&data, &z).unwrap();
            let back = apply_phi_inverse(&data, &w).unwrap();
            assert!(back.dist(&z) <= 1e-12 * (1.0 + z.norm()), "t = {t}");
        }
    }

    #[test]
    fn conjugation_identity_through_the_normal_form() {
        for data in [
            e(&[2, 3], &[1, 0]),
            e(&[1, 2], &[1, 1]),
            e(&[0, 3], &[2, 1]),
            e(&[0, 2, 3], &[1, 2, 2]),
        ] {
            let f = MixedPolynomial::family(&data);
            let nf = topological_normal_form(&data);
            for s in 0..100 {
                let x = -0.9 + 1.7 * (s as f64) / 99.0;
                let z = ComplexPoint::new(
                    (0..data.n())
                        .map(|i| Complex64::new(x + 0.1 * i as f64, 0.4 - 0.2 * x * i as f64))
                        .collect(),
                );
                let lhs = nf.eval_f64(&apply_phi(&data, &z).unwrap());
                let rhs = f.eval_f64(&z);
                assert!(
                    (lhs - rhs).norm() <= 1e-9 * (1.0 + rhs.norm()),
                    "family {data}: {lhs} vs {rhs}"
                );
            }
        }
    }

    #[test]
    fn submersion_characterization() {
        assert!(is_topological_submersion(&e(&[1, 7], &[5, 2])));
        assert!(!is_topological_submersion(&e(&[2, 2], &[0, 0])));
        assert!(is_topological_submersion(&e(&[0, 1], &[3, 0])));
    }

    #[test]
    fn topological_verdicts() {
        use VerdictStatus::*;
        let v = topologically_equivalent(&e(&[2, 3], &[1, 2]), &e(&[2, 3], &[3, 0])).unwrap();
        assert_eq!(v.status, Equivalent);

        let v = topologically_equivalent(&e(&[2, 3], &[0, 0]), &e(&[2, 5], &[0, 0])).unwrap();
        assert_eq!(v.status, NotEquivalent);
        assert_eq!(v.reason, Citation::Etsu);

        let v = topologically_equivalent(&e(&[1, 4], &[2, 1]), &e(&[1, 9], &[0, 3])).unwrap();
        assert_eq!(v.status, Equivalent);
        assert_eq!(v.reason, Citation::Submfam);

        // Submersion against non-submersion.
        let v = topologically_equivalent(&e(&[1, 2], &[1, 1]), &e(&[2, 2], &[1, 1])).unwrap();
        assert_eq!(v.status, NotEquivalent);
        assert_eq!(v.reason, Citation::Submfam);

        // Zero blocks of different sizes.
        let v = topologically_equivalent(&e(&[0, 2], &[1, 1]), &e(&[2, 2], &[1, 1])).unwrap();
        assert_eq!(v.status, NotEquivalent);
        assert_eq!(v.reason, Citation::Cortop);

        // Zero block with differing radial exponents: equivalent with the
        // design-level radial sufficiency recorded.
        let v = topologically_equivalent(&e(&[0, 2], &[1, 1]), &e(&[0, 2], &[3, 1])).unwrap();
        assert_eq!(v.status, Equivalent);
        match v.witness {
            Some(Witness::Detail(ref d)) => assert!(d.contains("radial")),
            ref w => panic!("expected a detail witness, got {w:?}"),
        }
    }

    #[test]
    fn bilipschitz_verdicts() {
        use VerdictStatus::*;
        let v = bilipschitz_equivalent(&e(&[2, 2], &[1, 3]), &e(&[2, 2], &[3, 1])).unwrap();
        assert_eq!(v.status, Equivalent);
        assert!(matches!(v.witness, Some(Witness::Permutation(_))));

        let v = bilipschitz_equivalent(&e(&[2, 3], &[1, 2]), &e(&[2, 3], &[2, 1])).unwrap();
        assert_eq!(v.status, NotEquivalent);
        assert_eq!(v.reason, Citation::Class1);

        let v = bilipschitz_equivalent(&e(&[1, 2], &[1, 0]), &e(&[1, 2], &[0, 1])).unwrap();
        assert_eq!(v.status, NotEquivalent);

        // Equal multiplicity multisets {3, 5}, distinct germs: undetermined.
        let v = bilipschitz_equivalent(&e(&[1, 3], &[2, 0]), &e(&[1, 3], &[1, 1])).unwrap();
        assert_eq!(v.status, Undetermined);
    }

    #[test]
    fn versus_holomorphic() {
        use VerdictStatus::*;
        let v = bilip_vs_holomorphic(&e(&[2, 3], &[0, 0]), &[2, 3]).unwrap();
        assert_eq!(v.status, Equivalent);

        let v = bilip_vs_holomorphic(&e(&[2, 3], &[1, 0]), &[2, 3]).unwrap();
        assert_eq!(v.status, NotEquivalent);

        // Multiplicities (3, 4) match c, but the mixed side is a topological
        // submersion while z^3 + w^4 is not; the necessary condition c_1 = 1
        // fails, so the pair is rejected on topological grounds.
        let v = bilip_vs_holomorphic(&e(&[1, 2], &[1, 1]), &[3, 4]).unwrap();
        assert_eq!(v.status, NotEquivalent);
        assert_eq!(v.reason, Citation::Submfam);

        // Here c_1 = 1 and the multiplicity multisets {1, 6} agree while the
        // germs differ, which is the genuinely open region.
        let v = bilip_vs_holomorphic(&e(&[1, 2], &[0, 2]), &[1, 6]).unwrap();
        assert_eq!(v.status, Undetermined);

        assert!(bilip_vs_holomorphic(&e(&[1, 2], &[1, 1]), &[0, 4]).is_err());
    }

    #[test]
    fn verdicts_are_symmetric_and_hierarchical_on_a_grid() {
        let grid = ExponentData::enumerate_grid(2, 2, 2);
        for e1 in &grid {
            for e2 in &grid {
                let top = topologically_equivalent(e1, e2).unwrap();
                let top_rev = topologically_equivalent(e2, e1).unwrap();
                assert_eq!(top.status, top_rev.status);
                let bl = bilipschitz_equivalent(e1, e2).unwrap();
                let bl_rev = bilipschitz_equivalent(e2, e1).unwrap();
                assert_eq!(bl.status, bl_rev.status);
                if bl.status == VerdictStatus::Equivalent {
                    assert_eq!(top.status, VerdictStatus::Equivalent, "{e1} vs {e2}");
                    assert_eq!(e1.multiplicity_multiset(), e2.multiplicity_multiset());
                }
                if top.status == VerdictStatus::NotEquivalent {
                    assert_eq!(bl.status, VerdictStatus::NotEquivalent, "{e1} vs {e2}");
                }
            }
        }
    }

    #[test]
    fn class_counts_on_reference_grids() {
        let enumeration = enumerate_lipschitz_classes(&[2, 2], 2).unwrap();
        assert_eq!(enumeration.class_count(), 6);
        assert!(enumeration.topologically_trivial);
        assert_eq!(enumeration.skipped_invalid, 0);

        let enumeration = enumerate_lipschitz_classes(&[2, 3], 1).unwrap();
        assert_eq!(enumeration.class_count(), 4);

        let enumeration = enumerate_lipschitz_classes(&[2, 2], 0).unwrap();
        assert_eq!(enumeration.class_count(), 1);
    }

    #[test]
    fn class_count_matches_a_brute_force_multiset_oracle() {
        // For a = (2, 2) every coordinate is interchangeable, so classes are
        // exactly multisets of pairs {(2, b_1), (2, b_2)}.
        let enumeration = enumerate_lipschitz_classes(&[2, 2], 2).unwrap();
        let mut expected: std::collections::HashSet<Vec<(u32, u32)>> =
            std::collections::HashSet::new();
        for b1 in 0..=2 {
            for b2 in 0..=2 {
                let mut key = vec![(2u32, b1), (2u32, b2)];
                key.sort_unstable();
                expected.insert(key);
            }
        }
        assert_eq!(enumeration.class_count(), expected.len());
    }

    #[test]
    fn undetermined_classes_are_flagged() {
        // a = (1, 3) with b-bound 2 contains b = (2, 0) and b = (1, 1), whose
        // multiplicity multisets coincide without a joint permutation.
        let enumeration = enumerate_lipschitz_classes(&[1, 3], 2).unwrap();
        assert!(enumeration.classes.iter().any(|c| c.undetermined_related));
    }

    #[test]
    fn invalid_grid_members_are_skipped() {
        // a = (0, 2): the b-vectors with b_1 = 0 have no valid member.
        let enumeration = enumerate_lipschitz_classes(&[0, 2], 1).unwrap();
        assert_eq!(enumeration.skipped_invalid, 2);
        let total: usize = enumeration.classes.iter().map(|c| c.members.len()).sum();
        assert_eq!(total, 2);
    }

    #[test]
    fn citation_tags_serialize_lowercase() {
        assert_eq!(Citation::Class1.tag(), "class1");
        assert_eq!(
            serde_json::to_string(&Citation::Tgcsup).unwrap(),
            "\"tgcsup\""
        );
        assert_eq!(Citation::L17.to_string(), "l17");
    }
}
