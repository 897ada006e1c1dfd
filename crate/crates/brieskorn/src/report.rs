//! Machine-readable reports for the command-line verbs: every row pairs a
//! claim with its citation tag, the symbolic value, and (when a numeric
//! estimator ran) the measured value, tolerance, and pass flag.

use crate::classify::{
    bilipschitz_equivalent, enumerate_lipschitz_classes, is_topological_submersion,
    topological_normal_form, topologically_equivalent, Citation, EquivalenceVerdict, Witness,
};
use crate::determinacy::weighted_type;
use crate::error::{Error, Result};
use crate::exponents::ExponentData;
use crate::mixed::MixedPolynomial;
use crate::numeric::cloud::{sample_surface, PointCloud};
use crate::numeric::cone::{default_scales, estimate_tangent_cone};
use crate::numeric::contact::{default_t_grid, estimate_beta};
use crate::numeric::fit::ExponentFit;
use crate::numeric::verify::{
    check_normal_embedding, verify_conjugation, verify_multiplicity_numeric,
};
use crate::surface::{
    ambient_obstruction, horn_index, outer_obstruction, surface_profile, surface_type,
    ConeDescription, SurfaceClass, SurfaceType,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::fmt;
use std::str::FromStr;

/// One pairing of a claim with its citation tag and values. `pass` is
/// present exactly when both a symbolic and a numeric value exist.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictRow {
    pub claim: String,
    pub tag: String,
    pub symbolic: Option<Value>,
    pub numeric: Option<Value>,
    pub tolerance: Option<f64>,
    pub pass: Option<bool>,
}

impl VerdictRow {
    /// A purely symbolic row (no numeric side, hence no pass flag).
    pub fn symbolic(claim: impl Into<String>, tag: Citation, value: Value) -> Self {
        Self {
            claim: claim.into(),
            tag: tag.tag().to_string(),
            symbolic: Some(value),
            numeric: None,
            tolerance: None,
            pass: None,
        }
    }

    /// Attaches the numeric side; only now does the row acquire a verdict.
    pub fn with_numeric(mut self, value: Value, tolerance: f64, pass: bool) -> Self {
        self.numeric = Some(value);
        self.tolerance = Some(tolerance);
        self.pass = Some(pass);
        self
    }
}

/// A full report: command echo, verdict rows, seed, version, timestamp.
/// Identical inputs and seed reproduce the report byte for byte except for
/// the timestamp.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub verdicts: Vec<VerdictRow>,
    pub seed: Option<u64>,
    pub version: String,
    pub timestamp: u64,
}

impl Report {
    pub fn new(command: impl Into<String>, inputs: Value, seed: Option<u64>) -> Self {
        Self {
            command: command.into(),
            inputs,
            verdicts: Vec::new(),
            seed,
            version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        }
    }

    pub fn push(&mut self, row: VerdictRow) {
        debug_assert!(
            row.pass.is_none() || (row.symbolic.is_some() && row.numeric.is_some()),
            "pass flag requires both symbolic and numeric values"
        );
        self.verdicts.push(row);
    }

    /// Whether any numeric check missed its tolerance.
    pub fn any_failure(&self) -> bool {
        self.verdicts.iter().any(|r| r.pass == Some(false))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Verdict rows as CSV (claim, tag, symbolic, numeric, tolerance, pass),
    /// with standard double-quote escaping.
    pub fn verdicts_csv(&self) -> String {
        fn cell(text: &str) -> String {
            if text.contains([',', '"', '\n']) {
                format!("\"{}\"", text.replace('"', "\"\""))
            } else {
                text.to_string()
            }
        }
        let mut out = String::from("claim,tag,symbolic,numeric,tolerance,pass\n");
        for r in &self.verdicts {
            let opt = |v: &Option<Value>| v.as_ref().map(Value::to_string).unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                cell(&r.claim),
                cell(&r.tag),
                cell(&opt(&r.symbolic)),
                cell(&opt(&r.numeric)),
                r.tolerance.map(|t| t.to_string()).unwrap_or_default(),
                r.pass.map(|p| p.to_string()).unwrap_or_default(),
            ));
        }
        out
    }
}

/// Resolves the effective seed: the `BRIESKORN_SEED` environment variable
/// overrides the flag; with neither, 0.
pub fn resolve_seed(flag: Option<u64>) -> Result<u64> {
    match std::env::var("BRIESKORN_SEED") {
        Ok(s) => s.trim().parse().map_err(|_| {
            Error::InvalidParameter(format!("BRIESKORN_SEED is not an unsigned integer: {s:?}"))
        }),
        Err(_) => Ok(flag.unwrap_or(0)),
    }
}

/// Renders a permutation (`perm[k]` = source position of slot `k`) in
/// 1-indexed cycle notation, e.g. `(1 2)`; the identity renders as `id`.
pub fn cycle_notation(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            seen[start] = true;
            continue;
        }
        let mut cycle = Vec::new();
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            cycle.push((k + 1).to_string());
            k = perm[k];
        }
        out.push_str(&format!("({})", cycle.join(" ")));
    }
    if out.is_empty() {
        "id".to_string()
    } else {
        out
    }
}

fn germ_echo(raw_a: &[u32], raw_b: &[u32], e: &ExponentData) -> Value {
    json!({
        "a": raw_a,
        "b": raw_b,
        "canonical_a": e.a(),
        "canonical_b": e.b(),
        "permutation_cycles": cycle_notation(e.permutation()),
    })
}

fn rational_str(r: &BigRational) -> String {
    r.to_string()
}

fn cone_value(c: &ConeDescription) -> Value {
    json!({
        "kind": c.kind,
        "display": c.kind.to_string(),
        "rays_pi": c.rays.iter().map(rational_str).collect::<Vec<_>>(),
        "stated_lines_pi": c.stated_lines.iter().map(rational_str).collect::<Vec<_>>(),
        "dimension": c.dimension,
    })
}

fn fit_value(f: &ExponentFit) -> Value {
    serde_json::to_value(f).expect("fit serialization cannot fail")
}

fn verdict_value(v: &EquivalenceVerdict) -> Value {
    let witness = match &v.witness {
        Some(Witness::Permutation(p)) => json!({
            "permutation": p,
            "cycles": cycle_notation(p),
        }),
        Some(Witness::Detail(d)) => json!(d),
        None => Value::Null,
    };
    json!({
        "status": v.status,
        "reason_tag": v.reason.tag(),
        "witness": witness,
    })
}

/// Classification report: normal form, submersion flag, multiplicity,
/// weighted type, and (for curves in C²) the surface profile.
pub fn cmd_classify(raw_a: &[u32], raw_b: &[u32]) -> Result<Report> {
    let e = ExponentData::new(raw_a.to_vec(), raw_b.to_vec())?;
    let mut rep = Report::new("classify", germ_echo(raw_a, raw_b, &e), None);

    let nf = topological_normal_form(&e);
    rep.push(VerdictRow::symbolic(
        "topological normal form",
        Citation::Topfor,
        json!({
            "display": nf.to_string(),
            "zero_block_b": nf.zero_block_b,
            "positive_a": nf.positive_a,
        }),
    ));
    rep.push(VerdictRow::symbolic(
        "topological submersion",
        Citation::Submfam,
        json!(is_topological_submersion(&e)),
    ));
    rep.push(VerdictRow::symbolic(
        "multiplicity",
        Citation::Inva,
        json!({
            "multiplicity": e.multiplicity(),
            "multiset": e.multiplicity_multiset(),
        }),
    ));
    if let Ok(w) = weighted_type(&e) {
        rep.push(VerdictRow::symbolic(
            "weighted homogeneous type",
            Citation::L1,
            json!(w.to_string()),
        ));
    }
    if e.n() == 2 {
        match surface_type(&e)? {
            SurfaceType::Regular => rep.push(VerdictRow::symbolic(
                "surface class",
                Citation::Tgcsup,
                json!({"type": "regular"}),
            )),
            ty => {
                let p = surface_profile(&e)?;
                rep.push(VerdictRow::symbolic(
                    "surface class",
                    Citation::Tgcsup,
                    json!({
                        "type": ty.to_string(),
                        "cone": cone_value(&p.cone),
                        "beta": rational_str(&p.beta),
                        "components": p.components,
                        "component_basis": format!("{:?}", p.component_basis),
                    }),
                ));
                rep.push(VerdictRow::symbolic(
                    "normally embedded (symbolic rule)",
                    Citation::L17,
                    json!(p.normally_embedded),
                ));
            }
        }
    }
    Ok(rep)
}

/// Comparison mode for [`cmd_compare`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompareMode {
    Top,
    Bilip,
    Outer,
    Ambient,
}

impl FromStr for CompareMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "top" => Ok(Self::Top),
            "bilip" => Ok(Self::Bilip),
            "outer" => Ok(Self::Outer),
            "ambient" => Ok(Self::Ambient),
            other => Err(Error::InvalidParameter(format!(
                "unknown mode {other:?}; expected top|bilip|outer|ambient"
            ))),
        }
    }
}

impl fmt::Display for CompareMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Top => write!(f, "topological equivalence"),
            Self::Bilip => write!(f, "bi-Lipschitz equivalence"),
            Self::Outer => write!(f, "outer Lipschitz comparison (surfaces)"),
            Self::Ambient => write!(f, "ambient Lipschitz comparison (curves)"),
        }
    }
}

/// Equivalence comparison between two families under the chosen mode.
pub fn cmd_compare(
    a1: &[u32],
    b1: &[u32],
    a2: &[u32],
    b2: &[u32],
    mode: CompareMode,
) -> Result<Report> {
    let e1 = ExponentData::new(a1.to_vec(), b1.to_vec())?;
    let e2 = ExponentData::new(a2.to_vec(), b2.to_vec())?;
    let verdict = match mode {
        CompareMode::Top => topologically_equivalent(&e1, &e2)?,
        CompareMode::Bilip => bilipschitz_equivalent(&e1, &e2)?,
        CompareMode::Outer => outer_obstruction(&e1, &e2)?,
        CompareMode::Ambient => ambient_obstruction(&e1, &e2)?,
    };
    let mut rep = Report::new(
        "compare",
        json!({
            "first": germ_echo(a1, b1, &e1),
            "second": germ_echo(a2, b2, &e2),
            "mode": format!("{mode}"),
        }),
        None,
    );
    rep.push(VerdictRow::symbolic(
        format!("{mode}"),
        verdict.reason,
        verdict_value(&verdict),
    ));
    Ok(rep)
}

/// A numeric check for [`cmd_verify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyCheck {
    Cone,
    Beta,
    Ne,
    Conj,
    Mult,
}

impl FromStr for VerifyCheck {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cone" => Ok(Self::Cone),
            "beta" => Ok(Self::Beta),
            "ne" => Ok(Self::Ne),
            "conj" => Ok(Self::Conj),
            "mult" => Ok(Self::Mult),
            other => Err(Error::InvalidParameter(format!(
                "unknown check {other:?}; expected cone|beta|ne|conj|mult"
            ))),
        }
    }
}

/// Runs the requested numeric checks against their symbolic predictions.
/// Each row records prediction, measurement, tolerance, and pass flag.
pub fn cmd_verify(
    raw_a: &[u32],
    raw_b: &[u32],
    checks: &[VerifyCheck],
    seed: u64,
) -> Result<Report> {
    let e = ExponentData::new(raw_a.to_vec(), raw_b.to_vec())?;
    if checks.is_empty() {
        return Err(Error::InvalidParameter(
            "no checks requested; expected --checks cone,beta,ne,conj,mult".into(),
        ));
    }
    let mut rep = Report::new(
        "verify",
        json!({
            "germ": germ_echo(raw_a, raw_b, &e),
            "checks": checks.iter().map(|c| format!("{c:?}").to_lowercase()).collect::<Vec<_>>(),
        }),
        Some(seed),
    );

    for check in checks {
        match check {
            VerifyCheck::Cone => {
                let symbolic = crate::surface::tangent_cone(&e)?;
                let est = estimate_tangent_cone(&e, &default_scales(), 0.15)?;
                let pass = est.matched.kind == symbolic.kind && est.hausdorff <= 1e-2;
                rep.push(
                    VerdictRow::symbolic(
                        "tangent cone kind and angular misfit",
                        Citation::Tgcsup,
                        cone_value(&symbolic),
                    )
                    .with_numeric(
                        json!({
                            "kind": est.matched.kind,
                            "hausdorff": est.hausdorff,
                            "clusters": est.cluster_count,
                            "directions": est.directions.len(),
                        }),
                        1e-2,
                        pass,
                    ),
                );
            }
            VerifyCheck::Beta => {
                let ty = surface_type(&e)?;
                let beta = if ty.class() == Some(SurfaceClass::T3) {
                    horn_index(&e)?
                } else {
                    BigRational::from_integer(BigInt::from(1))
                };
                let fit = estimate_beta(&e, 24, seed)?;
                let value = fit.value();
                let beta_f = rational_to_f64(&beta);
                let pass = (value - beta_f).abs() <= 0.05 * beta_f
                    && fit.rational_snap.as_ref() == Some(&beta);
                rep.push(
                    VerdictRow::symbolic(
                        "inner horn index",
                        Citation::Inde,
                        json!(rational_str(&beta)),
                    )
                    .with_numeric(fit_value(&fit), 0.05, pass),
                );
            }
            VerifyCheck::Ne => {
                let rule = crate::surface::normally_embedded(&e)?;
                let check = check_normal_embedding(&e, &default_t_grid(), seed)?;
                let pass = check.normally_embedded == rule;
                rep.push(
                    VerdictRow::symbolic(
                        "normal embedding verdict and divergence exponent",
                        Citation::L17,
                        json!({
                            "normally_embedded": rule,
                            "reference_exponent": check.reference_exponent,
                        }),
                    )
                    .with_numeric(
                        json!({
                            "normally_embedded": check.normally_embedded,
                            "exponent": check.exponent,
                            "fit": fit_value(&check.fit),
                        }),
                        0.05,
                        pass,
                    ),
                );
            }
            VerifyCheck::Conj => {
                let residual = verify_conjugation(&e, 10_000, seed)?;
                rep.push(
                    VerdictRow::symbolic(
                        "normal-form conjugation residual",
                        Citation::Topfor,
                        json!(0.0),
                    )
                    .with_numeric(json!(residual), 1e-9, residual <= 1e-9),
                );
            }
            VerifyCheck::Mult => {
                let symbolic = e.multiplicity();
                let numeric = verify_multiplicity_numeric(&e, 8, seed)?;
                rep.push(
                    VerdictRow::symbolic("multiplicity recovery", Citation::Inva, json!(symbolic))
                        .with_numeric(json!(numeric), 0.0, numeric == symbolic),
                );
            }
        }
    }
    Ok(rep)
}

fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Enumerates the Lipschitz classes sharing a holomorphic exponent vector
/// `a` with conjugate exponents bounded by `b_bound`. Returns the report and
/// a CSV table of the classes.
pub fn cmd_enumerate(raw_a: &[u32], b_bound: u32) -> Result<(Report, String)> {
    let enumeration = enumerate_lipschitz_classes(raw_a, b_bound)?;
    let mut rep = Report::new(
        "enumerate",
        json!({"a": raw_a, "b_bound": b_bound}),
        None,
    );
    rep.push(VerdictRow::symbolic(
        "lipschitz class count",
        Citation::Corfam,
        json!({
            "classes": enumeration.classes.len(),
            "skipped_invalid": enumeration.skipped_invalid,
        }),
    ));
    rep.push(VerdictRow::symbolic(
        "topologically trivial family",
        Citation::Cortop,
        json!(enumeration.topologically_trivial),
    ));

    let mut csv = String::from(
        "class,representative_a,representative_b,member_b,topologically_trivial,undetermined_related\n",
    );
    let join = |v: &[u32]| {
        v.iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    };
    for (idx, class) in enumeration.classes.iter().enumerate() {
        for member in &class.members {
            csv.push_str(&format!(
                "{},{},{},{},{},{}\n",
                idx,
                join(class.representative.a()),
                join(class.representative.b()),
                join(member),
                enumeration.topologically_trivial,
                class.undetermined_related,
            ));
        }
    }
    Ok((rep, csv))
}

/// Samples a point cloud on the surface and reports the worst on-surface
/// residual. Returns the report and the cloud (for CSV output).
pub fn cmd_sample(
    raw_a: &[u32],
    raw_b: &[u32],
    count: usize,
    r_range: (f64, f64),
    seed: u64,
) -> Result<(Report, PointCloud)> {
    let e = ExponentData::new(raw_a.to_vec(), raw_b.to_vec())?;
    let cloud = sample_surface(&e, count, r_range, seed)?;
    let f = MixedPolynomial::family(&e);
    let m1 = e.multiplicity();
    let worst = cloud
        .points()
        .iter()
        .map(|p| f.eval_f64(p).norm() / p.norm().powi(m1 as i32).max(1.0))
        .fold(0.0f64, f64::max);
    let mut rep = Report::new(
        "sample",
        json!({
            "germ": germ_echo(raw_a, raw_b, &e),
            "count": count,
            "r_min": r_range.0,
            "r_max": r_range.1,
        }),
        Some(seed),
    );
    rep.push(
        VerdictRow::symbolic(
            "on-surface residual bound",
            Citation::Tgcsup,
            json!(0.0),
        )
        .with_numeric(json!(worst), 1e-8, worst <= 1e-8),
    );
    Ok((rep, cloud))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_report_round_trips_and_is_deterministic() {
        let r1 = cmd_classify(&[2, 3], &[0, 0]).unwrap();
        let parsed: Report = serde_json::from_str(&r1.to_json()).unwrap();
        assert_eq!(parsed, r1);

        let r2 = cmd_classify(&[2, 3], &[0, 0]).unwrap();
        let strip = |r: &Report| {
            let mut v: Value = serde_json::from_str(&r.to_json()).unwrap();
            v.as_object_mut().unwrap().remove("timestamp");
            serde_json::to_string(&v).unwrap()
        };
        assert_eq!(strip(&r1), strip(&r2));
    }

    #[test]
    fn classify_surfaces_the_canonical_permutation() {
        let r = cmd_classify(&[3, 2], &[0, 1]).unwrap();
        assert_eq!(r.inputs["a"], json!([3, 2]));
        assert_eq!(r.inputs["canonical_a"], json!([2, 3]));
        assert_eq!(r.inputs["permutation_cycles"], json!("(1 2)"));
    }

    #[test]
    fn classify_reports_the_expected_rows() {
        let r = cmd_classify(&[2, 3], &[0, 0]).unwrap();
        let surface = r
            .verdicts
            .iter()
            .find(|row| row.claim == "surface class")
            .unwrap();
        assert_eq!(surface.symbolic.as_ref().unwrap()["type"], "type (1)");
        assert_eq!(
            surface.symbolic.as_ref().unwrap()["cone"]["kind"],
            "PlaneZ1Zero"
        );
        let m = r
            .verdicts
            .iter()
            .find(|row| row.claim == "multiplicity")
            .unwrap();
        assert_eq!(m.symbolic.as_ref().unwrap()["multiplicity"], 2);
        assert!(r.verdicts.iter().all(|row| !row.tag.is_empty()));
        // Purely symbolic rows never carry a pass flag.
        assert!(r.verdicts.iter().all(|row| row.pass.is_none()));
    }

    #[test]
    fn classify_weighted_type_display_matches_contract() {
        let r = cmd_classify(&[1, 2], &[1, 1]).unwrap();
        let w = r
            .verdicts
            .iter()
            .find(|row| row.claim == "weighted homogeneous type")
            .unwrap();
        assert_eq!(w.symbolic, Some(json!("(4, 3; 12, 12)")));
        let s = r
            .verdicts
            .iter()
            .find(|row| row.claim == "topological submersion")
            .unwrap();
        assert_eq!(s.symbolic, Some(json!(true)));
    }

    #[test]
    fn compare_bilip_reports_permutation_witness_cycles() {
        let r = cmd_compare(&[2, 2], &[1, 3], &[2, 2], &[3, 1], CompareMode::Bilip).unwrap();
        let row = &r.verdicts[0];
        assert_eq!(row.symbolic.as_ref().unwrap()["status"], "Equivalent");
        assert_eq!(
            row.symbolic.as_ref().unwrap()["witness"]["cycles"],
            "(1 2)"
        );
        assert!(row.pass.is_none());
    }

    #[test]
    fn verify_beta_passes_on_the_reference_horn() {
        let r = cmd_verify(&[0, 1], &[1, 1], &[VerifyCheck::Beta], 3).unwrap();
        let row = &r.verdicts[0];
        assert_eq!(row.symbolic, Some(json!("3/2")));
        assert_eq!(row.pass, Some(true));
        assert!(!r.any_failure());
    }

    #[test]
    fn verify_ne_reports_the_honest_single_horn_failure() {
        // The symbolic rule says the ray class is not normally embedded; the
        // measurement finds a bounded ratio, so this check honestly fails.
        let r = cmd_verify(&[0, 1], &[1, 1], &[VerifyCheck::Ne], 3).unwrap();
        let row = &r.verdicts[0];
        assert_eq!(row.pass, Some(false));
        assert!(r.any_failure());
    }

    #[test]
    fn enumerate_produces_class_table() {
        let (rep, csv) = cmd_enumerate(&[2, 2], 2).unwrap();
        let count = &rep.verdicts[0];
        assert_eq!(count.symbolic.as_ref().unwrap()["classes"], 6);
        assert_eq!(rep.verdicts[1].symbolic, Some(json!(true)));
        // Header plus one line per member (3x3 b-grid, none invalid).
        assert_eq!(csv.lines().count(), 1 + 9);
        assert!(csv.starts_with("class,representative_a,"));
    }

    #[test]
    fn sample_reports_residuals_within_bound() {
        let (rep, cloud) = cmd_sample(&[2, 3], &[0, 0], 500, (0.01, 1.0), 11).unwrap();
        assert_eq!(cloud.len(), 500);
        assert_eq!(rep.verdicts[0].pass, Some(true));
    }

    #[test]
    fn seed_resolution_prefers_the_environment() {
        // Serialize env-var tests into one test to avoid cross-test races.
        std::env::remove_var("BRIESKORN_SEED");
        assert_eq!(resolve_seed(Some(5)).unwrap(), 5);
        assert_eq!(resolve_seed(None).unwrap(), 0);
        std::env::set_var("BRIESKORN_SEED", "42");
        assert_eq!(resolve_seed(Some(5)).unwrap(), 42);
        std::env::set_var("BRIESKORN_SEED", "not-a-number");
        assert!(resolve_seed(Some(5)).is_err());
        std::env::remove_var("BRIESKORN_SEED");
    }

    #[test]
    fn cycle_notation_renders_one_indexed_cycles() {
        assert_eq!(cycle_notation(&[0, 1, 2]), "id");
        assert_eq!(cycle_notation(&[1, 0]), "(1 2)");
        assert_eq!(cycle_notation(&[1, 2, 0, 4, 3]), "(1 2 3)(4 5)");
    }
}
