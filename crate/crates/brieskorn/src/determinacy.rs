//! Weighted-homogeneous types, filtrations, and bi-Lipschitz triviality
//! checks for deformations of family members.

use crate::error::{Error, Result};
use crate::exponents::ExponentData;
use crate::mixed::MixedMonomial;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use std::fmt;

/// Weights `r_i` and common target degree `d` making the family member
/// weighted homogeneous: `f(lambda^{r_1} z_1, ..., lambda^{r_n} z_n) =
/// lambda^d f(z)` for real `lambda`, both components sharing the degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedHomType {
    pub r: Vec<BigRational>,
    pub d: BigRational,
}

impl WeightedHomType {
    pub fn n(&self) -> usize {
        self.r.len()
    }

    pub fn r_max(&self) -> BigRational {
        self.r.iter().max().cloned().expect("nonempty weights")
    }

    pub fn r_min(&self) -> BigRational {
        self.r.iter().min().cloned().expect("nonempty weights")
    }

    /// The weights as floating-point values, for numeric scaling checks.
    pub fn r_f64(&self) -> Vec<f64> {
        self.r.iter().map(|r| r.to_f64().unwrap()).collect()
    }

    pub fn d_f64(&self) -> f64 {
        self.d.to_f64().unwrap()
    }
}

impl fmt::Display for WeightedHomType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.r.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "; {}, {})", self.d, self.d)
    }
}

/// The weighted type of a family member with every `a_i >= 1`:
/// `d = lcm_i(a_i + 2 b_i)` and `r_i = d / (a_i + 2 b_i)`, all exact.
pub fn weighted_type(e: &ExponentData) -> Result<WeightedHomType> {
    if !e.all_positive() {
        return Err(Error::NonIsolated);
    }
    let ms = e.multiplicities();
    let mut d_int = BigInt::one();
    for &m in &ms {
        d_int = d_int.lcm(&BigInt::from(m));
    }
    let d = BigRational::from_integer(d_int);
    let r = ms
        .iter()
        .map(|&m| &d / BigRational::from_integer(BigInt::from(m)))
        .collect();
    Ok(WeightedHomType { r, d })
}

/// The filtration of a mixed monomial: `sum_i r_i (nu_i + mu_i)`. A conjugate
/// factor carries the same weight as the plain variable, because the scaling
/// `z_i -> lambda^{r_i} z_i` with real `lambda` scales both identically.
pub fn filtration(m: &MixedMonomial, w: &WeightedHomType) -> Result<BigRational> {
    if m.n() != w.n() {
        return Err(Error::DimensionMismatch {
            expected: w.n(),
            got: m.n(),
        });
    }
    let mut acc = BigRational::zero();
    for i in 0..m.n() {
        let degree = BigInt::from(m.nu[i] + m.mu[i]);
        acc += &w.r[i] * BigRational::from_integer(degree);
    }
    Ok(acc)
}

/// Which target component of the deformation a term perturbs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Component {
    Theta1,
    Theta2,
}

/// One term of a deformation `f + t * Theta`, assigned to a target component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationTerm {
    monomial: MixedMonomial,
    component: Component,
}

impl DeformationTerm {
    /// Rejects constant monomials, which do not vanish at the origin and so
    /// cannot appear in a deformation of a singularity germ.
    pub fn new(monomial: MixedMonomial, component: Component) -> Result<Self> {
        if monomial.total_degree() == 0 {
            return Err(Error::InvalidParameter(
                "deformation terms must be non-constant".into(),
            ));
        }
        Ok(Self {
            monomial,
            component,
        })
    }

    pub fn monomial(&self) -> &MixedMonomial {
        &self.monomial
    }

    pub fn component(&self) -> Component {
        self.component
    }
}

/// Threshold configuration for the triviality checks. The source statements
/// disagree on the sign of the weight correction: the determinacy theorem
/// compares against `d + r_max - r_min` while the family lemma writes
/// `d - r_max + r_min`. The stronger reading is the default; the lenient one
/// is available behind this switch, and every verdict records the threshold
/// it actually used.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DeterminacyConfig {
    pub lenient_threshold: bool,
}

impl DeterminacyConfig {
    fn threshold(&self, w: &WeightedHomType) -> BigRational {
        let spread = w.r_max() - w.r_min();
        if self.lenient_threshold {
            &w.d - spread
        } else {
            &w.d + spread
        }
    }
}

/// Conclusion strength of a triviality check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TrivialityStatus {
    /// Strict inequality: bi-Lipschitz trivialization along all of `[0, 1]`.
    TrivialAlongInterval,
    /// Non-strict inequality only: bi-Lipschitz trivial for small `t`.
    TrivialSmallT,
    /// Below the threshold; the criterion is one-directional and says nothing.
    Unknown,
}

/// Outcome of a deformation-triviality check, with the exact threshold used
/// and the minimal filtration found among the deformation terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrivialityVerdict {
    pub status: TrivialityStatus,
    pub threshold_used: BigRational,
    pub filtration_found: BigRational,
}

impl TrivialityVerdict {
    /// Whether triviality along the whole interval `[0, 1]` was established.
    /// `None` means "not established" rather than "false": the underlying
    /// criterion gives no negative information.
    pub fn along_interval(&self) -> Option<bool> {
        match self.status {
            TrivialityStatus::TrivialAlongInterval => Some(true),
            _ => None,
        }
    }
}

/// Checks the deformation `f + t * sum(terms)` of the family member against
/// the filtration threshold: strict inequality in every component yields
/// triviality along `[0, 1]`, equality in the weakest component yields
/// triviality for small `t`, anything below yields no conclusion.
pub fn check_deformation_triviality(
    e: &ExponentData,
    terms: &[DeformationTerm],
    config: &DeterminacyConfig,
) -> Result<TrivialityVerdict> {
    let w = weighted_type(e)?;
    if terms.is_empty() {
        return Err(Error::InvalidParameter(
            "deformation must contain at least one term".into(),
        ));
    }
    let mut min_fl: Option<BigRational> = None;
    for term in terms {
        let fl = filtration(term.monomial(), &w)?;
        min_fl = Some(match min_fl {
            None => fl,
            Some(cur) => cur.min(fl),
        });
    }
    let filtration_found = min_fl.expect("nonempty terms");
    let threshold_used = config.threshold(&w);
    let status = if filtration_found > threshold_used {
        TrivialityStatus::TrivialAlongInterval
    } else if filtration_found == threshold_used {
        TrivialityStatus::TrivialSmallT
    } else {
        TrivialityStatus::Unknown
    };
    Ok(TrivialityVerdict {
        status,
        threshold_used,
        filtration_found,
    })
}

/// Report of the hypothesis check for the deformation normal-form theorem:
/// which hypotheses failed (empty means all hold), the bound used to
/// operationalize "sufficiently large", and the resulting normal forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeffamReport {
    pub satisfied: bool,
    pub failures: Vec<String>,
    /// The concrete lower bound imposed on `l`:
    /// `max(m + 1, d, 2 * max_i l_i)`.
    pub l_required: u32,
    pub threshold_used: BigRational,
    /// Minimal filtration over the residual terms, `None` when there are none
    /// (the hypothesis is then vacuous).
    pub q_filtration: Option<BigRational>,
    /// `h = sum_i |w_i|^(2 l_i) + f`, the bi-Lipschitz normal form.
    pub normal_form: String,
    /// `g = sum_i |w_i|^(2 l_i) + (topological normal form of f)`.
    pub topological_form: String,
    /// Whether the germ is a topological submersion (`a_1 = 1`).
    pub submersion: bool,
}

/// Verifies the hypotheses of the deformation normal-form theorem for
/// `f(w, z) = p(w, conj w) + sum_i z_i^{a_i} (|z_i|^{2 b_i} + q~_i)`:
///
/// 1. the `l`-jet of `p` is `sum_{i<=m} |w_i|^{2 l_i}` with `l > m`
///    "sufficiently large" (operationalized as `l >= max(d, 2 max_i l_i)`)
///    and every `l_i >= 1`;
/// 2. the shape of the `q_i` is implicit in the inputs (the family exponents
///    carry the `|z_i|^{2 b_i}` part, the residual terms are passed
///    separately);
/// 3. the weights `d = lcm(a_i + 2 b_i)`, `r_i = d / (a_i + 2 b_i)` exist,
///    which requires every `a_i >= 1`;
/// 4. the residual terms satisfy `fl(sum q~_i) >= threshold` (non-strict),
///    with the threshold reading taken from the configuration.
pub fn check_deffam_hypotheses(
    p_jet_exponents: &[u32],
    l: u32,
    e: &ExponentData,
    q_tilde_terms: &[DeformationTerm],
    config: &DeterminacyConfig,
) -> Result<DeffamReport> {
    let mut failures: Vec<String> = Vec::new();

    // Hypothesis 1: jet shape bounds.
    let m = p_jet_exponents.len();
    if m == 0 {
        failures.push("hypothesis 1: the jet exponent vector is empty".into());
    }
    if let Some(&bad) = p_jet_exponents.iter().find(|&&li| li == 0) {
        failures.push(format!("hypothesis 1: jet exponent l_i = {bad} must be >= 1"));
    }

    // Hypothesis 3: the weighted type must exist.
    let weights = match weighted_type(e) {
        Ok(w) => Some(w),
        Err(_) => {
            failures.push(
                "hypothesis 3: weights undefined because some a_i = 0 (non-isolated case)".into(),
            );
            None
        }
    };

    let max_li = p_jet_exponents.iter().copied().max().unwrap_or(0);
    let d_int: u32 = weights
        .as_ref()
        .map(|w| w.d.to_integer().to_u32().unwrap_or(u32::MAX))
        .unwrap_or(0);
    let l_required = (m as u32 + 1).max(d_int).max(2 * max_li);
    if l < l_required {
        failures.push(format!(
            "hypothesis 1: l = {l} is below the required bound {l_required} \
             (max of m + 1, d, and 2 max l_i)"
        ));
    }

    // Hypothesis 4: residual filtration against the threshold.
    let mut threshold_used = BigRational::zero();
    let mut q_filtration = None;
    if let Some(ref w) = weights {
        threshold_used = config.threshold(w);
        let mut min_fl: Option<BigRational> = None;
        for term in q_tilde_terms {
            let fl = filtration(term.monomial(), w)?;
            min_fl = Some(match min_fl {
                None => fl,
                Some(cur) => cur.min(fl),
            });
        }
        q_filtration = min_fl;
        if let Some(ref fl) = q_filtration {
            if fl < &threshold_used {
                failures.push(format!(
                    "hypothesis 4: residual filtration {fl} is below the threshold \
                     {threshold_used}"
                ));
            }
        }
    }

    let p_part: Vec<String> = p_jet_exponents
        .iter()
        .enumerate()
        .map(|(i, &li)| format!("|w{}|^{}", i + 1, 2 * li))
        .collect();
    let p_part = p_part.join(" + ");
    let normal_form = format!("h = {p_part} + {e}");
    let topological_form = format!("g = {p_part} + {}", crate::classify::topological_normal_form(e));

    Ok(DeffamReport {
        satisfied: failures.is_empty(),
        failures,
        l_required,
        threshold_used,
        q_filtration,
        normal_form,
        topological_form,
        submersion: e.has_unit_a(),
    })
}
