//! Mixed polynomials `sum c z^nu conj(z)^mu` with exact coefficients.
//!
//! This module carries the symbolic layer: construction of the family member
//! `f(z) = sum_i z_i^(a_i + b_i) conj(z_i)^b_i`, expansion into real
//! coordinates, multiplicity, initial forms, the rank of the differential at
//! the origin, and per-coordinate real Jacobian blocks.

use crate::error::{Error, Result};
use crate::exact::GaussianRational;
use crate::exponents::ExponentData;
use crate::point::ComplexPoint;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use std::collections::HashMap;
use std::fmt;

/// A single mixed monomial `coeff * prod_i z_i^{nu_i} conj(z_i)^{mu_i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedMonomial {
    pub coeff: GaussianRational,
    pub nu: Vec<u32>,
    pub mu: Vec<u32>,
}

impl MixedMonomial {
    pub fn new(coeff: GaussianRational, nu: Vec<u32>, mu: Vec<u32>) -> Result<Self> {
        if nu.len() != mu.len() {
            return Err(Error::LengthMismatch {
                a_len: nu.len(),
                b_len: mu.len(),
            });
        }
        Ok(Self { coeff, nu, mu })
    }

    pub fn n(&self) -> usize {
        self.nu.len()
    }

    /// Total mixed degree `sum_i (nu_i + mu_i)`.
    pub fn total_degree(&self) -> u32 {
        self.nu.iter().sum::<u32>() + self.mu.iter().sum::<u32>()
    }

    pub fn eval_f64(&self, p: &ComplexPoint) -> Complex64 {
        let mut acc = self.coeff.to_f64();
        for i in 0..self.n() {
            if self.nu[i] > 0 {
                acc *= p[i].powu(self.nu[i]);
            }
            if self.mu[i] > 0 {
                acc *= p[i].conj().powu(self.mu[i]);
            }
        }
        acc
    }

    pub fn eval_exact(&self, p: &[GaussianRational]) -> GaussianRational {
        let mut acc = self.coeff.clone();
        for i in 0..self.n() {
            if self.nu[i] > 0 {
                acc = &acc * &p[i].pow(self.nu[i]);
            }
            if self.mu[i] > 0 {
                acc = &acc * &p[i].conj().pow(self.mu[i]);
            }
        }
        acc
    }
}

impl fmt::Display for MixedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.coeff)?;
        for i in 0..self.n() {
            if self.nu[i] == 1 {
                write!(f, " z{}", i + 1)?;
            } else if self.nu[i] > 1 {
                write!(f, " z{}^{}", i + 1, self.nu[i])?;
            }
            if self.mu[i] == 1 {
                write!(f, " conj(z{})", i + 1)?;
            } else if self.mu[i] > 1 {
                write!(f, " conj(z{})^{}", i + 1, self.mu[i])?;
            }
        }
        Ok(())
    }
}

/// A mixed polynomial in `n` complex variables, stored as combined monomials
/// in a deterministic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedPolynomial {
    n: usize,
    terms: Vec<MixedMonomial>,
}

impl MixedPolynomial {
    /// Combines like terms, drops zero coefficients, and fixes a canonical
    /// term order (by total degree, then exponents).
    pub fn new(n: usize, terms: Vec<MixedMonomial>) -> Result<Self> {
        let mut combined: HashMap<(Vec<u32>, Vec<u32>), GaussianRational> = HashMap::new();
        for t in terms {
            if t.n() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: t.n(),
                });
            }
            let entry = combined
                .entry((t.nu.clone(), t.mu.clone()))
                .or_insert_with(GaussianRational::zero);
            *entry += t.coeff;
        }
        let mut terms: Vec<MixedMonomial> = combined
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((nu, mu), coeff)| MixedMonomial { coeff, nu, mu })
            .collect();
        terms.sort_by(|s, t| {
            (s.total_degree(), &s.nu, &s.mu).cmp(&(t.total_degree(), &t.nu, &t.mu))
        });
        Ok(Self { n, terms })
    }

    /// The family member `sum_i z_i^(a_i + b_i) conj(z_i)^b_i`.
    pub fn family(e: &ExponentData) -> Self {
        let n = e.n();
        let terms = (0..n)
            .map(|i| {
                let (ai, bi) = e.pair(i);
                let mut nu = vec![0u32; n];
                let mut mu = vec![0u32; n];
                nu[i] = ai + bi;
                mu[i] = bi;
                MixedMonomial {
                    coeff: GaussianRational::one(),
                    nu,
                    mu,
                }
            })
            .collect();
        Self::new(n, terms).expect("family terms are well formed")
    }

    /// The holomorphic member `sum_i z_i^{c_i}` (every `c_i >= 1`).
    pub fn holomorphic(c: &[u32]) -> Result<Self> {
        if c.is_empty() {
            return Err(Error::LengthMismatch { a_len: 0, b_len: 0 });
        }
        if c.iter().any(|&ci| ci == 0) {
            return Err(Error::InvalidParameter(
                "holomorphic exponents must all be >= 1".into(),
            ));
        }
        let n = c.len();
        let terms = (0..n)
            .map(|i| {
                let mut nu = vec![0u32; n];
                nu[i] = c[i];
                MixedMonomial {
                    coeff: GaussianRational::one(),
                    nu,
                    mu: vec![0u32; n],
                }
            })
            .collect();
        Self::new(n, terms)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[MixedMonomial] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The polynomial plus one extra monomial.
    pub fn with_term(&self, extra: MixedMonomial) -> Result<Self> {
        let mut terms = self.terms.clone();
        terms.push(extra);
        Self::new(self.n, terms)
    }

    pub fn eval_f64(&self, p: &ComplexPoint) -> Complex64 {
        debug_assert_eq!(p.dim(), self.n);
        self.terms.iter().map(|t| t.eval_f64(p)).sum()
    }

    pub fn eval_exact(&self, p: &[GaussianRational]) -> Result<GaussianRational> {
        if p.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: p.len(),
            });
        }
        let mut acc = GaussianRational::zero();
        for t in &self.terms {
            acc += t.eval_exact(p);
        }
        Ok(acc)
    }

    /// Expands into real coordinates `(x_1, y_1, ..., x_n, y_n)`.
    pub fn real_expansion(&self) -> RealExpansion {
        let mut combined: HashMap<Vec<u32>, GaussianRational> = HashMap::new();
        for t in &self.terms {
            for (powers, coeff) in expand_monomial(t) {
                let entry = combined.entry(powers).or_insert_with(GaussianRational::zero);
                *entry += coeff;
            }
        }
        let mut re = Vec::new();
        let mut im = Vec::new();
        for (powers, coeff) in combined {
            if !coeff.re.is_zero() {
                re.push(RealTerm {
                    coeff: coeff.re.clone(),
                    powers: powers.clone(),
                });
            }
            if !coeff.im.is_zero() {
                im.push(RealTerm {
                    coeff: coeff.im,
                    powers,
                });
            }
        }
        re.sort_by(|s, t| (s.total_degree(), &s.powers).cmp(&(t.total_degree(), &t.powers)));
        im.sort_by(|s, t| (s.total_degree(), &s.powers).cmp(&(t.total_degree(), &t.powers)));
        RealExpansion { n: self.n, re, im }
    }

    /// The multiplicity: the lowest total degree present in the Taylor
    /// expansion of `(Re f, Im f)` in the real coordinates.
    pub fn multiplicity(&self) -> Result<u32> {
        self.real_expansion()
            .min_total_degree()
            .ok_or(Error::ZeroPolynomial("multiplicity"))
    }

    /// The sum of the monomials of minimal total mixed degree. Distinct mixed
    /// monomials are linearly independent as real-analytic functions, so this
    /// agrees with the lowest-degree part of the real expansion.
    pub fn initial_form(&self) -> Result<MixedPolynomial> {
        let min = self
            .terms
            .iter()
            .map(|t| t.total_degree())
            .min()
            .ok_or(Error::ZeroPolynomial("initial form"))?;
        let terms = self
            .terms
            .iter()
            .filter(|t| t.total_degree() == min)
            .cloned()
            .collect();
        Self::new(self.n, terms)
    }

    /// Rank of the differential at the origin as a real-linear map
    /// `R^{2n} -> R^2`, computed exactly from the degree-one real terms.
    pub fn rank_at_origin(&self) -> u32 {
        let expansion = self.real_expansion();
        let (row_re, row_im) = expansion.linear_rows();
        let re_zero = row_re.iter().all(|c| c.is_zero());
        let im_zero = row_im.iter().all(|c| c.is_zero());
        if re_zero && im_zero {
            return 0;
        }
        if re_zero || im_zero {
            return 1;
        }
        for i in 0..row_re.len() {
            for j in (i + 1)..row_re.len() {
                let minor = &row_re[i] * &row_im[j] - &row_re[j] * &row_im[i];
                if !minor.is_zero() {
                    return 2;
                }
            }
        }
        1
    }

    /// Wirtinger derivative with respect to `z_i`.
    pub fn wirtinger_z(&self, i: usize) -> MixedPolynomial {
        let terms = self
            .terms
            .iter()
            .filter(|t| t.nu[i] > 0)
            .map(|t| {
                let mut nu = t.nu.clone();
                let factor = GaussianRational::integer(nu[i] as i64);
                nu[i] -= 1;
                MixedMonomial {
                    coeff: &t.coeff * &factor,
                    nu,
                    mu: t.mu.clone(),
                }
            })
            .collect();
        Self::new(self.n, terms).expect("derivative terms are well formed")
    }

    /// Wirtinger derivative with respect to `conj(z_i)`.
    pub fn wirtinger_zbar(&self, i: usize) -> MixedPolynomial {
        let terms = self
            .terms
            .iter()
            .filter(|t| t.mu[i] > 0)
            .map(|t| {
                let mut mu = t.mu.clone();
                let factor = GaussianRational::integer(mu[i] as i64);
                mu[i] -= 1;
                MixedMonomial {
                    coeff: &t.coeff * &factor,
                    nu: t.nu.clone(),
                    mu,
                }
            })
            .collect();
        Self::new(self.n, terms).expect("derivative terms are well formed")
    }

    /// The real 2x2 Jacobian block of coordinate `i` at `p`:
    /// rows `(Re f, Im f)`, columns `(d/dx_i, d/dy_i)`.
    pub fn jacobian_block(&self, i: usize, p: &ComplexPoint) -> [[f64; 2]; 2] {
        let fz = self.wirtinger_z(i).eval_f64(p);
        let fzb = self.wirtinger_zbar(i).eval_f64(p);
        let dfdx = fz + fzb;
        let dfdy = Complex64::i() * (fz - fzb);
        [[dfdx.re, dfdy.re], [dfdx.im, dfdy.im]]
    }

    /// All `n` Jacobian blocks at `p`, i.e. the full real Jacobian as a
    /// 2 x 2n matrix split into per-coordinate column pairs.
    pub fn jacobian_blocks(&self, p: &ComplexPoint) -> Vec<[[f64; 2]; 2]> {
        (0..self.n).map(|i| self.jacobian_block(i, p)).collect()
    }
}

impl fmt::Display for MixedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Closed-form determinant of the family's `i`-th Jacobian block:
/// `a (a + 2b) |z_i|^(2(a + 2b - 1))`. It vanishes identically exactly when
/// `a = 0`, which is why the singularity is isolated precisely for families
/// with every `a_i >= 1`.
pub fn family_block_determinant(a: u32, b: u32, z_abs: f64) -> f64 {
    let m = a + 2 * b;
    if m == 0 {
        return 0.0;
    }
    f64::from(a * m) * z_abs.powi(2 * (m as i32 - 1))
}

/// Whether the family member has an isolated singularity at the origin.
///
/// Coordinates act independently, and the block determinant above shows block
/// `i` is invertible off `z_i = 0` exactly when `a_i >= 1`; a coordinate with
/// `a_i = 0` contributes the real-valued term `|z_i|^(2 b_i)` whose block has
/// rank at most one everywhere, producing a positive-dimensional singular set.
pub fn has_isolated_singularity(e: &ExponentData) -> bool {
    e.all_positive()
}

/// Builds the polynomial `sum_i z_i^(a_i + b_i) conj(z_i)^b_i` for the given
/// exponent data (alias of [`MixedPolynomial::family`]).
pub fn build_family(e: &ExponentData) -> MixedPolynomial {
    MixedPolynomial::family(e)
}

/// The 2x2 complex matrix of one coordinate term `z^(a+b) conj(z)^b`, built
/// from its four Wirtinger-style derivative combinations, together with its
/// determinant. Writing `A = (a+b) z^(a+b-1) conj(z)^b`, `B = b z^(b-1)
/// conj(z)^(a+b)`, `C = b z^(a+b) conj(z)^(b-1)` and `D = (a+b) z^b
/// conj(z)^(a+b-1)`, the matrix is
///
/// ```text
///   (1/2) * [ A + B   C + D ]
///           [ A - B   C - D ]
/// ```
///
/// whose determinant is `(1/2) (B C - A D) = (1/2) (b^2 - (a+b)^2)
/// |z|^(2(a+2b-1))`, a negative real multiple of `|z|^(2(a+2b-1))` whenever
/// `a >= 1` and zero identically when `a = 0`. It equals `-1/2` times the
/// determinant of the real 2x2 Jacobian block of `(Re f, Im f)` in `(x, y)`.
///
/// Requires `a + b >= 1` (the term must be non-constant).
pub fn jacobian_term(a: u32, b: u32, z: Complex64) -> Result<([[Complex64; 2]; 2], Complex64)> {
    if a + b == 0 {
        return Err(Error::InvalidParameter(
            "jacobian_term requires a non-constant term (a + b >= 1)".into(),
        ));
    }
    // Powers with the convention that a zero coefficient suppresses the
    // factor entirely, so exponents like b - 1 are never formed when b = 0.
    let monomial = |coeff: u32, zp: i64, cp: i64| -> Complex64 {
        if coeff == 0 {
            return Complex64::new(0.0, 0.0);
        }
        let zc = z.conj();
        Complex64::new(f64::from(coeff), 0.0) * z.powi(zp as i32) * zc.powi(cp as i32)
    };
    let ab = a + b;
    let big_a = monomial(ab, i64::from(ab) - 1, i64::from(b));
    let big_b = monomial(b, i64::from(b) - 1, i64::from(ab));
    let big_c = monomial(b, i64::from(ab), i64::from(b) - 1);
    let big_d = monomial(ab, i64::from(b), i64::from(ab) - 1);
    let half = Complex64::new(0.5, 0.0);
    let matrix = [
        [half * (big_a + big_b), half * (big_c + big_d)],
        [half * (big_a - big_b), half * (big_c - big_d)],
    ];
    let det = matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0];
    Ok((matrix, det))
}

/// Closed form for the determinant returned by [`jacobian_term`]:
/// `(1/2) (b^2 - (a+b)^2) |z|^(2(a+2b-1))`.
pub fn jacobian_term_determinant(a: u32, b: u32, z_abs: f64) -> f64 {
    let m = a + 2 * b;
    if m == 0 {
        return 0.0;
    }
    let bb = f64::from(b) * f64::from(b);
    let abab = f64::from(a + b) * f64::from(a + b);
    0.5 * (bb - abab) * z_abs.powi(2 * (m as i32 - 1))
}

/// One real Taylor term `coeff * prod x_i^{p_{2i}} y_i^{p_{2i+1}}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealTerm {
    pub coeff: BigRational,
    /// Powers in the order `(x_1, y_1, ..., x_n, y_n)`.
    pub powers: Vec<u32>,
}

impl RealTerm {
    pub fn total_degree(&self) -> u32 {
        self.powers.iter().sum()
    }
}

/// The expansion of a mixed polynomial into real coordinates: exact Taylor
/// terms of `Re f` and `Im f` in `(x_1, y_1, ..., x_n, y_n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealExpansion {
    n: usize,
    re: Vec<RealTerm>,
    im: Vec<RealTerm>,
}

impl RealExpansion {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn re_terms(&self) -> &[RealTerm] {
        &self.re
    }

    pub fn im_terms(&self) -> &[RealTerm] {
        &self.im
    }

    /// The smallest total degree among all nonzero terms of `Re f` and
    /// `Im f`, or `None` for the zero polynomial.
    pub fn min_total_degree(&self) -> Option<u32> {
        self.re
            .iter()
            .chain(&self.im)
            .map(RealTerm::total_degree)
            .min()
    }

    /// Evaluates `(Re f, Im f)` at interleaved real coordinates.
    pub fn eval(&self, reals: &[f64]) -> (f64, f64) {
        let eval_part = |terms: &[RealTerm]| {
            terms
                .iter()
                .map(|t| {
                    let mut prod = t.coeff.to_f64().unwrap_or(f64::NAN);
                    for (v, &p) in reals.iter().zip(&t.powers) {
                        if p > 0 {
                            prod *= v.powi(p as i32);
                        }
                    }
                    prod
                })
                .sum::<f64>()
        };
        (eval_part(&self.re), eval_part(&self.im))
    }

    /// The two rows of the linear part: coefficients of each real variable in
    /// `Re f` and in `Im f`.
    pub fn linear_rows(&self) -> (Vec<BigRational>, Vec<BigRational>) {
        let mut row_re = vec![BigRational::zero(); 2 * self.n];
        let mut row_im = vec![BigRational::zero(); 2 * self.n];
        let fill = |terms: &[RealTerm], row: &mut Vec<BigRational>| {
            for t in terms {
                if t.total_degree() == 1 {
                    let var = t.powers.iter().position(|&p| p == 1).unwrap();
                    row[var] = t.coeff.clone();
                }
            }
        };
        fill(&self.re, &mut row_re);
        fill(&self.im, &mut row_im);
        (row_re, row_im)
    }
}

/// Expands one monomial `c z^nu conj(z)^mu` into real Taylor terms by
/// binomial expansion of each factor `(x + iy)` and `(x - iy)`.
fn expand_monomial(t: &MixedMonomial) -> HashMap<Vec<u32>, GaussianRational> {
    let n = t.n();
    let mut acc: HashMap<Vec<u32>, GaussianRational> = HashMap::new();
    acc.insert(vec![0u32; 2 * n], t.coeff.clone());
    for i in 0..n {
        acc = multiply_factor_power(acc, i, t.nu[i], false);
        acc = multiply_factor_power(acc, i, t.mu[i], true);
    }
    acc
}

/// Multiplies every entry of `acc` by `(x_i + iy_i)^e` (or its conjugate).
fn multiply_factor_power(
    acc: HashMap<Vec<u32>, GaussianRational>,
    i: usize,
    e: u32,
    conjugate: bool,
) -> HashMap<Vec<u32>, GaussianRational> {
    if e == 0 {
        return acc;
    }
    // Precompute binomial(e, k) * (+-i)^k.
    let factors: Vec<GaussianRational> = (0..=e)
        .map(|k| {
            let mut ik = GaussianRational::i().pow(k);
            if conjugate && k % 2 == 1 {
                ik = -ik;
            }
            let bin = BigRational::from_integer(BigInt::from(binomial(u64::from(e), u64::from(k))));
            &GaussianRational::new(bin, BigRational::zero()) * &ik
        })
        .collect();
    let mut out: HashMap<Vec<u32>, GaussianRational> = HashMap::new();
    for (powers, coeff) in acc {
        for k in 0..=e {
            let mut p = powers.clone();
            p[2 * i] += e - k;
            p[2 * i + 1] += k;
            let contribution = &coeff * &factors[k as usize];
            let entry = out.entry(p).or_insert_with(GaussianRational::zero);
            *entry += contribution;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family(a: &[u32], b: &[u32]) -> MixedPolynomial {
        MixedPolynomial::family(&ExponentData::new(a.to_vec(), b.to_vec()).unwrap())
    }

    fn sample_points(n: usize) -> Vec<ComplexPoint> {
        // Fixed awkward points; enough to catch any expansion mistake.
        let vals = [
            Complex64::new(0.731, -0.244),
            Complex64::new(-0.552, 0.918),
            Complex64::new(0.125, 0.333),
            Complex64::new(-0.87, -0.41),
            Complex64::new(1.21, 0.07),
        ];
        (0..4)
            .map(|s| ComplexPoint::new((0..n).map(|i| vals[(s + 2 * i) % vals.len()]).collect()))
            .collect()
    }

    #[test]
    fn family_terms_have_expected_exponents() {
        let f = family(&[1, 2], &[1, 1]);
        assert_eq!(f.terms().len(), 2);
        assert_eq!(f.terms()[0].nu, vec![2, 0]);
        assert_eq!(f.terms()[0].mu, vec![1, 0]);
        assert_eq!(f.terms()[1].nu, vec![0, 3]);
        assert_eq!(f.terms()[1].mu, vec![0, 1]);
    }

    #[test]
    fn like_terms_combine_and_zero_terms_drop() {
        let mono = |c: i64, nu: Vec<u32>, mu: Vec<u32>| MixedMonomial {
            coeff: GaussianRational::integer(c),
            nu,
            mu,
        };
        let p = MixedPolynomial::new(
            1,
            vec![
                mono(2, vec![1], vec![1]),
                mono(3, vec![1], vec![1]),
                mono(1, vec![2], vec![0]),
                mono(-1, vec![2], vec![0]),
            ],
        )
        .unwrap();
        assert_eq!(p.terms().len(), 1);
        assert_eq!(p.terms()[0].coeff, GaussianRational::integer(5));
    }

    #[test]
    fn real_expansion_matches_direct_evaluation() {
        for f in [
            family(&[1, 2], &[1, 1]),
            family(&[0, 3], &[2, 0]),
            family(&[2, 2, 3], &[0, 1, 2]),
        ] {
            let expansion = f.real_expansion();
            for p in sample_points(f.n()) {
                let direct = f.eval_f64(&p);
                let (re, im) = expansion.eval(&p.to_reals());
                assert!(
                    (direct.re - re).abs() < 1e-10 && (direct.im - im).abs() < 1e-10,
                    "expansion disagrees at {p:?}: {direct} vs ({re}, {im})"
                );
            }
        }
    }

    #[test]
    fn multiplicity_is_min_of_a_plus_2b() {
        assert_eq!(family(&[1, 2], &[1, 1]).multiplicity().unwrap(), 3);
        assert_eq!(family(&[2, 2], &[0, 0]).multiplicity().unwrap(), 2);
        assert_eq!(family(&[0, 3], &[2, 0]).multiplicity().unwrap(), 3);
        assert_eq!(
            MixedPolynomial::holomorphic(&[2, 3]).unwrap().multiplicity().unwrap(),
            2
        );
        let zero = MixedPolynomial::new(2, vec![]).unwrap();
        assert!(matches!(zero.multiplicity(), Err(Error::ZeroPolynomial(_))));
    }

    #[test]
    fn multiplicity_agrees_with_min_mixed_degree() {
        for e in ExponentData::enumerate_grid(2, 3, 2) {
            let f = MixedPolynomial::family(&e);
            let min_mixed = f.terms().iter().map(|t| t.total_degree()).min().unwrap();
            assert_eq!(f.multiplicity().unwrap(), min_mixed, "family {e}");
            assert_eq!(f.multiplicity().unwrap(), e.multiplicity(), "family {e}");
        }
    }

    #[test]
    fn initial_form_keeps_lowest_degree_terms() {
        let f = family(&[1, 3], &[1, 0]);
        // Degrees are 3 and 3, so the initial form is the whole polynomial.
        assert_eq!(f.initial_form().unwrap(), f);
        let g = family(&[2, 3], &[1, 1]);
        // Degrees 4 and 5.
        let init = g.initial_form().unwrap();
        assert_eq!(init.terms().len(), 1);
        assert_eq!(init.terms()[0].nu, vec![3, 0]);
    }

    #[test]
    fn rank_at_origin_cases() {
        // A linear coordinate gives full rank.
        assert_eq!(family(&[1, 2], &[0, 0]).rank_at_origin(), 2);
        // Multiplicity three: no linear part at all.
        assert_eq!(family(&[1, 2], &[1, 1]).rank_at_origin(), 0);
        // f = z + conj(z) = 2x has a one-dimensional image.
        let p = MixedPolynomial::new(
            1,
            vec![
                MixedMonomial::new(GaussianRational::one(), vec![1], vec![0]).unwrap(),
                MixedMonomial::new(GaussianRational::one(), vec![0], vec![1]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(p.rank_at_origin(), 1);
    }

    #[test]
    fn jacobian_block_matches_finite_differences() {
        let f = family(&[1, 2], &[1, 1]);
        let p = ComplexPoint::new(vec![
            Complex64::new(0.4, -0.3),
            Complex64::new(-0.2, 0.5),
        ]);
        let h = 1e-6;
        for i in 0..2 {
            let block = f.jacobian_block(i, &p);
            for (col, real_var) in [(0usize, 0usize), (1, 1)] {
                let mut reals_plus = p.to_reals();
                let mut reals_minus = p.to_reals();
                reals_plus[2 * i + real_var] += h;
                reals_minus[2 * i + real_var] -= h;
                let fp = f.eval_f64(&ComplexPoint::from_reals(&reals_plus).unwrap());
                let fm = f.eval_f64(&ComplexPoint::from_reals(&reals_minus).unwrap());
                let dre = (fp.re - fm.re) / (2.0 * h);
                let dim = (fp.im - fm.im) / (2.0 * h);
                assert!((block[0][col] - dre).abs() < 1e-6, "d(Re)/d col {col}");
                assert!((block[1][col] - dim).abs() < 1e-6, "d(Im)/d col {col}");
            }
        }
    }

    #[test]
    fn block_determinant_matches_closed_form() {
        for (a, b) in [(1u32, 0u32), (2, 1), (3, 2), (0, 2), (1, 3)] {
            let e = ExponentData::new(vec![a.max(1), a], vec![0, b]);
            // Build a two-coordinate family whose second block is (a, b); when
            // a = 0 pair with a positive first coordinate to stay valid.
            let e = match e {
                Ok(e) => e,
                Err(_) => ExponentData::new(vec![2, a], vec![0, b]).unwrap(),
            };
            let f = MixedPolynomial::family(&e);
            // The block for the (a, b) coordinate sits wherever canonical
            // order placed it.
            let idx = (0..2).find(|&i| e.pair(i) == (a, b)).unwrap();
            let p = ComplexPoint::new(vec![
                Complex64::new(0.37, 0.61),
                Complex64::new(-0.53, 0.29),
            ]);
            let block = f.jacobian_block(idx, &p);
            let det = block[0][0] * block[1][1] - block[0][1] * block[1][0];
            let expect = family_block_determinant(a, b, p[idx].norm());
            assert!(
                (det - expect).abs() < 1e-10 * (1.0 + expect.abs()),
                "(a,b)=({a},{b}): det {det} vs closed form {expect}"
            );
        }
    }

    #[test]
    fn isolated_singularity_iff_all_a_positive() {
        let iso = ExponentData::new(vec![1, 2], vec![1, 1]).unwrap();
        assert!(has_isolated_singularity(&iso));
        let noniso = ExponentData::new(vec![0, 2], vec![2, 1]).unwrap();
        assert!(!has_isolated_singularity(&noniso));

        // Witness for the non-isolated case: away from the origin on the
        // degenerate subspace, every 2x2 minor of the full Jacobian vanishes.
        let f = MixedPolynomial::family(&noniso);
        let p = ComplexPoint::new(vec![Complex64::new(0.8, -0.6), Complex64::new(0.0, 0.0)]);
        let blocks = f.jacobian_blocks(&p);
        let cols: Vec<[f64; 2]> = blocks
            .iter()
            .flat_map(|b| [[b[0][0], b[1][0]], [b[0][1], b[1][1]]])
            .collect();
        for i in 0..cols.len() {
            for j in (i + 1)..cols.len() {
                let minor = cols[i][0] * cols[j][1] - cols[j][0] * cols[i][1];
                assert!(minor.abs() < 1e-12, "minor ({i},{j}) = {minor}");
            }
        }
    }

    #[test]
    fn exact_evaluation_agrees_with_f64() {
        let f = family(&[1, 2], &[1, 1]);
        let p = vec![
            GaussianRational::from_ratios(1, 2, -1, 3),
            GaussianRational::from_ratios(2, 5, 1, 4),
        ];
        let exact = f.eval_exact(&p).unwrap().to_f64();
        let approx = f.eval_f64(&ComplexPoint::new(vec![
            Complex64::new(0.5, -1.0 / 3.0),
            Complex64::new(0.4, 0.25),
        ]));
        assert!((exact - approx).norm() < 1e-12);
    }

    #[test]
    fn jacobian_term_determinant_closed_form_and_sign() {
        // On the unit circle with (a, b) = (1, 1): (1/2)(1 - 4) = -3/2.
        let z = Complex64::new(0.6, 0.8);
        let (_, det) = jacobian_term(1, 1, z).unwrap();
        assert!((det - Complex64::new(-1.5, 0.0)).norm() < 1e-12, "det {det}");
        assert!((jacobian_term_determinant(1, 1, 1.0) + 1.5).abs() < 1e-15);

        // A purely radial coordinate (a = 0) has identically zero determinant.
        let (_, det) = jacobian_term(0, 2, Complex64::new(0.3, -1.1)).unwrap();
        assert!(det.norm() < 1e-12);

        // Random points across exponent pairs: the determinant is real,
        // negative for a >= 1, and matches the closed form to high accuracy.
        for (a, b) in [(1u32, 0u32), (2, 0), (2, 1), (3, 2), (1, 3), (4, 1)] {
            for s in 0..8 {
                let t = 0.3 + 0.2 * s as f64;
                let z = Complex64::new(t * (1.3 * t).cos(), t * (1.3 * t).sin());
                let (_, det) = jacobian_term(a, b, z).unwrap();
                let expect = jacobian_term_determinant(a, b, z.norm());
                assert!(det.im.abs() < 1e-12 * (1.0 + expect.abs()));
                assert!(
                    (det.re - expect).abs() < 1e-12 * (1.0 + expect.abs()),
                    "(a,b)=({a},{b}): {det} vs {expect}"
                );
                assert!(expect < 0.0);
            }
        }

        assert!(jacobian_term(0, 0, Complex64::new(1.0, 0.0)).is_err());
    }

    #[test]
    fn complex_and_real_jacobian_determinants_are_proportional() {
        // The complex 2x2 matrix determinant is -1/2 times the determinant of
        // the real Jacobian block in (x, y).
        for (a, b) in [(1u32, 1u32), (2, 1), (3, 0), (2, 3)] {
            let e = ExponentData::new(vec![a, a.max(2)], vec![b, 0]).unwrap();
            let idx = (0..2).find(|&i| e.pair(i) == (a, b)).unwrap();
            let f = MixedPolynomial::family(&e);
            let p = ComplexPoint::new(vec![
                Complex64::new(0.45, -0.71),
                Complex64::new(0.33, 0.12),
            ]);
            let block = f.jacobian_block(idx, &p);
            let real_det = block[0][0] * block[1][1] - block[0][1] * block[1][0];
            let (_, complex_det) = jacobian_term(a, b, p[idx]).unwrap();
            assert!(
                (complex_det.re + 0.5 * real_det).abs() < 1e-10 * (1.0 + real_det.abs()),
                "(a,b)=({a},{b}): {complex_det} vs real {real_det}"
            );
        }
    }
}
