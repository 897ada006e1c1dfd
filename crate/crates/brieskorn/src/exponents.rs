//! Exponent data for the mixed family `f(z) = sum_i z_i^(a_i + b_i) conj(z_i)^b_i`.

use crate::error::{Error, Result};
use serde::Serialize;
use std::fmt;

/// Validated exponent pairs `(a_i, b_i)` in canonical coordinate order.
///
/// Construction sorts coordinates so that `a` is nondecreasing (a stable sort,
/// so ties keep their input order) and records the permutation that was
/// applied. The invariants enforced are:
///
/// * `a` and `b` have the same nonzero length,
/// * at least one `a_i >= 1` (otherwise the map is real-valued), and
/// * no coordinate has `a_i = b_i = 0` (that term would be the constant `1`).
#[derive(Debug, Clone, Serialize)]
pub struct ExponentData {
    a: Vec<u32>,
    b: Vec<u32>,
    /// `permutation[k]` is the input position of canonical coordinate `k`,
    /// so `a[k] == a_input[permutation[k]]`.
    permutation: Vec<usize>,
}

impl PartialEq for ExponentData {
    /// Equality compares the canonical exponents only; the record of how the
    /// input happened to be ordered is not part of the germ.
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b
    }
}

impl Eq for ExponentData {}

impl std::hash::Hash for ExponentData {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.b.hash(state);
    }
}

impl ExponentData {
    pub fn new(a: Vec<u32>, b: Vec<u32>) -> Result<Self> {
        if a.is_empty() || a.len() != b.len() {
            return Err(Error::LengthMismatch {
                a_len: a.len(),
                b_len: b.len(),
            });
        }
        if let Some(index) = (0..a.len()).find(|&i| a[i] == 0 && b[i] == 0) {
            return Err(Error::ConstantTerm { index });
        }
        if a.iter().all(|&ai| ai == 0) {
            return Err(Error::DegenerateFamily);
        }
        let mut permutation: Vec<usize> = (0..a.len()).collect();
        permutation.sort_by_key(|&i| a[i]);
        let sorted_a = permutation.iter().map(|&i| a[i]).collect();
        let sorted_b = permutation.iter().map(|&i| b[i]).collect();
        Ok(Self {
            a: sorted_a,
            b: sorted_b,
            permutation,
        })
    }

    pub fn from_pairs(pairs: &[(u32, u32)]) -> Result<Self> {
        Self::new(
            pairs.iter().map(|p| p.0).collect(),
            pairs.iter().map(|p| p.1).collect(),
        )
    }

    /// Number of complex coordinates.
    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[u32] {
        &self.a
    }

    pub fn b(&self) -> &[u32] {
        &self.b
    }

    pub fn pair(&self, i: usize) -> (u32, u32) {
        (self.a[i], self.b[i])
    }

    /// The coordinate permutation applied during canonicalization:
    /// `permutation()[k]` is the input position of canonical coordinate `k`.
    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    /// Per-coordinate multiplicities `m_i = a_i + 2 b_i`.
    pub fn multiplicities(&self) -> Vec<u32> {
        self.a
            .iter()
            .zip(&self.b)
            .map(|(&ai, &bi)| ai + 2 * bi)
            .collect()
    }

    /// The multiplicity of the germ: `min_i (a_i + 2 b_i)`.
    pub fn multiplicity(&self) -> u32 {
        self.multiplicities().into_iter().min().unwrap()
    }

    /// Multiplicities as a sorted multiset (used for invariance comparisons).
    pub fn multiplicity_multiset(&self) -> Vec<u32> {
        let mut m = self.multiplicities();
        m.sort_unstable();
        m
    }

    /// `true` when every `a_i >= 1`.
    pub fn all_positive(&self) -> bool {
        self.a[0] >= 1
    }

    /// `true` when some `a_i = 1`.
    pub fn has_unit_a(&self) -> bool {
        self.a.contains(&1)
    }

    /// `true` when some coordinate has `(a_i, b_i) = (1, 0)`, which makes the
    /// zero set a smooth graph near the origin.
    pub fn has_regular_pair(&self) -> bool {
        self.a
            .iter()
            .zip(&self.b)
            .any(|(&ai, &bi)| ai == 1 && bi == 0)
    }

    /// Canonical indices with `a_i = 0` (always a leading block after
    /// canonicalization).
    pub fn zero_block(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.a[i] == 0).collect()
    }

    /// `true` when every `b_i = 0`, i.e. the family member is the holomorphic
    /// map `sum z_i^{a_i}`.
    pub fn is_holomorphic(&self) -> bool {
        self.b.iter().all(|&bi| bi == 0)
    }

    /// Whether some coordinate permutation carries `(a, b)` onto
    /// `(other.a, other.b)` jointly. Since both sides are sorted by `a`, this
    /// holds exactly when the `b`-values agree as multisets within each block
    /// of equal `a`-value.
    pub fn permutation_equivalent(&self, other: &Self) -> bool {
        if self.a != other.a {
            return false;
        }
        let n = self.n();
        let mut start = 0;
        while start < n {
            let mut end = start + 1;
            while end < n && self.a[end] == self.a[start] {
                end += 1;
            }
            let mut lhs: Vec<u32> = self.b[start..end].to_vec();
            let mut rhs: Vec<u32> = other.b[start..end].to_vec();
            lhs.sort_unstable();
            rhs.sort_unstable();
            if lhs != rhs {
                return false;
            }
            start = end;
        }
        true
    }

    /// Every valid exponent family with `n` coordinates, `a_i <= a_max`, and
    /// `b_i <= b_max`, one representative per coordinate-permutation class.
    pub fn enumerate_grid(n: usize, a_max: u32, b_max: u32) -> Vec<ExponentData> {
        let mut pairs = Vec::new();
        for a in 0..=a_max {
            for b in 0..=b_max {
                if a == 0 && b == 0 {
                    continue;
                }
                pairs.push((a, b));
            }
        }
        let mut out = Vec::new();
        let mut chosen = Vec::with_capacity(n);
        fn recurse(
            pairs: &[(u32, u32)],
            from: usize,
            remaining: usize,
            chosen: &mut Vec<(u32, u32)>,
            out: &mut Vec<ExponentData>,
        ) {
            if remaining == 0 {
                if let Ok(data) = ExponentData::from_pairs(chosen) {
                    out.push(data);
                }
                return;
            }
            for k in from..pairs.len() {
                chosen.push(pairs[k]);
                recurse(pairs, k, remaining - 1, chosen, out);
                chosen.pop();
            }
        }
        recurse(&pairs, 0, n, &mut chosen, &mut out);
        out
    }
}

impl fmt::Display for ExponentData {
    /// Renders the family member, e.g. `z1^2 conj(z1) + z2^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let (ai, bi) = (self.a[i], self.b[i]);
            let outer = ai + bi;
            if outer == 1 {
                write!(f, "z{}", i + 1)?;
            } else {
                write!(f, "z{}^{}", i + 1, outer)?;
            }
            if bi == 1 {
                write!(f, " conj(z{})", i + 1)?;
            } else if bi > 1 {
                write!(f, " conj(z{})^{}", i + 1, bi)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_sorts_by_a_and_remembers_the_permutation() {
        let e = ExponentData::new(vec![3, 1, 2], vec![0, 5, 1]).unwrap();
        assert_eq!(e.a(), &[1, 2, 3]);
        assert_eq!(e.b(), &[5, 1, 0]);
        assert_eq!(e.permutation(), &[1, 2, 0]);
    }

    #[test]
    fn equal_a_values_keep_their_input_order() {
        let e = ExponentData::new(vec![2, 2], vec![7, 3]).unwrap();
        assert_eq!(e.b(), &[7, 3]);
        assert_eq!(e.permutation(), &[0, 1]);
    }

    #[test]
    fn validation_rejects_bad_input() {
        assert!(matches!(
            ExponentData::new(vec![1, 2], vec![0]),
            Err(Error::LengthMismatch { a_len: 2, b_len: 1 })
        ));
        assert!(matches!(
            ExponentData::new(vec![], vec![]),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            ExponentData::new(vec![0, 0], vec![1, 2]),
            Err(Error::DegenerateFamily)
        ));
        assert!(matches!(
            ExponentData::new(vec![1, 0], vec![2, 0]),
            Err(Error::ConstantTerm { index: 1 })
        ));
    }

    #[test]
    fn multiplicities_formula() {
        let e = ExponentData::new(vec![1, 2], vec![1, 1]).unwrap();
        assert_eq!(e.multiplicities(), vec![3, 4]);
        assert_eq!(e.multiplicity(), 3);
        let e = ExponentData::new(vec![0, 3], vec![2, 0]).unwrap();
        assert_eq!(e.multiplicities(), vec![4, 3]);
        assert_eq!(e.multiplicity(), 3);
    }

    #[test]
    fn equality_ignores_input_order() {
        let e1 = ExponentData::new(vec![3, 1], vec![0, 5]).unwrap();
        let e2 = ExponentData::new(vec![1, 3], vec![5, 0]).unwrap();
        assert_eq!(e1, e2);
    }

    #[test]
    fn permutation_equivalence_within_equal_a_blocks() {
        let e1 = ExponentData::new(vec![2, 2], vec![0, 1]).unwrap();
        let e2 = ExponentData::new(vec![2, 2], vec![1, 0]).unwrap();
        assert!(e1.permutation_equivalent(&e2));

        // Same multiplicity multiset {3, 5} but no joint permutation.
        let e3 = ExponentData::new(vec![1, 3], vec![2, 0]).unwrap();
        let e4 = ExponentData::new(vec![1, 3], vec![1, 1]).unwrap();
        assert_eq!(e3.multiplicity_multiset(), e4.multiplicity_multiset());
        assert!(!e3.permutation_equivalent(&e4));
    }

    #[test]
    fn grid_enumeration_counts_permutation_classes() {
        // Valid pairs with entries <= 1 are (0,1), (1,0), (1,1); of the six
        // two-coordinate multisets only {(0,1), (0,1)} is invalid.
        let grid = ExponentData::enumerate_grid(2, 1, 1);
        assert_eq!(grid.len(), 5);
        let unique: std::collections::HashSet<_> = grid.iter().cloned().collect();
        assert_eq!(unique.len(), 5);
    }

    #[test]
    fn display_renders_terms() {
        let e = ExponentData::new(vec![1, 2], vec![1, 0]).unwrap();
        assert_eq!(e.to_string(), "z1^2 conj(z1) + z2^2");
        let e = ExponentData::new(vec![0, 1], vec![3, 0]).unwrap();
        assert_eq!(e.to_string(), "z1^3 conj(z1)^3 + z2");
    }
}
