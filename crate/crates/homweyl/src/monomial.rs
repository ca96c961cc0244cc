//! Exponent vectors and the graded lexicographic order.
//!
//! `MultiIndex` is an element of N^n. The derived `Ord` is graded
//! lexicographic: compare total degree first, then break ties
//! lexicographically, so (1,0,0) > (0,1,0) > (0,0,1). This is a well-order
//! on N^n, which is what makes the degree-lowering loops in the ideal
//! algorithms terminate.

use std::cmp::Ordering;
use std::fmt;

use crate::error::WeylError;

/// A vector of n non-negative exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Self {
        MultiIndex(entries)
    }

    pub fn zero(n: usize) -> Self {
        MultiIndex(vec![0; n])
    }

    /// The index with a single 1 at position `i` (0-based).
    pub fn unit(n: usize, i: usize) -> Self {
        assert!(i < n, "variable position {i} out of range for n = {n}");
        let mut e = vec![0; n];
        e[i] = 1;
        MultiIndex(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn entry(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise sum. Panics on length mismatch (internal misuse).
    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        assert_eq!(self.len(), other.len());
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference; `None` if any entry would go negative.
    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u32>>>()
            .map(MultiIndex)
    }

    /// Componentwise minimum.
    pub fn min(&self, other: &MultiIndex) -> MultiIndex {
        assert_eq!(self.len(), other.len());
        MultiIndex(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    /// Iterates over every index t with 0 <= t <= self componentwise,
    /// in odometer order.
    pub fn iter_box(&self) -> impl Iterator<Item = MultiIndex> + '_ {
        let bounds = self.0.clone();
        let mut current: Option<Vec<u32>> = Some(vec![0; bounds.len()]);
        std::iter::from_fn(move || {
            let out = current.clone()?;
            // advance the odometer
            let mut i = 0;
            loop {
                if i == bounds.len() {
                    current = None;
                    break;
                }
                let cur = current.as_mut().unwrap();
                if cur[i] < bounds[i] {
                    cur[i] += 1;
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
            Some(MultiIndex(out))
        })
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(
            self.len(),
            other.len(),
            "grlex comparison across dimensions"
        );
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Graded lexicographic comparison with an explicit length check.
pub fn grlex_cmp(a: &MultiIndex, b: &MultiIndex) -> Result<Ordering, WeylError> {
    if a.len() != b.len() {
        return Err(WeylError::DimensionMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    Ok(a.cmp(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(entries: &[u32]) -> MultiIndex {
        MultiIndex::new(entries.to_vec())
    }

    #[test]
    fn grlex_reference_chain() {
        // (0,0,3) > (1,1,0) > (0,2,0) > (0,1,0) > (0,0,0)
        let chain = [
            mi(&[0, 0, 3]),
            mi(&[1, 1, 0]),
            mi(&[0, 2, 0]),
            mi(&[0, 1, 0]),
            mi(&[0, 0, 0]),
        ];
        for w in chain.windows(2) {
            assert_eq!(grlex_cmp(&w[0], &w[1]).unwrap(), Ordering::Greater);
        }
    }

    #[test]
    fn grlex_degree_then_lex() {
        assert_eq!(
            grlex_cmp(&mi(&[1, 0, 0]), &mi(&[0, 1, 0])).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            grlex_cmp(&mi(&[0, 1, 0]), &mi(&[0, 0, 1])).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            grlex_cmp(&mi(&[2, 1]), &mi(&[2, 1])).unwrap(),
            Ordering::Equal
        );
    }

    #[test]
    fn grlex_dimension_error() {
        assert!(grlex_cmp(&mi(&[1]), &mi(&[1, 0])).is_err());
    }

    #[test]
    fn max_is_permutation_invariant() {
        let items = vec![
            mi(&[0, 2]),
            mi(&[1, 0]),
            mi(&[1, 1]),
            mi(&[0, 0]),
            mi(&[2, 0]),
        ];
        let max = items.iter().max().cloned().unwrap();
        let mut rev = items.clone();
        rev.reverse();
        assert_eq!(rev.iter().max().cloned().unwrap(), max);
        assert_eq!(max, mi(&[2, 0]));
    }

    #[test]
    fn box_iteration_covers_all() {
        let b = mi(&[2, 1]);
        let all: Vec<MultiIndex> = b.iter_box().collect();
        assert_eq!(all.len(), 6);
        assert!(all.contains(&mi(&[0, 0])));
        assert!(all.contains(&mi(&[2, 1])));
    }

    #[test]
    fn checked_sub() {
        assert_eq!(mi(&[2, 1]).checked_sub(&mi(&[1, 1])), Some(mi(&[1, 0])));
        assert_eq!(mi(&[2, 1]).checked_sub(&mi(&[3, 0])), None);
    }
}
