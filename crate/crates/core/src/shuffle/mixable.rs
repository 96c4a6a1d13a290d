//! Enumeration of mixable shuffles.
//!
//! An (m,n)-shuffle is a permutation of m+n slots that keeps each block in
//! order; it is encoded by the sorted list of slots that receive the first
//! block. A mixable shuffle additionally carries a set of merged adjacent
//! pairs (first-block entry immediately followed by a second-block entry),
//! each merge multiplying the two factors and contributing one power of the
//! weight.

use itertools::Itertools;

use super::word::Monomial;
use super::ShuffleError;

/// Materialized enumeration is guarded at m + n <= this bound.
pub const MAX_SHUFFLE_SIZE: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixableShuffle {
    m: usize,
    n: usize,
    /// Sorted slots (1-based, within 1..=m+n) holding first-block factors.
    positions: Vec<usize>,
    /// Sorted left slots k of merged pairs (k, k+1).
    merges: Vec<usize>,
}

impl MixableShuffle {
    pub fn new(
        m: usize,
        n: usize,
        positions: Vec<usize>,
        merges: Vec<usize>,
    ) -> Result<MixableShuffle, ShuffleError> {
        let invalid = |reason: &str| ShuffleError::InvalidShuffle {
            reason: reason.to_string(),
        };
        if positions.len() != m {
            return Err(invalid("positions must have exactly m entries"));
        }
        if !positions.windows(2).all(|w| w[0] < w[1]) {
            return Err(invalid("positions must be strictly increasing"));
        }
        if positions.iter().any(|&p| p == 0 || p > m + n) {
            return Err(invalid("positions must lie in 1..=m+n"));
        }
        if !merges.windows(2).all(|w| w[0] < w[1]) {
            return Err(invalid("merges must be strictly increasing"));
        }
        for &k in &merges {
            let left_is_x = positions.binary_search(&k).is_ok();
            let right_is_y = k + 1 <= m + n && positions.binary_search(&(k + 1)).is_err();
            if !(left_is_x && right_is_y) {
                return Err(invalid("merge pairs must be first-block then second-block"));
            }
        }
        Ok(MixableShuffle {
            m,
            n,
            positions,
            merges,
        })
    }

    pub fn blocks(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn merges(&self) -> &[usize] {
        &self.merges
    }

    pub fn merge_count(&self) -> usize {
        self.merges.len()
    }

    /// Interleave the two factor lists along this shuffle and multiply the
    /// merged pairs. Returns the resulting factor list (length m+n-|T|) and
    /// the merge count.
    pub fn apply(
        &self,
        xplus: &[Monomial],
        yplus: &[Monomial],
    ) -> Result<(Vec<Monomial>, usize), ShuffleError> {
        if xplus.len() != self.m || yplus.len() != self.n {
            return Err(ShuffleError::ShapeMismatch {
                expected_m: self.m,
                expected_n: self.n,
                got_m: xplus.len(),
                got_n: yplus.len(),
            });
        }
        let total = self.m + self.n;
        let mut slots: Vec<&Monomial> = Vec::with_capacity(total);
        let (mut xi, mut yi) = (0, 0);
        for pos in 1..=total {
            if self.positions.binary_search(&pos).is_ok() {
                slots.push(&xplus[xi]);
                xi += 1;
            } else {
                slots.push(&yplus[yi]);
                yi += 1;
            }
        }
        let mut out = Vec::with_capacity(total - self.merges.len());
        let mut pos = 1;
        while pos <= total {
            if self.merges.binary_search(&pos).is_ok() {
                out.push(slots[pos - 1].mul(slots[pos]));
                pos += 2;
            } else {
                out.push(slots[pos - 1].clone());
                pos += 1;
            }
        }
        Ok((out, self.merges.len()))
    }
}

/// Complete, duplicate-free enumeration of the (m,n)-mixable shuffles in a
/// deterministic order: lexicographic in the position list, then ascending
/// subset masks over the admissible pairs.
///
/// m = 0 or n = 0 yields the single empty-block shuffle with no merges.
pub fn enumerate_mixable_shuffles(
    m: usize,
    n: usize,
) -> Result<Vec<MixableShuffle>, ShuffleError> {
    if m + n > MAX_SHUFFLE_SIZE {
        return Err(ShuffleError::EnumerationBound {
            m,
            n,
            max: MAX_SHUFFLE_SIZE,
        });
    }
    if m == 0 || n == 0 {
        let positions = (1..=m).collect();
        return Ok(vec![MixableShuffle {
            m,
            n,
            positions,
            merges: Vec::new(),
        }]);
    }
    let mut out = Vec::new();
    for positions in (1..=m + n).combinations(m) {
        let admissible: Vec<usize> = positions
            .iter()
            .copied()
            .filter(|&k| k < m + n && positions.binary_search(&(k + 1)).is_err())
            .collect();
        for mask in 0u64..(1u64 << admissible.len()) {
            let merges: Vec<usize> = admissible
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &k)| k)
                .collect();
            out.push(MixableShuffle {
                m,
                n,
                positions: positions.clone(),
                merges,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_one_enumeration_order() {
        // [xy, T = {}], [xy, T = {(1,2)}], [yx, T = {}]
        let all = enumerate_mixable_shuffles(1, 1).unwrap();
        assert_eq!(all.len(), 3);
        assert_eq!(all[0].positions(), &[1]);
        assert!(all[0].merges().is_empty());
        assert_eq!(all[1].positions(), &[1]);
        assert_eq!(all[1].merges(), &[1]);
        assert_eq!(all[2].positions(), &[2]);
        assert!(all[2].merges().is_empty());
    }

    #[test]
    fn empty_block_enumeration() {
        for m in 0..5 {
            let all = enumerate_mixable_shuffles(m, 0).unwrap();
            assert_eq!(all.len(), 1);
            assert!(all[0].merges().is_empty());
        }
        assert_eq!(enumerate_mixable_shuffles(0, 3).unwrap().len(), 1);
    }

    #[test]
    fn two_one_enumeration_count() {
        // 3 shuffles with 2 + 2 + 1 admissible-pair subsets
        let all = enumerate_mixable_shuffles(2, 1).unwrap();
        assert_eq!(all.len(), 5);
    }

    #[test]
    fn enumeration_bound_guard() {
        assert!(matches!(
            enumerate_mixable_shuffles(9, 8),
            Err(ShuffleError::EnumerationBound { .. })
        ));
        assert!(enumerate_mixable_shuffles(8, 8).is_ok());
    }

    #[test]
    fn apply_merges_factors() {
        let x = Monomial::var(0);
        let y = Monomial::var(1);
        // xplus=[x], yplus=[y], shuffle xy with merge -> [xy], |T| = 1
        let s = MixableShuffle::new(1, 1, vec![1], vec![1]).unwrap();
        let (factors, t) = s.apply(&[x.clone()], &[y.clone()]).unwrap();
        assert_eq!(factors, vec![x.mul(&y)]);
        assert_eq!(t, 1);
        // plain shuffle yx
        let s = MixableShuffle::new(1, 1, vec![2], vec![]).unwrap();
        let (factors, t) = s.apply(&[x.clone()], &[y.clone()]).unwrap();
        assert_eq!(factors, vec![y.clone(), x.clone()]);
        assert_eq!(t, 0);
    }

    #[test]
    fn apply_interleaves_longer_blocks() {
        let x1 = Monomial::var_pow(0, 1);
        let x2 = Monomial::var_pow(0, 2);
        let y = Monomial::var(1);
        // word x1 y x2 with merge (1,2) -> [x1*y, x2]
        let s = MixableShuffle::new(2, 1, vec![1, 3], vec![1]).unwrap();
        let (factors, t) = s.apply(&[x1.clone(), x2.clone()], &[y.clone()]).unwrap();
        assert_eq!(factors, vec![x1.mul(&y), x2]);
        assert_eq!(t, 1);
    }

    #[test]
    fn apply_shape_mismatch() {
        let s = MixableShuffle::new(1, 1, vec![1], vec![]).unwrap();
        assert!(matches!(
            s.apply(&[], &[Monomial::one()]),
            Err(ShuffleError::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn invalid_merge_rejected() {
        // slot 2 holds a second-block factor, so (2,3) is not admissible
        assert!(MixableShuffle::new(2, 1, vec![1, 3], vec![2]).is_err());
    }
}
