//! Exact sparse row reduction over a field, with combination tracking.
//!
//! Vectors are sorted (index, coefficient) lists with no zeros. The row
//! space keeps an echelon basis keyed by pivot column; every stored row also
//! carries its expression in terms of the originally inserted vectors, so a
//! successful membership reduction yields an explicit certificate.

use std::collections::BTreeMap;

use crate::coeff::Scalar;

pub(crate) type SparseVec = Vec<(usize, Scalar)>;

/// target += coeff * source, merging sorted sparse vectors.
pub(crate) fn axpy(target: &SparseVec, coeff: &Scalar, source: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(target.len() + source.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < source.len() {
        let take_target = match (target.get(i), source.get(j)) {
            (Some((ti, _)), Some((sj, _))) => {
                if ti == sj {
                    let c = coeff
                        .checked_mul(&source[j].1)
                        .and_then(|p| target[i].1.checked_add(&p))
                        .expect("same ring");
                    if !c.is_zero() {
                        out.push((*ti, c));
                    }
                    i += 1;
                    j += 1;
                    continue;
                }
                ti < sj
            }
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (None, None) => unreachable!(),
        };
        if take_target {
            out.push(target[i].clone());
            i += 1;
        } else {
            let c = coeff.checked_mul(&source[j].1).expect("same ring");
            if !c.is_zero() {
                out.push((source[j].0, c));
            }
            j += 1;
        }
    }
    out
}

fn scale(v: &SparseVec, c: &Scalar) -> SparseVec {
    v.iter()
        .map(|(i, x)| (*i, x.checked_mul(c).expect("same ring")))
        .collect()
}

#[derive(Debug, Clone)]
struct EchelonRow {
    vec: SparseVec,
    combo: SparseVec,
}

#[derive(Debug, Clone)]
pub(crate) struct RowSpace {
    rows: BTreeMap<usize, EchelonRow>,
    n_inserted: usize,
}

impl RowSpace {
    pub fn new() -> RowSpace {
        RowSpace {
            rows: BTreeMap::new(),
            n_inserted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Eliminate `v` against the echelon rows. Returns the residual and the
    /// accumulated combination of stored rows that was subtracted, expressed
    /// over the original inserted vectors: v = residual + combo . originals.
    fn eliminate(&self, v: SparseVec) -> (SparseVec, SparseVec) {
        let mut v = v;
        let mut used: SparseVec = Vec::new();
        let mut pos = 0;
        while pos < v.len() {
            let (idx, c) = v[pos].clone();
            if let Some(row) = self.rows.get(&idx) {
                let neg = c.neg();
                v = axpy(&v, &neg, &row.vec);
                used = axpy(&used, &c, &row.combo);
                // the entry at idx vanished; earlier entries are untouched
            } else {
                pos += 1;
            }
        }
        (v, used)
    }

    /// Insert a vector, assigning it the next original index. Returns true
    /// iff the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let original = self.n_inserted;
        self.n_inserted += 1;
        let (residual, used) = self.eliminate(v);
        if residual.is_empty() {
            return false;
        }
        // residual = original_vec - used . originals
        let one = Scalar::one(residual[0].1.ring());
        let minus_one = one.neg();
        let combo = axpy(&vec![(original, one)], &minus_one, &used);
        let lead = residual[0].1.clone();
        let inv = Scalar::one(lead.ring()).checked_div(&lead).expect("field");
        let vec = scale(&residual, &inv);
        let combo = scale(&combo, &inv);
        self.rows.insert(vec[0].0, EchelonRow { vec, combo });
        true
    }

    /// If `v` lies in the span, return the combination over the original
    /// inserted vectors reproducing it.
    pub fn membership(&self, v: SparseVec) -> Option<SparseVec> {
        let (residual, used) = self.eliminate(v);
        residual.is_empty().then_some(used)
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.eliminate(v).0.is_empty()
    }

    /// True iff some element of the span has a nonzero entry at `index`.
    pub fn reaches_coordinate(&self, index: usize) -> bool {
        self.rows.values().any(|r| {
            r.vec
                .binary_search_by_key(&index, |(i, _)| *i)
                .is_ok()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::RingId;

    fn v(entries: &[(usize, i64)]) -> SparseVec {
        entries
            .iter()
            .map(|(i, c)| (*i, Scalar::from_i64(*c, RingId::RationalQ)))
            .collect()
    }

    #[test]
    fn rank_and_membership() {
        let mut rs = RowSpace::new();
        assert!(rs.insert(v(&[(0, 1), (1, 2)])));
        assert!(rs.insert(v(&[(1, 1), (2, 1)])));
        assert!(!rs.insert(v(&[(0, 2), (1, 6), (2, 2)]))); // 2 r0 + 2 r1
        assert_eq!(rs.rank(), 2);
        let combo = rs.membership(v(&[(0, 1), (1, 4), (2, 2)])).unwrap();
        // reconstruct: combo over originals 0..3
        let mut acc: SparseVec = Vec::new();
        let originals = [
            v(&[(0, 1), (1, 2)]),
            v(&[(1, 1), (2, 1)]),
            v(&[(0, 2), (1, 6), (2, 2)]),
        ];
        for (idx, c) in &combo {
            acc = axpy(&acc, c, &originals[*idx]);
        }
        assert_eq!(acc, v(&[(0, 1), (1, 4), (2, 2)]));
        assert!(!rs.contains(v(&[(3, 1)])));
    }

    #[test]
    fn axpy_cancels() {
        let a = v(&[(0, 1), (2, 3)]);
        let b = v(&[(0, 1), (1, 1)]);
        let got = axpy(&a, &Scalar::from_i64(-1, RingId::RationalQ), &b);
        assert_eq!(got, v(&[(1, -1), (2, 3)]));
    }
}
