//! Bounded spanning sets of (Baxter) ideals.
//!
//! The slice {tensor degree <= L, total degree <= D} is finite dimensional.
//! Starting from the generators, the closure alternates Baxter shifts
//! (optional) and products with slice basis words, keeping only results that
//! stay inside the slice; whenever a step would leave the slice it is
//! dropped and the result is flagged as a lower bound. The outcome is a
//! row-reduced spanning set of (at least) the reachable part of the ideal
//! intersected with the slice, monotone in (L, D).

use std::collections::{BTreeMap, VecDeque};

use crate::shuffle::{AlgebraCtx, ShuffleElement, TensorWord};

use super::linalg::{RowSpace, SparseVec};
use super::{slice_words, IdealError};

/// Whether the closure applies the Baxter operator in addition to products.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureMode {
    /// products with slice words only: the ring ideal
    RingOnly,
    /// products and Baxter shifts: the Baxter ideal
    Baxter,
}

/// A row-reduced spanning set of an ideal intersected with a finite slice.
#[derive(Debug, Clone)]
pub struct SaturatedSlice {
    ctx: AlgebraCtx,
    max_tensor_degree: usize,
    max_total_degree: usize,
    words: Vec<TensorWord>,
    index: BTreeMap<TensorWord, usize>,
    rows: RowSpace,
    basis: Vec<ShuffleElement>,
    truncated: bool,
}

impl SaturatedSlice {
    pub fn ctx(&self) -> &AlgebraCtx {
        &self.ctx
    }

    pub fn max_tensor_degree(&self) -> usize {
        self.max_tensor_degree
    }

    pub fn max_total_degree(&self) -> usize {
        self.max_total_degree
    }

    /// The slice coordinates (every word within the bounds).
    pub fn slice_words(&self) -> &[TensorWord] {
        &self.words
    }

    /// A spanning set of the computed span, in insertion order.
    pub fn basis(&self) -> &[ShuffleElement] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.rows.rank()
    }

    /// True iff some closure step left the slice and was dropped, so the
    /// span is only a lower bound for the ideal's slice.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    fn to_sparse(&self, e: &ShuffleElement) -> Option<SparseVec> {
        let mut v: SparseVec = Vec::with_capacity(e.num_terms());
        for (w, c) in e.terms() {
            v.push((*self.index.get(w)?, c.clone()));
        }
        v.sort_by_key(|(i, _)| *i);
        Some(v)
    }

    /// True iff the element lies in the computed span. Elements with terms
    /// outside the slice are never in the span.
    pub fn contains(&self, e: &ShuffleElement) -> bool {
        match self.to_sparse(e) {
            Some(v) => self.rows.contains(v),
            None => false,
        }
    }

    /// True iff some element of the span has a nonzero coefficient on `w`.
    pub fn reaches_word(&self, w: &TensorWord) -> bool {
        self.index
            .get(w)
            .map(|i| self.rows.reaches_coordinate(*i))
            .unwrap_or(false)
    }

    /// Restrict every basis element to the words of one tensor degree and
    /// row-reduce the restrictions: the image of the span under the
    /// projection onto that summand.
    pub fn project_tensor_degree(&self, tensor_degree: usize) -> Vec<ShuffleElement> {
        let mut rows = RowSpace::new();
        let mut out = Vec::new();
        for e in &self.basis {
            let restricted = ShuffleElement::from_terms(
                self.ctx.clone(),
                e.terms()
                    .filter(|(w, _)| w.tensor_degree() == tensor_degree)
                    .map(|(w, c)| (w.clone(), c.clone())),
            )
            .expect("restriction keeps the ring");
            if restricted.is_zero() {
                continue;
            }
            let v = self.to_sparse(&restricted).expect("slice words");
            if rows.insert(v) {
                out.push(restricted);
            }
        }
        out
    }

    /// Subspace comparison: every basis element of `self` lies in `other`'s
    /// span.
    pub fn subspace_of(&self, other: &SaturatedSlice) -> bool {
        self.basis.iter().all(|e| other.contains(e))
    }
}

/// Close the generators under the chosen operations inside the slice.
pub fn ideal_saturate(
    ctx: &AlgebraCtx,
    generators: &[ShuffleElement],
    max_tensor_degree: usize,
    max_total_degree: usize,
    mode: ClosureMode,
) -> Result<SaturatedSlice, IdealError> {
    if !ctx.ring().is_field() {
        return Err(IdealError::NonFieldRing { ring: ctx.ring() });
    }
    let words = slice_words(ctx, max_total_degree, max_tensor_degree);
    let index: BTreeMap<TensorWord, usize> = words
        .iter()
        .enumerate()
        .map(|(i, w)| (w.clone(), i))
        .collect();
    let mut slice = SaturatedSlice {
        ctx: ctx.clone(),
        max_tensor_degree,
        max_total_degree,
        words,
        index,
        rows: RowSpace::new(),
        basis: Vec::new(),
        truncated: false,
    };

    let in_slice = |e: &ShuffleElement| {
        e.terms().all(|(w, _)| {
            w.tensor_degree() <= max_tensor_degree && w.total_degree() <= max_total_degree
        })
    };

    let mut queue: VecDeque<ShuffleElement> = VecDeque::new();
    let push = |slice: &mut SaturatedSlice,
                    queue: &mut VecDeque<ShuffleElement>,
                    e: ShuffleElement| {
        if e.is_zero() {
            return;
        }
        if !in_slice(&e) {
            slice.truncated = true;
            return;
        }
        let v = slice.to_sparse(&e).expect("checked in slice");
        if slice.rows.insert(v) {
            slice.basis.push(e.clone());
            queue.push_back(e);
        }
    };

    for g in generators {
        if g.ctx() != ctx {
            return Err(super::IdealError::Shuffle(
                crate::shuffle::ShuffleError::CtxMismatch,
            ));
        }
        push(&mut slice, &mut queue, g.clone());
    }

    let word_elements: Vec<ShuffleElement> = slice
        .words
        .iter()
        .map(|w| ShuffleElement::from_word(ctx.clone(), w.clone()))
        .collect();

    while let Some(e) = queue.pop_front() {
        if mode == ClosureMode::Baxter {
            push(&mut slice, &mut queue, e.baxter_p());
        }
        for w in &word_elements {
            let p = e.product(w)?;
            push(&mut slice, &mut queue, p);
        }
    }
    Ok(slice)
}

/// The Baxter-ideal slice span generated by `generators`.
pub fn baxter_ideal_saturate(
    ctx: &AlgebraCtx,
    generators: &[ShuffleElement],
    max_tensor_degree: usize,
    max_total_degree: usize,
) -> Result<SaturatedSlice, IdealError> {
    ideal_saturate(
        ctx,
        generators,
        max_tensor_degree,
        max_total_degree,
        ClosureMode::Baxter,
    )
}

/// Over a field, each leading-coefficient ideal is {0} or everything.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SigmaIdeal {
    Zero,
    Full,
}

#[derive(Debug, Clone)]
pub struct LeadingIdealChain {
    /// sigma[j] tells whether some reachable element of degree <= j has a
    /// nonzero coefficient at tensor degree j.
    pub sigmas: Vec<SigmaIdeal>,
    /// Lower-bound flag inherited from the bounded saturations.
    pub truncated: bool,
}

/// Compute the chain of leading-coefficient ideals Sigma_0 .. Sigma_j_max of
/// the ideal generated by unit-power elements, verifying that the chain is
/// ascending. Field coefficients and the empty variable set are required.
pub fn leading_ideal_chain(
    ctx: &AlgebraCtx,
    generators: &[ShuffleElement],
    j_max: usize,
    mode: ClosureMode,
) -> Result<LeadingIdealChain, IdealError> {
    if ctx.num_vars() != 0 {
        return Err(IdealError::UnsupportedContext {
            reason: "leading-coefficient chains operate over the empty variable set".into(),
        });
    }
    let mut sigmas = Vec::with_capacity(j_max + 1);
    let mut truncated = false;
    for j in 0..=j_max {
        let sat = ideal_saturate(ctx, generators, j, 0, mode)?;
        truncated |= sat.truncated();
        let top = TensorWord::unit_power(j);
        let sigma = if sat.reaches_word(&top) {
            SigmaIdeal::Full
        } else {
            SigmaIdeal::Zero
        };
        if let Some(prev) = sigmas.last() {
            if *prev == SigmaIdeal::Full && sigma == SigmaIdeal::Zero {
                return Err(IdealError::PropertyViolation {
                    reason: format!("Sigma_{} = C but Sigma_{} = 0", j - 1, j),
                });
            }
        }
        sigmas.push(sigma);
    }
    Ok(LeadingIdealChain { sigmas, truncated })
}
