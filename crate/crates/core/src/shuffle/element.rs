//! Linear-combination elements, the Baxter operator, and the gradings.

use std::collections::BTreeMap;

use crate::coeff::Scalar;

use super::word::TensorWord;
use super::{AlgebraCtx, ShuffleError};

/// A finitely supported C-linear combination of tensor words.
///
/// Invariants: no zero coefficients are stored and every coefficient belongs
/// to the context's ring, so structural equality is element equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShuffleElement {
    ctx: AlgebraCtx,
    terms: BTreeMap<TensorWord, Scalar>,
}

impl ShuffleElement {
    pub fn zero(ctx: AlgebraCtx) -> ShuffleElement {
        ShuffleElement {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative identity: the single-factor word 1 with coefficient 1.
    pub fn one(ctx: AlgebraCtx) -> ShuffleElement {
        let coeff = Scalar::one(ctx.ring());
        ShuffleElement::from_terms(ctx, vec![(TensorWord::one(), coeff)])
            .expect("unit coefficient belongs to the ring")
    }

    pub fn from_word(ctx: AlgebraCtx, word: TensorWord) -> ShuffleElement {
        let coeff = Scalar::one(ctx.ring());
        ShuffleElement::from_terms(ctx, vec![(word, coeff)])
            .expect("unit coefficient belongs to the ring")
    }

    /// c * 1^{(x)(d+1)}: a scaled unit power, the embedding of C-coefficients.
    pub fn unit_power(ctx: AlgebraCtx, tensor_degree: usize, coeff: Scalar) -> Result<ShuffleElement, ShuffleError> {
        ShuffleElement::from_terms(ctx, vec![(TensorWord::unit_power(tensor_degree), coeff)])
    }

    pub fn from_terms<I: IntoIterator<Item = (TensorWord, Scalar)>>(
        ctx: AlgebraCtx,
        terms: I,
    ) -> Result<ShuffleElement, ShuffleError> {
        let mut e = ShuffleElement::zero(ctx);
        for (w, c) in terms {
            if c.ring() != e.ctx.ring() {
                return Err(crate::coeff::CoeffError::RingMismatch {
                    left: c.ring(),
                    right: e.ctx.ring(),
                }
                .into());
            }
            e.add_term(w, c);
        }
        Ok(e)
    }

    pub fn ctx(&self) -> &AlgebraCtx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TensorWord, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &TensorWord) -> Scalar {
        self.terms
            .get(word)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.ctx.ring()))
    }

    /// Accumulate a term, keeping the no-zero-coefficients invariant.
    /// The coefficient ring must already match (callers validate).
    pub(crate) fn add_term(&mut self, word: TensorWord, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().checked_add(&coeff).expect("same ring");
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub(crate) fn check_ctx(&self, other: &ShuffleElement) -> Result<(), ShuffleError> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(ShuffleError::CtxMismatch)
        }
    }

    pub fn add(&self, other: &ShuffleElement) -> Result<ShuffleElement, ShuffleError> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ShuffleElement) -> Result<ShuffleElement, ShuffleError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ShuffleElement {
        ShuffleElement {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Result<ShuffleElement, ShuffleError> {
        if s.ring() != self.ctx.ring() {
            return Err(crate::coeff::CoeffError::RingMismatch {
                left: s.ring(),
                right: self.ctx.ring(),
            }
            .into());
        }
        let mut out = ShuffleElement::zero(self.ctx.clone());
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.checked_mul(s)?);
        }
        Ok(out)
    }

    /// The Baxter operator: prepend a factor 1 to every word.
    pub fn baxter_p(&self) -> ShuffleElement {
        ShuffleElement {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.baxter_shift(), c.clone()))
                .collect(),
        }
    }

    /// Iterated Baxter operator.
    pub fn baxter_p_iter(&self, times: usize) -> ShuffleElement {
        let mut e = self.clone();
        for _ in 0..times {
            e = e.baxter_p();
        }
        e
    }

    /// Terms whose total degree is exactly `degree`.
    pub fn homogeneous_component(&self, degree: usize) -> ShuffleElement {
        ShuffleElement {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.total_degree() == degree)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Some(d) iff the element is nonzero and all words have total degree d.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(|w| w.total_degree());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// The largest k with the element supported in tensor degrees >= k,
    /// i.e. the minimum tensor degree over the support.
    pub fn filtration_degree(&self) -> Result<usize, ShuffleError> {
        self.terms
            .keys()
            .map(|w| w.tensor_degree())
            .min()
            .ok_or(ShuffleError::ZeroElement)
    }

    pub fn max_tensor_degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.tensor_degree()).max()
    }

    pub fn max_total_degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.total_degree()).max()
    }

    /// Drop all terms of tensor degree above the bound.
    pub fn truncate_filtration(&self, max_tensor_degree: usize) -> ShuffleElement {
        ShuffleElement {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.tensor_degree() <= max_tensor_degree)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }
}
