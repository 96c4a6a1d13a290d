//! Exact linear algebra for ideal questions at bounded grade.
//!
//! The algebra is graded by total degree (products add degrees), and each
//! grade slice — fixed total degree, bounded tensor degree — is a finite
//! dimensional space with the tensor words as basis. This module decides
//! homogeneous ideal membership on such slices with re-verifiable
//! certificates, performs leading-coefficient reduction both through unit
//! power multiplication and through Baxter shifts, and computes bounded
//! spanning sets of Baxter ideals.
//!
//! Verdicts are exact for the stated slice. A non-membership verdict is
//! conclusive for multipliers within the slice; for homogeneous data with a
//! tensor-degree bound at least the target's it reflects the full graded
//! statement, and elsewhere it is a bounded semi-decision and is reported
//! as such.

mod linalg;
mod reduction;
mod saturate;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coeff::{CoeffError, RingId, Scalar};
use crate::shuffle::{AlgebraCtx, ElementJson, Monomial, ShuffleElement, ShuffleError, TensorWord};

pub use reduction::{baxter_reduce, reduce_by_generators, ReductionStep, ReductionTrace};
pub use saturate::{
    baxter_ideal_saturate, ideal_saturate, leading_ideal_chain, ClosureMode, LeadingIdealChain,
    SaturatedSlice, SigmaIdeal,
};

pub(crate) use linalg::{RowSpace, SparseVec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("operation requires field coefficients, got {ring}")]
    NonFieldRing { ring: RingId },
    #[error("leading-coefficient reduction requires rational coefficients, got {ring}")]
    NonQAlgebra { ring: RingId },
    #[error("target and generators must be nonzero and homogeneous in total degree")]
    NotHomogeneous,
    #[error("generator {index} is zero")]
    ZeroGenerator { index: usize },
    #[error("unsupported context: {reason}")]
    UnsupportedContext { reason: String },
    #[error("certificate failed re-verification")]
    CertificateVerification,
    #[error("chain property violated: {reason}")]
    PropertyViolation { reason: String },
    #[error(transparent)]
    Shuffle(#[from] ShuffleError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

/// All monomials over `num_vars` variables of total degree exactly `degree`,
/// in a deterministic order.
fn monomials_of_degree(num_vars: usize, degree: usize) -> Vec<Monomial> {
    if num_vars == 0 {
        return if degree == 0 {
            vec![Monomial::one()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    let mut exps = vec![0u32; num_vars];
    fn rec(exps: &mut Vec<u32>, var: usize, remaining: usize, out: &mut Vec<Monomial>) {
        if var + 1 == exps.len() {
            exps[var] = remaining as u32;
            out.push(Monomial::from_dense(exps));
            return;
        }
        for e in 0..=remaining {
            exps[var] = e as u32;
            rec(exps, var + 1, remaining - e, out);
        }
    }
    rec(&mut exps, 0, degree, &mut out);
    out.sort();
    out
}

/// All words with the given total degree and tensor degree at most
/// `max_tensor_degree`, in the canonical term order.
fn words_of_degree(ctx: &AlgebraCtx, degree: usize, max_tensor_degree: usize) -> Vec<TensorWord> {
    let nvars = ctx.num_vars();
    let mut out = Vec::new();
    let mut factors: Vec<Monomial> = Vec::new();
    fn rec(
        nvars: usize,
        factors: &mut Vec<Monomial>,
        remaining: usize,
        slots_left: usize,
        out: &mut Vec<TensorWord>,
    ) {
        if slots_left == 0 {
            if remaining == 0 {
                out.push(TensorWord::new(factors.clone()));
            }
            return;
        }
        for d in 0..=remaining {
            for m in monomials_of_degree(nvars, d) {
                factors.push(m);
                rec(nvars, factors, remaining - d, slots_left - 1, out);
                factors.pop();
            }
        }
    }
    for len in 1..=max_tensor_degree + 1 {
        rec(nvars, &mut factors, degree, len, &mut out);
    }
    out.sort();
    out
}

/// All words with total degree at most `max_total_degree` and tensor degree
/// at most `max_tensor_degree`.
pub(crate) fn slice_words(
    ctx: &AlgebraCtx,
    max_total_degree: usize,
    max_tensor_degree: usize,
) -> Vec<TensorWord> {
    let mut out = Vec::new();
    for d in 0..=max_total_degree {
        out.extend(words_of_degree(ctx, d, max_tensor_degree));
    }
    out.sort();
    out
}

/// The ordered basis of a grade slice: every word of one total degree up to
/// a tensor-degree bound.
#[derive(Debug, Clone)]
pub struct GradedSliceBasis {
    ctx: AlgebraCtx,
    degree: usize,
    max_tensor_degree: usize,
    words: Vec<TensorWord>,
}

impl GradedSliceBasis {
    pub fn new(ctx: &AlgebraCtx, degree: usize, max_tensor_degree: usize) -> GradedSliceBasis {
        GradedSliceBasis {
            ctx: ctx.clone(),
            degree,
            max_tensor_degree,
            words: words_of_degree(ctx, degree, max_tensor_degree),
        }
    }

    pub fn ctx(&self) -> &AlgebraCtx {
        &self.ctx
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn max_tensor_degree(&self) -> usize {
        self.max_tensor_degree
    }

    pub fn words(&self) -> &[TensorWord] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// Outcome of a homogeneous membership query.
#[derive(Debug, Clone, PartialEq)]
pub enum MembershipVerdict {
    /// The target equals sum over (generator index, multiplier) of
    /// generator * multiplier; re-multiplied and checked before emission.
    Member(Vec<(usize, ShuffleElement)>),
    /// The target is independent of the generated slice span: adjoining it
    /// raises the rank.
    NonMember {
        span_rank: usize,
        augmented_rank: usize,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct MembershipCertificate {
    pub target: ShuffleElement,
    pub generators: Vec<ShuffleElement>,
    pub max_tensor_degree: usize,
    pub verdict: MembershipVerdict,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MembershipCertificateJson {
    pub verdict: String,
    pub target: ElementJson,
    pub generators: Vec<ElementJson>,
    pub max_tensor_degree: usize,
    /// Pairs (generator index, multiplier) for a member verdict.
    pub combination: Vec<(usize, ElementJson)>,
    /// [span rank, target-augmented rank] for a non-member verdict.
    pub ranks: Vec<usize>,
}

impl MembershipCertificate {
    /// Re-verify the certificate from scratch.
    pub fn verify(&self) -> Result<bool, IdealError> {
        match &self.verdict {
            MembershipVerdict::Member(combo) => {
                let mut acc = ShuffleElement::zero(self.target.ctx().clone());
                for (k, multiplier) in combo {
                    acc = acc.add(&self.generators[*k].product(multiplier)?)?;
                }
                Ok(acc == self.target)
            }
            MembershipVerdict::NonMember {
                span_rank,
                augmented_rank,
            } => Ok(augmented_rank == &(span_rank + 1)),
        }
    }

    pub fn is_member(&self) -> bool {
        matches!(self.verdict, MembershipVerdict::Member(_))
    }

    pub fn to_json(&self) -> MembershipCertificateJson {
        let (verdict, combination, ranks) = match &self.verdict {
            MembershipVerdict::Member(combo) => (
                "member".to_string(),
                combo.iter().map(|(k, m)| (*k, m.to_json())).collect(),
                Vec::new(),
            ),
            MembershipVerdict::NonMember {
                span_rank,
                augmented_rank,
            } => (
                "non_member".to_string(),
                Vec::new(),
                vec![*span_rank, *augmented_rank],
            ),
        };
        MembershipCertificateJson {
            verdict,
            target: self.target.to_json(),
            generators: self.generators.iter().map(|g| g.to_json()).collect(),
            max_tensor_degree: self.max_tensor_degree,
            combination,
            ranks,
        }
    }
}

fn element_to_sparse(
    e: &ShuffleElement,
    index: &std::collections::BTreeMap<TensorWord, usize>,
) -> Option<SparseVec> {
    let mut v: SparseVec = Vec::with_capacity(e.num_terms());
    for (w, c) in e.terms() {
        v.push((*index.get(w)?, c.clone()));
    }
    v.sort_by_key(|(i, _)| *i);
    Some(v)
}

/// Decide membership of a homogeneous target in the ideal generated by
/// homogeneous generators, with multipliers drawn from the complementary
/// grade slice of tensor degree at most `max_tensor_degree`.
///
/// Requires field coefficients and at most one variable. Member
/// certificates are re-multiplied before being returned; a non-member
/// verdict is conclusive for the stated slice.
pub fn homogeneous_membership(
    target: &ShuffleElement,
    generators: &[ShuffleElement],
    max_tensor_degree: usize,
) -> Result<MembershipCertificate, IdealError> {
    let ctx = target.ctx();
    if !ctx.ring().is_field() {
        return Err(IdealError::NonFieldRing { ring: ctx.ring() });
    }
    if ctx.num_vars() > 1 {
        return Err(IdealError::UnsupportedContext {
            reason: "membership supports at most one variable".into(),
        });
    }
    let target_degree = target.homogeneous_degree().ok_or(IdealError::NotHomogeneous)?;
    let mut gen_degrees = Vec::with_capacity(generators.len());
    for (i, g) in generators.iter().enumerate() {
        target.check_ctx(g)?;
        if g.is_zero() {
            return Err(IdealError::ZeroGenerator { index: i });
        }
        gen_degrees.push(g.homogeneous_degree().ok_or(IdealError::NotHomogeneous)?);
    }

    // products of every generator with every multiplier basis word
    let mut products: Vec<(usize, ShuffleElement, ShuffleElement)> = Vec::new();
    for (k, g) in generators.iter().enumerate() {
        if gen_degrees[k] > target_degree {
            continue;
        }
        let slice = GradedSliceBasis::new(ctx, target_degree - gen_degrees[k], max_tensor_degree);
        for w in slice.words() {
            let multiplier = ShuffleElement::from_word(ctx.clone(), w.clone());
            let product = g.product(&multiplier)?;
            if !product.is_zero() {
                products.push((k, multiplier, product));
            }
        }
    }

    // coordinates: all words seen in any product or the target
    let mut index = std::collections::BTreeMap::new();
    for (_, _, p) in &products {
        for (w, _) in p.terms() {
            let next = index.len();
            index.entry(w.clone()).or_insert(next);
        }
    }
    for (w, _) in target.terms() {
        let next = index.len();
        index.entry(w.clone()).or_insert(next);
    }

    let mut rows = RowSpace::new();
    let mut originals: Vec<(usize, ShuffleElement)> = Vec::new();
    for (k, multiplier, product) in &products {
        let v = element_to_sparse(product, &index).expect("all product words indexed");
        rows.insert(v);
        originals.push((*k, multiplier.clone()));
    }

    let target_vec = element_to_sparse(target, &index).expect("all target words indexed");
    let verdict = match rows.membership(target_vec) {
        Some(combo) => {
            // fold the word multipliers into one multiplier per generator
            let mut per_gen: Vec<ShuffleElement> = generators
                .iter()
                .map(|_| ShuffleElement::zero(ctx.clone()))
                .collect();
            for (orig, c) in combo {
                let (k, multiplier) = &originals[orig];
                per_gen[*k] = per_gen[*k].add(&multiplier.scale(&c)?)?;
            }
            MembershipVerdict::Member(
                per_gen
                    .into_iter()
                    .enumerate()
                    .filter(|(_, m)| !m.is_zero())
                    .collect(),
            )
        }
        None => MembershipVerdict::NonMember {
            span_rank: rows.rank(),
            augmented_rank: rows.rank() + 1,
        },
    };

    let certificate = MembershipCertificate {
        target: target.clone(),
        generators: generators.to_vec(),
        max_tensor_degree,
        verdict,
    };
    if !certificate.verify()? {
        return Err(IdealError::CertificateVerification);
    }
    Ok(certificate)
}

/// Leading unit-power data of an element over the empty variable set.
pub(crate) fn leading_unit_power(e: &ShuffleElement) -> Option<(usize, Scalar)> {
    let degree = e.max_tensor_degree()?;
    Some((degree, e.coeff(&TensorWord::unit_power(degree))))
}
