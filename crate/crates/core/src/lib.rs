//! Exact computer algebra for free Baxter algebras of arbitrary weight.
//!
//! A Baxter algebra of weight lambda is a commutative algebra R with a linear
//! operator P satisfying P(a)P(b) = P(aP(b)) + P(bP(a)) + lambda P(ab). This
//! crate implements the free such algebra on a polynomial ring C[X] in its
//! mixable-shuffle realization, entirely in exact arithmetic:
//!
//! - [`coeff`]: the supported coefficient rings (Q, Laurent polynomials
//!   Q[x, x^-1], prime fields, Z) with canonical representations.
//! - [`shuffle`]: tensor words, mixable-shuffle enumeration, the shuffle
//!   product, the Baxter operator P, the grading, and an independent
//!   recursive product used for cross-validation.
//! - [`complete`]: the completed algebra on unit powers, truncated at a
//!   precision, the closed-form unit-power product, the componentwise
//!   embedding into sequence space, and annihilator series construction.
//! - [`ideals`]: exact linear algebra on graded slices — homogeneous ideal
//!   membership with certificates, leading-coefficient reduction, reduction
//!   by Baxter shifts, and bounded Baxter-ideal saturation.
//! - [`witnesses`]: machine-checked certificates for the chain constructions
//!   (prime-characteristic ideal chains, coefficient-sum inconsistency,
//!   graded ideal chains, Baxter-ideal spans, and module chains).
//!
//! All values are immutable after construction; operations are pure and
//! deterministic, so results are reproducible byte for byte.

pub mod coeff;
pub mod complete;
pub mod ideals;
pub mod shuffle;
pub mod witnesses;

pub use coeff::{binomial, CoeffError, LaurentPoly, Prime, RingId, Scalar};
pub use complete::{
    annihilator_b, check_annihilation, filtration_chain_check, specialize_b, unit_power_product,
    AnnihilationReport, CompleteError, SequenceElement, TruncatedBaxterSeries,
};
pub use ideals::{
    baxter_ideal_saturate, baxter_reduce, homogeneous_membership, leading_ideal_chain,
    reduce_by_generators, ClosureMode, GradedSliceBasis, IdealError, MembershipCertificate,
    MembershipVerdict, ReductionStep, ReductionTrace, SaturatedSlice,
};
pub use witnesses::{
    char_p_closure_check, char_p_ideal_member, module_chain_check, power_chain_check,
    run_witness_suite, submodule_span_check, Certificate, CharPIdealSpec, CoefficientSumOutcome,
    CoefficientSumSystem, SuiteBounds, SuiteSelection, WitnessError,
};
pub use shuffle::{
    enumerate_mixable_shuffles, AlgebraCtx, ElementJson, MixableShuffle, Monomial,
    ShuffleElement, ShuffleError, TensorWord, TermJson,
};
