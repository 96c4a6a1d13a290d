//! The free Baxter algebra of weight lambda on a polynomial ring C[X],
//! realized on tensor words with the mixable shuffle product.
//!
//! Elements are finitely supported C-linear combinations of [`TensorWord`]s;
//! each word is a nonempty sequence of monomials, the first of which plays a
//! distinguished "coefficient slot" role in the product. The Baxter operator
//! prepends a factor 1. Everything is exact and deterministic: terms live in
//! ordered maps under a fixed term order.

mod element;
mod json;
mod mixable;
mod product;
mod text;
mod word;

use thiserror::Error;

use crate::coeff::{CoeffError, RingId, Scalar};

pub use element::ShuffleElement;
pub use json::{ElementJson, TermJson};
pub use mixable::{enumerate_mixable_shuffles, MixableShuffle, MAX_SHUFFLE_SIZE};
pub use word::{Monomial, TensorWord};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShuffleError {
    #[error("elements belong to different algebra contexts")]
    CtxMismatch,
    #[error("shuffle shape mismatch: expected blocks ({expected_m},{expected_n}), got ({got_m},{got_n})")]
    ShapeMismatch {
        expected_m: usize,
        expected_n: usize,
        got_m: usize,
        got_n: usize,
    },
    #[error("mixable shuffle enumeration for ({m},{n}) exceeds the materialization bound m+n <= {max}")]
    EnumerationBound { m: usize, n: usize, max: usize },
    #[error("the zero element has no filtration degree")]
    ZeroElement,
    #[error("duplicate variable `{name}`")]
    DuplicateVariable { name: String },
    #[error("invalid mixable shuffle data: {reason}")]
    InvalidShuffle { reason: String },
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

/// The ambient algebra: coefficient ring, ordered variable set, and weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraCtx {
    ring: RingId,
    variables: Vec<String>,
    weight: Scalar,
}

impl AlgebraCtx {
    pub fn new(
        ring: RingId,
        variables: Vec<String>,
        weight: Scalar,
    ) -> Result<AlgebraCtx, ShuffleError> {
        for (i, v) in variables.iter().enumerate() {
            if variables[..i].contains(v) {
                return Err(ShuffleError::DuplicateVariable { name: v.clone() });
            }
        }
        if weight.ring() != ring {
            return Err(CoeffError::RingMismatch {
                left: weight.ring(),
                right: ring,
            }
            .into());
        }
        Ok(AlgebraCtx {
            ring,
            variables,
            weight,
        })
    }

    /// Context over Q with the given weight numerator/denominator.
    pub fn rational(variables: &[&str], weight_num: i64, weight_den: i64) -> AlgebraCtx {
        AlgebraCtx::new(
            RingId::RationalQ,
            variables.iter().map(|s| s.to_string()).collect(),
            Scalar::rational(weight_num, weight_den),
        )
        .expect("valid rational context")
    }

    /// Context over Q[x, x^-1] with symbolic weight x and no variables.
    pub fn symbolic_weight() -> AlgebraCtx {
        AlgebraCtx::new(
            RingId::LaurentQ,
            Vec::new(),
            Scalar::laurent(crate::coeff::LaurentPoly::variable()),
        )
        .expect("valid symbolic context")
    }

    pub fn ring(&self) -> RingId {
        self.ring
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn num_vars(&self) -> usize {
        self.variables.len()
    }

    pub fn weight(&self) -> &Scalar {
        &self.weight
    }

    pub fn var_index(&self, name: &str) -> Option<u32> {
        self.variables.iter().position(|v| v == name).map(|i| i as u32)
    }
}
