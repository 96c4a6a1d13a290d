//! JSON wire format for elements.
//!
//! ```json
//! {"ring":"Q","vars":["x"],"weight":"1","terms":[{"coeff":"3/2","word":[[0],[2],[1]]}]}
//! ```
//!
//! Each word factor is its dense exponent vector over `vars`; field order is
//! fixed so identical elements serialize to identical bytes.

use serde::{Deserialize, Serialize};

use crate::coeff::{RingId, Scalar};

use super::element::ShuffleElement;
use super::word::{Monomial, TensorWord};
use super::{AlgebraCtx, ShuffleError};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ElementJson {
    pub ring: String,
    pub vars: Vec<String>,
    pub weight: String,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub word: Vec<Vec<u32>>,
}

impl ShuffleElement {
    pub fn to_json(&self) -> ElementJson {
        let nvars = self.ctx().num_vars();
        ElementJson {
            ring: self.ctx().ring().label(),
            vars: self.ctx().variables().to_vec(),
            weight: self.ctx().weight().to_string(),
            terms: self
                .terms()
                .map(|(w, c)| TermJson {
                    coeff: c.to_string(),
                    word: w.factors().iter().map(|f| f.to_dense(nvars)).collect(),
                })
                .collect(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("element serializes")
    }

    pub fn from_json(json: &ElementJson) -> Result<ShuffleElement, ShuffleError> {
        let ring = RingId::parse_label(&json.ring)?;
        let weight = Scalar::parse_in_ring(&json.weight, ring)?;
        let ctx = AlgebraCtx::new(ring, json.vars.clone(), weight)?;
        let nvars = ctx.num_vars();
        let mut terms = Vec::with_capacity(json.terms.len());
        for t in &json.terms {
            if t.word.is_empty() {
                return Err(ShuffleError::Parse {
                    input: serde_json::to_string(t).unwrap_or_default(),
                    reason: "a word needs at least one factor".into(),
                });
            }
            let mut factors = Vec::with_capacity(t.word.len());
            for f in &t.word {
                if f.len() != nvars {
                    return Err(ShuffleError::Parse {
                        input: serde_json::to_string(t).unwrap_or_default(),
                        reason: format!("factor has {} exponents, expected {nvars}", f.len()),
                    });
                }
                factors.push(Monomial::from_dense(f));
            }
            let coeff = Scalar::parse_in_ring(&t.coeff, ring)?;
            terms.push((TensorWord::new(factors), coeff));
        }
        ShuffleElement::from_terms(ctx, terms)
    }

    pub fn from_json_str(s: &str) -> Result<ShuffleElement, ShuffleError> {
        let json: ElementJson = serde_json::from_str(s).map_err(|e| ShuffleError::Parse {
            input: s.to_string(),
            reason: e.to_string(),
        })?;
        ShuffleElement::from_json(&json)
    }
}
