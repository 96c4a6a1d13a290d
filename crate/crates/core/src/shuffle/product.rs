//! The mixable shuffle product, an independent recursive product used as an
//! oracle, and the Baxter identity check.

use std::collections::BTreeMap;

use crate::coeff::Scalar;

use super::element::ShuffleElement;
use super::mixable::enumerate_mixable_shuffles;
use super::word::{Monomial, TensorWord};
use super::ShuffleError;

/// Growable cache of weight powers.
struct WeightPowers {
    base: Scalar,
    pows: Vec<Scalar>,
}

impl WeightPowers {
    fn new(base: Scalar) -> WeightPowers {
        let one = Scalar::one(base.ring());
        WeightPowers {
            base,
            pows: vec![one],
        }
    }

    fn get(&mut self, k: usize) -> &Scalar {
        while self.pows.len() <= k {
            let next = self
                .pows
                .last()
                .unwrap()
                .checked_mul(&self.base)
                .expect("same ring");
            self.pows.push(next);
        }
        &self.pows[k]
    }
}

impl ShuffleElement {
    /// The bilinear mixable shuffle product.
    ///
    /// On basis words of tensor degrees m, n >= 1 this sums over all
    /// (m,n)-mixable shuffles of the tails, weighting each merged pair by the
    /// context weight, with the two leading factors multiplied in front. When
    /// either word has tensor degree 0 the product degenerates to plain
    /// factor multiplication.
    pub fn product(&self, other: &ShuffleElement) -> Result<ShuffleElement, ShuffleError> {
        self.check_ctx(other)?;
        let mut lambda = WeightPowers::new(self.ctx().weight().clone());
        let mut shuffle_cache: BTreeMap<(usize, usize), Vec<super::MixableShuffle>> =
            BTreeMap::new();
        let mut out = ShuffleElement::zero(self.ctx().clone());
        for (wa, ca) in self.terms() {
            for (wb, cb) in other.terms() {
                let c = ca.checked_mul(cb)?;
                let (fa, fb) = (wa.factors(), wb.factors());
                let head = fa[0].mul(&fb[0]);
                if wa.tensor_degree() == 0 {
                    let mut factors = Vec::with_capacity(fb.len());
                    factors.push(head);
                    factors.extend(fb[1..].iter().cloned());
                    out.add_term(TensorWord::new(factors), c);
                    continue;
                }
                if wb.tensor_degree() == 0 {
                    let mut factors = Vec::with_capacity(fa.len());
                    factors.push(head);
                    factors.extend(fa[1..].iter().cloned());
                    out.add_term(TensorWord::new(factors), c);
                    continue;
                }
                let (m, n) = (wa.tensor_degree(), wb.tensor_degree());
                if !shuffle_cache.contains_key(&(m, n)) {
                    shuffle_cache.insert((m, n), enumerate_mixable_shuffles(m, n)?);
                }
                for s in &shuffle_cache[&(m, n)] {
                    let (tail, t) = s.apply(&fa[1..], &fb[1..])?;
                    let coeff = c.checked_mul(lambda.get(t))?;
                    if coeff.is_zero() {
                        continue;
                    }
                    let mut factors = Vec::with_capacity(tail.len() + 1);
                    factors.push(head.clone());
                    factors.extend(tail);
                    out.add_term(TensorWord::new(factors), coeff);
                }
            }
        }
        Ok(out)
    }

    /// Independent product implementation used only for cross-validation.
    ///
    /// Instead of enumerating shuffles it recurses on the leading tail
    /// factors: merging the heads contributes one weight factor, mirroring
    /// the quasi-shuffle recursion. It must agree exactly with [`Self::product`].
    pub fn product_oracle(&self, other: &ShuffleElement) -> Result<ShuffleElement, ShuffleError> {
        self.check_ctx(other)?;
        let lambda = self.ctx().weight().clone();
        let mut out = ShuffleElement::zero(self.ctx().clone());
        for (wa, ca) in self.terms() {
            for (wb, cb) in other.terms() {
                let c = ca.checked_mul(cb)?;
                let head = wa.factors()[0].mul(&wb.factors()[0]);
                let tails = quasi_shuffle(&wa.factors()[1..], &wb.factors()[1..], &lambda);
                for (tail, k) in tails {
                    let mut factors = Vec::with_capacity(tail.len() + 1);
                    factors.push(head.clone());
                    factors.extend(tail);
                    out.add_term(TensorWord::new(factors), c.checked_mul(&k)?);
                }
            }
        }
        Ok(out)
    }

    /// Check P(a) P(b) = P(a P(b)) + P(b P(a)) + lambda P(a b) exactly.
    pub fn verify_baxter_identity(
        &self,
        other: &ShuffleElement,
    ) -> Result<bool, ShuffleError> {
        self.check_ctx(other)?;
        let pa = self.baxter_p();
        let pb = other.baxter_p();
        let lhs = pa.product(&pb)?;
        let t1 = self.product(&pb)?.baxter_p();
        let t2 = other.product(&pa)?.baxter_p();
        let t3 = self.product(other)?.baxter_p().scale(self.ctx().weight())?;
        let rhs = t1.add(&t2)?.add(&t3)?;
        Ok(lhs == rhs)
    }
}

/// Recursive quasi-shuffle of two factor lists. Returns each resulting tail
/// with its accumulated coefficient (a polynomial in the weight, kept as a
/// scalar).
fn quasi_shuffle(
    u: &[Monomial],
    v: &[Monomial],
    lambda: &Scalar,
) -> BTreeMap<Vec<Monomial>, Scalar> {
    let one = Scalar::one(lambda.ring());
    let mut out = BTreeMap::new();
    if u.is_empty() {
        out.insert(v.to_vec(), one);
        return out;
    }
    if v.is_empty() {
        out.insert(u.to_vec(), one);
        return out;
    }
    let mut absorb = |prefix: &Monomial, rest: BTreeMap<Vec<Monomial>, Scalar>, extra: Option<&Scalar>| {
        for (tail, c) in rest {
            let mut word = Vec::with_capacity(tail.len() + 1);
            word.push(prefix.clone());
            word.extend(tail);
            let coeff = match extra {
                Some(s) => c.checked_mul(s).expect("same ring"),
                None => c,
            };
            if coeff.is_zero() {
                continue;
            }
            let entry = out.entry(word).or_insert_with(|| Scalar::zero(lambda.ring()));
            *entry = entry.checked_add(&coeff).expect("same ring");
        }
    };
    absorb(&u[0], quasi_shuffle(&u[1..], v, lambda), None);
    absorb(&v[0], quasi_shuffle(u, &v[1..], lambda), None);
    absorb(&u[0].mul(&v[0]), quasi_shuffle(&u[1..], &v[1..], lambda), Some(lambda));
    out.retain(|_, c| !c.is_zero());
    out
}
