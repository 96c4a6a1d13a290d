//! The completed algebra on unit powers, truncated at an explicit precision.
//!
//! With no variables the algebra collapses to one coefficient per tensor
//! degree, and the product has the closed form
//!
//! ```text
//! 1^{(x)(m+1)} * 1^{(x)(n+1)}
//!   = sum_{k=0}^{m} C(m+n-k, n) C(n, k) lambda^k 1^{(x)(m+n+1-k)}
//! ```
//!
//! Every product term of the (m,n) pair has tensor degree >= max(m,n), so
//! the degrees above a cutoff form an ideal and truncation at a precision N
//! is well defined. [`TruncatedBaxterSeries`] keeps coefficients b_0..b_N of
//! sum b_n 1^{(x)(n+1)}; precision is explicit state and operations require
//! equal precision on both sides.
//!
//! [`TruncatedBaxterSeries::phi`] maps a series into the componentwise
//! algebra of sequences ([`SequenceElement`]): component n is
//! sum_{i<n} C(n-1, i) lambda^i b_i. For a weight that is not a zero divisor
//! this map is an injective ring homomorphism (the coefficient-to-component
//! matrix is triangular with diagonal lambda^{n-1}).
//!
//! [`annihilator_b`] builds, over Q[x, x^-1] with symbolic weight x, the
//! series with b_0 = 1 annihilated by the unit power of tensor degree k; its
//! coefficients are determined by the recursion
//! b_m = -x^{-k} sum_{i<k} C(k, i) x^i b_{m-k+i}. Specializing x to a
//! nonzero rational weight and scaling by c yields the annihilator used in
//! the strictly increasing ideal chains; [`check_annihilation`] certifies
//! the defining properties at the stored precision.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coeff::{binomial, CoeffError, LaurentPoly, RingId, Scalar};
use crate::shuffle::{AlgebraCtx, ShuffleElement, ShuffleError, TensorWord};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CompleteError {
    #[error("series mismatch: {reason}")]
    Mismatch { reason: String },
    #[error("the weight must not be a zero divisor (nonzero) for the componentwise embedding")]
    ZeroDivisorWeight,
    #[error("specialization requires a nonzero weight")]
    ZeroWeight,
    #[error("invalid arguments: {reason}")]
    InvalidArguments { reason: String },
    #[error("annihilator coefficient {n} is not integral: x^{n} b_{n} has a negative exponent")]
    NonPolynomialCoefficient { n: usize },
    #[error("annihilation check ({check}) failed at index {index}")]
    PropertyViolation {
        check: AnnihilationCheck,
        index: usize,
    },
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error(transparent)]
    Shuffle(#[from] ShuffleError),
}

/// The four certified properties of an annihilator series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AnnihilationCheck {
    /// (i) the unit power of tensor degree k multiplies the series to zero
    ProductAnnihilates,
    /// (ii) components k+1.. of the embedding vanish
    PhiVanishesAboveK,
    /// (iii) components 1..=k of the embedding all equal c
    PhiConstantUpToK,
    /// (iv) the k-th component of (series * 1^{(x)k}) is c lambda^{k-1} != 0
    NonzeroOnLowerFiltration,
}

impl fmt::Display for AnnihilationCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AnnihilationCheck::ProductAnnihilates => "i",
            AnnihilationCheck::PhiVanishesAboveK => "ii",
            AnnihilationCheck::PhiConstantUpToK => "iii",
            AnnihilationCheck::NonzeroOnLowerFiltration => "iv",
        };
        write!(f, "{s}")
    }
}

/// Coefficients b_0..b_N of sum b_n 1^{(x)(n+1)} modulo tensor degrees > N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedBaxterSeries {
    ring: RingId,
    weight: Scalar,
    precision: usize,
    coeffs: Vec<Scalar>,
}

impl TruncatedBaxterSeries {
    pub fn new(
        ring: RingId,
        weight: Scalar,
        precision: usize,
        coeffs: Vec<Scalar>,
    ) -> Result<TruncatedBaxterSeries, CompleteError> {
        if weight.ring() != ring {
            return Err(CoeffError::RingMismatch {
                left: weight.ring(),
                right: ring,
            }
            .into());
        }
        if coeffs.len() != precision + 1 {
            return Err(CompleteError::Mismatch {
                reason: format!(
                    "precision {precision} needs {} coefficients, got {}",
                    precision + 1,
                    coeffs.len()
                ),
            });
        }
        if let Some(c) = coeffs.iter().find(|c| c.ring() != ring) {
            return Err(CoeffError::RingMismatch {
                left: c.ring(),
                right: ring,
            }
            .into());
        }
        Ok(TruncatedBaxterSeries {
            ring,
            weight,
            precision,
            coeffs,
        })
    }

    pub fn zero(ring: RingId, weight: Scalar, precision: usize) -> TruncatedBaxterSeries {
        let coeffs = vec![Scalar::zero(ring); precision + 1];
        TruncatedBaxterSeries::new(ring, weight, precision, coeffs).expect("valid zero series")
    }

    /// The series 1^{(x)(degree+1)}; degree 0 is the multiplicative unit.
    pub fn unit_power(
        ring: RingId,
        weight: Scalar,
        precision: usize,
        degree: usize,
    ) -> Result<TruncatedBaxterSeries, CompleteError> {
        if degree > precision {
            return Err(CompleteError::InvalidArguments {
                reason: format!("degree {degree} exceeds precision {precision}"),
            });
        }
        let mut s = TruncatedBaxterSeries::zero(ring, weight, precision);
        s.coeffs[degree] = Scalar::one(ring);
        Ok(s)
    }

    pub fn ring(&self) -> RingId {
        self.ring
    }

    pub fn weight(&self) -> &Scalar {
        &self.weight
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn coeff(&self, degree: usize) -> &Scalar {
        &self.coeffs[degree]
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// Largest degree with a nonzero coefficient.
    pub fn leading_degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    fn check_compatible(&self, other: &TruncatedBaxterSeries) -> Result<(), CompleteError> {
        if self.ring != other.ring || self.weight != other.weight {
            return Err(CompleteError::Mismatch {
                reason: "ring or weight differ".into(),
            });
        }
        if self.precision != other.precision {
            return Err(CompleteError::Mismatch {
                reason: format!(
                    "precision {} vs {}",
                    self.precision, other.precision
                ),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &TruncatedBaxterSeries) -> Result<TruncatedBaxterSeries, CompleteError> {
        self.check_compatible(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<_, _>>()?;
        TruncatedBaxterSeries::new(self.ring, self.weight.clone(), self.precision, coeffs)
    }

    pub fn neg(&self) -> TruncatedBaxterSeries {
        TruncatedBaxterSeries {
            ring: self.ring,
            weight: self.weight.clone(),
            precision: self.precision,
            coeffs: self.coeffs.iter().map(Scalar::neg).collect(),
        }
    }

    pub fn sub(&self, other: &TruncatedBaxterSeries) -> Result<TruncatedBaxterSeries, CompleteError> {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Scalar) -> Result<TruncatedBaxterSeries, CompleteError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.checked_mul(s))
            .collect::<Result<_, _>>()?;
        TruncatedBaxterSeries::new(self.ring, self.weight.clone(), self.precision, coeffs)
    }

    /// Convolution through the closed-form unit-power product, truncated at
    /// the shared precision.
    pub fn series_product(
        &self,
        other: &TruncatedBaxterSeries,
    ) -> Result<TruncatedBaxterSeries, CompleteError> {
        self.check_compatible(other)?;
        let mut out = TruncatedBaxterSeries::zero(self.ring, self.weight.clone(), self.precision);
        for (m, cm) in self.coeffs.iter().enumerate() {
            if cm.is_zero() {
                continue;
            }
            for (n, cn) in other.coeffs.iter().enumerate() {
                if cn.is_zero() {
                    continue;
                }
                let factor = cm.checked_mul(cn)?;
                for (d, coeff) in unit_power_product(m, n, &self.weight)? {
                    if d <= self.precision {
                        let add = factor.checked_mul(&coeff)?;
                        out.coeffs[d] = out.coeffs[d].checked_add(&add)?;
                    }
                }
            }
        }
        Ok(out)
    }

    /// The componentwise embedding: component n (1-based, n <= precision+1)
    /// is sum_{i=0}^{n-1} C(n-1, i) lambda^i b_i.
    ///
    /// Requires the weight to be a nonzero (hence non-zero-divisor) element
    /// of one of the supported rings.
    pub fn phi(&self) -> Result<SequenceElement, CompleteError> {
        if self.weight.is_zero() {
            return Err(CompleteError::ZeroDivisorWeight);
        }
        let mut lambda_pow = Scalar::one(self.ring);
        let mut weighted = Vec::with_capacity(self.precision + 1);
        for b in &self.coeffs {
            weighted.push(b.checked_mul(&lambda_pow)?);
            lambda_pow = lambda_pow.checked_mul(&self.weight)?;
        }
        let mut comps = Vec::with_capacity(self.precision + 1);
        for n in 1..=self.precision + 1 {
            let mut acc = Scalar::zero(self.ring);
            for (i, w) in weighted.iter().enumerate().take(n) {
                let b = binomial((n - 1) as i64, i as i64, self.ring)?;
                acc = acc.checked_add(&b.checked_mul(w)?)?;
            }
            comps.push(acc);
        }
        SequenceElement::new(self.ring, comps)
    }

    /// The same element as a word combination over the empty variable set.
    pub fn to_shuffle_element(&self) -> ShuffleElement {
        let ctx = AlgebraCtx::new(self.ring, Vec::new(), self.weight.clone())
            .expect("empty variable context is valid");
        ShuffleElement::from_terms(
            ctx,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| (TensorWord::unit_power(n), c.clone())),
        )
        .expect("coefficients belong to the ring")
    }

    /// Inverse of [`Self::to_shuffle_element`]: requires an element over the
    /// empty variable set supported in tensor degrees <= precision.
    pub fn from_shuffle_element(
        e: &ShuffleElement,
        precision: usize,
    ) -> Result<TruncatedBaxterSeries, CompleteError> {
        if e.ctx().num_vars() != 0 {
            return Err(CompleteError::InvalidArguments {
                reason: "element must live over the empty variable set".into(),
            });
        }
        let mut s =
            TruncatedBaxterSeries::zero(e.ctx().ring(), e.ctx().weight().clone(), precision);
        for (w, c) in e.terms() {
            let d = w.tensor_degree();
            if d > precision {
                return Err(CompleteError::InvalidArguments {
                    reason: format!("term of tensor degree {d} exceeds precision {precision}"),
                });
            }
            s.coeffs[d] = c.clone();
        }
        Ok(s)
    }

    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            ring: self.ring.label(),
            weight: self.weight.to_string(),
            precision: self.precision,
            coeffs: self.coeffs.iter().map(Scalar::to_string).collect(),
        }
    }

    pub fn from_json(json: &SeriesJson) -> Result<TruncatedBaxterSeries, CompleteError> {
        let ring = RingId::parse_label(&json.ring)?;
        let weight = Scalar::parse_in_ring(&json.weight, ring)?;
        let coeffs = json
            .coeffs
            .iter()
            .map(|c| Scalar::parse_in_ring(c, ring))
            .collect::<Result<Vec<_>, _>>()?;
        TruncatedBaxterSeries::new(ring, weight, json.precision, coeffs)
    }
}

/// A truncated element of the componentwise sequence algebra: components
/// a_1..a_N with pointwise addition and multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceElement {
    ring: RingId,
    comps: Vec<Scalar>,
}

impl SequenceElement {
    pub fn new(ring: RingId, comps: Vec<Scalar>) -> Result<SequenceElement, CompleteError> {
        if let Some(c) = comps.iter().find(|c| c.ring() != ring) {
            return Err(CoeffError::RingMismatch {
                left: c.ring(),
                right: ring,
            }
            .into());
        }
        Ok(SequenceElement { ring, comps })
    }

    pub fn ring(&self) -> RingId {
        self.ring
    }

    pub fn length(&self) -> usize {
        self.comps.len()
    }

    /// 1-based component access.
    pub fn component(&self, n: usize) -> &Scalar {
        &self.comps[n - 1]
    }

    pub fn components(&self) -> &[Scalar] {
        &self.comps
    }

    pub fn pointwise_mul(&self, other: &SequenceElement) -> Result<SequenceElement, CompleteError> {
        if self.ring != other.ring || self.comps.len() != other.comps.len() {
            return Err(CompleteError::Mismatch {
                reason: "sequence ring or length differ".into(),
            });
        }
        let comps = self
            .comps
            .iter()
            .zip(&other.comps)
            .map(|(a, b)| a.checked_mul(b))
            .collect::<Result<_, _>>()?;
        SequenceElement::new(self.ring, comps)
    }

    pub fn to_json(&self) -> SequenceJson {
        SequenceJson {
            ring: self.ring.label(),
            length: self.comps.len(),
            comps: self.comps.iter().map(Scalar::to_string).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SeriesJson {
    pub ring: String,
    pub weight: String,
    pub precision: usize,
    pub coeffs: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SequenceJson {
    pub ring: String,
    pub length: usize,
    pub comps: Vec<String>,
}

/// Closed-form coefficients of 1^{(x)(m+1)} * 1^{(x)(n+1)} keyed by tensor
/// degree: degree m+n-k carries C(m+n-k, n) C(n, k) lambda^k for 0 <= k <= m.
pub fn unit_power_product(
    m: usize,
    n: usize,
    weight: &Scalar,
) -> Result<BTreeMap<usize, Scalar>, CompleteError> {
    let ring = weight.ring();
    let mut out = BTreeMap::new();
    let mut lambda_pow = Scalar::one(ring);
    for k in 0..=m {
        let c1 = binomial((m + n - k) as i64, n as i64, ring)?;
        let c2 = binomial(n as i64, k as i64, ring)?;
        let coeff = c1.checked_mul(&c2)?.checked_mul(&lambda_pow)?;
        if !coeff.is_zero() {
            out.insert(m + n - k, coeff);
        }
        if k < m {
            lambda_pow = lambda_pow.checked_mul(weight)?;
        }
    }
    Ok(out)
}

/// The symbolic annihilator series of order k at precision N over
/// Q[x, x^-1] with weight x: b_0 = 1, b_1 = ... = b_{k-1} = 0, and
/// b_m = -x^{-k} sum_{i=0}^{k-1} C(k, i) x^i b_{m-k+i} for k <= m <= N.
pub fn annihilator_b(k: usize, precision: usize) -> Result<TruncatedBaxterSeries, CompleteError> {
    if k == 0 {
        return Err(CompleteError::InvalidArguments {
            reason: "the annihilator order k must be >= 1".into(),
        });
    }
    if precision < k {
        return Err(CompleteError::InvalidArguments {
            reason: format!("precision {precision} must be >= k = {k}"),
        });
    }
    let ring = RingId::LaurentQ;
    let x = Scalar::laurent(LaurentPoly::variable());
    let x_neg_k = Scalar::laurent(LaurentPoly::monomial(num_rational::BigRational::one(), -(k as i64)));
    let mut coeffs = vec![Scalar::zero(ring); precision + 1];
    coeffs[0] = Scalar::one(ring);
    for m in k..=precision {
        let mut acc = Scalar::zero(ring);
        let mut x_pow = Scalar::one(ring);
        for i in 0..k {
            let b = binomial(k as i64, i as i64, ring)?;
            let term = b
                .checked_mul(&x_pow)?
                .checked_mul(&coeffs[m - k + i])?;
            acc = acc.checked_add(&term)?;
            x_pow = x_pow.checked_mul(&x)?;
        }
        coeffs[m] = acc.neg().checked_mul(&x_neg_k)?;
    }
    TruncatedBaxterSeries::new(ring, x, precision, coeffs)
}

/// Specialize the symbolic annihilator at a nonzero rational weight and
/// scale by c. Validates the integrality invariant x^n b_n in Q[x] first.
pub fn specialize_b(
    k: usize,
    lambda: &Scalar,
    c: &Scalar,
    precision: usize,
) -> Result<TruncatedBaxterSeries, CompleteError> {
    if lambda.ring() != RingId::RationalQ || c.ring() != RingId::RationalQ {
        return Err(CoeffError::RingMismatch {
            left: lambda.ring(),
            right: RingId::RationalQ,
        }
        .into());
    }
    if lambda.is_zero() {
        return Err(CompleteError::ZeroWeight);
    }
    let sym = annihilator_b(k, precision)?;
    let mut coeffs = Vec::with_capacity(precision + 1);
    for (n, b) in sym.coeffs().iter().enumerate() {
        let xn = Scalar::laurent(LaurentPoly::monomial(
            num_rational::BigRational::one(),
            n as i64,
        ));
        if !xn.checked_mul(b)?.is_polynomial()? {
            return Err(CompleteError::NonPolynomialCoefficient { n });
        }
        coeffs.push(c.checked_mul(&b.eval_at(lambda)?)?);
    }
    TruncatedBaxterSeries::new(RingId::RationalQ, lambda.clone(), precision, coeffs)
}

/// Certified outcome of [`check_annihilation`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnihilationReport {
    pub k: usize,
    pub precision: usize,
    /// The common value of components 1..=k of the embedding.
    pub c: Scalar,
    /// The k-th component of (series * 1^{(x)k}): c lambda^{k-1}.
    pub lower_filtration_value: Scalar,
}

/// Verify the four annihilator properties of a series `d` at order `k`:
/// the unit power of tensor degree k multiplies `d` to zero up to precision,
/// the embedding of `d` vanishes in components above k and is constantly
/// c = b_0 below, and `d` does not annihilate the next lower filtration
/// level. Fails with the first violated check and index.
pub fn check_annihilation(
    d: &TruncatedBaxterSeries,
    k: usize,
) -> Result<AnnihilationReport, CompleteError> {
    if k == 0 || d.precision() < k + 1 {
        return Err(CompleteError::InvalidArguments {
            reason: format!(
                "need k >= 1 and precision >= k+1, got k = {k}, precision = {}",
                d.precision()
            ),
        });
    }
    let n_prec = d.precision();
    let c = d.coeff(0).clone();

    // (i) unit power of tensor degree k annihilates d
    let unit_k = TruncatedBaxterSeries::unit_power(d.ring(), d.weight().clone(), n_prec, k)?;
    let prod = unit_k.series_product(d)?;
    if let Some(deg) = prod.leading_degree() {
        return Err(CompleteError::PropertyViolation {
            check: AnnihilationCheck::ProductAnnihilates,
            index: deg,
        });
    }

    let phi_d = d.phi()?;

    // (ii) components above k vanish
    for n in k + 1..=n_prec + 1 {
        if !phi_d.component(n).is_zero() {
            return Err(CompleteError::PropertyViolation {
                check: AnnihilationCheck::PhiVanishesAboveK,
                index: n,
            });
        }
    }

    // (iii) components 1..=k all equal c
    for n in 1..=k {
        if phi_d.component(n) != &c {
            return Err(CompleteError::PropertyViolation {
                check: AnnihilationCheck::PhiConstantUpToK,
                index: n,
            });
        }
    }

    // (iv) d * 1^{(x)k} has k-th embedding component c lambda^{k-1} != 0
    let witness =
        TruncatedBaxterSeries::unit_power(d.ring(), d.weight().clone(), n_prec, k - 1)?;
    let prod = d.series_product(&witness)?;
    let value = prod.phi()?.component(k).clone();
    let expected = c.checked_mul(&d.weight().pow((k - 1) as u32))?;
    if value != expected || value.is_zero() {
        return Err(CompleteError::PropertyViolation {
            check: AnnihilationCheck::NonzeroOnLowerFiltration,
            index: k,
        });
    }

    Ok(AnnihilationReport {
        k,
        precision: n_prec,
        c,
        lower_filtration_value: value,
    })
}

/// Evidence that the ideals generated by successive annihilators form a
/// strictly increasing chain at the stored precision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationChainReport {
    pub n_max: usize,
    pub precision: usize,
    /// For n = 1..=n_max: the (n+1)-st embedding component of
    /// d^{(n+1)} * 1^{(x)(n+2)}, each nonzero.
    pub strictness_witnesses: Vec<Scalar>,
}

/// Certify, for n <= n_max, that the ideal generated by the first n
/// annihilators kills every unit power of tensor degree >= n up to the
/// precision, while the (n+1)-st annihilator does not: the chain of ideals
/// is strictly increasing at truncation level.
pub fn filtration_chain_check(
    n_max: usize,
    lambda: &Scalar,
    c: &Scalar,
    precision: usize,
) -> Result<FiltrationChainReport, CompleteError> {
    let mut annihilators = Vec::with_capacity(n_max + 1);
    for k in 1..=n_max + 1 {
        annihilators.push(specialize_b(k, lambda, c, precision)?);
    }
    // every generator of the n-th ideal kills the n-th filtration level
    for (idx, d) in annihilators.iter().enumerate().take(n_max) {
        let k = idx + 1;
        for degree in k..=precision {
            let w =
                TruncatedBaxterSeries::unit_power(d.ring(), d.weight().clone(), precision, degree)?;
            let prod = d.series_product(&w)?;
            if let Some(bad) = prod.leading_degree() {
                return Err(CompleteError::PropertyViolation {
                    check: AnnihilationCheck::ProductAnnihilates,
                    index: bad,
                });
            }
        }
    }
    // the next annihilator survives on the previous level
    let mut witnesses = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let d = &annihilators[n]; // d^{(n+1)}
        let w = TruncatedBaxterSeries::unit_power(d.ring(), d.weight().clone(), precision, n)?;
        let prod = d.series_product(&w)?;
        if prod.is_zero() {
            return Err(CompleteError::PropertyViolation {
                check: AnnihilationCheck::NonzeroOnLowerFiltration,
                index: n,
            });
        }
        witnesses.push(prod.phi()?.component(n + 1).clone());
    }
    Ok(FiltrationChainReport {
        n_max,
        precision,
        strictness_witnesses: witnesses,
    })
}
