//! Sparse Laurent polynomials over the rationals.
//!
//! A `LaurentPoly` is a finite map exponent -> coefficient with no zero
//! coefficients stored; the empty map is the zero polynomial. Exponents may
//! be negative. The canonical representation makes structural equality
//! coincide with ring equality.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::CoeffError;

#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    /// The distinguished variable x.
    pub fn variable() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    /// c * x^exp; zero if c is zero.
    pub fn monomial(c: BigRational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigRational)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&0)
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    /// Units of Q[x, x^-1] are exactly the nonzero monomials c*x^k.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn invert_unit(&self) -> Option<LaurentPoly> {
        if !self.is_unit() {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        Some(Self::monomial(c.recip(), -e))
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True iff no negative exponent occurs (the zero polynomial counts).
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().map_or(true, |e| e >= 0)
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &other.terms {
            r.add_term(*e, c.clone());
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut r = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                r.add_term(ea + eb, ca * cb);
            }
        }
        r
    }

    /// Multiply by x^k.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..n {
            r = r.mul(self);
        }
        r
    }

    /// Substitute x -> lam. Requires lam != 0 when negative exponents occur.
    pub fn eval(&self, lam: &BigRational) -> Result<BigRational, CoeffError> {
        if lam.is_zero() && self.min_exp().map_or(false, |e| e < 0) {
            return Err(CoeffError::ZeroSubstitutionIntoNegativePower);
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                pow_rational(lam, *e as u64)
            } else {
                pow_rational(&lam.recip(), (-*e) as u64)
            };
            acc += c * p;
        }
        Ok(acc)
    }

    /// Parse the ascending-term text format, e.g. "3*x^-2 + 1/2*x^0 + x^3".
    pub fn parse(input: &str) -> Result<LaurentPoly, CoeffError> {
        let s = input.trim();
        if s.is_empty() {
            return Err(parse_err(input, "empty Laurent polynomial"));
        }
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut p = Self::zero();
        for (sign, chunk) in split_signed_terms(s) {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                return Err(parse_err(input, "empty term"));
            }
            let (coeff_str, var_str) = match chunk.split_once('*') {
                Some((c, v)) => (Some(c.trim()), v.trim()),
                None => (None, chunk),
            };
            let (coeff, exp) = if let Some(exp) = parse_power(var_str) {
                let c = match coeff_str {
                    Some(cs) => parse_rational(cs).ok_or_else(|| {
                        parse_err(input, &format!("bad coefficient `{cs}`"))
                    })?,
                    None => BigRational::one(),
                };
                (c, exp?)
            } else if coeff_str.is_none() {
                // bare constant term
                let c = parse_rational(var_str)
                    .ok_or_else(|| parse_err(input, &format!("bad term `{chunk}`")))?;
                (c, 0)
            } else {
                return Err(parse_err(input, &format!("bad term `{chunk}`")));
            };
            let c = if sign < 0 { -coeff } else { coeff };
            p.add_term(exp, c);
        }
        Ok(p)
    }
}

fn pow_rational(base: &BigRational, n: u64) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..n {
        acc *= base;
    }
    acc
}

fn parse_err(input: &str, reason: &str) -> CoeffError {
    CoeffError::Parse {
        input: input.to_string(),
        reason: reason.to_string(),
    }
}

pub(crate) fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let num: BigInt = n.trim().parse().ok()?;
        let den: BigInt = d.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        Some(BigRational::new(num, den))
    } else {
        let num: BigInt = s.parse().ok()?;
        Some(BigRational::from_integer(num))
    }
}

/// "x" -> 1, "x^k" -> k; None if the chunk is not a power of x.
fn parse_power(s: &str) -> Option<Result<i64, CoeffError>> {
    if s == "x" {
        return Some(Ok(1));
    }
    let rest = s.strip_prefix("x^")?;
    match rest.parse::<i64>() {
        Ok(e) => Some(Ok(e)),
        Err(_) => Some(Err(CoeffError::Parse {
            input: s.to_string(),
            reason: "bad exponent".to_string(),
        })),
    }
}

/// Split "a + b - c" into [(+1,"a"), (+1,"b"), (-1,"c")], honoring a leading sign.
/// Only splits on " + " / " - " so exponents like x^-2 survive.
pub(crate) fn split_signed_terms(s: &str) -> Vec<(i32, String)> {
    let mut out = Vec::new();
    let mut rest = s.trim();
    let mut sign = 1;
    if let Some(r) = rest.strip_prefix('-') {
        sign = -1;
        rest = r.trim_start();
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r.trim_start();
    }
    loop {
        let plus = rest.find(" + ");
        let minus = rest.find(" - ");
        match (plus, minus) {
            (None, None) => {
                out.push((sign, rest.to_string()));
                return out;
            }
            (Some(i), None) => {
                out.push((sign, rest[..i].to_string()));
                sign = 1;
                rest = &rest[i + 3..];
            }
            (None, Some(i)) => {
                out.push((sign, rest[..i].to_string()));
                sign = -1;
                rest = &rest[i + 3..];
            }
            (Some(i), Some(j)) => {
                if i < j {
                    out.push((sign, rest[..i].to_string()));
                    sign = 1;
                    rest = &rest[i + 3..];
                } else {
                    out.push((sign, rest[..j].to_string()));
                    sign = -1;
                    rest = &rest[j + 3..];
                }
            }
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if abs.is_one() {
                write!(f, "x^{e}")?;
            } else {
                write!(f, "{abs}*x^{e}")?;
            }
        }
        Ok(())
    }
}
