//! Element text format.
//!
//! Terms are joined with " + " / " - "; each term is an optional scalar
//! coefficient, " * ", and a word whose factors are separated by "⊗" (or the
//! ASCII alternative "(x)"). A factor is "1" or a product of powers such as
//! "x^2*y". Laurent coefficients are parenthesized. Examples:
//!
//! ```text
//! 3/2 * 1⊗x^2⊗x + 1⊗x⊗x
//! (x^1) * 1⊗1
//! 1(x)x^2(x)x
//! ```

use std::fmt;

use num_traits::Signed;

use crate::coeff::Scalar;

use super::element::ShuffleElement;
use super::word::{Monomial, TensorWord};
use super::{AlgebraCtx, ShuffleError};

pub(crate) fn display_monomial(m: &Monomial, vars: &[String]) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    m.exponents()
        .map(|(v, e)| {
            let name = &vars[v as usize];
            if e == 1 {
                name.clone()
            } else {
                format!("{name}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

pub(crate) fn display_word(w: &TensorWord, vars: &[String]) -> String {
    w.factors()
        .iter()
        .map(|f| display_monomial(f, vars))
        .collect::<Vec<_>>()
        .join("⊗")
}

/// Split a scalar into (is_negative, absolute value) for display purposes.
/// Only rationals and integers carry a usable sign.
fn sign_split(c: &Scalar) -> (bool, Scalar) {
    match c {
        Scalar::Rational(r) if r.is_negative() => (true, c.neg()),
        Scalar::Integer(i) if i.is_negative() => (true, c.neg()),
        _ => (false, c.clone()),
    }
}

fn display_coeff(c: &Scalar) -> String {
    match c {
        Scalar::Laurent(_) => format!("({c})"),
        _ => c.to_string(),
    }
}

impl fmt::Display for ShuffleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let vars = self.ctx().variables();
        for (i, (w, c)) in self.terms().enumerate() {
            let (neg, abs) = sign_split(c);
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if !abs.is_one() {
                write!(f, "{} * ", display_coeff(&abs))?;
            }
            write!(f, "{}", display_word(w, vars))?;
        }
        Ok(())
    }
}

fn parse_err(input: &str, reason: &str) -> ShuffleError {
    ShuffleError::Parse {
        input: input.to_string(),
        reason: reason.to_string(),
    }
}

fn parse_monomial(ctx: &AlgebraCtx, s: &str) -> Result<Monomial, ShuffleError> {
    let s = s.trim();
    if s == "1" {
        return Ok(Monomial::one());
    }
    let mut m = Monomial::one();
    for part in s.split('*') {
        let part = part.trim();
        let (name, exp) = match part.split_once('^') {
            Some((n, e)) => {
                let exp: u32 = e
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(s, &format!("bad exponent in `{part}`")))?;
                (n.trim(), exp)
            }
            None => (part, 1),
        };
        let idx = ctx
            .var_index(name)
            .ok_or_else(|| parse_err(s, &format!("unknown variable `{name}`")))?;
        m = m.mul(&Monomial::var_pow(idx, exp));
    }
    Ok(m)
}

fn parse_word(ctx: &AlgebraCtx, s: &str) -> Result<TensorWord, ShuffleError> {
    let normalized = s.replace("(x)", "⊗");
    let factors: Result<Vec<Monomial>, ShuffleError> = normalized
        .split('⊗')
        .map(|f| parse_monomial(ctx, f))
        .collect();
    let factors = factors?;
    if factors.is_empty() {
        return Err(parse_err(s, "empty word"));
    }
    Ok(TensorWord::new(factors))
}

/// Split on " + " / " - " at paren depth 0, tracking term signs.
fn split_terms(s: &str) -> Vec<(i32, String)> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut sign = 1;
    let mut depth = 0i32;
    let bytes: Vec<char> = s.chars().collect();
    let mut i = 0;
    // leading sign
    while i < bytes.len() && bytes[i].is_whitespace() {
        i += 1;
    }
    if i < bytes.len() && (bytes[i] == '-' || bytes[i] == '+') {
        if bytes[i] == '-' {
            sign = -1;
        }
        i += 1;
    }
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ' ' if depth == 0 && i + 2 < bytes.len() && bytes[i + 2] == ' ' => {
                if bytes[i + 1] == '+' || bytes[i + 1] == '-' {
                    out.push((sign, cur.trim().to_string()));
                    cur = String::new();
                    sign = if bytes[i + 1] == '-' { -1 } else { 1 };
                    i += 3;
                    continue;
                }
            }
            _ => {}
        }
        cur.push(c);
        i += 1;
    }
    out.push((sign, cur.trim().to_string()));
    out
}

impl ShuffleElement {
    /// Parse the element text format within the given context.
    pub fn parse(ctx: &AlgebraCtx, input: &str) -> Result<ShuffleElement, ShuffleError> {
        let s = input.trim();
        if s.is_empty() {
            return Err(parse_err(input, "empty element"));
        }
        if s == "0" {
            return Ok(ShuffleElement::zero(ctx.clone()));
        }
        let mut out = ShuffleElement::zero(ctx.clone());
        for (sign, term) in split_terms(s) {
            if term.is_empty() {
                return Err(parse_err(input, "empty term"));
            }
            let (coeff_str, word_str) = match split_coeff(&term) {
                Some((c, w)) => (Some(c), w),
                None => (None, term.clone()),
            };
            let coeff = match coeff_str {
                Some(cs) => {
                    let cs = cs.trim();
                    let cs = cs
                        .strip_prefix('(')
                        .and_then(|r| r.strip_suffix(')'))
                        .unwrap_or(cs);
                    Scalar::parse_in_ring(cs, ctx.ring())?
                }
                None => Scalar::one(ctx.ring()),
            };
            let coeff = if sign < 0 { coeff.neg() } else { coeff };
            let word = parse_word(ctx, word_str.trim())?;
            out.add_term(word, coeff);
        }
        Ok(out)
    }
}

/// Split a term "coeff * word" at the first " * " outside parentheses.
fn split_coeff(term: &str) -> Option<(String, String)> {
    let mut depth = 0i32;
    let chars: Vec<char> = term.chars().collect();
    for i in 0..chars.len() {
        match chars[i] {
            '(' => depth += 1,
            ')' => depth -= 1,
            ' ' if depth == 0
                && i + 2 < chars.len()
                && chars[i + 1] == '*'
                && chars[i + 2] == ' ' =>
            {
                let coeff: String = chars[..i].iter().collect();
                let word: String = chars[i + 3..].iter().collect();
                return Some((coeff, word));
            }
            _ => {}
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::RingId;

    #[test]
    fn display_and_parse_round_trip() {
        let ctx = AlgebraCtx::rational(&["x", "y"], 1, 1);
        let e = ShuffleElement::from_terms(
            ctx.clone(),
            vec![
                (
                    TensorWord::new(vec![
                        Monomial::one(),
                        Monomial::from_dense(&[2, 0]),
                        Monomial::from_dense(&[1, 0]),
                    ]),
                    Scalar::rational(3, 2),
                ),
                (
                    TensorWord::new(vec![Monomial::one(), Monomial::from_dense(&[1, 1])]),
                    Scalar::rational(-1, 1),
                ),
            ],
        )
        .unwrap();
        let text = e.to_string();
        assert_eq!(text, "-1⊗x*y + 3/2 * 1⊗x^2⊗x");
        assert_eq!(ShuffleElement::parse(&ctx, &text).unwrap(), e);
    }

    #[test]
    fn parse_ascii_separator() {
        let ctx = AlgebraCtx::rational(&["x"], 1, 1);
        let a = ShuffleElement::parse(&ctx, "1(x)x^2(x)x").unwrap();
        let b = ShuffleElement::parse(&ctx, "1⊗x^2⊗x").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn parse_laurent_coefficient() {
        let ctx = AlgebraCtx::symbolic_weight();
        let e = ShuffleElement::parse(&ctx, "(x^1 + 2*x^2) * 1⊗1 + 1⊗1⊗1").unwrap();
        assert_eq!(e.num_terms(), 2);
        let text = e.to_string();
        assert_eq!(ShuffleElement::parse(&ctx, &text).unwrap(), e);
    }

    #[test]
    fn parse_zero_and_scalars() {
        let ctx = AlgebraCtx::rational(&[], 0, 1);
        assert!(ShuffleElement::parse(&ctx, "0").unwrap().is_zero());
        let e = ShuffleElement::parse(&ctx, "5/6 * 1").unwrap();
        assert_eq!(e.coeff(&TensorWord::one()), Scalar::rational(5, 6));
        assert!(ShuffleElement::parse(&ctx, "1⊗w").is_err());
    }

    #[test]
    fn prime_field_coefficients() {
        let p = crate::coeff::Prime::new(5).unwrap();
        let ctx = AlgebraCtx::new(
            RingId::PrimeField(p),
            vec!["x".to_string()],
            Scalar::mod_p(3, p),
        )
        .unwrap();
        let e = ShuffleElement::parse(&ctx, "2 mod 5 * 1⊗x + 1⊗x⊗x").unwrap();
        assert_eq!(e.num_terms(), 2);
        let text = e.to_string();
        assert_eq!(text, "2 mod 5 * 1⊗x + 1⊗x⊗x");
        assert_eq!(ShuffleElement::parse(&ctx, &text).unwrap(), e);
    }
}
