//! Exact coefficient-ring arithmetic shared by all other modules.
//!
//! Four coefficient rings are supported: the rationals Q, the Laurent
//! polynomial ring Q[x, x^-1], prime fields F_p, and the integers Z. A
//! [`Scalar`] is a value tagged with its ring; every representation is
//! canonical, so structural equality is ring equality, and all arithmetic is
//! arbitrary precision.
//!
//! Values are immutable after construction and safe to share across threads.

mod laurent;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub use laurent::LaurentPoly;
pub(crate) use laurent::parse_rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoeffError {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: RingId, right: RingId },
    #[error("division by a non-unit")]
    DivisionByNonUnit,
    #[error("binomial requires n >= 0, got {n}")]
    NegativeN { n: i64 },
    #[error("cannot substitute 0 into a negative power")]
    ZeroSubstitutionIntoNegativePower,
    #[error("{p} is not prime")]
    NotPrime { p: u64 },
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

/// A checked prime modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Prime, CoeffError> {
        if is_prime_u64(p) {
            Ok(Prime(p))
        } else {
            Err(CoeffError::NotPrime { p })
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Deterministic Miller-Rabin for u64.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mod_mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mod_mul(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, m);
        }
        base = mod_mul(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Identifier of a supported coefficient ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingId {
    RationalQ,
    LaurentQ,
    PrimeField(Prime),
    IntegerZ,
}

impl RingId {
    pub fn prime_field(p: u64) -> Result<RingId, CoeffError> {
        Ok(RingId::PrimeField(Prime::new(p)?))
    }

    pub fn is_field(self) -> bool {
        matches!(self, RingId::RationalQ | RingId::PrimeField(_))
    }

    pub fn has_characteristic_zero(self) -> bool {
        !matches!(self, RingId::PrimeField(_))
    }

    /// Ring label used by the CLI and the JSON formats: Q, laurent, fp:<p>, Z.
    pub fn label(self) -> String {
        match self {
            RingId::RationalQ => "Q".to_string(),
            RingId::LaurentQ => "laurent".to_string(),
            RingId::PrimeField(p) => format!("fp:{p}"),
            RingId::IntegerZ => "Z".to_string(),
        }
    }

    pub fn parse_label(s: &str) -> Result<RingId, CoeffError> {
        match s.trim() {
            "Q" => Ok(RingId::RationalQ),
            "laurent" => Ok(RingId::LaurentQ),
            "Z" => Ok(RingId::IntegerZ),
            other => {
                if let Some(p) = other.strip_prefix("fp:") {
                    let p: u64 = p.parse().map_err(|_| CoeffError::Parse {
                        input: s.to_string(),
                        reason: "bad prime".to_string(),
                    })?;
                    RingId::prime_field(p)
                } else {
                    Err(CoeffError::Parse {
                        input: s.to_string(),
                        reason: "expected Q, laurent, fp:<p> or Z".to_string(),
                    })
                }
            }
        }
    }
}

impl fmt::Display for RingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// An exact element of one of the supported rings, in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Laurent(LaurentPoly),
    Mod { value: u64, p: Prime },
    Integer(BigInt),
}

impl Scalar {
    pub fn ring(&self) -> RingId {
        match self {
            Scalar::Rational(_) => RingId::RationalQ,
            Scalar::Laurent(_) => RingId::LaurentQ,
            Scalar::Mod { p, .. } => RingId::PrimeField(*p),
            Scalar::Integer(_) => RingId::IntegerZ,
        }
    }

    pub fn zero(ring: RingId) -> Scalar {
        Scalar::from_bigint(BigInt::zero(), ring)
    }

    pub fn one(ring: RingId) -> Scalar {
        Scalar::from_bigint(BigInt::one(), ring)
    }

    pub fn from_i64(v: i64, ring: RingId) -> Scalar {
        Scalar::from_bigint(BigInt::from(v), ring)
    }

    /// The canonical image of an integer in `ring`.
    pub fn from_bigint(v: BigInt, ring: RingId) -> Scalar {
        match ring {
            RingId::RationalQ => Scalar::Rational(BigRational::from_integer(v)),
            RingId::LaurentQ => Scalar::Laurent(LaurentPoly::constant(BigRational::from_integer(v))),
            RingId::PrimeField(p) => {
                let m = BigInt::from(p.get());
                let mut r = v % &m;
                if r.is_negative() {
                    r += &m;
                }
                Scalar::Mod {
                    value: r.to_u64().expect("reduced residue fits u64"),
                    p,
                }
            }
            RingId::IntegerZ => Scalar::Integer(v),
        }
    }

    pub fn rational(num: i64, den: i64) -> Scalar {
        Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn laurent(p: LaurentPoly) -> Scalar {
        Scalar::Laurent(p)
    }

    pub fn mod_p(value: i64, p: Prime) -> Scalar {
        Scalar::from_bigint(BigInt::from(value), RingId::PrimeField(p))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Laurent(l) => l.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
            Scalar::Integer(i) => i.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Laurent(l) => l.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
            Scalar::Integer(i) => i.is_one(),
        }
    }

    pub fn is_unit(&self) -> bool {
        match self {
            Scalar::Rational(r) => !r.is_zero(),
            Scalar::Laurent(l) => l.is_unit(),
            Scalar::Mod { value, .. } => *value != 0,
            Scalar::Integer(i) => i.is_one() || (-i).is_one(),
        }
    }

    fn check_same_ring(&self, other: &Scalar) -> Result<(), CoeffError> {
        if self.ring() == other.ring() {
            Ok(())
        } else {
            Err(CoeffError::RingMismatch {
                left: self.ring(),
                right: other.ring(),
            })
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, CoeffError> {
        self.check_same_ring(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Laurent(a), Scalar::Laurent(b)) => Scalar::Laurent(a.add(b)),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: ((*a as u128 + *b as u128) % p.get() as u128) as u64,
                p: *p,
            },
            (Scalar::Integer(a), Scalar::Integer(b)) => Scalar::Integer(a + b),
            _ => unreachable!("same ring"),
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, CoeffError> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, CoeffError> {
        self.check_same_ring(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Laurent(a), Scalar::Laurent(b)) => Scalar::Laurent(a.mul(b)),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: mod_mul(*a, *b, p.get()),
                p: *p,
            },
            (Scalar::Integer(a), Scalar::Integer(b)) => Scalar::Integer(a * b),
            _ => unreachable!("same ring"),
        })
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Laurent(a) => Scalar::Laurent(a.neg()),
            Scalar::Mod { value, p } => Scalar::Mod {
                value: if *value == 0 { 0 } else { p.get() - value },
                p: *p,
            },
            Scalar::Integer(a) => Scalar::Integer(-a),
        }
    }

    /// Division by a unit of the ring.
    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, CoeffError> {
        self.check_same_ring(other)?;
        if !other.is_unit() {
            return Err(CoeffError::DivisionByNonUnit);
        }
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a / b),
            (Scalar::Laurent(a), Scalar::Laurent(b)) => {
                Scalar::Laurent(a.mul(&b.invert_unit().expect("unit")))
            }
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, .. }) => {
                let inv = mod_pow(*b, p.get() - 2, p.get());
                Scalar::Mod {
                    value: mod_mul(*a, inv, p.get()),
                    p: *p,
                }
            }
            (Scalar::Integer(a), Scalar::Integer(b)) => Scalar::Integer(a / b),
            _ => unreachable!("same ring"),
        })
    }

    /// Division that also succeeds for exact (remainder-free) integer quotients.
    pub fn checked_div_exact(&self, other: &Scalar) -> Result<Scalar, CoeffError> {
        if let (Scalar::Integer(a), Scalar::Integer(b)) = (self, other) {
            if b.is_zero() {
                return Err(CoeffError::DivisionByNonUnit);
            }
            if (a % b).is_zero() {
                return Ok(Scalar::Integer(a / b));
            }
            return Err(CoeffError::DivisionByNonUnit);
        }
        self.checked_div(other)
    }

    pub fn pow(&self, n: u32) -> Scalar {
        let mut acc = Scalar::one(self.ring());
        for _ in 0..n {
            acc = acc.checked_mul(self).expect("same ring");
        }
        acc
    }

    /// Substitute x -> lam in a Laurent scalar; lam must be rational.
    pub fn eval_at(&self, lam: &Scalar) -> Result<Scalar, CoeffError> {
        let f = match self {
            Scalar::Laurent(f) => f,
            _ => {
                return Err(CoeffError::RingMismatch {
                    left: self.ring(),
                    right: RingId::LaurentQ,
                })
            }
        };
        let lam = match lam {
            Scalar::Rational(l) => l,
            _ => {
                return Err(CoeffError::RingMismatch {
                    left: lam.ring(),
                    right: RingId::RationalQ,
                })
            }
        };
        Ok(Scalar::Rational(f.eval(lam)?))
    }

    /// True iff a Laurent scalar has no negative exponents.
    pub fn is_polynomial(&self) -> Result<bool, CoeffError> {
        match self {
            Scalar::Laurent(f) => Ok(f.is_polynomial()),
            _ => Err(CoeffError::RingMismatch {
                left: self.ring(),
                right: RingId::LaurentQ,
            }),
        }
    }

    /// Parse the per-ring text format: "p/q" or "n" for Q; ascending Laurent
    /// terms for Q[x,x^-1]; "k mod p" (or a bare integer) for F_p; a decimal
    /// integer for Z.
    pub fn parse_in_ring(input: &str, ring: RingId) -> Result<Scalar, CoeffError> {
        let s = input.trim();
        let err = |reason: &str| CoeffError::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        match ring {
            RingId::RationalQ => parse_rational(s)
                .map(Scalar::Rational)
                .ok_or_else(|| err("expected a rational p/q or n")),
            RingId::LaurentQ => {
                // Accept a bare rational as a constant polynomial.
                if let Some(r) = parse_rational(s) {
                    return Ok(Scalar::Laurent(LaurentPoly::constant(r)));
                }
                LaurentPoly::parse(s).map(Scalar::Laurent)
            }
            RingId::PrimeField(p) => {
                let k = if let Some((k, modulus)) = s.split_once(" mod ") {
                    let m: u64 = modulus
                        .trim()
                        .parse()
                        .map_err(|_| err("bad modulus"))?;
                    if m != p.get() {
                        return Err(err(&format!("modulus {m} does not match ring fp:{p}")));
                    }
                    k.trim()
                } else {
                    s
                };
                let v: BigInt = k.parse().map_err(|_| err("expected an integer"))?;
                Ok(Scalar::from_bigint(v, ring))
            }
            RingId::IntegerZ => {
                let v: BigInt = s.parse().map_err(|_| err("expected an integer"))?;
                Ok(Scalar::Integer(v))
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Laurent(l) => write!(f, "{l}"),
            Scalar::Mod { value, p } => write!(f, "{value} mod {p}"),
            Scalar::Integer(i) => write!(f, "{i}"),
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect("scalar ring mismatch")
            }
        }
    };
}
scalar_binop!(Add, add, checked_add);
scalar_binop!(Sub, sub, checked_sub);
scalar_binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

/// Exact binomial coefficient C(n, k) mapped into `ring`.
///
/// Out-of-range k (k < 0 or k > n) yields zero; n < 0 is an error.
pub fn binomial(n: i64, k: i64, ring: RingId) -> Result<Scalar, CoeffError> {
    if n < 0 {
        return Err(CoeffError::NegativeN { n });
    }
    if k < 0 || k > n {
        return Ok(Scalar::zero(ring));
    }
    let v = num_integer::binomial(BigInt::from(n), BigInt::from(k));
    Ok(Scalar::from_bigint(v, ring))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::rational(n, d)
    }

    #[test]
    fn rational_arithmetic() {
        let a = q(2, 3);
        let b = q(1, 6);
        assert_eq!(a.checked_add(&b).unwrap(), q(5, 6));
    }

    #[test]
    fn laurent_arithmetic() {
        // (x + 1) * x^-1 = 1 + x^-1
        let a = Scalar::laurent(LaurentPoly::from_terms(vec![
            (1, BigRational::one()),
            (0, BigRational::one()),
        ]));
        let b = Scalar::laurent(LaurentPoly::monomial(BigRational::one(), -1));
        let expect = Scalar::laurent(LaurentPoly::from_terms(vec![
            (0, BigRational::one()),
            (-1, BigRational::one()),
        ]));
        assert_eq!(a.checked_mul(&b).unwrap(), expect);
    }

    #[test]
    fn prime_field_arithmetic() {
        let p = Prime::new(3).unwrap();
        let two = Scalar::mod_p(2, p);
        assert_eq!(two.checked_mul(&two).unwrap(), Scalar::mod_p(1, p));
    }

    #[test]
    fn ring_mismatch_is_detected() {
        let a = q(1, 2);
        let b = Scalar::Integer(BigInt::from(1));
        assert!(matches!(
            a.checked_add(&b),
            Err(CoeffError::RingMismatch { .. })
        ));
    }

    #[test]
    fn division_by_non_unit() {
        let two = Scalar::Integer(BigInt::from(2));
        let four = Scalar::Integer(BigInt::from(4));
        assert!(matches!(
            four.checked_div(&two),
            Err(CoeffError::DivisionByNonUnit)
        ));
        // but exact integer division is available separately
        assert_eq!(
            four.checked_div_exact(&two).unwrap(),
            Scalar::Integer(BigInt::from(2))
        );
        // Laurent division only by monomial units
        let x_plus_one = Scalar::laurent(LaurentPoly::from_terms(vec![
            (1, BigRational::one()),
            (0, BigRational::one()),
        ]));
        let one = Scalar::one(RingId::LaurentQ);
        assert!(one.checked_div(&x_plus_one).is_err());
    }

    #[test]
    fn prime_validation() {
        assert!(Prime::new(2).is_ok());
        assert!(Prime::new(97).is_ok());
        assert!(matches!(Prime::new(1), Err(CoeffError::NotPrime { .. })));
        assert!(matches!(Prime::new(4), Err(CoeffError::NotPrime { .. })));
        assert!(matches!(Prime::new(91), Err(CoeffError::NotPrime { .. }))); // 7*13
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(
            binomial(4, 2, RingId::RationalQ).unwrap(),
            Scalar::from_i64(6, RingId::RationalQ)
        );
        assert!(binomial(2, 5, RingId::RationalQ).unwrap().is_zero());
        let f2 = RingId::prime_field(2).unwrap();
        assert!(binomial(6, 3, f2).unwrap().is_zero()); // C(6,3) = 20
        assert!(matches!(
            binomial(-1, 0, RingId::RationalQ),
            Err(CoeffError::NegativeN { n: -1 })
        ));
    }

    /// Independent Pascal-triangle oracle for the binomial values.
    fn pascal_triangle(rows: usize) -> Vec<Vec<BigInt>> {
        let mut t: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for n in 1..=rows {
            let prev = &t[n - 1];
            let mut row = vec![BigInt::one()];
            for k in 1..n {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(BigInt::one());
            t.push(row);
        }
        t
    }

    #[test]
    fn binomial_matches_pascal_up_to_30() {
        let t = pascal_triangle(30);
        for n in 0..=30i64 {
            for k in 0..=n {
                let got = binomial(n, k, RingId::IntegerZ).unwrap();
                assert_eq!(got, Scalar::Integer(t[n as usize][k as usize].clone()));
            }
        }
    }

    #[test]
    fn eval_at_examples() {
        // -x^-2 at 1 -> -1
        let f = Scalar::laurent(LaurentPoly::monomial(-BigRational::one(), -2));
        let one = q(1, 1);
        assert_eq!(f.eval_at(&one).unwrap(), q(-1, 1));
        // constant 1 at any lambda
        let c = Scalar::one(RingId::LaurentQ);
        assert_eq!(c.eval_at(&q(7, 3)).unwrap(), q(1, 1));
        // 2x + x^-1 at 1/2 -> 3
        let f = Scalar::laurent(LaurentPoly::from_terms(vec![
            (1, BigRational::from_integer(BigInt::from(2))),
            (-1, BigRational::one()),
        ]));
        assert_eq!(f.eval_at(&q(1, 2)).unwrap(), q(3, 1));
        // 0 into a negative power is an error
        assert!(matches!(
            f.eval_at(&q(0, 1)),
            Err(CoeffError::ZeroSubstitutionIntoNegativePower)
        ));
    }

    #[test]
    fn is_polynomial_examples() {
        let f = Scalar::laurent(LaurentPoly::from_terms(vec![
            (2, BigRational::one()),
            (0, BigRational::one()),
        ]));
        assert!(f.is_polynomial().unwrap());
        let g = Scalar::laurent(LaurentPoly::monomial(BigRational::one(), -1));
        assert!(!g.is_polynomial().unwrap());
        // x * (-x^-1) cancels to the constant -1
        let x = Scalar::laurent(LaurentPoly::variable());
        let h = x.checked_mul(&g.neg()).unwrap();
        assert!(h.is_polynomial().unwrap());
    }

    #[test]
    fn scalar_text_round_trips() {
        for (s, ring) in [
            ("5/6", RingId::RationalQ),
            ("-2", RingId::RationalQ),
            ("3*x^-2 + 1/2*x^0 + x^3", RingId::LaurentQ),
            ("-x^1 + 2*x^2", RingId::LaurentQ),
            ("0", RingId::LaurentQ),
            ("2 mod 5", RingId::prime_field(5).unwrap()),
            ("-12", RingId::IntegerZ),
        ] {
            let v = Scalar::parse_in_ring(s, ring).unwrap();
            assert_eq!(v.to_string(), s, "canonical form of {s}");
            let again = Scalar::parse_in_ring(&v.to_string(), ring).unwrap();
            assert_eq!(v, again);
        }
    }

    fn arb_scalar(ring: RingId) -> BoxedStrategy<Scalar> {
        match ring {
            RingId::RationalQ => (-20i64..20, 1i64..8)
                .prop_map(|(n, d)| Scalar::rational(n, d))
                .boxed(),
            RingId::LaurentQ => proptest::collection::vec((-3i64..4, -9i64..10), 0..4)
                .prop_map(|ts| {
                    Scalar::laurent(LaurentPoly::from_terms(
                        ts.into_iter()
                            .map(|(e, c)| (e, BigRational::from_integer(BigInt::from(c)))),
                    ))
                })
                .boxed(),
            RingId::PrimeField(p) => (0..p.get())
                .prop_map(move |v| Scalar::Mod { value: v, p })
                .boxed(),
            RingId::IntegerZ => (-50i64..50)
                .prop_map(|v| Scalar::Integer(BigInt::from(v)))
                .boxed(),
        }
    }

    fn all_rings() -> Vec<RingId> {
        vec![
            RingId::RationalQ,
            RingId::LaurentQ,
            RingId::prime_field(5).unwrap(),
            RingId::IntegerZ,
        ]
    }

    proptest! {
        #[test]
        fn ring_axioms(seed in 0usize..4, abc in (0..4usize).prop_flat_map(|i| {
            let ring = all_rings()[i];
            (arb_scalar(ring), arb_scalar(ring), arb_scalar(ring))
        })) {
            let _ = seed;
            let (a, b, c) = abc;
            // associativity and commutativity
            let ab_c = (&(&a + &b) + &c).clone();
            let a_bc = (&a + &(&b + &c)).clone();
            prop_assert_eq!(&ab_c, &a_bc);
            prop_assert_eq!(&(&a * &b), &(&b * &a));
            prop_assert_eq!(&(&(&a * &b) * &c), &(&a * &(&b * &c)));
            // distributivity
            prop_assert_eq!(&(&a * &(&b + &c)), &(&(&a * &b) + &(&a * &c)));
            // additive inverse
            prop_assert!((&a + &(-&a)).is_zero());
        }

        #[test]
        fn eval_at_is_a_ring_homomorphism(
            f in arb_scalar(RingId::LaurentQ),
            g in arb_scalar(RingId::LaurentQ),
            lam_n in 1i64..9,
            lam_d in 1i64..5,
        ) {
            let lam = Scalar::rational(lam_n, lam_d);
            let fg = f.checked_mul(&g).unwrap();
            prop_assert_eq!(
                fg.eval_at(&lam).unwrap(),
                f.eval_at(&lam).unwrap().checked_mul(&g.eval_at(&lam).unwrap()).unwrap()
            );
            let sum = f.checked_add(&g).unwrap();
            prop_assert_eq!(
                sum.eval_at(&lam).unwrap(),
                f.eval_at(&lam).unwrap().checked_add(&g.eval_at(&lam).unwrap()).unwrap()
            );
        }
    }
}
