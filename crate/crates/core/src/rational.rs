//! Exact rational numbers.
//!
//! [`Rational`] wraps an arbitrary-precision fraction that is always kept in
//! canonical form: the denominator is positive and shares no factor with the
//! numerator. Nothing in this module touches floating point.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Result<Self> {
        let d = denominator.into();
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numerator.into(), d)))
    }

    /// Shorthand for small literals. Panics on a zero denominator.
    pub fn frac(numerator: i64, denominator: i64) -> Self {
        Self::new(numerator, denominator).expect("zero denominator in Rational::frac")
    }

    pub fn integer(value: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(value.into()))
    }

    pub fn unit(denominator: impl Into<BigInt>) -> Result<Self> {
        Self::new(1, denominator)
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// True for `1/d` with `d >= 1`.
    pub fn is_unit_fraction(&self) -> bool {
        self.numer().is_one()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    /// Fractional part in `[0, 1)`.
    pub fn fract_part(&self) -> Self {
        self - &Rational::integer(self.floor())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn pow(&self, exponent: u32) -> Self {
        Rational(num_traits::pow(self.0.clone(), exponent as usize))
    }

    /// Lossy conversion for display and plotting only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Both invariants of the canonical form: positive denominator, coprime parts.
    pub fn is_canonical(&self) -> bool {
        self.denom().is_positive() && self.numer().gcd(self.denom()).is_one()
    }

    /// Decimal expansion rounded half away from zero to `digits` places.
    pub fn to_decimal(&self, digits: u32) -> String {
        let scale = BigInt::from(10u32).pow(digits);
        let scaled: BigInt = self.numer().abs() * &scale * 2 + self.denom();
        let rounded = scaled.div_floor(&(self.denom() * 2));
        let (int_part, frac_part) = rounded.div_rem(&scale);
        let sign = if self.is_negative() && !rounded.is_zero() { "-" } else { "" };
        if digits == 0 {
            return format!("{sign}{int_part}");
        }
        format!(
            "{sign}{int_part}.{:0>width$}",
            frac_part.to_string(),
            width = digits as usize
        )
    }

    /// Parses a finite decimal literal such as `3.14159` exactly.
    pub fn from_decimal_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (neg, body) = match t.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, t),
        };
        let (int_digits, frac_digits) = body.split_once('.').unwrap_or((body, ""));
        if int_digits.is_empty() && frac_digits.is_empty() {
            return Err(Error::parse(s, "empty decimal"));
        }
        if !int_digits.chars().chain(frac_digits.chars()).all(|c| c.is_ascii_digit()) {
            return Err(Error::parse(s, "not a decimal literal"));
        }
        let digits = format!("{int_digits}{frac_digits}");
        let n: BigInt = digits.parse().map_err(|_| Error::parse(s, "bad digits"))?;
        let d = BigInt::from(10u32).pow(frac_digits.len() as u32);
        let r = Rational::new(n, d)?;
        Ok(if neg { -r } else { r })
    }

    /// Parses a single `a/b` or integer term.
    fn parse_term(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Err(Error::parse(s, "empty term"));
        }
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| Error::parse(s, "bad numerator"))?;
        let d: BigInt = d.parse().map_err(|_| Error::parse(s, "bad denominator"))?;
        if d.sign() == Sign::Minus {
            return Err(Error::parse(s, "denominator must be positive"));
        }
        Rational::new(n, d).map_err(|_| Error::parse(s, "zero denominator"))
    }

    /// Parses a comma-separated list of terms and sums them: `1,1/7` is `8/7`.
    pub fn parse_sum_list(s: &str) -> Result<Self> {
        s.split(',').map(|part| part.parse::<Rational>()).sum()
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `133/8`, `19`, `-5/8`, and `+`-joined sums such as
    /// `16 + 1/2 + 1/8`.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Err(Error::parse(s, "empty input"));
        }
        let mut total = Rational::zero();
        for term in s.split('+') {
            total += Rational::parse_term(term).map_err(|e| match e {
                Error::Parse { reason, .. } => Error::parse(s, reason),
                other => other,
            })?;
        }
        Ok(total)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rational({self})")
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! from_int {
    ($($t:ty),*) => {$(
        impl From<$t> for Rational {
            fn from(v: $t) -> Self {
                Rational::integer(v)
            }
        }
    )*};
}
from_int!(i32, i64, u32, u64, u128, i128, usize, BigInt);

impl From<BigUint> for Rational {
    fn from(v: BigUint) -> Self {
        Rational::integer(BigInt::from(v))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(self.0, rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(&self.0, rhs.0))
            }
        }
    };
}
binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl AddAssign<Rational> for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.is_integer() && self.numer() == &BigInt::from(*other)
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.cmp(&Rational::from(*other)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn basic_identities() {
        assert_eq!(q(1, 3) + q(1, 6), q(1, 2));
        assert_eq!(q(2, 3) * q(3, 2), Rational::one());
        assert_eq!(q(256, 81).checked_div(&q(4, 1)).unwrap(), q(64, 81));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(q(1, 2).checked_div(&Rational::zero()), Err(Error::DivisionByZero));
        assert_eq!(Rational::new(1, 0), Err(Error::DivisionByZero));
        assert!(Rational::zero().recip().is_err());
    }

    #[test]
    fn canonical_after_construction() {
        let r = Rational::new(-6, -4).unwrap();
        assert_eq!(r, q(3, 2));
        assert!(r.is_canonical());
        let r = Rational::new(6, -4).unwrap();
        assert_eq!(r.to_string(), "-3/2");
    }

    #[test]
    fn parse_forms() {
        assert_eq!("133/8".parse::<Rational>().unwrap(), q(133, 8));
        assert_eq!("16 + 1/2 + 1/8".parse::<Rational>().unwrap(), q(133, 8));
        assert_eq!("-5/8".parse::<Rational>().unwrap(), q(-5, 8));
        assert_eq!(" 19 ".parse::<Rational>().unwrap(), q(19, 1));
        assert_eq!(Rational::parse_sum_list("1,1/7").unwrap(), q(8, 7));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("1/-2".parse::<Rational>().is_err());
        assert!("abc".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
        assert!("1 +".parse::<Rational>().is_err());
    }

    #[test]
    fn decimals() {
        assert_eq!(q(256, 81).to_decimal(6), "3.160494");
        assert_eq!(q(-1, 8).to_decimal(2), "-0.13");
        assert_eq!(q(1, 3).to_decimal(0), "0");
        assert_eq!(q(-1, 1000).to_decimal(2), "0.00");
        assert_eq!(Rational::from_decimal_str("3.25").unwrap(), q(13, 4));
        assert_eq!(Rational::from_decimal_str("-0.5").unwrap(), q(-1, 2));
    }

    #[test]
    fn floor_and_fract() {
        assert_eq!(q(133, 8).floor(), BigInt::from(16));
        assert_eq!(q(133, 8).fract_part(), q(5, 8));
        assert_eq!(q(-1, 2).floor(), BigInt::from(-1));
        assert_eq!(q(-1, 2).fract_part(), q(1, 2));
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-10_000i64..10_000, 1i64..10_000).prop_map(|(n, d)| q(n, d))
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            for r in [&a + &b, &a - &b, &a * &b] {
                prop_assert!(r.is_canonical());
            }
            if !b.is_zero() {
                let quotient = a.checked_div(&b).unwrap();
                prop_assert!(quotient.is_canonical());
                prop_assert_eq!(quotient * &b, a.clone());
            }
        }

        #[test]
        fn render_parse_round_trip(a in arb_rational()) {
            prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
        }
    }
}
