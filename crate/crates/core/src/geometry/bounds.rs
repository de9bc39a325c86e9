//! Certified rational enclosures for the few irrational quantities the
//! surveying rules need: square roots of side lengths and π.

use std::fmt;

use num_bigint::{BigInt, BigUint};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A closed interval `[lo, hi]` known to contain a real value. A degenerate
/// interval is an exact value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    lo: Rational,
    hi: Rational,
}

impl Bounds {
    pub fn exact(value: Rational) -> Self {
        Bounds {
            lo: value.clone(),
            hi: value,
        }
    }

    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::Invalid(format!("empty interval [{lo}, {hi}]")));
        }
        Ok(Bounds { lo, hi })
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        self.is_exact().then_some(&self.lo)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) * Rational::frac(1, 2)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn add(&self, other: &Bounds) -> Bounds {
        Bounds {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Bounds) -> Bounds {
        Bounds {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn mul(&self, other: &Bounds) -> Bounds {
        // the common case in surveying: lengths and areas, never negative
        if self.is_nonnegative() && other.is_nonnegative() {
            return Bounds {
                lo: &self.lo * &other.lo,
                hi: &self.hi * &other.hi,
            };
        }
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        Bounds {
            lo: products.iter().min().expect("four products").clone(),
            hi: products.iter().max().expect("four products").clone(),
        }
    }

    pub fn scale(&self, k: &Rational) -> Bounds {
        if k.is_negative() {
            Bounds {
                lo: &self.hi * k,
                hi: &self.lo * k,
            }
        } else {
            Bounds {
                lo: &self.lo * k,
                hi: &self.hi * k,
            }
        }
    }

    /// Division by an interval that excludes zero.
    pub fn div(&self, other: &Bounds) -> Result<Bounds> {
        if !(other.lo.is_positive() || other.hi.is_negative()) {
            return Err(Error::DivisionByZero);
        }
        let recip = Bounds {
            lo: other.hi.recip()?,
            hi: other.lo.recip()?,
        };
        Ok(self.mul(&recip))
    }

    /// Certainly `>= 0`.
    pub fn is_nonnegative(&self) -> bool {
        !self.lo.is_negative()
    }

    /// Certainly `> 0`.
    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    /// Decimal rendering: exact values print as fractions, enclosures as the
    /// midpoint to `digits` places.
    pub fn render(&self, digits: u32) -> String {
        match self.as_exact() {
            Some(v) => v.to_string(),
            None => self.midpoint().to_decimal(digits),
        }
    }
}

impl fmt::Display for Bounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "[{}, {}]", self.lo, self.hi)
        }
    }
}

/// `√r` enclosed to within `10^-digits`, exact when `r` is a rational square.
pub fn sqrt_bounds(r: &Rational, digits: u32) -> Result<Bounds> {
    if r.is_negative() {
        return Err(Error::Negative {
            what: "square root argument",
            value: r.to_string(),
        });
    }
    // √(p/q) = √(p q) / q
    let pq: BigUint = (r.numer() * r.denom()).to_biguint().expect("non-negative");
    let q = r.denom().clone();
    let root = pq.sqrt();
    if &root * &root == pq {
        return Ok(Bounds::exact(Rational::new(BigInt::from(root), q)?));
    }
    let scale = BigUint::from(10u32).pow(digits);
    let scaled_root = (&pq * &scale * &scale).sqrt();
    let denom = BigInt::from(scale) * q;
    // ordered by construction, which spares a rational comparison
    Ok(Bounds {
        lo: Rational::new(BigInt::from(scaled_root.clone()), denom.clone())?,
        hi: Rational::new(BigInt::from(scaled_root + 1u32), denom)?,
    })
}

/// π to 50 decimal places, truncated.
const PI_DIGITS: &str = "3.14159265358979323846264338327950288419716939937510";

/// An enclosure of π of width `10^-50`.
pub fn pi_bounds() -> Bounds {
    let lo = Rational::from_decimal_str(PI_DIGITS).expect("valid literal");
    let ulp = Rational::new(1, BigInt::from(10u32).pow(50)).expect("non-zero");
    let hi = &lo + &ulp;
    Bounds { lo, hi }
}

/// Whether `r` is the square of a rational.
pub fn is_rational_square(r: &Rational) -> bool {
    !r.is_negative()
        && sqrt_bounds(r, 0)
            .map(|b| b.is_exact())
            .unwrap_or(false)
}

pub(crate) fn zero() -> Bounds {
    Bounds::exact(Rational::zero())
}

impl Default for Bounds {
    fn default() -> Self {
        zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn exact_roots() {
        assert_eq!(sqrt_bounds(&q(25, 1), 10).unwrap(), Bounds::exact(q(5, 1)));
        assert_eq!(sqrt_bounds(&q(9, 16), 10).unwrap(), Bounds::exact(q(3, 4)));
        assert_eq!(sqrt_bounds(&Rational::zero(), 10).unwrap(), Bounds::exact(Rational::zero()));
        assert!(is_rational_square(&q(49, 4)));
        assert!(!is_rational_square(&q(2, 1)));
        assert!(sqrt_bounds(&q(-1, 1), 3).is_err());
    }

    #[test]
    fn irrational_root_is_enclosed() {
        let b = sqrt_bounds(&q(2, 1), 20).unwrap();
        assert!(!b.is_exact());
        assert!(b.lo().square() < q(2, 1));
        assert!(b.hi().square() > q(2, 1));
        assert!(b.width() <= Rational::new(1, BigInt::from(10u32).pow(20)).unwrap());
        assert_eq!(b.render(12), "1.414213562373");

        let b = sqrt_bounds(&q(1, 3), 15).unwrap();
        assert!(b.lo().square() < q(1, 3) && b.hi().square() > q(1, 3));
    }

    #[test]
    fn pi_enclosure() {
        let pi = pi_bounds();
        assert_eq!(pi.render(15), "3.141592653589793");
        assert!(pi.contains(&Rational::from_decimal_str("3.1415926535897932384626433832795028841971693993751").unwrap()));
        // Archimedes' bounds
        assert!(pi.lo() > &q(223, 71) && pi.hi() < &q(22, 7));
    }

    #[test]
    fn interval_arithmetic() {
        let a = Bounds::new(q(1, 1), q(2, 1)).unwrap();
        let b = Bounds::new(q(-1, 1), q(3, 1)).unwrap();
        assert_eq!(a.add(&b), Bounds::new(q(0, 1), q(5, 1)).unwrap());
        assert_eq!(a.sub(&b), Bounds::new(q(-2, 1), q(3, 1)).unwrap());
        assert_eq!(a.mul(&b), Bounds::new(q(-2, 1), q(6, 1)).unwrap());
        assert!(a.div(&b).is_err());
        assert_eq!(b.div(&a).unwrap(), Bounds::new(q(-1, 1), q(3, 1)).unwrap());
        assert!(Bounds::new(q(2, 1), q(1, 1)).is_err());
    }
}
