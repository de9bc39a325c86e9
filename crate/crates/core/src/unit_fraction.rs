//! Egyptian-style values: an integer part, an optional 2/3, and distinct unit
//! fractions.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// `integer_part + (2/3)? + Σ 1/dᵢ` with strictly increasing `dᵢ ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UnitFractionSum {
    integer_part: BigUint,
    two_thirds: bool,
    denominators: Vec<BigUint>,
}

impl UnitFractionSum {
    /// Builds a value, sorting the denominators and rejecting duplicates and `1`.
    pub fn new(
        integer_part: impl Into<BigUint>,
        two_thirds: bool,
        denominators: impl IntoIterator<Item = impl Into<BigUint>>,
    ) -> Result<Self> {
        let mut denominators: Vec<BigUint> = denominators.into_iter().map(Into::into).collect();
        denominators.sort();
        for d in &denominators {
            if d.is_zero() || d.is_one() {
                return Err(Error::Invalid(format!(
                    "unit fraction denominator must be at least 2, got {d}"
                )));
            }
        }
        if let Some(w) = denominators.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Invalid(format!("repeated unit fraction 1/{}", w[0])));
        }
        Ok(UnitFractionSum {
            integer_part: integer_part.into(),
            two_thirds,
            denominators,
        })
    }

    pub fn from_integer(n: impl Into<BigUint>) -> Self {
        UnitFractionSum {
            integer_part: n.into(),
            ..Default::default()
        }
    }

    pub fn integer_part(&self) -> &BigUint {
        &self.integer_part
    }

    pub fn has_two_thirds(&self) -> bool {
        self.two_thirds
    }

    pub fn denominators(&self) -> &[BigUint] {
        &self.denominators
    }

    /// Fraction terms, counting a 2/3 as one term. The integer part is not a term.
    pub fn term_count(&self) -> usize {
        self.denominators.len() + usize::from(self.two_thirds)
    }

    pub fn largest_denominator(&self) -> Option<&BigUint> {
        self.denominators.last()
    }

    pub fn value(&self) -> Rational {
        let mut total = Rational::from(self.integer_part.clone());
        if self.two_thirds {
            total += Rational::frac(2, 3);
        }
        for d in &self.denominators {
            total += Rational::new(1, BigInt::from(d.clone())).expect("denominator >= 2");
        }
        total
    }

    /// The fraction terms as rationals, 2/3 first, then in increasing denominator order.
    pub fn fraction_terms(&self) -> Vec<Rational> {
        let mut out = Vec::with_capacity(self.term_count());
        if self.two_thirds {
            out.push(Rational::frac(2, 3));
        }
        out.extend(
            self.denominators
                .iter()
                .map(|d| Rational::new(1, BigInt::from(d.clone())).expect("denominator >= 2")),
        );
        out
    }
}

/// Exact value of an Egyptian sum.
pub fn from_unit_fractions(u: &UnitFractionSum) -> Rational {
    u.value()
}

impl From<&UnitFractionSum> for Rational {
    fn from(u: &UnitFractionSum) -> Self {
        u.value()
    }
}

impl fmt::Display for UnitFractionSum {
    /// Renders as `16 + 1/2 + 1/8`; a zero integer part is omitted unless
    /// nothing else is present.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if !self.integer_part.is_zero() || self.term_count() == 0 {
            parts.push(self.integer_part.to_string());
        }
        if self.two_thirds {
            parts.push("2/3".to_string());
        }
        parts.extend(self.denominators.iter().map(|d| format!("1/{d}")));
        f.write_str(&parts.join(" + "))
    }
}

impl FromStr for UnitFractionSum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Err(Error::parse(s, "empty input"));
        }
        let mut integer_part = BigUint::zero();
        let mut two_thirds = false;
        let mut denominators = Vec::new();
        for raw in s.split('+') {
            let term = raw.trim();
            match term.split_once('/') {
                None => {
                    let n: BigUint = term
                        .parse()
                        .map_err(|_| Error::parse(s, format!("bad integer term {term:?}")))?;
                    integer_part += n;
                }
                Some((n, d)) => {
                    let n = n.trim();
                    let d: BigUint = d
                        .trim()
                        .parse()
                        .map_err(|_| Error::parse(s, format!("bad denominator in {term:?}")))?;
                    match (n, d.to_string().as_str()) {
                        ("2", "3") if !two_thirds => two_thirds = true,
                        ("2", "3") => return Err(Error::parse(s, "2/3 appears twice")),
                        ("1", _) => denominators.push(d),
                        _ => {
                            return Err(Error::parse(
                                s,
                                format!("{term:?} is neither a unit fraction nor 2/3"),
                            ))
                        }
                    }
                }
            }
        }
        UnitFractionSum::new(integer_part, two_thirds, denominators)
            .map_err(|e| Error::parse(s, e.to_string()))
    }
}

impl Serialize for UnitFractionSum {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for UnitFractionSum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
