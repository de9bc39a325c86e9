//! Loaf division and sequem (completion) reckoning.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::decompose::{decompose, DecompositionPolicy};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::unit_fraction::UnitFractionSum;

/// Each man's share of `loaves` loaves divided among `men` men.
pub fn divide_loaves(loaves: u64, men: u64, policy: &DecompositionPolicy) -> Result<UnitFractionSum> {
    if loaves == 0 {
        return Err(Error::NonPositive {
            what: "loaves",
            value: "0".into(),
        });
    }
    if men == 0 {
        return Err(Error::NonPositive {
            what: "men",
            value: "0".into(),
        });
    }
    decompose(&Rational::new(loaves, men)?, policy)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum SequemMode {
    /// Find `x` with `given + x = target`.
    #[default]
    Additive,
    /// Find `x` with `given · x = target`.
    Multiplicative,
}

impl fmt::Display for SequemMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SequemMode::Additive => "additive",
            SequemMode::Multiplicative => "multiplicative",
        })
    }
}

impl FromStr for SequemMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "additive" | "add" => Ok(SequemMode::Additive),
            "multiplicative" | "mul" => Ok(SequemMode::Multiplicative),
            _ => Err(Error::parse(s, "expected additive or multiplicative")),
        }
    }
}

/// The value that completes `given` to `target`.
pub fn sequem_complete(given: &Rational, target: &Rational, mode: SequemMode) -> Result<Rational> {
    match mode {
        SequemMode::Additive => Ok(target - given),
        SequemMode::Multiplicative => target.checked_div(given),
    }
}
