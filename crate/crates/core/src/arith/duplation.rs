//! Multiplication and division by doubling.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// One line of a doubling table: `power × doubled factor = value`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoublingRow {
    pub power: u64,
    pub value: u128,
    pub selected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DuplationTrace {
    /// Factor whose binary digits pick the rows.
    pub counted: u64,
    /// Factor written in the doubling column.
    pub doubled: u64,
    pub rows: Vec<DoublingRow>,
    pub product: u128,
}

impl DuplationTrace {
    /// Powers of two whose rows were added up; they sum to `counted`.
    pub fn selected_powers(&self) -> Vec<u64> {
        self.rows.iter().filter(|r| r.selected).map(|r| r.power).collect()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let mark = if row.selected { "\\" } else { " " };
            out.push_str(&format!("{mark} {:>10}  {:>20}\n", row.power, row.value));
        }
        out.push_str(&format!(
            "{} x {} = {}\n",
            self.counted, self.doubled, self.product
        ));
        out
    }
}

/// `a × b`: `b` is doubled row by row and the rows picked out by the binary
/// digits of `a` are added, so `13 × 12` adds the rows for 1, 4 and 8.
pub fn duplation_multiply(a: u64, b: u64) -> Result<DuplationTrace> {
    if a == 0 || b == 0 {
        return Err(Error::NonPositive {
            what: "duplation factor",
            value: "0".into(),
        });
    }
    let mut rows = Vec::new();
    let mut power = 1u64;
    let mut value = u128::from(b);
    let mut product = 0u128;
    loop {
        let selected = a & power != 0;
        if selected {
            product += value;
        }
        rows.push(DoublingRow {
            power,
            value,
            selected,
        });
        match power.checked_mul(2) {
            Some(next) if next <= a => {
                power = next;
                value *= 2;
            }
            _ => break,
        }
    }
    Ok(DuplationTrace {
        counted: a,
        doubled: b,
        rows,
        product,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DuplationDivision {
    pub dividend: u64,
    pub divisor: u64,
    /// Doubling rows of the divisor whose values were taken.
    pub rows: Vec<DoublingRow>,
    pub quotient: u64,
    /// Left over after the whole part, as a fraction of the divisor.
    pub remainder: Rational,
}

impl DuplationDivision {
    pub fn value(&self) -> Rational {
        Rational::from(self.quotient) + &self.remainder
    }
}

/// `dividend ÷ divisor` by doubling the divisor until it would pass the
/// dividend, then taking rows from the top down.
pub fn duplation_divide(dividend: u64, divisor: u64) -> Result<DuplationDivision> {
    if divisor == 0 {
        return Err(Error::DivisionByZero);
    }
    let mut rows = Vec::new();
    let mut power = 1u64;
    let mut value = u128::from(divisor);
    while value <= u128::from(dividend) {
        rows.push(DoublingRow {
            power,
            value,
            selected: false,
        });
        power *= 2;
        value *= 2;
    }
    let mut left = u128::from(dividend);
    let mut quotient = 0u64;
    for row in rows.iter_mut().rev() {
        if row.value <= left {
            left -= row.value;
            quotient += row.power;
            row.selected = true;
        }
    }
    Ok(DuplationDivision {
        dividend,
        divisor,
        rows,
        quotient,
        remainder: Rational::new(left as u64, divisor)?,
    })
}
