use serde::Serialize;

use super::bounds::Bounds;
use crate::rational::Rational;

/// Decimal places shown for values that are only known as enclosures.
pub const DEFAULT_DIGITS: u32 = 15;

/// Working precision for square roots and π, well beyond what is displayed.
pub(crate) const WORKING_DIGITS: u32 = 40;

/// A historical rule's value set against the exact modern value.
///
/// Values that involve square roots or π are carried as certified
/// enclosures; everything else is exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErrorReport {
    pub historical: Bounds,
    pub exact: Bounds,
    /// `historical − exact`.
    pub abs_error: Bounds,
    /// `abs_error / exact`, absent when the exact value is zero.
    pub rel_error: Option<Bounds>,
    /// Decimal places used when rendering enclosures.
    pub digits: u32,
}

/// Flat record used for JSON and CSV output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRecord {
    pub historical: String,
    pub exact: String,
    pub abs_error: String,
    pub rel_error: String,
    pub precision: String,
}

impl ErrorReport {
    pub fn new(historical: Bounds, exact: Bounds) -> Self {
        let abs_error = historical.sub(&exact);
        let rel_error = abs_error.div(&exact).ok();
        ErrorReport {
            historical,
            exact,
            abs_error,
            rel_error,
            digits: DEFAULT_DIGITS,
        }
    }

    pub fn exact_pair(historical: Rational, exact: Rational) -> Self {
        Self::new(Bounds::exact(historical), Bounds::exact(exact))
    }

    pub fn is_exact(&self) -> bool {
        self.historical.is_exact() && self.exact.is_exact()
    }

    /// The historical rule is certainly not below the true value.
    pub fn overestimates(&self) -> bool {
        self.abs_error.is_nonnegative()
    }

    /// The historical rule is certainly above the true value.
    pub fn strictly_overestimates(&self) -> bool {
        self.abs_error.is_positive()
    }

    pub fn error_is_zero(&self) -> bool {
        self.abs_error.as_exact().is_some_and(Rational::is_zero)
    }

    /// `exact` for exact reports, otherwise the bound on each rendered decimal.
    pub fn precision_note(&self) -> String {
        if self.is_exact() {
            "exact".to_string()
        } else {
            format!("1e-{}", self.digits)
        }
    }

    pub fn record(&self) -> ReportRecord {
        let d = self.digits;
        ReportRecord {
            historical: self.historical.render(d),
            exact: self.exact.render(d),
            abs_error: self.abs_error.render(d),
            rel_error: self
                .rel_error
                .as_ref()
                .map(|r| r.render(d))
                .unwrap_or_default(),
            precision: self.precision_note(),
        }
    }

    /// Aligned two-column text; exact fractions also get a decimal reading.
    pub fn render_text(&self) -> String {
        let d = self.digits;
        let show = |b: &Bounds| match b.as_exact() {
            Some(v) if !v.is_integer() => format!("{v}  (~{})", v.to_decimal(d)),
            Some(v) => v.to_string(),
            None => format!("~{}", b.render(d)),
        };
        let mut out = String::new();
        out.push_str(&format!("historical  {}\n", show(&self.historical)));
        out.push_str(&format!("exact       {}\n", show(&self.exact)));
        out.push_str(&format!("abs_error   {}\n", show(&self.abs_error)));
        match &self.rel_error {
            Some(r) => out.push_str(&format!("rel_error   {}\n", show(r))),
            None => out.push_str("rel_error   undefined\n"),
        }
        out.push_str(&format!("precision   {}\n", self.precision_note()));
        out
    }
}
