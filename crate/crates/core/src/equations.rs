//! Hau (quantity) problems, tunnu sharing in arithmetic progression, and
//! geometric progressions such as the ladder of powers of seven.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// `multiplier · x = target` for an unknown quantity `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HauProblem {
    multiplier: Rational,
    target: Rational,
}

impl HauProblem {
    pub fn new(multiplier: Rational, target: Rational) -> Result<Self> {
        if multiplier.is_zero() {
            return Err(Error::Invalid("hau multiplier must not be zero".into()));
        }
        Ok(HauProblem { multiplier, target })
    }

    /// "A quantity and its seventh" is `from_terms(&[1, 1/7], ...)`.
    pub fn from_terms(terms: &[Rational], target: Rational) -> Result<Self> {
        Self::new(terms.iter().sum(), target)
    }

    pub fn multiplier(&self) -> &Rational {
        &self.multiplier
    }

    pub fn target(&self) -> &Rational {
        &self.target
    }

    /// Whether `x` satisfies the equation exactly.
    pub fn is_solved_by(&self, x: &Rational) -> bool {
        &self.multiplier * x == self.target
    }
}

pub fn solve_hau(p: &HauProblem) -> Result<Rational> {
    p.target.checked_div(&p.multiplier)
}

/// Working of a false-position solution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FalsePositionTrace {
    pub guess: Rational,
    /// What the guess produces: `guess · multiplier`.
    pub trial: Rational,
    /// How far the trial must be scaled to reach the target.
    pub factor: Rational,
    pub answer: Rational,
}

impl FalsePositionTrace {
    pub fn render_text(&self, p: &HauProblem) -> String {
        format!(
            "1. assume {guess}\n\
             2. {guess} x {m} = {trial}\n\
             3. {target} / {trial} = {factor}\n\
             4. {guess} x {factor} = {answer}\n",
            guess = self.guess,
            m = p.multiplier,
            trial = self.trial,
            target = p.target,
            factor = self.factor,
            answer = self.answer,
        )
    }
}

/// Solves by trying `guess`, seeing what it yields, and scaling it up to the target.
pub fn solve_hau_false_position(p: &HauProblem, guess: &Rational) -> Result<FalsePositionTrace> {
    if guess.is_zero() {
        return Err(Error::Invalid("false-position guess must not be zero".into()));
    }
    let trial = guess * &p.multiplier;
    let factor = p.target.checked_div(&trial)?;
    let answer = guess * &factor;
    Ok(FalsePositionTrace {
        guess: guess.clone(),
        trial,
        factor,
        answer,
    })
}

/// The guess a scribe would pick: the multiplier's denominator, so the trial is whole.
pub fn convenient_guess(p: &HauProblem) -> Rational {
    Rational::integer(p.multiplier.denom().clone())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Progression {
    /// Shares of `total` that rise by `difference` from one to the next.
    Arithmetic {
        total: Rational,
        difference: Rational,
    },
    Geometric {
        first: Rational,
        ratio: Rational,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProgressionSpec {
    pub term_count: u32,
    pub progression: Progression,
}

impl ProgressionSpec {
    pub fn arithmetic(term_count: u32, total: Rational, difference: Rational) -> Result<Self> {
        Self::checked(term_count, Progression::Arithmetic { total, difference })
    }

    pub fn geometric(term_count: u32, first: Rational, ratio: Rational) -> Result<Self> {
        Self::checked(term_count, Progression::Geometric { first, ratio })
    }

    fn checked(term_count: u32, progression: Progression) -> Result<Self> {
        if term_count == 0 {
            return Err(Error::Invalid("progression needs at least one term".into()));
        }
        Ok(ProgressionSpec {
            term_count,
            progression,
        })
    }

    /// All terms, smallest index first.
    pub fn terms(&self) -> Vec<Rational> {
        match &self.progression {
            Progression::Arithmetic { total, difference } => {
                let n = Rational::from(self.term_count);
                let half_span = Rational::frac(i64::from(self.term_count) - 1, 2) * difference;
                let first = total.checked_div(&n).expect("n >= 1") - half_span;
                (0..self.term_count)
                    .map(|i| &first + &(Rational::from(i) * difference))
                    .collect()
            }
            Progression::Geometric { first, ratio } => {
                let mut out = Vec::with_capacity(self.term_count as usize);
                let mut term = first.clone();
                for _ in 0..self.term_count {
                    out.push(term.clone());
                    term = &term * ratio;
                }
                out
            }
        }
    }

    pub fn total(&self) -> Rational {
        match &self.progression {
            Progression::Arithmetic { total, .. } => total.clone(),
            Progression::Geometric { .. } => self.terms().iter().sum(),
        }
    }
}

/// Tunnu sharing: `term_count` shares in arithmetic progression summing to the total.
/// Shares may come out negative when the difference is large; that is left
/// to the caller.
pub fn arithmetic_shares(term_count: u32, total: &Rational, difference: &Rational) -> Result<Vec<Rational>> {
    Ok(ProgressionSpec::arithmetic(term_count, total.clone(), difference.clone())?.terms())
}

/// Names attached to the five powers of the ladder, from the first power up.
pub const LADDER_LABELS: [&str; 5] = ["an", "Katze", "Maus", "Gerste", "Maass"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LadderTerm {
    pub exponent: u32,
    pub value: Rational,
    /// Empty beyond the fifth power.
    pub label: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ladder {
    pub base: u64,
    pub terms: Vec<LadderTerm>,
    pub sum: Rational,
}

/// `base¹ + base² + … + base^top` with each power labelled.
pub fn geometric_ladder(base: u64, top_exponent: u32) -> Result<Ladder> {
    if base == 0 {
        return Err(Error::NonPositive {
            what: "ladder base",
            value: "0".into(),
        });
    }
    if top_exponent == 0 {
        return Err(Error::NonPositive {
            what: "ladder top exponent",
            value: "0".into(),
        });
    }
    let b = Rational::from(base);
    let terms: Vec<LadderTerm> = (1..=top_exponent)
        .map(|e| LadderTerm {
            exponent: e,
            value: b.pow(e),
            label: LADDER_LABELS.get(e as usize - 1).copied().unwrap_or(""),
        })
        .collect();
    let sum = terms.iter().map(|t| &t.value).sum();
    Ok(Ladder { base, terms, sum })
}

/// `base (base^top − 1) / (base − 1)`, or `top` when the base is 1.
pub fn ladder_closed_form(base: u64, top_exponent: u32) -> Rational {
    if base == 1 {
        return Rational::from(top_exponent);
    }
    let b = Rational::from(base);
    (&b * (b.pow(top_exponent) - Rational::one()))
        .checked_div(&(b - Rational::one()))
        .expect("base > 1")
}
