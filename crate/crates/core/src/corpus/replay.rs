use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::schema::{Category, CorpusProblem, Task};
use crate::arith::{decompose, divide_loaves, sequem_complete, DecompositionPolicy};
use crate::equations::{arithmetic_shares, geometric_ladder, solve_hau, ProgressionSpec};
use crate::error::Result;
use crate::geometry::{
    circle_area_egyptian, edfu_area, granary_volume, rect_area, seked_from, seked_to_base,
    seked_to_height, square_area, trapezoid_area, triangle_area, triangle_area_two_sides,
};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReplayStatus {
    Match,
    ScribalError,
    NoRecordedAnswer,
    EngineError,
}

impl ReplayStatus {
    pub const ALL: [ReplayStatus; 4] = [
        ReplayStatus::Match,
        ReplayStatus::ScribalError,
        ReplayStatus::NoRecordedAnswer,
        ReplayStatus::EngineError,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ReplayStatus::Match => "match",
            ReplayStatus::ScribalError => "scribal_error",
            ReplayStatus::NoRecordedAnswer => "no_recorded_answer",
            ReplayStatus::EngineError => "engine_error",
        }
    }
}

impl fmt::Display for ReplayStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReplayVerdict {
    pub problem_id: String,
    pub category: Category,
    pub engine_value: Option<Rational>,
    /// The engine's answer as a scribe would write it, where that differs
    /// from the plain fraction.
    pub engine_form: Option<String>,
    pub scribal_value: Option<Rational>,
    pub status: ReplayStatus,
    /// `scribal − engine`, when both exist.
    pub deviation: Option<Rational>,
    /// The engine's error message, for `engine_error`.
    pub error: Option<String>,
}

/// The engine's value for a problem, plus a unit-fraction rendering when
/// the problem is about one.
fn evaluate(task: &Task, policy: &DecompositionPolicy) -> Result<(Rational, Option<String>)> {
    let plain = |r: Rational| (r, None);
    Ok(match task {
        Task::TwoOverN { n } => {
            let target = Rational::new(2u64, *n)?;
            let form = decompose(&target, &policy.clone().with_two_thirds(false))?;
            (form.value(), Some(form.to_string()))
        }
        Task::LoafDivision { loaves, men } => {
            let form = divide_loaves(*loaves, *men, policy)?;
            (form.value(), Some(form.to_string()))
        }
        Task::Sequem { given, target, mode } => plain(sequem_complete(given, target, *mode)?),
        Task::Hau(p) => {
            let x = solve_hau(p)?;
            let form = if x.is_positive() {
                Some(decompose(&x, policy)?.to_string())
            } else {
                None
            };
            (x, form)
        }
        Task::Tunnu {
            terms,
            total,
            difference,
            share,
        } => plain(arithmetic_shares(*terms, total, difference)?[*share as usize - 1].clone()),
        Task::Progression { terms, first, ratio } => {
            plain(ProgressionSpec::geometric(*terms, first.clone(), ratio.clone())?.total())
        }
        Task::Square { side } => plain(square_area(side)?),
        Task::Rectangle { width, height } => plain(rect_area(width, height)?),
        Task::Circle { diameter } => plain(circle_area_egyptian(diameter)?),
        Task::Triangle { base, height } => plain(triangle_area(base, height)?),
        Task::TriangleTwoSides { s1, s2 } => plain(triangle_area_two_sides(s1, s2)?),
        Task::Trapezoid { p1, p2, height } => plain(trapezoid_area(p1, p2, height)?),
        Task::Edfu(q) => plain(edfu_area(q)),
        Task::Volume { floor_area, length } => plain(granary_volume(floor_area, length)?),
        Task::SekedFromBaseHeight { base, height, parts } => plain(seked_from(base, height, *parts)?),
        Task::HeightFromSeked { base, seked, parts } => plain(seked_to_height(base, seked, *parts)?),
        Task::BaseFromSeked { height, seked, parts } => plain(seked_to_base(height, seked, *parts)?),
        Task::Ladder { base, top } => plain(geometric_ladder(*base, *top)?.sum),
    })
}

/// Recomputes one problem and compares it with the recorded answer.
pub fn replay(problem: &CorpusProblem, policy: &DecompositionPolicy) -> ReplayVerdict {
    let outcome = problem.task().and_then(|t| evaluate(&t, policy));
    let scribal_value = problem.scribal_answer.clone();
    let (engine_value, engine_form, error) = match outcome {
        Ok((v, form)) => (Some(v), form, None),
        Err(e) => (None, None, Some(e.to_string())),
    };
    let deviation = match (&engine_value, &scribal_value) {
        (Some(e), Some(s)) => Some(s - e),
        _ => None,
    };
    let status = match (&engine_value, &deviation) {
        (None, _) => ReplayStatus::EngineError,
        (Some(_), None) => ReplayStatus::NoRecordedAnswer,
        (Some(_), Some(d)) if d.is_zero() => ReplayStatus::Match,
        _ => ReplayStatus::ScribalError,
    };
    ReplayVerdict {
        problem_id: problem.id.clone(),
        category: problem.category,
        engine_value,
        engine_form,
        scribal_value,
        status,
        deviation,
        error,
    }
}

/// Replays every problem in parallel; verdicts come back in input order.
pub fn replay_all(problems: &[CorpusProblem], policy: &DecompositionPolicy) -> Vec<ReplayVerdict> {
    problems.par_iter().map(|p| replay(p, policy)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LargestDeviation {
    pub problem_id: String,
    pub deviation: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErrorSummary {
    pub total: usize,
    pub counts: BTreeMap<ReplayStatus, usize>,
    pub by_category: BTreeMap<Category, BTreeMap<ReplayStatus, usize>>,
    /// Largest `|deviation|`; ties go to the smallest id.
    pub largest_deviation: Option<LargestDeviation>,
    /// Sorted by problem id.
    pub verdicts: Vec<ReplayVerdict>,
}

pub fn error_summary(verdicts: &[ReplayVerdict]) -> ErrorSummary {
    let mut sorted = verdicts.to_vec();
    sorted.sort_by(|a, b| a.problem_id.cmp(&b.problem_id));

    let mut counts: BTreeMap<ReplayStatus, usize> =
        ReplayStatus::ALL.iter().map(|s| (*s, 0)).collect();
    let mut by_category: BTreeMap<Category, BTreeMap<ReplayStatus, usize>> = BTreeMap::new();
    let mut largest: Option<LargestDeviation> = None;
    for v in &sorted {
        *counts.entry(v.status).or_default() += 1;
        *by_category
            .entry(v.category)
            .or_default()
            .entry(v.status)
            .or_default() += 1;
        if let Some(d) = &v.deviation {
            let beats = match &largest {
                None => !d.is_zero(),
                Some(best) => d.abs() > best.deviation.abs(),
            };
            if beats {
                largest = Some(LargestDeviation {
                    problem_id: v.problem_id.clone(),
                    deviation: d.clone(),
                });
            }
        }
    }
    ErrorSummary {
        total: sorted.len(),
        counts,
        by_category,
        largest_deviation: largest,
        verdicts: sorted,
    }
}

fn opt(r: &Option<Rational>) -> String {
    r.as_ref().map(ToString::to_string).unwrap_or_default()
}

impl ErrorSummary {
    pub fn render_text(&self) -> String {
        let rows: Vec<[String; 6]> = self
            .verdicts
            .iter()
            .map(|v| {
                let engine = match (&v.engine_value, &v.engine_form) {
                    (Some(e), Some(form)) if form != &e.to_string() => format!("{e} ({form})"),
                    (Some(e), _) => e.to_string(),
                    (None, _) => format!("error: {}", v.error.as_deref().unwrap_or("")),
                };
                [
                    v.problem_id.clone(),
                    v.category.to_string(),
                    v.status.to_string(),
                    engine,
                    opt(&v.scribal_value),
                    opt(&v.deviation),
                ]
            })
            .collect();
        let header = ["id", "category", "status", "engine", "scribal", "deviation"];
        let mut widths = header.map(str::len);
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let line = |cells: &[&str]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            format!("{}\n", padded.join("  ").trim_end())
        };

        let mut out = line(&header);
        for row in &rows {
            out.push_str(&line(&row.each_ref().map(String::as_str)));
        }
        out.push('\n');
        let counts: Vec<String> = self
            .counts
            .iter()
            .map(|(s, n)| format!("{s} {n}"))
            .collect();
        out.push_str(&format!("problems: {}\n", self.total));
        out.push_str(&format!("status: {}\n", counts.join(", ")));
        for (cat, per) in &self.by_category {
            let parts: Vec<String> = per.iter().map(|(s, n)| format!("{s} {n}")).collect();
            out.push_str(&format!("  {cat}: {}\n", parts.join(", ")));
        }
        match &self.largest_deviation {
            Some(l) => out.push_str(&format!(
                "largest deviation: {} ({}, ~{})\n",
                l.problem_id,
                l.deviation,
                l.deviation.to_decimal(6)
            )),
            None => out.push_str("largest deviation: none\n"),
        }
        out
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("summary serializes");
        s.push('\n');
        s
    }

    /// One row per problem.
    pub fn render_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "id",
            "category",
            "status",
            "engine_value",
            "engine_form",
            "scribal_value",
            "deviation",
            "error",
        ])
        .expect("in-memory write");
        for v in &self.verdicts {
            w.write_record([
                v.problem_id.as_str(),
                v.category.as_str(),
                v.status.as_str(),
                &opt(&v.engine_value),
                v.engine_form.as_deref().unwrap_or(""),
                &opt(&v.scribal_value),
                &opt(&v.deviation),
                v.error.as_deref().unwrap_or(""),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::load_corpus;

    fn one(doc: &str) -> ReplayVerdict {
        let c = load_corpus(&format!(r#"{{"problems": [{doc}]}}"#)).unwrap();
        replay(&c[0], &DecompositionPolicy::default())
    }

    #[test]
    fn hau_scribal_error_has_signed_deviation() {
        let v = one(
            r#"{"id": "h", "category": "hau", "scribal_answer": "16",
                "inputs": {"multiplier": "8/7", "target": 19}}"#,
        );
        assert_eq!(v.engine_value, Some(Rational::frac(133, 8)));
        assert_eq!(v.engine_form.as_deref(), Some("16 + 1/2 + 1/8"));
        assert_eq!(v.status, ReplayStatus::ScribalError);
        assert_eq!(v.deviation, Some(Rational::frac(-5, 8)));
    }

    #[test]
    fn statuses() {
        let m = one(
            r#"{"id": "m", "category": "hau", "scribal_answer": "16 + 1/2 + 1/8",
                "inputs": {"multiplier": ["1", "1/7"], "target": 19}}"#,
        );
        assert_eq!(m.status, ReplayStatus::Match);
        assert_eq!(m.deviation, Some(Rational::zero()));

        let n = one(r#"{"id": "n", "category": "ladder", "inputs": {"base": 7, "top": 5}}"#);
        assert_eq!(n.status, ReplayStatus::NoRecordedAnswer);
        assert_eq!(n.engine_value, Some(Rational::from(19607)));

        let e = one(
            r#"{"id": "e", "category": "area", "variant": "square", "scribal_answer": "4",
                "inputs": {"side": "-2"}}"#,
        );
        assert_eq!(e.status, ReplayStatus::EngineError);
        assert!(e.error.is_some() && e.deviation.is_none());
    }

    #[test]
    fn two_over_n_never_uses_two_thirds() {
        let v = one(r#"{"id": "t", "category": "two_over_n", "inputs": {"n": 3}}"#);
        assert_eq!(v.engine_form.as_deref(), Some("1/2 + 1/6"));
    }

    #[test]
    fn summary_is_sorted_and_counts_everything() {
        let doc = r#"{"problems": [
            {"id": "z", "category": "hau", "scribal_answer": "16", "inputs": {"multiplier": "8/7", "target": 19}},
            {"id": "a", "category": "ladder", "scribal_answer": "19607", "inputs": {"base": 7, "top": 5}},
            {"id": "m", "category": "volume", "scribal_answer": "100", "inputs": {"floor_area": 9, "length": 10}}]}"#;
        let c = load_corpus(doc).unwrap();
        let s = error_summary(&replay_all(&c, &DecompositionPolicy::default()));
        let ids: Vec<&str> = s.verdicts.iter().map(|v| v.problem_id.as_str()).collect();
        assert_eq!(ids, ["a", "m", "z"]);
        assert_eq!(s.counts[&ReplayStatus::Match], 1);
        assert_eq!(s.counts[&ReplayStatus::ScribalError], 2);
        assert_eq!(s.counts[&ReplayStatus::EngineError], 0);
        let l = s.largest_deviation.as_ref().unwrap();
        assert_eq!((l.problem_id.as_str(), &l.deviation), ("m", &Rational::from(10)));
        assert_eq!(s.render_text(), s.render_text());
        assert!(s.render_csv().starts_with("id,category,status,"));
        assert!(s.render_text().contains("largest deviation: m (10, ~10.000000)"));
    }
}
