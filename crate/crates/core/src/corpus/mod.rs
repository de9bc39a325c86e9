//! A corpus of papyrus-style problems, replayed through the engine and
//! compared with the answers the scribes recorded.

mod replay;
mod schema;

pub use replay::{
    error_summary, replay, replay_all, ErrorSummary, LargestDeviation, ReplayStatus,
    ReplayVerdict,
};
pub use schema::{load_corpus, Category, CorpusProblem, Task};

use crate::error::Result;

/// The bundled starter corpus, as JSON.
pub const STARTER_CORPUS: &str = include_str!("../../data/starter_corpus.json");

pub fn starter_corpus() -> Result<Vec<CorpusProblem>> {
    load_corpus(STARTER_CORPUS)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::DecompositionPolicy;
    use crate::rational::Rational;

    #[test]
    fn starter_corpus_replays() {
        let problems = starter_corpus().unwrap();
        let covered: std::collections::BTreeSet<_> = problems.iter().map(|p| p.category).collect();
        assert_eq!(covered.len(), Category::ALL.len());

        let s = error_summary(&replay_all(&problems, &DecompositionPolicy::default()));
        for v in &s.verdicts {
            let expected = match v.problem_id.as_str() {
                "hau-24-miscopied" => ReplayStatus::ScribalError,
                "area-triangle" => ReplayStatus::NoRecordedAnswer,
                _ => ReplayStatus::Match,
            };
            assert_eq!(v.status, expected, "{}", v.problem_id);
        }
        let l = s.largest_deviation.unwrap();
        assert_eq!(l.problem_id, "hau-24-miscopied");
        assert_eq!(l.deviation, Rational::frac(-5, 8));
    }
}
