use std::collections::BTreeSet;

use rhind::arith::DecompositionPolicy;
use rhind::corpus::{
    error_summary, load_corpus, replay, replay_all, starter_corpus, Category, ReplayStatus,
    STARTER_CORPUS,
};
use rhind::{Error, Rational};

fn report(doc: &str) -> (String, String, String) {
    let s = error_summary(&replay_all(&load_corpus(doc).unwrap(), &DecompositionPolicy::default()));
    (s.render_text(), s.render_json(), s.render_csv())
}

#[test]
fn starter_report_is_byte_identical_across_runs() {
    let first = report(STARTER_CORPUS);
    for _ in 0..5 {
        assert_eq!(report(STARTER_CORPUS), first);
    }
}

#[test]
fn report_ignores_input_order() {
    let mut value: serde_json::Value = serde_json::from_str(STARTER_CORPUS).unwrap();
    value["problems"].as_array_mut().unwrap().reverse();
    assert_eq!(report(&value.to_string()), report(STARTER_CORPUS));
}

#[test]
fn every_category_dispatches() {
    let problems = starter_corpus().unwrap();
    let seen: BTreeSet<Category> = problems.iter().map(|p| p.category).collect();
    assert_eq!(seen, Category::ALL.into_iter().collect());
    for p in &problems {
        let v = replay(p, &DecompositionPolicy::default());
        assert_ne!(v.status, ReplayStatus::EngineError, "{}", p.id);
        assert!(p.source_note.contains("Reconstruction") || p.source_note.contains("corrupted"));
    }
}

#[test]
fn corrupted_answer_is_flagged_with_exact_deviation() {
    let mut value: serde_json::Value = serde_json::from_str(STARTER_CORPUS).unwrap();
    for p in value["problems"].as_array_mut().unwrap() {
        if p["id"] == "ladder-79" {
            p["scribal_answer"] = "19606".into();
        }
    }
    let problems = load_corpus(&value.to_string()).unwrap();
    let s = error_summary(&replay_all(&problems, &DecompositionPolicy::default()));
    let v = s.verdicts.iter().find(|v| v.problem_id == "ladder-79").unwrap();
    assert_eq!(v.status, ReplayStatus::ScribalError);
    assert_eq!(v.deviation, Some(Rational::from(-1)));
    assert_eq!(s.counts[&ReplayStatus::ScribalError], 2);
    // |-1| now beats the -5/8 of the miscopied hau problem
    let l = s.largest_deviation.unwrap();
    assert_eq!((l.problem_id.as_str(), l.deviation), ("ladder-79", Rational::from(-1)));
}

#[test]
fn hau_examples() {
    let doc = r#"{"problems": [
        {"id": "a", "category": "hau", "scribal_answer": "133/8", "inputs": {"multiplier": "8/7", "target": "19"}},
        {"id": "b", "category": "hau", "scribal_answer": "16", "inputs": {"multiplier": "8/7", "target": "19"}},
        {"id": "c", "category": "area", "variant": "circle", "inputs": {"diameter": 9}}]}"#;
    let s = error_summary(&replay_all(&load_corpus(doc).unwrap(), &DecompositionPolicy::default()));
    let status: Vec<ReplayStatus> = s.verdicts.iter().map(|v| v.status).collect();
    assert_eq!(status, [ReplayStatus::Match, ReplayStatus::ScribalError, ReplayStatus::NoRecordedAnswer]);
    assert_eq!(s.verdicts[1].deviation, Some(Rational::frac(-5, 8)));
    assert_eq!(s.largest_deviation.unwrap().problem_id, "b");
}

#[test]
fn all_matches_have_no_scribal_errors() {
    let doc = r#"{"problems": [
        {"id": "a", "category": "volume", "scribal_answer": "640", "inputs": {"floor_area": 64, "length": 10}},
        {"id": "b", "category": "seked", "variant": "height", "scribal_answer": "1", "inputs": {"base": 2, "seked": 7}}]}"#;
    let s = error_summary(&replay_all(&load_corpus(doc).unwrap(), &DecompositionPolicy::default()));
    assert_eq!(s.counts[&ReplayStatus::ScribalError], 0);
    assert_eq!(s.counts[&ReplayStatus::Match], 2);
    assert!(s.largest_deviation.is_none());
}

#[test]
fn unknown_category_fails_at_load() {
    let err = load_corpus(r#"{"problems": [{"id": "x", "category": "astronomy", "inputs": {}}]}"#).unwrap_err();
    assert!(matches!(err, Error::Corpus { ref id, ref field, .. } if id == "x" && field == "category"));
    assert!(err.to_string().contains('x') && err.to_string().contains("category"));
}

#[test]
fn malformed_documents() {
    assert!(load_corpus("not json").is_err());
    assert!(load_corpus(r#"{"problems": [], "extra": 1}"#).is_err());
    assert!(load_corpus(r#"{"items": []}"#).is_err());
    assert!(load_corpus(r#"{"problems": [{"category": "hau"}]}"#).is_err());
}
