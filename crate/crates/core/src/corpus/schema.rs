use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::arith::SequemMode;
use crate::equations::HauProblem;
use crate::error::{Error, Result};
use crate::geometry::SideQuad;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Category {
    TwoOverN,
    LoafDivision,
    Sequem,
    Hau,
    Tunnu,
    Progression,
    Area,
    Volume,
    Seked,
    Ladder,
}

impl Category {
    pub const ALL: [Category; 10] = [
        Category::TwoOverN,
        Category::LoafDivision,
        Category::Sequem,
        Category::Hau,
        Category::Tunnu,
        Category::Progression,
        Category::Area,
        Category::Volume,
        Category::Seked,
        Category::Ladder,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Category::TwoOverN => "two_over_n",
            Category::LoafDivision => "loaf_division",
            Category::Sequem => "sequem",
            Category::Hau => "hau",
            Category::Tunnu => "tunnu",
            Category::Progression => "progression",
            Category::Area => "area",
            Category::Volume => "volume",
            Category::Seked => "seked",
            Category::Ladder => "ladder",
        }
    }

    /// Accepted variants, `None` when the category takes no variant. The
    /// first entry is the default.
    fn variants(self) -> Option<&'static [&'static str]> {
        match self {
            Category::Sequem => Some(&["additive", "multiplicative"]),
            Category::Area => Some(&[
                "square",
                "rectangle",
                "circle",
                "triangle",
                "triangle_two_sides",
                "trapezoid",
                "edfu",
            ]),
            Category::Seked => Some(&["seked", "height", "base"]),
            _ => None,
        }
    }

    /// Whether a variant must be given explicitly.
    fn variant_required(self) -> bool {
        self == Category::Area
    }

    /// `(required, optional)` input names.
    fn fields(self, variant: &str) -> (&'static [&'static str], &'static [&'static str]) {
        match (self, variant) {
            (Category::TwoOverN, _) => (&["n"], &[]),
            (Category::LoafDivision, _) => (&["loaves", "men"], &[]),
            (Category::Sequem, _) => (&["given", "target"], &[]),
            (Category::Hau, _) => (&["multiplier", "target"], &[]),
            (Category::Tunnu, _) => (&["terms", "total", "difference"], &["share"]),
            (Category::Progression, _) => (&["terms", "first", "ratio"], &[]),
            (Category::Area, "square") => (&["side"], &[]),
            (Category::Area, "rectangle") => (&["width", "height"], &[]),
            (Category::Area, "circle") => (&["diameter"], &[]),
            (Category::Area, "triangle") => (&["base", "height"], &[]),
            (Category::Area, "triangle_two_sides") => (&["side1", "side2"], &[]),
            (Category::Area, "trapezoid") => (&["side1", "side2", "height"], &[]),
            (Category::Area, _) => (&["a", "b", "c", "d"], &[]),
            (Category::Volume, _) => (&["floor_area", "length"], &[]),
            (Category::Seked, "seked") => (&["base", "height"], &["parts"]),
            (Category::Seked, "height") => (&["base", "seked"], &["parts"]),
            (Category::Seked, _) => (&["height", "seked"], &["parts"]),
            (Category::Ladder, _) => (&["base", "top"], &[]),
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Category {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Category::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::parse(s, "unknown category"))
    }
}

/// One papyrus-style problem with its inputs and, if known, the scribe's answer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusProblem {
    pub id: String,
    pub category: Category,
    /// Resolved variant; categories without variants leave this empty.
    pub variant: Option<String>,
    /// Named inputs; list inputs are stored as their sum.
    pub inputs: BTreeMap<String, Rational>,
    pub scribal_answer: Option<Rational>,
    /// The answer as written in the source, e.g. `16 + 1/2 + 1/8`.
    pub scribal_text: Option<String>,
    pub source_note: String,
}

/// What the engine has to compute, with inputs already typed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Task {
    TwoOverN { n: u64 },
    LoafDivision { loaves: u64, men: u64 },
    Sequem { given: Rational, target: Rational, mode: SequemMode },
    Hau(HauProblem),
    Tunnu { terms: u32, total: Rational, difference: Rational, share: u32 },
    Progression { terms: u32, first: Rational, ratio: Rational },
    Square { side: Rational },
    Rectangle { width: Rational, height: Rational },
    Circle { diameter: Rational },
    Triangle { base: Rational, height: Rational },
    TriangleTwoSides { s1: Rational, s2: Rational },
    Trapezoid { p1: Rational, p2: Rational, height: Rational },
    Edfu(SideQuad),
    Volume { floor_area: Rational, length: Rational },
    SekedFromBaseHeight { base: Rational, height: Rational, parts: u32 },
    HeightFromSeked { base: Rational, seked: Rational, parts: u32 },
    BaseFromSeked { height: Rational, seked: Rational, parts: u32 },
    Ladder { base: u64, top: u32 },
}

impl CorpusProblem {
    fn input(&self, name: &str) -> Result<&Rational> {
        self.inputs
            .get(name)
            .ok_or_else(|| Error::corpus(&self.id, name, "missing"))
    }

    fn integer<T: TryFrom<u64>>(&self, name: &str, min: u64) -> Result<T> {
        let v = self.input(name)?;
        let n = v
            .is_integer()
            .then(|| v.numer().to_u64())
            .flatten()
            .filter(|&n| n >= min)
            .ok_or_else(|| {
                Error::corpus(&self.id, name, format!("expected an integer >= {min}, got {v}"))
            })?;
        T::try_from(n).map_err(|_| Error::corpus(&self.id, name, "integer out of range"))
    }

    fn get(&self, name: &str) -> Result<Rational> {
        self.input(name).cloned()
    }

    fn parts(&self) -> Result<u32> {
        if self.inputs.contains_key("parts") {
            self.integer("parts", 1)
        } else {
            Ok(crate::geometry::DEFAULT_PARTS)
        }
    }

    /// Types the inputs for the engine. Validation at load time runs this
    /// too, so a loaded problem always dispatches.
    pub fn task(&self) -> Result<Task> {
        let variant = self.variant.as_deref().unwrap_or("");
        Ok(match self.category {
            Category::TwoOverN => Task::TwoOverN { n: self.integer("n", 3)? },
            Category::LoafDivision => Task::LoafDivision {
                loaves: self.integer("loaves", 1)?,
                men: self.integer("men", 1)?,
            },
            Category::Sequem => Task::Sequem {
                given: self.get("given")?,
                target: self.get("target")?,
                mode: variant.parse()?,
            },
            Category::Hau => Task::Hau(
                HauProblem::new(self.get("multiplier")?, self.get("target")?)
                    .map_err(|e| Error::corpus(&self.id, "multiplier", e.to_string()))?,
            ),
            Category::Tunnu => {
                let terms: u32 = self.integer("terms", 1)?;
                let share = if self.inputs.contains_key("share") {
                    self.integer("share", 1)?
                } else {
                    terms
                };
                if share > terms {
                    return Err(Error::corpus(&self.id, "share", "beyond the number of terms"));
                }
                Task::Tunnu {
                    terms,
                    total: self.get("total")?,
                    difference: self.get("difference")?,
                    share,
                }
            }
            Category::Progression => Task::Progression {
                terms: self.integer("terms", 1)?,
                first: self.get("first")?,
                ratio: self.get("ratio")?,
            },
            Category::Area => match variant {
                "square" => Task::Square { side: self.get("side")? },
                "rectangle" => Task::Rectangle {
                    width: self.get("width")?,
                    height: self.get("height")?,
                },
                "circle" => Task::Circle { diameter: self.get("diameter")? },
                "triangle" => Task::Triangle {
                    base: self.get("base")?,
                    height: self.get("height")?,
                },
                "triangle_two_sides" => Task::TriangleTwoSides {
                    s1: self.get("side1")?,
                    s2: self.get("side2")?,
                },
                "trapezoid" => Task::Trapezoid {
                    p1: self.get("side1")?,
                    p2: self.get("side2")?,
                    height: self.get("height")?,
                },
                _ => Task::Edfu(
                    SideQuad::new(self.get("a")?, self.get("b")?, self.get("c")?, self.get("d")?)
                        .map_err(|e| Error::corpus(&self.id, "sides", e.to_string()))?,
                ),
            },
            Category::Volume => Task::Volume {
                floor_area: self.get("floor_area")?,
                length: self.get("length")?,
            },
            Category::Seked => {
                let parts = self.parts()?;
                match variant {
                    "seked" => Task::SekedFromBaseHeight {
                        base: self.get("base")?,
                        height: self.get("height")?,
                        parts,
                    },
                    "height" => Task::HeightFromSeked {
                        base: self.get("base")?,
                        seked: self.get("seked")?,
                        parts,
                    },
                    _ => Task::BaseFromSeked {
                        height: self.get("height")?,
                        seked: self.get("seked")?,
                        parts,
                    },
                }
            }
            Category::Ladder => Task::Ladder {
                base: self.integer("base", 1)?,
                top: self.integer("top", 1)?,
            },
        })
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCorpus {
    problems: Vec<Value>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    id: String,
    category: String,
    #[serde(default)]
    variant: Option<String>,
    #[serde(default)]
    inputs: serde_json::Map<String, Value>,
    #[serde(default)]
    scribal_answer: Option<String>,
    #[serde(default)]
    source_note: String,
}

/// A JSON input: a rational string, an integer, or a list of either (summed).
fn input_value(id: &str, field: &str, v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => s
            .parse()
            .map_err(|e: Error| Error::corpus(id, field, e.to_string())),
        Value::Number(n) => match (n.as_i64(), n.as_u64()) {
            (Some(i), _) => Ok(Rational::from(i)),
            (None, Some(u)) => Ok(Rational::from(u)),
            _ => Err(Error::corpus(
                id,
                field,
                "non-integer numbers are not accepted; write the fraction as a string",
            )),
        },
        Value::Array(items) if !items.is_empty() => items
            .iter()
            .map(|item| match item {
                Value::Array(_) => Err(Error::corpus(id, field, "nested lists are not accepted")),
                other => input_value(id, field, other),
            })
            .sum(),
        _ => Err(Error::corpus(id, field, format!("unsupported value {v}"))),
    }
}

fn validate(raw: RawProblem) -> Result<CorpusProblem> {
    let id = raw.id.trim().to_string();
    if id.is_empty() {
        return Err(Error::corpus("", "id", "must not be empty"));
    }
    let category: Category = raw
        .category
        .parse()
        .map_err(|_| Error::corpus(&id, "category", format!("unknown category {:?}", raw.category)))?;

    let variant = match (category.variants(), raw.variant) {
        (None, None) => None,
        (None, Some(v)) => {
            return Err(Error::corpus(
                &id,
                "variant",
                format!("{category} takes no variant, got {v:?}"),
            ))
        }
        (Some(_), None) if category.variant_required() => {
            return Err(Error::corpus(&id, "variant", "required for this category"))
        }
        (Some(allowed), None) => Some(allowed[0].to_string()),
        (Some(allowed), Some(v)) if allowed.contains(&v.as_str()) => Some(v),
        (Some(allowed), Some(v)) => {
            return Err(Error::corpus(
                &id,
                "variant",
                format!("{v:?} is not one of {}", allowed.join(", ")),
            ))
        }
    };

    let (required, optional) = category.fields(variant.as_deref().unwrap_or(""));
    let mut inputs = BTreeMap::new();
    for (name, value) in &raw.inputs {
        if !required.contains(&name.as_str()) && !optional.contains(&name.as_str()) {
            return Err(Error::corpus(&id, name, "not an input of this problem kind"));
        }
        inputs.insert(name.clone(), input_value(&id, name, value)?);
    }
    if let Some(missing) = required.iter().find(|r| !inputs.contains_key(**r)) {
        return Err(Error::corpus(&id, missing, "missing"));
    }

    let scribal_answer = raw
        .scribal_answer
        .as_deref()
        .map(|s| {
            s.parse::<Rational>()
                .map_err(|e| Error::corpus(&id, "scribal_answer", e.to_string()))
        })
        .transpose()?;

    let problem = CorpusProblem {
        id,
        category,
        variant,
        inputs,
        scribal_answer,
        scribal_text: raw.scribal_answer,
        source_note: raw.source_note,
    };
    problem.task()?;
    Ok(problem)
}

/// Parses and validates a corpus document. Ids must be unique.
pub fn load_corpus(document: &str) -> Result<Vec<CorpusProblem>> {
    let raw: RawCorpus = serde_json::from_str(document)
        .map_err(|e| Error::corpus("", "problems", e.to_string()))?;
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::with_capacity(raw.problems.len());
    for (index, value) in raw.problems.into_iter().enumerate() {
        let id_hint = value
            .get("id")
            .and_then(Value::as_str)
            .map(str::to_string)
            .unwrap_or_else(|| format!("#{index}"));
        let problem: RawProblem = serde_json::from_value(value)
            .map_err(|e| Error::corpus(&id_hint, "problem", e.to_string()))?;
        let problem = validate(problem)?;
        if !seen.insert(problem.id.clone()) {
            return Err(Error::corpus(&problem.id, "id", "duplicate id"));
        }
        out.push(problem);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_corpus() {
        assert!(load_corpus(r#"{"problems": []}"#).unwrap().is_empty());
    }

    #[test]
    fn hau_multiplier_list_is_summed() {
        let c = load_corpus(
            r#"{"problems": [{"id": "h", "category": "hau",
                "inputs": {"multiplier": ["1", "1/7"], "target": 19}}]}"#,
        )
        .unwrap();
        assert_eq!(c[0].inputs["multiplier"], Rational::frac(8, 7));
        assert_eq!(c[0].inputs["target"], Rational::from(19));
        assert!(c[0].scribal_answer.is_none());
    }

    #[test]
    fn duplicate_ids_rejected() {
        let doc = r#"{"problems": [
            {"id": "x", "category": "ladder", "inputs": {"base": 7, "top": 5}},
            {"id": "x", "category": "ladder", "inputs": {"base": 2, "top": 3}}]}"#;
        match load_corpus(doc) {
            Err(Error::Corpus { id, field, .. }) => assert_eq!((id.as_str(), field.as_str()), ("x", "id")),
            other => panic!("unexpected {other:?}"),
        }
    }

    fn load_err(problem: &str) -> (String, String) {
        match load_corpus(&format!(r#"{{"problems": [{problem}]}}"#)) {
            Err(Error::Corpus { id, field, .. }) => (id, field),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn schema_violations_name_id_and_field() {
        assert_eq!(
            load_err(r#"{"id": "a", "category": "hau", "inputs": {"target": "1"}}"#),
            ("a".into(), "multiplier".into())
        );
        assert_eq!(
            load_err(r#"{"id": "b", "category": "magic", "inputs": {}}"#),
            ("b".into(), "category".into())
        );
        assert_eq!(
            load_err(r#"{"id": "c", "category": "ladder", "inputs": {"base": 7, "top": 5, "x": 1}}"#),
            ("c".into(), "x".into())
        );
        assert_eq!(
            load_err(r#"{"id": "d", "category": "ladder", "inputs": {"base": 7, "top": 2.5}}"#),
            ("d".into(), "top".into())
        );
        assert_eq!(
            load_err(r#"{"id": "e", "category": "area", "inputs": {"side": 3}}"#),
            ("e".into(), "variant".into())
        );
        assert_eq!(
            load_err(r#"{"id": "f", "category": "ladder", "variant": "up", "inputs": {"base": 7, "top": 5}}"#),
            ("f".into(), "variant".into())
        );
        assert_eq!(
            load_err(r#"{"id": "g", "category": "loaf_division", "inputs": {"loaves": "1/2", "men": 10}}"#),
            ("g".into(), "loaves".into())
        );
        assert_eq!(
            load_err(r#"{"id": "h", "category": "hau", "inputs": {"multiplier": "0", "target": "1"}}"#),
            ("h".into(), "multiplier".into())
        );
        assert_eq!(
            load_err(r#"{"id": "i", "category": "hau", "scribal_answer": "1/0", "inputs": {"multiplier": "1", "target": "1"}}"#),
            ("i".into(), "scribal_answer".into())
        );
        assert_eq!(
            load_err(r#"{"id": "j", "category": "hau", "extra": 1, "inputs": {}}"#),
            ("j".into(), "problem".into())
        );
        assert_eq!(
            load_err(r#"{"id": "k", "category": "tunnu", "inputs": {"terms": 3, "total": 9, "difference": 1, "share": 4}}"#),
            ("k".into(), "share".into())
        );
    }

    #[test]
    fn variants_default() {
        let c = load_corpus(
            r#"{"problems": [
                {"id": "s", "category": "sequem", "inputs": {"given": "2/3 + 1/30", "target": 1}},
                {"id": "p", "category": "seked", "inputs": {"base": 360, "height": 250}}]}"#,
        )
        .unwrap();
        assert_eq!(c[0].variant.as_deref(), Some("additive"));
        assert_eq!(c[1].variant.as_deref(), Some("seked"));
        assert!(matches!(c[1].task().unwrap(), Task::SekedFromBaseHeight { parts: 7, .. }));
    }
}
