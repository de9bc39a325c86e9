use serde_json::json;

use super::output::{csv_table, text_table, Report};
use super::{AreaShape, Cli, Command};
use crate::arith::{
    decompose, divide_loaves, duplation_divide, duplation_multiply, sequem_complete,
    table_2_over_n_range, table_to_csv, table_to_json, DecompositionPolicy, TableRange,
};
use crate::campaign::edfu_campaign;
use crate::corpus::{error_summary, load_corpus, replay_all, starter_corpus};
use crate::equations::{
    geometric_ladder, solve_hau, solve_hau_false_position, HauProblem, ProgressionSpec,
};
use crate::error::{Error, Result};
use crate::geometry::{
    circle_area_egyptian, edfu_area, edfu_error_report, gerbert_isoceles_area, granary_volume,
    implied_pi_error, is_right_triangle, pi_comparisons, rational_right_triangles, rect_area,
    shadow_height, square_area, trapezoid_area, triangle_area, triangle_area_two_sides,
    PolygonCoords, SekedSpec, SideQuad,
};
use crate::rational::Rational;

pub(super) fn dispatch(cli: &Cli) -> Result<Report> {
    let policy = cli.policy.policy();
    policy.validate()?;
    match &cli.command {
        Command::Decompose { value } => decompose_cmd(value, &policy),
        Command::Table2n { max, include_even } => table(&policy, *max, *include_even),
        Command::Mul { a, b, divide } => mul(*a, *b, *divide),
        Command::Loaves { loaves, men } => loaves_cmd(*loaves, *men, &policy),
        Command::Sequem { given, target, mode } => {
            let x = sequem_complete(given, target, *mode)?;
            Ok(value_report("missing", &x))
        }
        Command::Hau {
            multiplier,
            target,
            guess,
        } => hau(multiplier, target, guess.as_ref(), &policy),
        Command::Shares {
            terms,
            total,
            difference,
            first,
            ratio,
        } => {
            let spec = match (total, first, ratio) {
                (Some(total), _, _) => ProgressionSpec::arithmetic(
                    *terms,
                    total.clone(),
                    difference.clone().unwrap_or_else(Rational::zero),
                )?,
                (None, Some(first), Some(ratio)) => {
                    ProgressionSpec::geometric(*terms, first.clone(), ratio.clone())?
                }
                _ => return Err(Error::Invalid("give --total and --difference, or --first and --ratio".into())),
            };
            shares(&spec)
        }
        Command::Ladder { base, top } => ladder(*base, *top),
        Command::Area { shape } => area(shape),
        Command::Circle { diameter } => Ok(value_report("area", &circle_area_egyptian(diameter)?)),
        Command::PiError { compare } => Ok(pi_error(*compare)),
        Command::Edfu {
            sides,
            vertices,
            random,
            rectangles,
        } => edfu(sides.as_deref(), vertices.as_deref(), *random, *rectangles, cli.seed),
        Command::Seked {
            base,
            height,
            seked,
            parts,
        } => seked_cmd(base.clone(), height.clone(), seked.clone(), *parts),
        Command::Shadow {
            shadow,
            stick,
            stick_shadow,
        } => Ok(value_report("height", &shadow_height(shadow, stick, stick_shadow)?)),
        Command::Granary { floor_area, length } => {
            Ok(value_report("volume", &granary_volume(floor_area, length)?))
        }
        Command::Triples { limit, check } => match check {
            Some(sides) => check_triangle(sides),
            None => triples(*limit),
        },
        Command::Corpus { path, starter } => {
            let problems = if *starter {
                starter_corpus()?
            } else {
                let path = path.as_ref().expect("clap requires a path");
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                load_corpus(&text)?
            };
            let summary = error_summary(&replay_all(&problems, &policy));
            Ok(Report {
                text: summary.render_text(),
                json: summary.render_json(),
                csv: summary.render_csv(),
            })
        }
    }
}

/// A single named value; text adds a decimal reading for fractions.
fn value_report(label: &str, value: &Rational) -> Report {
    let text = if value.is_integer() {
        format!("{label}: {value}\n")
    } else {
        format!("{label}: {value} (~{})\n", value.to_decimal(6))
    };
    Report::record(text, &[label], &[value.to_string()])
}

fn decompose_cmd(value: &Rational, policy: &DecompositionPolicy) -> Result<Report> {
    let d = decompose(value, policy)?;
    let row = vec![
        value.to_string(),
        d.to_string(),
        d.term_count().to_string(),
        policy.strategy.to_string(),
    ];
    Ok(Report::new(
        format!("{value} = {d}\n"),
        &json!({
            "value": value,
            "decomposition": d.to_string(),
            "terms": d.term_count(),
            "strategy": policy.strategy.to_string(),
        }),
        csv_table(&["value", "decomposition", "terms", "strategy"], &[row]),
    ))
}

fn table(policy: &DecompositionPolicy, max_n: u64, include_even: bool) -> Result<Report> {
    let entries = table_2_over_n_range(policy, TableRange { max_n, include_even })?;
    let rows: Vec<Vec<String>> = entries
        .iter()
        .map(|e| {
            vec![
                format!("2/{}", e.n),
                e.term_count.to_string(),
                e.decomposition.to_string(),
            ]
        })
        .collect();
    let mut json = table_to_json(&entries);
    json.push('\n');
    Ok(Report {
        text: text_table(&["2/n", "terms", "decomposition"], &rows),
        json,
        csv: table_to_csv(&entries),
    })
}

fn mul(a: u64, b: u64, divide: bool) -> Result<Report> {
    let row = |power: u64, value: u128, selected: bool| {
        vec![power.to_string(), value.to_string(), selected.to_string()]
    };
    if divide {
        let d = duplation_divide(a, b)?;
        let mut text = String::new();
        for r in &d.rows {
            let mark = if r.selected { "\\" } else { " " };
            text.push_str(&format!("{mark} {:>10}  {:>20}\n", r.power, r.value));
        }
        text.push_str(&format!("{a} / {b} = {} ({} + {})\n", d.value(), d.quotient, d.remainder));
        let rows: Vec<Vec<String>> = d.rows.iter().map(|r| row(r.power, r.value, r.selected)).collect();
        Ok(Report::new(text, &d, csv_table(&["power", "value", "selected"], &rows)))
    } else {
        let t = duplation_multiply(a, b)?;
        let rows: Vec<Vec<String>> = t.rows.iter().map(|r| row(r.power, r.value, r.selected)).collect();
        Ok(Report::new(t.render_text(), &t, csv_table(&["power", "value", "selected"], &rows)))
    }
}

fn loaves_cmd(loaves: u64, men: u64, policy: &DecompositionPolicy) -> Result<Report> {
    let share = divide_loaves(loaves, men, policy)?;
    let value = share.value();
    let row = vec![loaves.to_string(), men.to_string(), value.to_string(), share.to_string()];
    Ok(Report::new(
        format!("{loaves} loaves among {men} men: {value} each = {share}\n"),
        &json!({
            "loaves": loaves,
            "men": men,
            "share": value,
            "unit_fractions": share.to_string(),
        }),
        csv_table(&["loaves", "men", "share", "unit_fractions"], &[row]),
    ))
}

fn hau(
    multiplier: &Rational,
    target: &Rational,
    guess: Option<&Rational>,
    policy: &DecompositionPolicy,
) -> Result<Report> {
    let p = HauProblem::new(multiplier.clone(), target.clone())?;
    let x = solve_hau(&p)?;
    // the unit-fraction reading is a courtesy; a value outside the search
    // bounds is still printed as a plain fraction
    let form = if x.is_positive() {
        decompose(&x, policy).ok().map(|d| d.to_string())
    } else {
        None
    };
    let trace = guess
        .map(|g| solve_hau_false_position(&p, g))
        .transpose()?;

    let mut text = String::new();
    if let Some(t) = &trace {
        text.push_str(&t.render_text(&p));
    }
    match &form {
        Some(f) if *f != x.to_string() => text.push_str(&format!("{x} ({f})\n")),
        _ => text.push_str(&format!("{x}\n")),
    }
    let row = vec![
        multiplier.to_string(),
        target.to_string(),
        x.to_string(),
        form.clone().unwrap_or_default(),
    ];
    Ok(Report::new(
        text,
        &json!({
            "multiplier": multiplier,
            "target": target,
            "answer": x,
            "unit_fractions": form,
            "false_position": trace,
        }),
        csv_table(&["multiplier", "target", "answer", "unit_fractions"], &[row]),
    ))
}

fn shares(spec: &ProgressionSpec) -> Result<Report> {
    let terms = spec.terms();
    let total = spec.total();
    let rows: Vec<Vec<String>> = terms
        .iter()
        .enumerate()
        .map(|(i, t)| vec![(i + 1).to_string(), t.to_string()])
        .collect();
    let mut text = text_table(&["share", "value"], &rows);
    text.push_str(&format!("total {total}\n"));
    Ok(Report::new(
        text,
        &json!({ "progression": spec, "shares": terms, "total": total }),
        csv_table(&["share", "value"], &rows),
    ))
}

fn ladder(base: u64, top: u32) -> Result<Report> {
    let l = geometric_ladder(base, top)?;
    let rows: Vec<Vec<String>> = l
        .terms
        .iter()
        .map(|t| vec![t.exponent.to_string(), t.label.to_string(), t.value.to_string()])
        .collect();
    let mut text = text_table(&["power", "label", "value"], &rows);
    text.push_str(&format!("sum {}\n", l.sum));
    Ok(Report::new(text, &l, csv_table(&["power", "label", "value"], &rows)))
}

fn area(shape: &AreaShape) -> Result<Report> {
    let a = match shape {
        AreaShape::Square { side } => square_area(side)?,
        AreaShape::Rectangle { width, height } => rect_area(width, height)?,
        AreaShape::Triangle { base, height } => triangle_area(base, height)?,
        AreaShape::TwoSides { side1, side2 } => triangle_area_two_sides(side1, side2)?,
        AreaShape::Trapezoid {
            side1,
            side2,
            height,
        } => trapezoid_area(side1, side2, height)?,
        AreaShape::Gerbert { leg, base } => {
            return Ok(Report::error_report(&gerbert_isoceles_area(leg, base)?))
        }
    };
    Ok(value_report("area", &a))
}

fn pi_error(compare: bool) -> Report {
    if !compare {
        return Report::error_report(&implied_pi_error());
    }
    let headers = ["tradition", "historical", "exact", "abs_error", "rel_error", "precision"];
    let records: Vec<(&str, crate::geometry::ReportRecord)> = pi_comparisons()
        .into_iter()
        .map(|(name, r)| (name, r.record()))
        .collect();
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|(name, r)| {
            vec![
                name.to_string(),
                r.historical.clone(),
                r.exact.clone(),
                r.abs_error.clone(),
                r.rel_error.clone(),
                r.precision.clone(),
            ]
        })
        .collect();
    let json: serde_json::Map<String, serde_json::Value> = records
        .iter()
        .map(|(name, r)| (name.to_string(), serde_json::to_value(r).expect("record")))
        .collect();
    Report::new(text_table(&headers, &rows), &json, csv_table(&headers, &rows))
}

fn edfu(
    sides: Option<&[Rational]>,
    vertices: Option<&str>,
    random: Option<usize>,
    rectangles: usize,
    seed: u64,
) -> Result<Report> {
    if let Some(sides) = sides {
        let q = SideQuad::from_slice(sides)?;
        return Ok(value_report("area", &edfu_area(&q)));
    }
    if let Some(v) = vertices {
        let p: PolygonCoords = v.parse()?;
        return Ok(Report::error_report(&edfu_error_report(&p)?));
    }
    let count = random.ok_or_else(|| {
        Error::Invalid("give --sides, --vertices or --random".into())
    })?;
    let c = edfu_campaign(seed, count, rectangles)?;
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let text = format!(
        "seed {}\ncases {} ({} rectangles)\nall overestimate: {}\nzero error exactly on rectangles: {}\n",
        c.seed,
        c.cases.len(),
        c.rectangle_count(),
        yes_no(c.all_overestimate()),
        yes_no(c.zero_exactly_on_rectangles()),
    );
    let rows: Vec<Vec<String>> = c
        .cases
        .iter()
        .enumerate()
        .map(|(i, e)| {
            vec![
                i.to_string(),
                e.polygon.clone(),
                e.is_rectangle.to_string(),
                e.historical.clone(),
                e.exact.to_string(),
                e.overestimates.to_string(),
                e.zero_error.to_string(),
            ]
        })
        .collect();
    Ok(Report::new(
        text,
        &c,
        csv_table(
            &["case", "polygon", "is_rectangle", "historical", "exact", "overestimates", "zero_error"],
            &rows,
        ),
    ))
}

fn seked_cmd(
    base: Option<Rational>,
    height: Option<Rational>,
    seked: Option<Rational>,
    parts: u32,
) -> Result<Report> {
    let spec = match (base, height, seked) {
        (Some(b), Some(h), None) => SekedSpec::from_base_height(b, h, parts)?,
        (Some(b), None, Some(s)) => SekedSpec::from_base_seked(b, s, parts)?,
        (None, Some(h), Some(s)) => SekedSpec::from_height_seked(h, s, parts)?,
        _ => {
            return Err(Error::Invalid(
                "give exactly two of --base, --height and --seked".into(),
            ))
        }
    };
    let cot = spec.cotangent();
    let row = vec![
        spec.base.to_string(),
        spec.height.to_string(),
        spec.seked.to_string(),
        parts.to_string(),
        cot.to_string(),
    ];
    let text = format!(
        "base {}\nheight {}\nseked {} (~{})\nparts {}\ncotangent {}\n",
        spec.base,
        spec.height,
        spec.seked,
        spec.seked.to_decimal(6),
        parts,
        cot
    );
    Ok(Report::new(
        text,
        &json!({
            "base": spec.base,
            "height": spec.height,
            "seked": spec.seked,
            "parts": parts,
            "cotangent": cot,
        }),
        csv_table(&["base", "height", "seked", "parts", "cotangent"], &[row]),
    ))
}

fn check_triangle(sides: &[Rational]) -> Result<Report> {
    let [a, b, c] = sides else {
        return Err(Error::Invalid("--check takes three sides".into()));
    };
    let right = is_right_triangle(a, b, c)?;
    let row = vec![a.to_string(), b.to_string(), c.to_string(), right.to_string()];
    Ok(Report::record(
        format!("{a}, {b}, {c}: {}\n", if right { "right triangle" } else { "not a right triangle" }),
        &["a", "b", "c", "right"],
        &row,
    ))
}

fn triples(limit: u64) -> Result<Report> {
    let ts = rational_right_triangles(limit)?;
    let rows: Vec<Vec<String>> = ts
        .iter()
        .map(|&(a, b, c)| vec![a.to_string(), b.to_string(), c.to_string(), (a + b + c).to_string()])
        .collect();
    let headers = ["a", "b", "c", "perimeter"];
    Ok(Report::new(text_table(&headers, &rows), &ts, csv_table(&headers, &rows)))
}
