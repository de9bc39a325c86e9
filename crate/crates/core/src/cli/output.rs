use clap::ValueEnum;
use serde::Serialize;

use crate::geometry::ErrorReport;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

/// A command's result in all three formats.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub text: String,
    pub json: String,
    pub csv: String,
}

impl Report {
    pub fn new(text: String, json: &impl Serialize, csv: String) -> Self {
        let mut json = serde_json::to_string_pretty(json).expect("report serializes");
        json.push('\n');
        Report { text, json, csv }
    }

    /// A one-row table; text shows `header  value` per line.
    pub fn record(text: String, headers: &[&str], row: &[String]) -> Self {
        let object: serde_json::Map<String, serde_json::Value> = headers
            .iter()
            .zip(row)
            .map(|(h, v)| (h.to_string(), serde_json::Value::String(v.clone())))
            .collect();
        Report::new(text, &object, csv_table(headers, std::slice::from_ref(&row.to_vec())))
    }

    pub fn error_report(r: &ErrorReport) -> Self {
        let rec = r.record();
        Report::new(
            r.render_text(),
            &rec,
            csv_table(
                &["historical", "exact", "abs_error", "rel_error", "precision"],
                &[vec![rec.historical.clone(), rec.exact.clone(), rec.abs_error.clone(), rec.rel_error.clone(), rec.precision.clone()]],
            ),
        )
    }

    pub fn select(&self, format: OutputFormat) -> &str {
        match format {
            OutputFormat::Text => &self.text,
            OutputFormat::Json => &self.json,
            OutputFormat::Csv => &self.csv,
        }
    }
}

pub fn csv_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(headers).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

/// Left-aligned columns separated by two spaces.
pub fn text_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut out = line(headers.to_vec());
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}
