//! The 2/n table: 2 divided by each odd number, written in unit fractions.

use rayon::prelude::*;
use serde::Serialize;

use super::decompose::{decompose, DecompositionPolicy};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::unit_fraction::UnitFractionSum;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableEntry {
    pub n: u64,
    pub decomposition: UnitFractionSum,
    pub term_count: usize,
}

impl TableEntry {
    pub fn target(&self) -> Rational {
        Rational::frac(2, self.n as i64)
    }

    /// Recomposes the row and compares it with `2/n`.
    pub fn value_matches(&self) -> bool {
        self.decomposition.value() == self.target()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableRange {
    /// Largest divisor (inclusive).
    pub max_n: u64,
    /// Also list even `n`, which reduce to the single term `1/(n/2)`.
    pub include_even: bool,
}

impl Default for TableRange {
    fn default() -> Self {
        TableRange {
            max_n: 99,
            include_even: false,
        }
    }
}

/// One row per odd `n` in `3..=99`.
pub fn table_2_over_n(policy: &DecompositionPolicy) -> Result<Vec<TableEntry>> {
    table_2_over_n_range(policy, TableRange::default())
}

/// Rows are decomposed in parallel and assembled in order of `n`. The 2/3
/// primitive is never used in a row: each row is a sum of unit fractions.
pub fn table_2_over_n_range(
    policy: &DecompositionPolicy,
    range: TableRange,
) -> Result<Vec<TableEntry>> {
    if range.max_n < 3 {
        return Err(Error::Invalid(format!(
            "table needs max n of at least 3, got {}",
            range.max_n
        )));
    }
    let row_policy = policy.clone().with_two_thirds(false);
    let ns: Vec<u64> = (3..=range.max_n)
        .filter(|n| range.include_even || n % 2 == 1)
        .collect();
    let rows: Vec<Result<TableEntry>> = ns
        .par_iter()
        .map(|&n| {
            let decomposition = decompose(&Rational::frac(2, n as i64), &row_policy)
                .map_err(|e| Error::TableRow {
                    n,
                    source: Box::new(e),
                })?;
            Ok(TableEntry {
                n,
                term_count: decomposition.term_count(),
                decomposition,
            })
        })
        .collect();
    rows.into_iter().collect()
}

#[derive(Serialize)]
struct Row<'a> {
    n: u64,
    terms: usize,
    decomposition: String,
    value_check: &'a str,
}

fn rows(entries: &[TableEntry]) -> impl Iterator<Item = Row<'static>> + '_ {
    entries.iter().map(|e| Row {
        n: e.n,
        terms: e.term_count,
        decomposition: e.decomposition.to_string(),
        value_check: if e.value_matches() { "ok" } else { "mismatch" },
    })
}

/// CSV with columns `n,terms,decomposition,value_check`.
pub fn table_to_csv(entries: &[TableEntry]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows(entries) {
        w.serialize(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

pub fn table_to_json(entries: &[TableEntry]) -> String {
    let rows: Vec<Row> = rows(entries).collect();
    serde_json::to_string_pretty(&rows).expect("serializable rows")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rows() {
        let table = table_2_over_n_range(
            &DecompositionPolicy::default(),
            TableRange {
                max_n: 7,
                include_even: false,
            },
        )
        .unwrap();
        let text: Vec<String> = table.iter().map(|e| e.decomposition.to_string()).collect();
        assert_eq!(text, ["1/2 + 1/6", "1/3 + 1/15", "1/4 + 1/28"]);
    }

    #[test]
    fn even_rows_are_single_terms() {
        let table = table_2_over_n_range(
            &DecompositionPolicy::default(),
            TableRange {
                max_n: 6,
                include_even: true,
            },
        )
        .unwrap();
        assert_eq!(table.len(), 4);
        assert_eq!(table[1].decomposition.to_string(), "1/2");
        assert_eq!(table[3].decomposition.to_string(), "1/3");
    }

    #[test]
    fn failing_row_is_named() {
        let tight = DecompositionPolicy::default().with_bounds(1, 100);
        match table_2_over_n(&tight) {
            Err(Error::TableRow { n, .. }) => assert_eq!(n, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn csv_layout() {
        let table = table_2_over_n_range(
            &DecompositionPolicy::default(),
            TableRange {
                max_n: 5,
                include_even: false,
            },
        )
        .unwrap();
        assert_eq!(
            table_to_csv(&table),
            "n,terms,decomposition,value_check\n3,2,1/2 + 1/6,ok\n5,2,1/3 + 1/15,ok\n"
        );
    }
}
