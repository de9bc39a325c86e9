//! Scribal arithmetic: unit-fraction decomposition, the 2/n table, doubling
//! multiplication, loaf division and completion reckoning.

mod decompose;
mod duplation;
mod scribal;
mod table;

pub use decompose::{decompose, greedy_remainders, DecompositionPolicy, Strategy};
pub use duplation::{
    duplation_divide, duplation_multiply, DoublingRow, DuplationDivision, DuplationTrace,
};
pub use scribal::{divide_loaves, sequem_complete, SequemMode};
pub use table::{
    table_2_over_n, table_2_over_n_range, table_to_csv, table_to_json, TableEntry, TableRange,
};

