//! Text format for structures and JSON reports.

mod format;
mod report;

pub use format::{canonicalize, parse, parse_bytes, render, ParseError, FORMAT_VERSION};
pub use report::{
    ConditionEntry, DiagnosticEntry, FilterCheckEntry, InputEntry, PropEntry, PropWitnessEntry,
    ReportDocument, REPORT_SCHEMA,
};
