//! Table, CSV and JSON renderings of approximant records.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::driver::{ApproximantRecord, Method, OutputFormat};
use crate::error::{Error, Result};
use crate::numerics::{format_rational, parse_rational, DecimalString, Rational};

/// Rationals longer than this print as `-` in tables unless exact output is requested.
pub const TABLE_ELIDE_WIDTH: usize = 40;

pub const CSV_HEADER: &str = "n,P,Q,value,gap";

pub fn render_table(records: &[ApproximantRecord], exact: bool) -> String {
    let mut out = String::from("n | P_n/Q_n | decimal\n");
    for r in records {
        let mut value = format_rational(&r.value);
        if !exact && value.len() > TABLE_ELIDE_WIDTH {
            value = "-".to_owned();
        }
        out.push_str(&format!("{} | {} | {}\n", r.n, value, r.decimal));
    }
    out
}

pub fn render_csv(records: &[ApproximantRecord]) -> String {
    let mut out = format!("{CSV_HEADER}\n");
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.n,
            format_rational(&r.p),
            format_rational(&r.q),
            format_rational(&r.value),
            r.reference_gap.as_ref().map(format_rational).unwrap_or_default()
        ));
    }
    out
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RecordWire {
    n: usize,
    #[serde(rename = "P")]
    p: String,
    #[serde(rename = "Q")]
    q: String,
    value: String,
    decimal: String,
    gap: Option<String>,
    method: String,
}

pub fn render_json(records: &[ApproximantRecord]) -> Result<String> {
    let wire: Vec<RecordWire> = records
        .iter()
        .map(|r| RecordWire {
            n: r.n,
            p: format_rational(&r.p),
            q: format_rational(&r.q),
            value: format_rational(&r.value),
            decimal: r.decimal.to_string(),
            gap: r.reference_gap.as_ref().map(format_rational),
            method: r.method.to_string(),
        })
        .collect();
    let mut text = serde_json::to_string_pretty(&wire)?;
    text.push('\n');
    Ok(text)
}

fn field(name: &str, text: &str) -> Result<Rational> {
    parse_rational(text).map_err(|e| Error::Parse {
        line: 0,
        column: e.column,
        message: format!("field {name}: {}", e.message),
    })
}

/// Read records back from [`render_json`] output.
pub fn records_from_json(text: &str) -> Result<Vec<ApproximantRecord>> {
    let wire: Vec<RecordWire> = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    wire.into_iter()
        .map(|w| {
            Ok(ApproximantRecord {
                n: w.n,
                p: field("P", &w.p)?,
                q: field("Q", &w.q)?,
                value: field("value", &w.value)?,
                decimal: DecimalString::parse(&w.decimal)?,
                reference_gap: w.gap.as_deref().map(|g| field("gap", g)).transpose()?,
                method: w.method.parse::<Method>()?,
            })
        })
        .collect()
}

pub fn render(records: &[ApproximantRecord], format: OutputFormat, exact: bool) -> Result<String> {
    Ok(match format {
        OutputFormat::Table => render_table(records, exact),
        OutputFormat::Csv => render_csv(records),
        OutputFormat::Json => render_json(records)?,
    })
}

/// Render and, when `out` is given, write to that file. Returns the text.
pub fn emit(
    records: &[ApproximantRecord],
    format: OutputFormat,
    exact: bool,
    out: Option<&Path>,
) -> Result<String> {
    let text = render(records, format, exact)?;
    if let Some(path) = out {
        std::fs::write(path, &text).map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })?;
    }
    Ok(text)
}
