//! Row rendering for CSV, TSV and JSON.

use std::io::{self, Write};

use gauss_circle::analysis::{format_decimal, format_truncated, BoundReport, HeuristicRow, TabulationRow, TwinPair};
use serde_json::{Map, Number, Value};

use crate::args::Format;

/// Decimal places for real-valued columns, which are truncated rather than
/// rounded.
pub const REAL_PLACES: u32 = 5;

#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Int(u128),
    /// Real truncated to [`REAL_PLACES`] decimals.
    Real(f64),
    /// Real printed to a number of significant digits.
    Significant(f64, u32),
    Bool(bool),
    Missing,
}

impl Field {
    fn text(&self) -> String {
        match self {
            Field::Int(v) => v.to_string(),
            Field::Real(v) => format_truncated(*v, REAL_PLACES),
            Field::Significant(v, digits) => format_significant(*v, *digits),
            Field::Bool(b) => b.to_string(),
            Field::Missing => "NA".to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Field::Int(v) => match u64::try_from(*v) {
                Ok(small) => Value::Number(small.into()),
                Err(_) => Value::String(v.to_string()),
            },
            Field::Real(_) | Field::Significant(..) => self
                .text()
                .parse::<f64>()
                .ok()
                .and_then(Number::from_f64)
                .map_or(Value::Null, Value::Number),
            Field::Bool(b) => Value::Bool(*b),
            Field::Missing => Value::Null,
        }
    }
}

pub fn format_significant(v: f64, digits: u32) -> String {
    if v == 0.0 || !v.is_finite() {
        return format_decimal(v, digits.saturating_sub(1));
    }
    let exponent = v.abs().log10().floor() as i32;
    let places = (digits as i32 - 1 - exponent).max(0) as u32;
    format_decimal(v, places)
}

/// A record type with a fixed column layout.
pub trait Row {
    fn header() -> &'static [&'static str];
    fn fields(&self) -> Vec<Field>;
}

/// Writes `rows` to `sink` and returns the number of bytes written.
///
/// CSV and TSV start with a header line; every line ends in a single `\n`.
/// JSON is an array of objects keyed by the header names.
pub fn emit_rows<R: Row>(rows: &[R], format: Format, sink: &mut dyn Write) -> io::Result<usize> {
    let mut out = String::new();
    match format {
        Format::Csv | Format::Tsv => {
            let sep = if format == Format::Csv { "," } else { "\t" };
            out.push_str(&R::header().join(sep));
            out.push('\n');
            for row in rows {
                let line: Vec<String> = row.fields().iter().map(Field::text).collect();
                out.push_str(&line.join(sep));
                out.push('\n');
            }
        }
        Format::Json => {
            let array: Vec<Value> = rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> = R::header()
                        .iter()
                        .zip(row.fields())
                        .map(|(k, f)| (k.to_string(), f.json()))
                        .collect();
                    Value::Object(obj)
                })
                .collect();
            out = serde_json::to_string_pretty(&Value::Array(array))?;
            out.push('\n');
        }
    }
    sink.write_all(out.as_bytes())?;
    Ok(out.len())
}

impl Row for TabulationRow {
    fn header() -> &'static [&'static str] {
        &[
            "n",
            "pi",
            "kappa",
            "pnt_rounded",
            "ratio_pi_kappa",
            "ratio_pi_pnt",
            "ratio_kappa_pnt",
        ]
    }

    fn fields(&self) -> Vec<Field> {
        vec![
            Field::Int(self.n as u128),
            Field::Int(self.pi_n as u128),
            Field::Int(self.kappa_n as u128),
            Field::Int(self.pnt_rounded as u128),
            self.ratio_pi_kappa.map_or(Field::Missing, Field::Real),
            Field::Real(self.ratio_pi_pnt),
            Field::Real(self.ratio_kappa_pnt),
        ]
    }
}

impl Row for TwinPair {
    fn header() -> &'static [&'static str] {
        &["r", "c_r", "c_r_next"]
    }

    fn fields(&self) -> Vec<Field> {
        vec![
            Field::Int(self.r.get() as u128),
            Field::Int(self.c_r.get()),
            Field::Int(self.c_r_next.get()),
        ]
    }
}

impl Row for BoundReport {
    fn header() -> &'static [&'static str] {
        &[
            "n_max",
            "violations",
            "sandwich_violations",
            "worst_r",
            "max_ratio",
            "max_abs_error",
        ]
    }

    fn fields(&self) -> Vec<Field> {
        vec![
            Field::Int(self.n_max.get() as u128),
            Field::Int(self.violations as u128),
            Field::Int(self.sandwich_violations as u128),
            Field::Int(self.worst_r.get() as u128),
            Field::Real(self.max_ratio),
            Field::Real(self.max_abs_error),
        ]
    }
}

impl Row for HeuristicRow {
    fn header() -> &'static [&'static str] {
        &["n", "kappa", "estimate_exact_counts", "estimate_asymptotic"]
    }

    fn fields(&self) -> Vec<Field> {
        vec![
            Field::Int(self.n as u128),
            Field::Int(self.kappa_n as u128),
            Field::Real(self.estimate_exact_counts),
            Field::Real(self.estimate_asymptotic),
        ]
    }
}

/// `count` output without a dimension.
pub struct CircleRow {
    pub r: u64,
    pub count: u128,
    pub prime: Option<bool>,
}

impl Row for CircleRow {
    fn header() -> &'static [&'static str] {
        &["r", "count", "prime"]
    }

    fn fields(&self) -> Vec<Field> {
        vec![
            Field::Int(self.r as u128),
            Field::Int(self.count),
            self.prime.map_or(Field::Missing, Field::Bool),
        ]
    }
}

/// `count --dim` output.
pub struct DimCountRow {
    pub d: u32,
    pub r: u64,
    pub count: u128,
    pub prime: Option<bool>,
}

impl Row for DimCountRow {
    fn header() -> &'static [&'static str] {
        &["d", "r", "count", "prime"]
    }

    fn fields(&self) -> Vec<Field> {
        vec![
            Field::Int(self.d as u128),
            Field::Int(self.r as u128),
            Field::Int(self.count),
            self.prime.map_or(Field::Missing, Field::Bool),
        ]
    }
}

pub struct BallRow {
    pub d: u32,
    pub r: u64,
    pub count: u128,
}

impl Row for BallRow {
    fn header() -> &'static [&'static str] {
        &["d", "r", "count"]
    }

    fn fields(&self) -> Vec<Field> {
        vec![
            Field::Int(self.d as u128),
            Field::Int(self.r as u128),
            Field::Int(self.count),
        ]
    }
}

pub struct CrossoverRow {
    pub n_max: u64,
    pub onset: Option<u64>,
    pub sustained_from: Option<u64>,
    pub exceptions: usize,
}

impl Row for CrossoverRow {
    fn header() -> &'static [&'static str] {
        &["n_max", "onset", "sustained_from", "exceptions"]
    }

    fn fields(&self) -> Vec<Field> {
        let opt = |v: Option<u64>| v.map_or(Field::Missing, |v| Field::Int(v as u128));
        vec![
            Field::Int(self.n_max as u128),
            opt(self.onset),
            opt(self.sustained_from),
            Field::Int(self.exceptions as u128),
        ]
    }
}

pub struct LiRow {
    pub x: f64,
    pub li: f64,
}

impl Row for LiRow {
    fn header() -> &'static [&'static str] {
        &["x", "li"]
    }

    fn fields(&self) -> Vec<Field> {
        vec![Field::Significant(self.x, 10), Field::Significant(self.li, 10)]
    }
}
