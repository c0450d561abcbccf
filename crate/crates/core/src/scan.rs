//! Tabular results and their CSV / JSON encodings.
//!
//! CSV: one `# key=value` line per metadata entry, a header line with the
//! column names, then one line per row. Numbers carry 9 significant digits;
//! non-numeric cells are the literals `inf`, `-inf`, `ambiguous` and `none`.
//!
//! JSON: `{"metadata": {...}, "columns": [...], "rows": [{column: value}]}`
//! with the same sentinels as strings.

use std::fmt::Write as _;

use serde_json::{Map, Number, Value};

use crate::error::{domain, Result};

/// One table entry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    /// A number; infinities are written as `inf` / `-inf`.
    Num(f64),
    /// The beta = 1, theta = pi/2 electron point, where the result depends
    /// on the order of limits.
    Ambiguous,
    /// No value (for example the location of a maximum that does not exist).
    None,
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl Cell {
    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Cell::Num(v) => Some(*v),
            _ => None,
        }
    }

    fn sentinel(&self) -> Option<&'static str> {
        match self {
            Cell::Num(v) if *v == f64::INFINITY => Some("inf"),
            Cell::Num(v) if *v == f64::NEG_INFINITY => Some("-inf"),
            Cell::Num(v) if v.is_nan() => Some("nan"),
            Cell::Num(_) => None,
            Cell::Ambiguous => Some("ambiguous"),
            Cell::None => Some("none"),
        }
    }

    fn from_sentinel(s: &str) -> Option<Cell> {
        match s {
            "inf" => Some(Cell::Num(f64::INFINITY)),
            "-inf" => Some(Cell::Num(f64::NEG_INFINITY)),
            "nan" => Some(Cell::Num(f64::NAN)),
            "ambiguous" => Some(Cell::Ambiguous),
            "none" => Some(Cell::None),
            _ => None,
        }
    }
}

/// Significant digits in every serialized number.
pub const SIGNIFICANT_DIGITS: usize = 9;

/// Format like C's `%.{digits}g`: fixed notation for moderate exponents,
/// scientific otherwise, trailing zeros trimmed.
pub fn format_significant(v: f64, digits: usize) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return Cell::Num(v).sentinel().unwrap_or("nan").to_string();
    }
    let sci = format!("{:.*e}", digits - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= digits as i32 {
        let m = trim_zeros(mantissa);
        format!("{m}e{}{:02}", if exp < 0 { '-' } else { '+' }, exp.abs())
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{v:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn rounded(v: f64) -> f64 {
    format_significant(v, SIGNIFICANT_DIGITS)
        .parse()
        .expect("formatted number parses")
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ScanResult {
    pub metadata: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl ScanResult {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        ScanResult {
            metadata: Vec::new(),
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn with_meta(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.push_meta(key, value);
        self
    }

    pub fn push_meta(&mut self, key: impl Into<String>, value: impl ToString) {
        self.metadata.push((key.into(), value.to_string()));
    }

    pub fn meta(&self, key: &str) -> Option<&str> {
        self.metadata
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn push_row(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<Vec<Cell>> {
        let i = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[i]).collect())
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.metadata {
            let _ = writeln!(out, "# {k}={v}");
        }
        if !self.rows.is_empty() {
            let _ = writeln!(out, "{}", self.columns.join(","));
        }
        for row in &self.rows {
            let line: Vec<String> = row
                .iter()
                .map(|c| match c.sentinel() {
                    Some(s) => s.to_string(),
                    None => format_significant(c.as_f64().unwrap_or(f64::NAN), SIGNIFICANT_DIGITS),
                })
                .collect();
            let _ = writeln!(out, "{}", line.join(","));
        }
        out
    }

    pub fn to_json_value(&self) -> Value {
        let metadata: Map<String, Value> = self
            .metadata
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
            .collect();
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(name, cell)| {
                        let v = match cell.sentinel() {
                            Some(s) => Value::String(s.to_string()),
                            None => Number::from_f64(rounded(cell.as_f64().unwrap_or(0.0)))
                                .map(Value::Number)
                                .unwrap_or(Value::String("nan".into())),
                        };
                        (name.clone(), v)
                    })
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let mut root = Map::new();
        root.insert("metadata".into(), Value::Object(metadata));
        root.insert(
            "columns".into(),
            Value::Array(self.columns.iter().cloned().map(Value::String).collect()),
        );
        root.insert("rows".into(), Value::Array(rows));
        Value::Object(root)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json_value()).expect("serializable");
        s.push('\n');
        s
    }

    /// Parse the JSON produced by [`ScanResult::to_json`].
    pub fn from_json(text: &str) -> Result<Self> {
        let root: Value =
            serde_json::from_str(text).map_err(|e| domain(format!("invalid JSON: {e}")))?;
        let bad = |what: &str| domain(format!("malformed scan result: {what}"));
        let metadata = root
            .get("metadata")
            .and_then(Value::as_object)
            .ok_or_else(|| bad("metadata"))?
            .iter()
            .map(|(k, v)| {
                v.as_str()
                    .map(|s| (k.clone(), s.to_string()))
                    .ok_or_else(|| bad("metadata value"))
            })
            .collect::<Result<Vec<_>>>()?;
        let columns = root
            .get("columns")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("columns"))?
            .iter()
            .map(|c| {
                c.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| bad("column name"))
            })
            .collect::<Result<Vec<_>>>()?;
        let rows = root
            .get("rows")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("rows"))?
            .iter()
            .map(|row| {
                let obj = row.as_object().ok_or_else(|| bad("row"))?;
                columns
                    .iter()
                    .map(|c| match obj.get(c) {
                        Some(Value::Number(n)) => {
                            n.as_f64().map(Cell::Num).ok_or_else(|| bad("number"))
                        }
                        Some(Value::String(s)) => {
                            Cell::from_sentinel(s).ok_or_else(|| bad("sentinel"))
                        }
                        _ => Err(bad("cell")),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ScanResult {
            metadata,
            columns,
            rows,
        })
    }
}
