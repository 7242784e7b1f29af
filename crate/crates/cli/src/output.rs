//! Deterministic JSON and CSV emission.
//!
//! JSON objects are `serde_json` maps (BTree-backed, so keys are always
//! sorted) and every float is printed with 17 significant digits, making
//! identical inputs produce byte-identical output. Exact rationals are
//! serialized as `"p/q"` strings next to a parallel `_float` field;
//! infinite limits serialize as the string `"inf"`, never a float.

use graph_dispersion::closed_form::LimitValue;
use graph_dispersion::Rational;
use num::ToPrimitive;
use serde_json::{Map, Value};
use std::io::Write;

/// 17 significant digits, enough to round-trip any f64.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn json_f64(v: f64) -> Value {
    Value::from(v)
}

pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn rational_f64(r: &Rational) -> f64 {
    r.to_f64().expect("finite rational")
}

pub fn limit_value(v: &LimitValue) -> Value {
    match v {
        LimitValue::Finite(x) => json_f64(*x),
        LimitValue::Infinite => Value::String("inf".to_string()),
        LimitValue::NotStated => Value::Null,
    }
}

/// CSV cell for a limit: `inf` for divergence, empty for not stated.
pub fn limit_cell(v: &LimitValue) -> String {
    match v {
        LimitValue::Finite(x) => fmt_f64(*x),
        LimitValue::Infinite => "inf".to_string(),
        LimitValue::NotStated => String::new(),
    }
}

pub fn object(fields: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    for (k, v) in fields {
        map.insert(k.to_string(), v);
    }
    Value::Object(map)
}

struct SigFigFormatter;

impl serde_json::ser::Formatter for SigFigFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()>
    where
        W: ?Sized + Write,
    {
        write!(writer, "{}", fmt_f64(value))
    }
}

/// Serializes a JSON value with sorted keys and fixed float formatting.
pub fn to_json_string(value: &Value) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SigFigFormatter);
    serde::Serialize::serialize(value, &mut ser).expect("in-memory serialization");
    String::from_utf8(out).expect("JSON is UTF-8")
}

/// Writes one CSV table to stdout.
pub fn print_csv(header: &[&str], rows: &[Vec<String>]) -> std::io::Result<()> {
    let stdout = std::io::stdout();
    let mut w = csv::Writer::from_writer(stdout.lock());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.flush()
}
