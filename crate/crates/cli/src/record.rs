//! One JSON object per line: `{"kind": ..., "payload": {...}}`.
//!
//! Integers are decimal strings and rationals are `"num/den"` strings, so
//! nothing is ever routed through a float.

use std::fmt;
use std::str::FromStr;

use serde_json::{Map, Value};
use triads_core::{Integer, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Triad,
    Certificate,
    Report,
    Hit,
    Point,
    Error,
}

impl Kind {
    pub const ALL: [Kind; 6] =
        [Kind::Triad, Kind::Certificate, Kind::Report, Kind::Hit, Kind::Point, Kind::Error];

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Triad => "triad",
            Kind::Certificate => "certificate",
            Kind::Report => "report",
            Kind::Hit => "hit",
            Kind::Point => "point",
            Kind::Error => "error",
        }
    }
}

impl FromStr for Kind {
    type Err = RecordError;

    fn from_str(s: &str) -> Result<Self, RecordError> {
        Kind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| RecordError(format!("unknown kind {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecordError(pub String);

impl fmt::Display for RecordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for RecordError {}

#[derive(Clone, Debug, PartialEq)]
pub struct OutputRecord {
    pub kind: Kind,
    pub payload: Map<String, Value>,
}

impl OutputRecord {
    /// `payload` must be a JSON object.
    pub fn new(kind: Kind, payload: Value) -> Self {
        match payload {
            Value::Object(payload) => Self { kind, payload },
            other => panic!("payload must be an object, got {other}"),
        }
    }

    pub fn to_line(&self) -> String {
        let mut obj = Map::new();
        obj.insert("kind".into(), Value::String(self.kind.as_str().into()));
        obj.insert("payload".into(), Value::Object(self.payload.clone()));
        Value::Object(obj).to_string()
    }

    pub fn parse(line: &str) -> Result<Self, RecordError> {
        let value: Value =
            serde_json::from_str(line).map_err(|e| RecordError(format!("invalid JSON: {e}")))?;
        let Value::Object(mut obj) = value else {
            return Err(RecordError("record is not an object".into()));
        };
        if obj.len() != 2 {
            return Err(RecordError("record must have exactly kind and payload".into()));
        }
        let kind = match obj.remove("kind") {
            Some(Value::String(s)) => s.parse()?,
            _ => return Err(RecordError("missing kind".into())),
        };
        let payload = match obj.remove("payload") {
            Some(Value::Object(p)) => p,
            _ => return Err(RecordError("missing payload".into())),
        };
        if let Some(path) = find_float(&Value::Object(payload.clone())) {
            return Err(RecordError(format!("float at {path}")));
        }
        Ok(Self { kind, payload })
    }

    pub fn get_str(&self, key: &str) -> Option<&str> {
        self.payload.get(key).and_then(Value::as_str)
    }
}

fn find_float(v: &Value) -> Option<String> {
    match v {
        Value::Number(n) if n.is_f64() => Some(n.to_string()),
        Value::Array(items) => items.iter().find_map(find_float),
        Value::Object(m) => m.iter().find_map(|(k, v)| find_float(v).map(|p| format!("{k}.{p}"))),
        _ => None,
    }
}

pub fn int(n: &Integer) -> Value {
    Value::String(n.to_string())
}

pub fn rat(r: &Rational) -> Value {
    Value::String(format!("{}/{}", r.numer(), r.denom()))
}

pub fn ints<'a>(xs: impl IntoIterator<Item = &'a Integer>) -> Value {
    Value::Array(xs.into_iter().map(int).collect())
}

pub fn parse_int(v: &Value) -> Option<Integer> {
    v.as_str()?.parse().ok()
}

pub fn parse_rat(v: &Value) -> Option<Rational> {
    triads_core::exactnum::parse_rational(v.as_str()?).ok()
}
