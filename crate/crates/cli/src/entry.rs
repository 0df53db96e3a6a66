//! Catalog entries and their canonical JSON form.
//!
//! Numbers are written as `"p/q"` strings, partition types as nested arrays of
//! integers, flags as booleans, and unknown values as `null`. Maps are
//! `BTreeMap`s, so keys come out sorted and re-serializing a parsed entry
//! reproduces the input byte for byte.

use std::collections::BTreeMap;
use std::fmt;

use chowcalc::{PartitionType, Rational};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Number(Rational),
    Partition(PartitionType),
    Flag(bool),
    Unknown(()),
}

impl Value {
    pub fn null() -> Self {
        Value::Unknown(())
    }

    /// Plain-text form used for CSV cells.
    pub fn to_cell(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Number(q) => write!(f, "{q}"),
            Value::Partition(p) => write!(f, "{p}"),
            Value::Flag(b) => write!(f, "{b}"),
            Value::Unknown(()) => Ok(()),
        }
    }
}

impl From<Rational> for Value {
    fn from(q: Rational) -> Self {
        Value::Number(q)
    }
}

impl From<i64> for Value {
    fn from(n: i64) -> Self {
        Value::Number(Rational::from(n))
    }
}

impl From<u64> for Value {
    fn from(n: u64) -> Self {
        Value::Number(Rational::from(n))
    }
}

impl From<BigInt> for Value {
    fn from(n: BigInt) -> Self {
        Value::Number(Rational::from(n))
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Flag(b)
    }
}

impl From<PartitionType> for Value {
    fn from(p: PartitionType) -> Self {
        Value::Partition(p)
    }
}

impl<T: Into<Value>> From<Option<T>> for Value {
    fn from(v: Option<T>) -> Self {
        v.map_or(Value::null(), Into::into)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EntryKind {
    Bound,
    Resolution,
    Monad,
    Stratum,
}

impl fmt::Display for EntryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EntryKind::Bound => "bound",
            EntryKind::Resolution => "resolution",
            EntryKind::Monad => "monad",
            EntryKind::Stratum => "stratum",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub kind: EntryKind,
    pub inputs: BTreeMap<String, Value>,
    pub outputs: BTreeMap<String, Value>,
    pub schema_version: u32,
}

impl CatalogEntry {
    pub fn new(kind: EntryKind) -> Self {
        CatalogEntry { kind, inputs: BTreeMap::new(), outputs: BTreeMap::new(), schema_version: SCHEMA_VERSION }
    }

    pub fn input(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn output(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.outputs.insert(key.to_string(), value.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("entries always serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

/// A whole catalog file: the grid that produced it plus its sorted entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Catalog {
    pub schema_version: u32,
    pub catalog: String,
    pub params: BTreeMap<String, String>,
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn new(catalog: &str, params: BTreeMap<String, String>, mut entries: Vec<CatalogEntry>) -> Self {
        entries.sort();
        entries.dedup();
        Catalog { schema_version: SCHEMA_VERSION, catalog: catalog.to_string(), params, entries }
    }

    /// Canonical text: pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("catalogs always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> CatalogEntry {
        CatalogEntry::new(EntryKind::Stratum)
            .input("c2", 5i64)
            .input("partition", PartitionType::new(vec![vec![1, 1], vec![2]]).unwrap())
            .output("ch3", Rational::frac(71, 6))
            .output("aut_lambda", None::<u64>)
            .output("consistent", true)
    }

    #[test]
    fn canonical_json_shape() {
        let json = serde_json::to_string(&sample()).unwrap();
        assert_eq!(
            json,
            r#"{"kind":"stratum","inputs":{"c2":"5","partition":[[2],[1,1]]},"outputs":{"aut_lambda":null,"ch3":"71/6","consistent":true},"schema_version":1}"#
        );
    }

    #[test]
    fn parse_then_serialize_is_identity() {
        let text = sample().to_json();
        let parsed = CatalogEntry::from_json(&text).unwrap();
        assert_eq!(parsed, sample());
        assert_eq!(parsed.to_json(), text);
    }

    #[test]
    fn rejects_malformed_values() {
        let bad = r#"{"kind":"bound","inputs":{"x":"1/0"},"outputs":{},"schema_version":1}"#;
        assert!(CatalogEntry::from_json(bad).is_err());
        let bad = r#"{"kind":"bound","inputs":{"x":1.5},"outputs":{},"schema_version":1}"#;
        assert!(CatalogEntry::from_json(bad).is_err());
        let bad = r#"{"kind":"nope","inputs":{},"outputs":{},"schema_version":1}"#;
        assert!(CatalogEntry::from_json(bad).is_err());
    }
}
