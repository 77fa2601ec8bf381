//! JSON documents read and written by the library and the CLI.
//!
//! Sets are arrays of labels in universe order, rationals are `"a/b"`
//! strings, and unknown keys are rejected on input.

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::universe::ElementSet;

/// `{"kind": ...}` decider description, with labels not yet resolved.
///
/// The unit kinds may also be written as a bare string, e.g. `"subseteq"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DeciderSpec {
    #[serde(rename = "subseteq")]
    Inclusion,
    Intersects,
    CardThreshold { k: i64 },
    Table { entries: Vec<TableEntry> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableEntry {
    #[serde(rename = "A")]
    pub a: Vec<String>,
    pub minimal: Vec<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum TaggedSpec {
    #[serde(rename = "subseteq")]
    Inclusion,
    Intersects,
    CardThreshold { k: i64 },
    Table { entries: Vec<TableEntry> },
}

impl<'de> Deserialize<'de> for DeciderSpec {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let value = serde_json::Value::deserialize(de)?;
        if let serde_json::Value::String(name) = &value {
            return match name.as_str() {
                "subseteq" => Ok(DeciderSpec::Inclusion),
                "intersects" => Ok(DeciderSpec::Intersects),
                other => Err(serde::de::Error::custom(format!(
                    "decider `{other}` needs an object with its parameters"
                ))),
            };
        }
        let spec: TaggedSpec = serde_json::from_value(value).map_err(serde::de::Error::custom)?;
        Ok(match spec {
            TaggedSpec::Inclusion => DeciderSpec::Inclusion,
            TaggedSpec::Intersects => DeciderSpec::Intersects,
            TaggedSpec::CardThreshold { k } => DeciderSpec::CardThreshold { k },
            TaggedSpec::Table { entries } => DeciderSpec::Table { entries },
        })
    }
}

/// `{"U": [...], "W": [...], "T": {...}, "S": ...}`.
///
/// `T` is kept as an ordered list of pairs so that output follows `U`'s
/// order; it reads and writes as a JSON object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDoc {
    #[serde(rename = "U")]
    pub u: Vec<String>,
    #[serde(rename = "W")]
    pub w: Vec<String>,
    #[serde(rename = "T", with = "ordered_map")]
    pub t: Vec<(String, Vec<String>)>,
    #[serde(rename = "S")]
    pub s: DeciderSpec,
}

/// `{"W": [...], "m": [{"set": [...], "value": "a/b"}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BeliefDoc {
    #[serde(rename = "W")]
    pub w: Vec<String>,
    pub m: Vec<MassEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MassEntry {
    pub set: Vec<String>,
    pub value: Rational,
}

pub fn labels_of(set: &ElementSet) -> Vec<String> {
    set.labels().into_iter().map(String::from).collect()
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(Error::from)
}

/// Compact single-line JSON.
pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("documents always serialize")
}

mod ordered_map {
    use std::fmt;

    use serde::de::{MapAccess, Visitor};
    use serde::ser::SerializeMap;
    use serde::{Deserializer, Serializer};

    type Pairs = Vec<(String, Vec<String>)>;

    pub fn serialize<S: Serializer>(pairs: &Pairs, ser: S) -> Result<S::Ok, S::Error> {
        let mut map = ser.serialize_map(Some(pairs.len()))?;
        for (k, v) in pairs {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Pairs, D::Error> {
        struct PairsVisitor;

        impl<'de> Visitor<'de> for PairsVisitor {
            type Value = Pairs;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object mapping labels to label arrays")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Pairs, A::Error> {
                let mut pairs = Vec::new();
                while let Some((k, v)) = access.next_entry::<String, Vec<String>>()? {
                    pairs.push((k, v));
                }
                Ok(pairs)
            }
        }

        de.deserialize_map(PairsVisitor)
    }
}
