//! Leaf functions `i -> max leaves of an induced subtree on i vertices`.

use std::fmt;
use std::str::FromStr;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

/// A value of a leaf function. `NegInfinity` (the max of an empty family)
/// orders below every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LeafValue {
    NegInfinity,
    Finite(usize),
}

impl LeafValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            LeafValue::Finite(v) => Some(v),
            LeafValue::NegInfinity => None,
        }
    }

    pub fn is_neg_infinity(self) -> bool {
        matches!(self, LeafValue::NegInfinity)
    }
}

impl From<usize> for LeafValue {
    fn from(v: usize) -> Self {
        LeafValue::Finite(v)
    }
}

impl fmt::Display for LeafValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LeafValue::Finite(v) => write!(f, "{v}"),
            LeafValue::NegInfinity => f.write_str("-inf"),
        }
    }
}

impl FromStr for LeafValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "-inf" => Ok(LeafValue::NegInfinity),
            tok => tok
                .parse()
                .map(LeafValue::Finite)
                .map_err(|e| Error::Parse(format!("leaf value {tok:?}: {e}"))),
        }
    }
}

impl Serialize for LeafValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            LeafValue::Finite(v) => serializer.serialize_u64(*v as u64),
            LeafValue::NegInfinity => serializer.serialize_str("-inf"),
        }
    }
}

impl<'de> Deserialize<'de> for LeafValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct LeafValueVisitor;

        impl Visitor<'_> for LeafValueVisitor {
            type Value = LeafValue;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a natural number or the string \"-inf\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<LeafValue, E> {
                Ok(LeafValue::Finite(v as usize))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<LeafValue, E> {
                usize::try_from(v)
                    .map(LeafValue::Finite)
                    .map_err(|_| E::custom(format!("negative leaf value {v}")))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<LeafValue, E> {
                if v == "-inf" {
                    Ok(LeafValue::NegInfinity)
                } else {
                    Err(E::invalid_value(de::Unexpected::Str(v), &self))
                }
            }
        }

        deserializer.deserialize_any(LeafValueVisitor)
    }
}

/// Values `L(0), ..., L(n)` of a leaf function on an `n`-vertex graph.
///
/// Construction only requires at least one value; [`LeafFunction::validate`]
/// checks the structural invariants every graph's leaf function satisfies.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LeafFunction {
    n: usize,
    values: Vec<LeafValue>,
}

#[derive(Deserialize)]
struct RawLeafFunction {
    n: usize,
    values: Vec<LeafValue>,
}

impl<'de> Deserialize<'de> for LeafFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawLeafFunction::deserialize(deserializer)?;
        if raw.values.len() != raw.n + 1 {
            return Err(de::Error::custom(format!(
                "n = {} requires {} values, got {}",
                raw.n,
                raw.n + 1,
                raw.values.len()
            )));
        }
        Ok(LeafFunction {
            n: raw.n,
            values: raw.values,
        })
    }
}

impl LeafFunction {
    pub fn new(values: Vec<LeafValue>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::MalformedLeafFunction(
                "a leaf function has at least the value L(0)".into(),
            ));
        }
        Ok(LeafFunction {
            n: values.len() - 1,
            values,
        })
    }

    pub fn from_finite(values: &[usize]) -> Result<Self> {
        LeafFunction::new(values.iter().copied().map(LeafValue::Finite).collect())
    }

    /// Checks `n` against the number of values, then builds.
    pub fn with_size(n: usize, values: Vec<LeafValue>) -> Result<Self> {
        if values.len() != n + 1 {
            return Err(Error::MalformedLeafFunction(format!(
                "n = {n} requires {} values, got {}",
                n + 1,
                values.len()
            )));
        }
        LeafFunction::new(values)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[LeafValue] {
        &self.values
    }

    pub fn get(&self, i: usize) -> Option<LeafValue> {
        self.values.get(i).copied()
    }

    /// `L(0) = 0`, `L(1) = 0`, and `-inf` only on a suffix of `1..=n`.
    pub fn validate(&self) -> Result<()> {
        if self.values[0] != LeafValue::Finite(0) {
            return Err(Error::MalformedLeafFunction("L(0) must be 0".into()));
        }
        if self.n >= 1 && self.values[1] != LeafValue::Finite(0) {
            return Err(Error::MalformedLeafFunction("L(1) must be 0".into()));
        }
        if let Some(first) = self.values.iter().position(|v| v.is_neg_infinity()) {
            if !self.values[first..].iter().all(|v| v.is_neg_infinity()) {
                return Err(Error::MalformedLeafFunction(format!(
                    "finite value after -inf at position {first}"
                )));
            }
        }
        Ok(())
    }

    /// True iff no value is `-inf` and the values never decrease.
    pub fn is_non_decreasing(&self) -> bool {
        self.values.windows(2).all(|w| w[0] <= w[1])
            && !self.values.iter().any(|v| v.is_neg_infinity())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("leaf functions always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for LeafFunction {
    /// Comma-separated values, `-inf` spelled out.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for LeafFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .trim()
            .split(',')
            .map(str::parse)
            .collect::<Result<Vec<LeafValue>>>()?;
        LeafFunction::new(values)
    }
}
