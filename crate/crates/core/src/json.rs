//! JSON integer encoding shared by the instance and game schemas.
//!
//! Values that fit in the 53-bit safe integer range serialize as plain JSON
//! numbers; anything larger becomes a decimal string so that JSON consumers
//! limited to doubles never see a corrupted weight. Index values, subset-sum
//! values, and targets always serialize as decimal strings.

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use serde::de::{self, Deserializer, Unexpected};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

const SAFE_MAX: u64 = (1 << 53) - 1;

/// A JSON integer that may arrive as a number or a decimal string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlexInt(pub BigInt);

impl Serialize for FlexInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) if v.unsigned_abs() <= SAFE_MAX => serializer.serialize_i64(v),
            _ => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for FlexInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Uint(u64),
            Str(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Int(v) => Ok(FlexInt(BigInt::from(v))),
            Raw::Uint(v) => Ok(FlexInt(BigInt::from(v))),
            Raw::Str(s) => s
                .trim()
                .parse::<BigInt>()
                .map(FlexInt)
                .map_err(|_| de::Error::invalid_value(Unexpected::Str(&s), &"a decimal integer")),
        }
    }
}

impl From<&BigUint> for FlexInt {
    fn from(v: &BigUint) -> Self {
        FlexInt(BigInt::from(v.clone()))
    }
}

/// Serialize a big integer as a decimal string (used where the schema fixes
/// string encoding unconditionally).
pub mod uint_string {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigUint, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<BigUint, D::Error> {
        let raw = FlexInt::deserialize(deserializer)?;
        raw.0
            .to_biguint()
            .ok_or_else(|| de::Error::custom("expected a nonnegative integer"))
    }
}

/// Serialize a vector of big integers as decimal strings.
pub mod uint_string_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigUint], serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(v.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> Result<Vec<BigUint>, D::Error> {
        let raw = Vec::<FlexInt>::deserialize(deserializer)?;
        raw.into_iter()
            .map(|x| {
                x.0.to_biguint()
                    .ok_or_else(|| de::Error::custom("expected a nonnegative integer"))
            })
            .collect()
    }
}
