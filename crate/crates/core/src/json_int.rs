//! Serde helpers for big integers in JSON.
//!
//! Values with `|v| < 2^53` are written as JSON numbers; larger values are
//! written as decimal strings so that no reader loses precision. Both forms
//! are accepted on input.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::de::{self, Deserializer, Visitor};
use serde::Serializer;

const EXACT_LIMIT: i64 = 1 << 53;

pub fn to_value(v: &BigInt) -> serde_json::Value {
    match v.to_i64() {
        Some(x) if x.abs() < EXACT_LIMIT => serde_json::Value::from(x),
        _ => serde_json::Value::from(v.to_string()),
    }
}

pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    if v.abs() < BigInt::from(EXACT_LIMIT) {
        s.serialize_i64(v.to_i64().expect("fits in i64"))
    } else {
        s.serialize_str(&v.to_string())
    }
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    struct IntVisitor;

    impl Visitor<'_> for IntVisitor {
        type Value = BigInt;

        fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
            f.write_str("an integer or a decimal string")
        }

        fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigInt, E> {
            Ok(v.into())
        }

        fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigInt, E> {
            Ok(v.into())
        }

        fn visit_str<E: de::Error>(self, v: &str) -> Result<BigInt, E> {
            v.parse().map_err(|_| E::custom(format!("bad integer {v:?}")))
        }
    }

    d.deserialize_any(IntVisitor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde::{Deserialize, Serialize};

    #[derive(Serialize, Deserialize, PartialEq, Debug)]
    struct W(#[serde(with = "super")] BigInt);

    #[test]
    fn small_values_are_numbers_large_are_strings() {
        assert_eq!(serde_json::to_string(&W(BigInt::from(-7))).unwrap(), "-7");
        let big = BigInt::from(1u64 << 53);
        assert_eq!(serde_json::to_string(&W(big.clone())).unwrap(), "\"9007199254740992\"");
        assert_eq!(
            serde_json::to_string(&W(-big.clone())).unwrap(),
            "\"-9007199254740992\""
        );
        let below = BigInt::from((1u64 << 53) - 1);
        assert_eq!(serde_json::to_string(&W(below)).unwrap(), "9007199254740991");
        assert_eq!(to_value(&big), serde_json::json!("9007199254740992"));
    }

    #[test]
    fn both_forms_parse() {
        assert_eq!(serde_json::from_str::<W>("12").unwrap(), W(12.into()));
        assert_eq!(
            serde_json::from_str::<W>("\"-99999999999999999999\"")
                .unwrap()
                .0
                .to_string(),
            "-99999999999999999999"
        );
        assert!(serde_json::from_str::<W>("\"x\"").is_err());
    }
}
