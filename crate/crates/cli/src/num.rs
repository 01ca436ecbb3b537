//! Integers in machine-readable output.
//!
//! Values inside the 53-bit range every JSON reader handles exactly are
//! written as numbers; anything larger becomes a decimal string.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

const SAFE_MAX: i64 = (1 << 53) - 1;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Num(pub BigInt);

impl Num {
    pub fn as_i64(&self) -> Option<i64> {
        self.0.to_i64()
    }
}

impl From<BigInt> for Num {
    fn from(v: BigInt) -> Self {
        Num(v)
    }
}

impl From<&BigInt> for Num {
    fn from(v: &BigInt) -> Self {
        Num(v.clone())
    }
}

macro_rules! from_prim {
    ($($t:ty),*) => {$(
        impl From<$t> for Num {
            fn from(v: $t) -> Self {
                Num(BigInt::from(v))
            }
        }
    )*};
}
from_prim!(i64, u64, usize, u32);

impl fmt::Display for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) if (-SAFE_MAX..=SAFE_MAX).contains(&v) => s.serialize_i64(v),
            _ => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Num {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct NumVisitor;

        impl Visitor<'_> for NumVisitor {
            type Value = Num;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Num, E> {
                Ok(Num::from(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Num, E> {
                Ok(Num::from(v))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Num, E> {
                v.parse::<BigInt>().map(Num).map_err(|_| E::invalid_value(de::Unexpected::Str(v), &self))
            }
        }

        d.deserialize_any(NumVisitor)
    }
}

pub fn nums<'a, I: IntoIterator<Item = &'a BigInt>>(values: I) -> Vec<Num> {
    values.into_iter().map(Num::from).collect()
}
