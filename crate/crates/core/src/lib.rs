//! Exact solvers for two Diophantine equations in three unknowns:
//!
//! * the symmetric quartic `x⁴ + y⁴ + z⁴ − 2x²y² − 2y²z² − 2z²x² = n`, and
//! * the quadratic-in-`x` variant `x² + y⁴ + z⁴ − 2xy² − 2xz² − 2y²z² = n`.
//!
//! All arithmetic is exact: integers are [`BigInt`] and rationals are
//! [`BigRational`] in lowest terms with a positive denominator.
//!
//! The crate is split along the mathematics:
//!
//! * [`arith`]: factorization, divisors and integer square roots.
//! * [`linsys`]: the two fixed linear systems that link a solution to the
//!   four linear factors of the quartic.
//! * [`param`]: parametrizations of `u² − v² = k`, `u² + v² = w²` and
//!   `u² + kv² = w²`.
//! * [`quartic`]: decisions with certificates, complete enumeration, orbits,
//!   rational witnesses and the `n = k²` families.
//! * [`quadratic`]: integer families, the mod-4 filter and rational points.
//! * [`oracle`]: brute-force references used to cross-check the solvers.
//! * [`cli`]: the command surface behind the `dioph` binary.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeTuple, Serializer};
use serde::{Deserialize, Serialize};

pub mod arith;
pub mod cli;
pub mod linsys;
pub mod oracle;
pub mod param;
pub mod quadratic;
pub mod quartic;

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;

/// Exact reduced fraction with positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{what} must be at least {min}, got {value}")]
    TooSmall {
        what: &'static str,
        min: i64,
        value: Integer,
    },
    #[error("invalid parameters: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn require_at_least(what: &'static str, value: &Integer, min: i64) -> Result<()> {
    if *value < Integer::from(min) {
        return Err(Error::TooSmall {
            what,
            min,
            value: value.clone(),
        });
    }
    Ok(())
}

/// An ordered `(x, y, z)`.
///
/// Ordering is lexicographic, which fixes the iteration order of every
/// solution set in the crate. Serializes as a 3-array of decimal strings
/// (`"5/2"` for rationals) so no value ever passes through floating point.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T> Triple<T> {
    pub const fn new(x: T, y: T, z: T) -> Self {
        Self { x, y, z }
    }

    pub fn map<U>(self, mut f: impl FnMut(T) -> U) -> Triple<U> {
        Triple::new(f(self.x), f(self.y), f(self.z))
    }

    pub fn as_array(&self) -> [&T; 3] {
        [&self.x, &self.y, &self.z]
    }
}

impl Triple<Integer> {
    pub fn from_i64(x: i64, y: i64, z: i64) -> Self {
        Triple::new(x.into(), y.into(), z.into())
    }

    pub fn to_rational(&self) -> Triple<Rational> {
        self.clone().map(Rational::from_integer)
    }
}

impl Triple<Rational> {
    /// Integer view of the triple when every denominator is 1.
    pub fn to_integer(&self) -> Option<Triple<Integer>> {
        if self.as_array().iter().all(|c| c.is_integer()) {
            Some(self.clone().map(|c| c.to_integer()))
        } else {
            None
        }
    }
}

impl<T: fmt::Display> fmt::Display for Triple<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.x, self.y, self.z)
    }
}

impl<T: fmt::Display> Serialize for Triple<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut tup = serializer.serialize_tuple(3)?;
        for c in self.as_array() {
            tup.serialize_element(&c.to_string())?;
        }
        tup.end()
    }
}

impl<'de, T> Deserialize<'de> for Triple<T>
where
    T: FromStr,
    T::Err: fmt::Display,
{
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct TripleVisitor<T>(std::marker::PhantomData<T>);

        impl<'de, T> Visitor<'de> for TripleVisitor<T>
        where
            T: FromStr,
            T::Err: fmt::Display,
        {
            type Value = Triple<T>;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an array of three exact decimal strings")
            }

            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<Self::Value, A::Error> {
                let mut next = |i: usize| -> std::result::Result<T, A::Error> {
                    let s: String = seq
                        .next_element()?
                        .ok_or_else(|| de::Error::invalid_length(i, &self))?;
                    s.parse().map_err(de::Error::custom)
                };
                let x = next(0)?;
                let y = next(1)?;
                let z = next(2)?;
                Ok(Triple::new(x, y, z))
            }
        }

        deserializer.deserialize_tuple(3, TripleVisitor(std::marker::PhantomData))
    }
}

/// Serde adapters that write exact numbers as decimal strings.
pub mod exact {
    use std::fmt::Display;
    use std::str::FromStr;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, T, D>(d: D) -> Result<T, D::Error>
    where
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }

    pub mod option {
        use super::*;

        pub fn serialize<T: Display, S: Serializer>(
            v: &Option<T>,
            s: S,
        ) -> Result<S::Ok, S::Error> {
            match v {
                Some(v) => s.collect_str(v),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, T, D>(d: D) -> Result<Option<T>, D::Error>
        where
            T: FromStr,
            T::Err: Display,
            D: Deserializer<'de>,
        {
            Option::<String>::deserialize(d)?
                .map(|s| s.parse().map_err(serde::de::Error::custom))
                .transpose()
        }
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<T: Display, S: Serializer>(v: &[T], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for item in v {
                seq.serialize_element(&item.to_string())?;
            }
            seq.end()
        }

        pub fn deserialize<'de, T, D>(d: D) -> Result<Vec<T>, D::Error>
        where
            T: FromStr,
            T::Err: Display,
            D: Deserializer<'de>,
        {
            Vec::<String>::deserialize(d)?
                .into_iter()
                .map(|s| s.parse().map_err(serde::de::Error::custom))
                .collect()
        }
    }
}
