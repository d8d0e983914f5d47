//! Parametrizations of the auxiliary equations
//!
//! * `u² − v² = k` from factor pairs of `k`,
//! * `u² + v² = w²` (Pythagorean triples),
//! * `u² + k·v² = w²` (the conic used by the rational `n = k²` families).
//!
//! `k = 4` is worth noting: `4 ≡ 0 (mod 4)` but its only same-parity split is
//! `2·2`, which gives `v = 0`, so [`square_diff_pairs`] returns nothing.

use num_integer::Integer as _;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::{require_at_least, Error, Integer, Result};

/// A positive solution of `u² − v² = d1·d2` generated by the split `(d1, d2)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SquareDiffPair {
    #[serde(with = "crate::exact")]
    pub u: Integer,
    #[serde(with = "crate::exact")]
    pub v: Integer,
    #[serde(with = "crate::exact")]
    pub d1: Integer,
    #[serde(with = "crate::exact")]
    pub d2: Integer,
}

/// All positive `(u, v)` with `u² − v² = k`, one per split `k = d1·d2` with
/// `d1 > d2 ≥ 1` and `d1 ≡ d2 (mod 2)`, ordered by increasing `d2`.
///
/// Empty when `k ≡ 2 (mod 4)`.
pub fn square_diff_pairs(k: &Integer) -> Result<Vec<SquareDiffPair>> {
    require_at_least("k", k, 2)?;
    let pairs = crate::arith::divisors(k)?
        .into_iter()
        .filter_map(|d2| {
            let d1 = k / &d2;
            if d1 <= d2 || d1.is_even() != d2.is_even() {
                return None;
            }
            Some(SquareDiffPair {
                u: (&d1 + &d2) / 2,
                v: (&d1 - &d2) / 2,
                d1,
                d2,
            })
        })
        .collect();
    Ok(pairs)
}

/// Which leg of a Pythagorean triple carries `k1² − k2²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LegOrder {
    /// `u = d(k1² − k2²)`, `v = 2d·k1·k2`.
    DifferenceFirst,
    /// `u = 2d·k1·k2`, `v = d(k1² − k2²)`.
    ProductFirst,
}

/// The Pythagorean triple `(u, v, w)` for generator `(d, k1, k2)`.
///
/// Requires `d ≥ 1`, `k1 > k2 ≥ 1`, `k1 + k2` odd and `gcd(k1, k2) = 1`.
pub fn pythagorean(
    d: &Integer,
    k1: &Integer,
    k2: &Integer,
    order: LegOrder,
) -> Result<(Integer, Integer, Integer)> {
    require_at_least("d", d, 1)?;
    require_at_least("k2", k2, 1)?;
    if k1 <= k2 {
        return Err(Error::Precondition(format!(
            "need k1 > k2, got k1={k1}, k2={k2}"
        )));
    }
    if (k1 + k2).is_even() {
        return Err(Error::Precondition(format!(
            "k1 + k2 must be odd, got {k1} + {k2}"
        )));
    }
    if !k1.gcd(k2).is_one() {
        return Err(Error::Precondition(format!(
            "k1={k1} and k2={k2} are not coprime"
        )));
    }
    let diff = d * (k1 * k1 - k2 * k2);
    let prod = d * k1 * k2 * 2;
    let w = d * (k1 * k1 + k2 * k2);
    Ok(match order {
        LegOrder::DifferenceFirst => (diff, prod, w),
        LegOrder::ProductFirst => (prod, diff, w),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConicParams {
    #[serde(with = "crate::exact")]
    pub d: Integer,
    #[serde(with = "crate::exact")]
    pub k1: Integer,
    #[serde(with = "crate::exact")]
    pub k2: Integer,
    #[serde(with = "crate::exact")]
    pub m1: Integer,
    #[serde(with = "crate::exact")]
    pub m2: Integer,
}

/// A positive solution of `u² + k·v² = w²` with `k = k1·k2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConicTriple {
    #[serde(with = "crate::exact")]
    pub u: Integer,
    #[serde(with = "crate::exact")]
    pub v: Integer,
    #[serde(with = "crate::exact")]
    pub w: Integer,
    pub params: ConicParams,
}

impl ConicTriple {
    pub fn k(&self) -> Integer {
        &self.params.k1 * &self.params.k2
    }

    pub fn holds(&self) -> bool {
        &self.u * &self.u + self.k() * &self.v * &self.v == &self.w * &self.w
    }
}

/// Builds the point
/// `u = d·|k1·m1² − k2·m2²|/2`, `v = d·m1·m2`, `w = d·(k1·m1² + k2·m2²)/2`.
///
/// Validates `k1·k2 = k`, `gcd(m1, m2) = 1`, `d·k1·m1² ≡ d·k2·m2² (mod 2)`
/// and `k1·m1² ≠ k2·m2²`; does not search for parameters.
pub fn conic_point(k: &Integer, params: ConicParams) -> Result<ConicTriple> {
    require_at_least("k", k, 2)?;
    let ConicParams { d, k1, k2, m1, m2 } = &params;
    for (name, v) in [("d", d), ("k1", k1), ("k2", k2), ("m1", m1), ("m2", m2)] {
        require_at_least(name, v, 1)?;
    }
    if &(k1 * k2) != k {
        return Err(Error::Precondition(format!(
            "k1·k2 = {} differs from k = {k}",
            k1 * k2
        )));
    }
    if !m1.gcd(m2).is_one() {
        return Err(Error::Precondition(format!(
            "m1={m1} and m2={m2} are not coprime"
        )));
    }
    let lhs = k1 * m1 * m1;
    let rhs = k2 * m2 * m2;
    if (d * &lhs).is_even() != (d * &rhs).is_even() {
        return Err(Error::Precondition(
            "d·k1·m1² and d·k2·m2² must have the same parity".into(),
        ));
    }
    if lhs == rhs {
        return Err(Error::Precondition("k1·m1² = k2·m2² forces u = 0".into()));
    }
    let u = d * (&lhs - &rhs).abs() / 2;
    let v = d * m1 * m2;
    let w = d * (&lhs + &rhs) / 2;
    Ok(ConicTriple { u, v, w, params })
}
