//! Solutions with at least one zero coordinate when `n = k²`.
//!
//! With `z = 0` the quartic collapses to `(x² − y²)² = k²`, so these
//! families come from `x² − y² = ±k` over the integers or the rationals.

use std::collections::BTreeSet;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::SolutionOrbit;
use crate::arith::exact_sqrt;
use crate::param::square_diff_pairs;
use crate::{require_at_least, Error, Integer, Rational, Result, Triple};

/// Integer (and, equally, rational) solutions of `n = k²` with two zero
/// coordinates: `(±m, 0, 0)` and its permutations when `k = m²`, otherwise
/// none.
pub fn square_two_zero(k: &Integer) -> Result<BTreeSet<Triple<Integer>>> {
    require_at_least("k", k, 1)?;
    let Some(m) = exact_sqrt(k) else {
        return Ok(BTreeSet::new());
    };
    let zero = Integer::zero();
    let mut out = BTreeSet::new();
    for s in [m.clone(), -m] {
        out.insert(Triple::new(s.clone(), zero.clone(), zero.clone()));
        out.insert(Triple::new(zero.clone(), s.clone(), zero.clone()));
        out.insert(Triple::new(zero.clone(), zero.clone(), s));
    }
    Ok(out)
}

/// Orbits of integer solutions of `n = k²` with exactly one zero
/// coordinate: one orbit of 24 per positive `(e, f)` with `e² − f² = k`.
pub fn square_one_zero_integer(k: &Integer) -> Result<Vec<SolutionOrbit>> {
    Ok(square_diff_pairs(k)?
        .into_iter()
        .map(|p| SolutionOrbit::of(&Triple::new(p.u, p.v, Integer::zero())))
        .collect())
}

/// All sign flips of the nonzero coordinates.
fn sign_variants(t: &Triple<Rational>) -> BTreeSet<Triple<Rational>> {
    let mut out = BTreeSet::new();
    for signs in 0u8..8 {
        let flip = |i: u8, v: &Rational| {
            if signs & (1 << i) != 0 {
                -v.clone()
            } else {
                v.clone()
            }
        };
        out.insert(Triple::new(flip(0, &t.x), flip(1, &t.y), flip(2, &t.z)));
    }
    out
}

/// The six placements of `(e, f)` with one zero coordinate.
fn placements(e: &Rational, f: &Rational) -> [Triple<Rational>; 6] {
    let z = Rational::zero();
    [
        Triple::new(e.clone(), f.clone(), z.clone()),
        Triple::new(e.clone(), z.clone(), f.clone()),
        Triple::new(f.clone(), e.clone(), z.clone()),
        Triple::new(f.clone(), z.clone(), e.clone()),
        Triple::new(z.clone(), e.clone(), f.clone()),
        Triple::new(z, f.clone(), e.clone()),
    ]
}

/// Rational solutions of `n = k²` with one zero coordinate for a single
/// parameter choice `(k1, k2, m1, m2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OneZeroFamily {
    #[serde(with = "crate::exact")]
    pub k: Integer,
    #[serde(with = "crate::exact")]
    pub e: Rational,
    #[serde(with = "crate::exact")]
    pub f: Rational,
    pub placements: Vec<Triple<Rational>>,
}

impl OneZeroFamily {
    /// Every placement with every sign choice (24 triples).
    pub fn solutions(&self) -> BTreeSet<Triple<Rational>> {
        self.placements.iter().flat_map(sign_variants).collect()
    }
}

/// `e = (k1·m1/m2 + k2·m2/m1)/2`, `f = |k1·m1/m2 − k2·m2/m1|/2`, so that
/// `e² − f² = k1·k2 = k`.
pub fn square_one_zero_rational(
    k: &Integer,
    k1: &Integer,
    k2: &Integer,
    m1: &Integer,
    m2: &Integer,
) -> Result<OneZeroFamily> {
    require_at_least("k", k, 2)?;
    for (name, v) in [("k1", k1), ("k2", k2), ("m1", m1), ("m2", m2)] {
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
    if k1 * m1 * m1 == k2 * m2 * m2 {
        return Err(Error::Precondition("k1·m1² = k2·m2² forces f = 0".into()));
    }
    let p = Rational::new(k1 * m1, m2.clone());
    let q = Rational::new(k2 * m2, m1.clone());
    let two = Rational::from_integer(2.into());
    let e = (&p + &q) / &two;
    let f = (&p - &q).abs() / &two;
    Ok(OneZeroFamily {
        k: k.clone(),
        placements: placements(&e, &f).to_vec(),
        e,
        f,
    })
}

/// Rational solutions of `n = 1` with one zero coordinate for a coprime
/// generator `k1 > k2 ≥ 1` of opposite parity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitFamily {
    #[serde(with = "crate::exact")]
    pub e: Rational,
    #[serde(with = "crate::exact")]
    pub f: Rational,
    #[serde(with = "crate::exact")]
    pub g: Rational,
    #[serde(with = "crate::exact")]
    pub h: Rational,
    /// Six placements of `(e, f)` followed by six of `(g, h)`.
    pub classes: Vec<Triple<Rational>>,
}

impl UnitFamily {
    pub fn solutions(&self) -> BTreeSet<Triple<Rational>> {
        self.classes.iter().flat_map(sign_variants).collect()
    }
}

/// Both ways of reading a Pythagorean triple `(k1²−k2², 2k1k2, k1²+k2²)` as
/// a rational point on `x² − y² = 1`:
///
/// ```text
/// e = (k1² + k2²)/(2k1k2)      f = (k1² − k2²)/(2k1k2)
/// g = (k1² + k2²)/(k1² − k2²)  h = 2k1k2/(k1² − k2²)
/// ```
pub fn unit_case(k1: &Integer, k2: &Integer) -> Result<UnitFamily> {
    // Same generator constraints as the Pythagorean parametrization.
    crate::param::pythagorean(
        &Integer::one(),
        k1,
        k2,
        crate::param::LegOrder::DifferenceFirst,
    )?;
    let sum = k1 * k1 + k2 * k2;
    let diff = k1 * k1 - k2 * k2;
    let prod: Integer = k1 * k2 * 2;
    let e = Rational::new(sum.clone(), prod.clone());
    let f = Rational::new(diff.clone(), prod.clone());
    let g = Rational::new(sum, diff.clone());
    let h = Rational::new(prod, diff);
    let mut classes = placements(&e, &f).to_vec();
    classes.extend(placements(&g, &h));
    Ok(UnitFamily {
        e,
        f,
        g,
        h,
        classes,
    })
}
