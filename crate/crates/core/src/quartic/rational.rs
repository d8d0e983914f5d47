use num_integer::Integer as _;
use serde::{Deserialize, Serialize};

use crate::arith::divisors;
use crate::linsys::solve4;
use crate::{Integer, Rational, Result, Triple};

/// A rational solution built from integers `a, b, c, d` with `abcd = n` and
/// `a + d = b + c`: the triple `((b+c)/2, (a−b)/2, (a−c)/2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalWitness {
    pub triple: Triple<Rational>,
    #[serde(with = "crate::exact")]
    pub a: Integer,
    #[serde(with = "crate::exact")]
    pub b: Integer,
    #[serde(with = "crate::exact")]
    pub c: Integer,
    #[serde(with = "crate::exact")]
    pub d: Integer,
}

// Sign patterns with an even number of negatives, all-negative excluded
// since it only negates a positive solution.
const SIGN_PATTERNS: [[bool; 4]; 6] = [
    [true, true, false, false],
    [true, false, true, false],
    [true, false, false, true],
    [false, true, true, false],
    [false, true, false, true],
    [false, false, true, true],
];

/// Searches integer quadruples whose entries divide `n` in absolute value.
///
/// Positive quadruples are tried first (`a` descending, then `b`, then `c`),
/// then the same magnitudes with two negated entries. `None` only means no
/// quadruple of this form exists; it says nothing about other rational
/// solutions.
pub fn rational_witness(n: &Integer) -> Result<Option<RationalWitness>> {
    let mut divs = divisors(n)?;
    divs.reverse();
    let mut magnitudes = Vec::new();
    for a in &divs {
        let rest_a = n / a;
        for b in divs.iter().filter(|b| rest_a.is_multiple_of(b)) {
            let rest_b = &rest_a / b;
            for c in divs.iter().filter(|c| rest_b.is_multiple_of(c)) {
                magnitudes.push([a.clone(), b.clone(), c.clone(), &rest_b / c]);
            }
        }
    }

    let positive = magnitudes.iter().cloned();
    let signed = magnitudes.iter().flat_map(|m| {
        SIGN_PATTERNS.iter().map(move |neg| {
            let mut m = m.clone();
            for (v, flip) in m.iter_mut().zip(neg) {
                if *flip {
                    *v = -v.clone();
                }
            }
            m
        })
    });

    for [a, b, c, d] in positive.chain(signed) {
        if &a + &d != &b + &c {
            continue;
        }
        let [ra, rb, rc, rd] = [&a, &b, &c, &d].map(|v| Rational::from_integer(v.clone()));
        if let Some(triple) = solve4(&ra, &rb, &rc, &rd) {
            return Ok(Some(RationalWitness { triple, a, b, c, d }));
        }
    }
    Ok(None)
}
