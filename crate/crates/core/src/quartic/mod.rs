//! The symmetric quartic `x⁴ + y⁴ + z⁴ − 2x²y² − 2y²z² − 2z²x² = n`.
//!
//! Everything here rests on the factorization
//!
//! ```text
//! x⁴ + y⁴ + z⁴ − 2x²y² − 2y²z² − 2z²x² = (x+y+z)(x−y+z)(x+y−z)(x−y−z)
//! ```
//!
//! so an integer solution is a way of writing `n` as a product of four
//! integers `A·B·C·D` with `A + D = B + C`, all of one parity. For a
//! nonnegative solution `A = x+y+z > 0` and the remaining three factors are
//! either all positive or exactly two of them negative. That gives three
//! kinds of positive divisor quadruples `(a, b, c, d)`:
//!
//! | kind | factors `(A, B, C, D)` | consistency | ordering     |
//! |------|------------------------|-------------|--------------|
//! | C1   | `( a,  b,  c,  d)`     | `a+d = b+c` | `a ≥ b, c`   |
//! | C2   | `( a,  b, −c, −d)`     | `a+c = b+d` | `a ≥ b ≥ c`  |
//! | C3   | `( a, −b,  c, −d)`     | `a+b = c+d` | `a ≥ c ≥ b`  |
//!
//! Note the consistency conditions for C2 and C3: requiring `a+d = b+c`
//! for every kind loses solutions. For `n = 9` the nonnegative solutions
//! `(0, 1, 2)` and `(0, 2, 1)` only come from the quadruple `(3, 1, 1, 3)`,
//! which satisfies `a+c = b+d` and `a+b = c+d` but not `a+d = b+c`.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer as _;
use num_traits::{Num, One};
use serde::{Deserialize, Serialize};

use crate::arith::{divisors, factorize};
use crate::linsys::solve4;
use crate::{require_at_least, Integer, Rational, Result, Triple};

mod orbit;
mod rational;
mod squares;

pub use orbit::{canonical, expand_orbit, orbit_size, SolutionOrbit};
pub use rational::{rational_witness, RationalWitness};
pub use squares::{
    square_one_zero_integer, square_one_zero_rational, square_two_zero, unit_case, OneZeroFamily,
    UnitFamily,
};

/// Left-hand side of the quartic, expanded.
pub fn eval_quartic<T: Clone + Num>(t: &Triple<T>) -> T {
    let sq = |v: &T| v.clone() * v.clone();
    let (x2, y2, z2) = (sq(&t.x), sq(&t.y), sq(&t.z));
    let two = T::one() + T::one();
    sq(&x2) + sq(&y2) + sq(&z2)
        - two.clone() * x2.clone() * y2.clone()
        - two.clone() * y2 * z2.clone()
        - two * z2 * x2
}

/// Left-hand side of the quartic as the product of its four linear factors.
pub fn eval_factored<T: Clone + Num>(t: &Triple<T>) -> T {
    let (x, y, z) = (t.x.clone(), t.y.clone(), t.z.clone());
    (x.clone() + y.clone() + z.clone())
        * (x.clone() + y.clone() - z.clone())
        * (x.clone() - y.clone() + z.clone())
        * (x - y - z)
}

/// Why a given `n` has no integer solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Reason {
    /// `n = 8N` with `N` odd.
    Mod8Filter,
    /// `n` is prime.
    PrimeFilter,
    /// `n = 4`.
    FourFilter,
    /// `n = pq` with `p ≠ q` prime.
    TwoPrimesFilter,
    /// No divisor quadruple exists.
    ExhaustedQuadruples,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Reason::Mod8Filter => "Mod8Filter",
            Reason::PrimeFilter => "PrimeFilter",
            Reason::FourFilter => "FourFilter",
            Reason::TwoPrimesFilter => "TwoPrimesFilter",
            Reason::ExhaustedQuadruples => "ExhaustedQuadruples",
        };
        f.write_str(s)
    }
}

/// Cheap sufficient conditions for "no integer solution".
///
/// Checked in order: `n ≡ 8 (mod 16)`, prime, `n = 4`, product of two
/// distinct primes.
pub fn quick_filters(n: &Integer) -> Result<Option<Reason>> {
    require_at_least("n", n, 1)?;
    if n.mod_floor(&Integer::from(16)) == Integer::from(8) {
        return Ok(Some(Reason::Mod8Filter));
    }
    let f = factorize(n)?;
    let reason = match f.factors() {
        [(_, 1)] => Some(Reason::PrimeFilter),
        [(p, 2)] if p == &Integer::from(2) => Some(Reason::FourFilter),
        [(_, 1), (_, 1)] => Some(Reason::TwoPrimesFilter),
        _ => None,
    };
    Ok(reason)
}

/// Which sign pattern of the linear factors a quadruple encodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum QuadrupleKind {
    /// All four factors positive; `a + d = b + c`.
    C1,
    /// `x+y−z` and `x−y−z` negative; `a + c = b + d`.
    C2,
    /// `x−y+z` and `x−y−z` negative; `a + b = c + d`.
    C3,
}

/// Positive `(a, b, c, d)` with `abcd = n`, equal parity and the
/// consistency condition of its [`QuadrupleKind`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DivisorQuadruple {
    #[serde(with = "crate::exact")]
    pub a: Integer,
    #[serde(with = "crate::exact")]
    pub b: Integer,
    #[serde(with = "crate::exact")]
    pub c: Integer,
    #[serde(with = "crate::exact")]
    pub d: Integer,
    pub kind: QuadrupleKind,
}

impl DivisorQuadruple {
    pub fn product(&self) -> Integer {
        &self.a * &self.b * &self.c * &self.d
    }

    /// The values of `(x+y+z, x−y+z, x+y−z, x−y−z)` this quadruple stands for.
    pub fn signed_factors(&self) -> [Integer; 4] {
        let (a, b, c, d) = (
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
        );
        match self.kind {
            QuadrupleKind::C1 => [a, b, c, d],
            QuadrupleKind::C2 => [a, b, -c, -d],
            QuadrupleKind::C3 => [a, -b, c, -d],
        }
    }

    /// Checks every invariant of the kind against `n`.
    pub fn is_valid_for(&self, n: &Integer) -> bool {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let one = Integer::one();
        if [a, b, c, d].iter().any(|v| **v < one) || &self.product() != n {
            return false;
        }
        let parity = a.is_even();
        if [b, c, d].iter().any(|v| v.is_even() != parity) {
            return false;
        }
        match self.kind {
            QuadrupleKind::C1 => a + d == b + c && a >= b && a >= c && a >= d,
            QuadrupleKind::C2 => a + c == b + d && a >= b && b >= c,
            QuadrupleKind::C3 => a + b == c + d && a >= c && c >= b,
        }
    }

    /// The nonnegative integer solution encoded by the quadruple.
    pub fn triple(&self) -> Triple<Integer> {
        let [a, b, c, d] = self.signed_factors().map(Rational::from_integer);
        solve4(&a, &b, &c, &d)
            .and_then(|t| t.to_integer())
            .expect("valid divisor quadruple always yields an integer triple")
    }
}

fn kinds_of(
    a: &Integer,
    b: &Integer,
    c: &Integer,
    d: &Integer,
) -> impl Iterator<Item = QuadrupleKind> {
    let c1 = a + d == b + c && a >= b && a >= c;
    let c2 = a + c == b + d && a >= b && b >= c;
    let c3 = a + b == c + d && a >= c && c >= b;
    [
        (c1, QuadrupleKind::C1),
        (c2, QuadrupleKind::C2),
        (c3, QuadrupleKind::C3),
    ]
    .into_iter()
    .filter_map(|(ok, k)| ok.then_some(k))
}

/// Every divisor quadruple of `n` of any kind.
///
/// Order: `a` over divisors of `n` descending, then `b | n/a` descending,
/// then `c | n/(ab)` descending, `d = n/(abc)`; kinds C1, C2, C3 within a
/// tuple. Every kind has `a` as its largest entry, which prunes `b` and `c`.
pub fn divisor_quadruples(n: &Integer) -> Result<Vec<DivisorQuadruple>> {
    let mut divs = divisors(n)?;
    divs.reverse();
    let mut out = Vec::new();
    for a in &divs {
        let rest_a = n / a;
        for b in divs.iter().filter(|b| *b <= a && rest_a.is_multiple_of(b)) {
            let rest_b = &rest_a / b;
            for c in divs.iter().filter(|c| *c <= a && rest_b.is_multiple_of(c)) {
                let d = &rest_b / c;
                let parity = a.is_even();
                if b.is_even() != parity || c.is_even() != parity || d.is_even() != parity {
                    continue;
                }
                for kind in kinds_of(a, b, c, &d) {
                    out.push(DivisorQuadruple {
                        a: a.clone(),
                        b: b.clone(),
                        c: c.clone(),
                        d: d.clone(),
                        kind,
                    });
                }
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Solvable,
    Unsolvable,
}

/// A checkable answer to "does the quartic have an integer solution?".
///
/// Solvable answers carry a C1 witness quadruple; unsolvable ones carry
/// the reason.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub verdict: Verdict,
    pub witness: Option<DivisorQuadruple>,
    pub reason: Option<Reason>,
}

impl Certificate {
    fn solvable(witness: DivisorQuadruple) -> Self {
        Self {
            verdict: Verdict::Solvable,
            witness: Some(witness),
            reason: None,
        }
    }

    fn unsolvable(reason: Reason) -> Self {
        Self {
            verdict: Verdict::Unsolvable,
            witness: None,
            reason: Some(reason),
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.verdict == Verdict::Solvable
    }

    /// The integer solution reconstructed from the witness.
    pub fn witness_triple(&self) -> Option<Triple<Integer>> {
        self.witness.as_ref().map(DivisorQuadruple::triple)
    }
}

/// Decides integer solvability: quick filters first, then the quadruple
/// search.
pub fn decide_integer(n: &Integer) -> Result<Certificate> {
    if let Some(reason) = quick_filters(n)? {
        return Ok(Certificate::unsolvable(reason));
    }
    search_certificate(n)
}

/// The quadruple search alone, with no filters.
///
/// A positive quadruple with `a+d = b+c` and equal parity can always be
/// rearranged so `a` is its largest entry, so searching C1 quadruples is
/// a complete test.
pub fn search_certificate(n: &Integer) -> Result<Certificate> {
    let witness = divisor_quadruples(n)?
        .into_iter()
        .find(|q| q.kind == QuadrupleKind::C1);
    Ok(match witness {
        Some(q) => Certificate::solvable(q),
        None => Certificate::unsolvable(Reason::ExhaustedQuadruples),
    })
}

/// All nonnegative integer solutions.
pub fn enumerate_nonneg(n: &Integer) -> Result<BTreeSet<Triple<Integer>>> {
    Ok(divisor_quadruples(n)?
        .iter()
        .map(DivisorQuadruple::triple)
        .collect())
}

/// The distinct orbits of the solution set, ordered by canonical triple.
pub fn solution_orbits(n: &Integer) -> Result<Vec<SolutionOrbit>> {
    let canon: BTreeSet<_> = enumerate_nonneg(n)?.iter().map(canonical).collect();
    Ok(canon
        .into_iter()
        .map(SolutionOrbit::from_canonical)
        .collect())
}

/// Every integer solution.
pub fn enumerate_all(n: &Integer) -> Result<BTreeSet<Triple<Integer>>> {
    Ok(enumerate_nonneg(n)?.iter().flat_map(expand_orbit).collect())
}
