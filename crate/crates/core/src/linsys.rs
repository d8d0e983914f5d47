//! The two fixed linear systems relating `(x, y, z)` to the four linear
//! factors `x+y+z`, `x−y+z`, `x+y−z`, `x−y−z` of the quartic.
//!
//! Results are always rational. Integrality is the caller's check.

use num_traits::One;

use crate::{Rational, Triple};

pub type RatTriple = Triple<Rational>;

fn half(v: Rational) -> Rational {
    v / (Rational::one() + Rational::one())
}

/// Unique solution of
///
/// ```text
/// x + y + z = A
/// x − y + z = B
/// x + y − z = C
/// ```
///
/// namely `((B+C)/2, (A−B)/2, (A−C)/2)` by Cramer's rule (determinant 4).
pub fn solve3(a: &Rational, b: &Rational, c: &Rational) -> RatTriple {
    Triple::new(half(b + c), half(a - b), half(a - c))
}

/// Adds `x − y − z = D` to the system of [`solve3`].
///
/// The four-equation system is consistent exactly when `A + D = B + C`, in
/// which case its unique solution is the [`solve3`] triple.
pub fn solve4(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> Option<RatTriple> {
    if a + d == b + c {
        Some(solve3(a, b, c))
    } else {
        None
    }
}
