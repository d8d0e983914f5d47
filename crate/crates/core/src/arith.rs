//! Integer utilities: trial-division factorization, divisor enumeration and
//! floor square roots.
//!
//! Everything here is sized for desk-scale inputs. Trial division is the
//! only factoring method.

use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive};

use crate::{require_at_least, Integer, Result};

/// Prime factorization of a positive integer.
///
/// Primes are strictly increasing and the product of `prime^exponent` over
/// all entries equals `n`. `1` has no factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: Integer,
    factors: Vec<(Integer, u32)>,
}

impl Factorization {
    pub fn n(&self) -> &Integer {
        &self.n
    }

    pub fn factors(&self) -> &[(Integer, u32)] {
        &self.factors
    }

    pub fn is_prime(&self) -> bool {
        matches!(self.factors.as_slice(), [(_, 1)])
    }

    /// Multiplies the factors back together.
    pub fn product(&self) -> Integer {
        self.factors.iter().fold(Integer::one(), |acc, (p, e)| {
            acc * num_traits::pow(p.clone(), *e as usize)
        })
    }

    /// All positive divisors, strictly increasing.
    pub fn divisors(&self) -> Vec<Integer> {
        let mut divs = vec![Integer::one()];
        for (p, e) in &self.factors {
            let existing = divs.len();
            let mut power = Integer::one();
            for _ in 0..*e {
                power *= p;
                for i in 0..existing {
                    divs.push(&divs[i] * &power);
                }
            }
        }
        divs.sort();
        divs
    }
}

/// Factors `n ≥ 1` by trial division.
pub fn factorize(n: &Integer) -> Result<Factorization> {
    require_at_least("n", n, 1)?;
    let factors = match n.to_u64() {
        Some(small) => factorize_u64(small)
            .into_iter()
            .map(|(p, e)| (Integer::from(p), e))
            .collect(),
        None => factorize_big(n),
    };
    Ok(Factorization {
        n: n.clone(),
        factors,
    })
}

fn factorize_u64(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

fn factorize_big(n: &Integer) -> Vec<(Integer, u32)> {
    let mut m = n.clone();
    let mut out = Vec::new();
    let mut p = Integer::from(2);
    let two = Integer::from(2);
    while &p * &p <= m {
        if m.is_multiple_of(&p) {
            let mut e = 0;
            while m.is_multiple_of(&p) {
                m /= &p;
                e += 1;
            }
            out.push((p.clone(), e));
        }
        if p == two {
            p += 1;
        } else {
            p += 2;
        }
    }
    if m > Integer::one() {
        out.push((m, 1));
    }
    out
}

/// Positive divisors of `n ≥ 1`, strictly increasing.
pub fn divisors(n: &Integer) -> Result<Vec<Integer>> {
    Ok(factorize(n)?.divisors())
}

pub fn is_prime(n: &Integer) -> bool {
    n > &Integer::one() && factorize(n).map(|f| f.is_prime()).unwrap_or(false)
}

/// `(floor(√n), floor(√n)² == n)` for `n ≥ 0`.
pub fn integer_sqrt(n: &Integer) -> Result<(Integer, bool)> {
    require_at_least("n", n, 0)?;
    let root = n.sqrt();
    let exact = &root * &root == *n;
    Ok((root, exact))
}

/// The square root of `n` when `n` is a perfect square.
pub fn exact_sqrt(n: &Integer) -> Option<Integer> {
    if n.is_negative() {
        return None;
    }
    match integer_sqrt(n) {
        Ok((root, true)) => Some(root),
        _ => None,
    }
}
