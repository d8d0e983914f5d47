//! Brute-force references for cross-checking the solvers.
//!
//! The quartic oracle shares nothing with [`crate::quartic`]: it scans
//! coordinates directly in machine integers and expands symmetries itself.
//! It is complete because for a nonnegative solution `x + y + z` is one of
//! four integer factors of `n`, so every coordinate is at most `n`.
//!
//! The quadratic oracle scans a `(y, z)` box and takes `x` from the
//! quadratic formula, so it is complete in `x`.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::quadratic::{enumerate_integer, roots_for};
use crate::quartic::enumerate_all;
use crate::{require_at_least, Error, Integer, Result, Triple};

fn quartic_i128(x: i128, y: i128, z: i128) -> i128 {
    let (x2, y2, z2) = (x * x, y * y, z * z);
    x2 * x2 + y2 * y2 + z2 * z2 - 2 * x2 * y2 - 2 * y2 * z2 - 2 * z2 * x2
}

fn symmetric_closure(x: i128, y: i128, z: i128, out: &mut BTreeSet<(i128, i128, i128)>) {
    let v = [x, y, z];
    for i in 0..3 {
        for j in 0..3 {
            if j == i {
                continue;
            }
            let k = 3 - i - j;
            for s in 0..8 {
                let sgn = |b: usize, c: i128| if s & (1 << b) != 0 { -c } else { c };
                out.insert((sgn(0, v[i]), sgn(1, v[j]), sgn(2, v[k])));
            }
        }
    }
}

/// Every integer solution of the quartic, by exhaustive scan of
/// `0 ≤ z ≤ y ≤ x ≤ n` followed by symmetric expansion.
///
/// Rejects `n > 2⁴⁰`, far beyond what a cubic scan could finish anyway.
pub fn brute_quartic(n: &Integer) -> Result<BTreeSet<Triple<Integer>>> {
    require_at_least("n", n, 1)?;
    let target = n.to_i128().filter(|v| *v <= 1 << 40).ok_or_else(|| {
        Error::Precondition(format!("n = {n} is too large for a brute-force scan"))
    })?;
    let mut found = BTreeSet::new();
    for x in 0..=target {
        for y in 0..=x {
            for z in 0..=y {
                let v = quartic_i128(x, y, z);
                if v == target {
                    symmetric_closure(x, y, z, &mut found);
                }
                // For z ≤ y ≤ x the value is non-increasing in z.
                if v < target {
                    break;
                }
            }
        }
    }
    Ok(found
        .into_iter()
        .map(|(x, y, z)| Triple::new(x.into(), y.into(), z.into()))
        .collect())
}

/// Every integer solution of the quadratic equation with `|y|, |z| ≤ bound`.
pub fn brute_quad(n: &Integer, bound: &Integer) -> Result<BTreeSet<Triple<Integer>>> {
    require_at_least("bound", bound, 0)?;
    let mut out = BTreeSet::new();
    let mut y = -bound.clone();
    while &y <= bound {
        let mut z = -bound.clone();
        while &z <= bound {
            for x in roots_for(&y, &z, n)? {
                out.insert(Triple::new(x, y.clone(), z.clone()));
            }
            z += 1;
        }
        y += 1;
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Quartic,
    Quadratic,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quartic" => Ok(Mode::Quartic),
            "quadratic" => Ok(Mode::Quadratic),
            other => Err(Error::Precondition(format!("unknown mode {other:?}"))),
        }
    }
}

/// A disagreement between solver and oracle at one `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub n: u64,
    pub solver_only: Vec<Triple<Integer>>,
    pub oracle_only: Vec<Triple<Integer>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub n_range: RangeInclusive<u64>,
    pub mode: Mode,
    pub bound: Option<u64>,
    /// Number of `n` that had at least one solution.
    pub nonempty: usize,
    /// Ordered by `n`.
    pub mismatches: Vec<Mismatch>,
    pub elapsed: Duration,
}

impl EquivalenceReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn compare_one(n: u64, mode: Mode, bound: Option<u64>) -> Result<(Option<Mismatch>, bool)> {
    let big = Integer::from(n);
    let (solver, oracle) = match mode {
        Mode::Quartic => (enumerate_all(&big)?, brute_quartic(&big)?),
        Mode::Quadratic => {
            let b =
                Integer::from(bound.ok_or_else(|| {
                    Error::Precondition("quadratic mode needs a box bound".into())
                })?);
            (enumerate_integer(&big, &b)?, brute_quad(&big, &b)?)
        }
    };
    let nonempty = !oracle.is_empty();
    if solver == oracle {
        return Ok((None, nonempty));
    }
    Ok((
        Some(Mismatch {
            n,
            solver_only: solver.difference(&oracle).cloned().collect(),
            oracle_only: oracle.difference(&solver).cloned().collect(),
        }),
        nonempty,
    ))
}

/// Compares solver and oracle solution sets for every `n` in `range`.
///
/// With `parallel` the per-`n` checks run on the rayon pool; the report is
/// identical to the sequential one apart from `elapsed`.
pub fn check_equivalence(
    range: RangeInclusive<u64>,
    mode: Mode,
    bound: Option<u64>,
    parallel: bool,
) -> Result<EquivalenceReport> {
    if *range.start() < 1 || range.start() > range.end() {
        return Err(Error::Precondition(format!(
            "invalid range {}..={}",
            range.start(),
            range.end()
        )));
    }
    if mode == Mode::Quadratic && bound.is_none() {
        return Err(Error::Precondition(
            "quadratic mode needs a box bound".into(),
        ));
    }
    let start = Instant::now();
    let ns: Vec<u64> = range.clone().collect();
    let results: Vec<(Option<Mismatch>, bool)> = if parallel {
        ns.par_iter()
            .map(|&n| compare_one(n, mode, bound))
            .collect::<Result<_>>()?
    } else {
        ns.iter()
            .map(|&n| compare_one(n, mode, bound))
            .collect::<Result<_>>()?
    };
    let nonempty = results.iter().filter(|(_, ne)| *ne).count();
    let mismatches = results.into_iter().filter_map(|(m, _)| m).collect();
    Ok(EquivalenceReport {
        n_range: range,
        mode,
        bound,
        nonempty,
        mismatches,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quartic::{canonical, expand_orbit};

    fn big(n: i64) -> Integer {
        Integer::from(n)
    }

    fn t(x: i64, y: i64, z: i64) -> Triple<Integer> {
        Triple::from_i64(x, y, z)
    }

    #[test]
    fn brute_quartic_examples() {
        assert_eq!(brute_quartic(&big(9)).unwrap().len(), 24);
        assert!(brute_quartic(&big(24)).unwrap().is_empty());
        let one = brute_quartic(&big(1)).unwrap();
        assert_eq!(one.len(), 6);
        assert!(one.contains(&t(0, -1, 0)));
    }

    #[test]
    fn brute_quartic_matches_unpruned_scan() {
        for n in 1i128..=60 {
            let mut raw = BTreeSet::new();
            for x in -n..=n {
                for y in -n..=n {
                    for z in -n..=n {
                        if quartic_i128(x, y, z) == n {
                            raw.insert(Triple::new(
                                Integer::from(x),
                                Integer::from(y),
                                Integer::from(z),
                            ));
                        }
                    }
                }
            }
            assert_eq!(brute_quartic(&Integer::from(n)).unwrap(), raw, "n = {n}");
        }
    }

    #[test]
    fn orbit_expansion_reproduces_raw_scan() {
        for n in 1..=120 {
            let raw = brute_quartic(&big(n)).unwrap();
            let canon: BTreeSet<_> = raw.iter().map(canonical).collect();
            let expanded: BTreeSet<_> = canon.iter().flat_map(expand_orbit).collect();
            assert_eq!(expanded, raw, "n = {n}");
        }
    }

    #[test]
    fn brute_quad_examples() {
        let five = brute_quad(&big(5), &big(10)).unwrap();
        let expect: BTreeSet<_> = [1, -1]
            .into_iter()
            .flat_map(|y| {
                [1, -1]
                    .into_iter()
                    .flat_map(move |z| [t(5, y, z), t(-1, y, z)])
            })
            .collect();
        assert_eq!(five, expect);
        assert!(brute_quad(&big(6), &big(10)).unwrap().is_empty());
        let nine = brute_quad(&big(9), &big(3)).unwrap();
        for s in [
            (10, 1, 2),
            (10, -1, 2),
            (0, 1, -2),
            (3, 0, 0),
            (-3, 0, 0),
            (12, 3, 0),
            (-2, -1, 0),
            (4, 0, 1),
        ] {
            assert!(nine.contains(&t(s.0, s.1, s.2)), "{s:?}");
        }
    }

    #[test]
    fn equivalence_examples() {
        let r = check_equivalence(1..=50, Mode::Quartic, None, false).unwrap();
        assert!(r.is_clean(), "{:?}", r.mismatches);
        let r = check_equivalence(1..=50, Mode::Quadratic, Some(8), true).unwrap();
        assert!(r.is_clean(), "{:?}", r.mismatches);
        let r = check_equivalence(24..=24, Mode::Quartic, None, false).unwrap();
        assert!(r.is_clean());
        assert_eq!(r.nonempty, 0);
    }

    #[test]
    fn equivalence_rejects_bad_input() {
        assert!(check_equivalence(0..=5, Mode::Quartic, None, false).is_err());
        #[allow(clippy::reversed_empty_ranges)]
        let backwards = 5..=1;
        assert!(check_equivalence(backwards, Mode::Quartic, None, false).is_err());
        assert!(check_equivalence(1..=5, Mode::Quadratic, None, false).is_err());
    }

    #[test]
    fn parallel_matches_sequential() {
        let a = check_equivalence(1..=80, Mode::Quartic, None, false).unwrap();
        let b = check_equivalence(1..=80, Mode::Quartic, None, true).unwrap();
        assert_eq!((a.nonempty, &a.mismatches), (b.nonempty, &b.mismatches));
    }
}
