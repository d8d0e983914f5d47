//! The quadratic-in-`x` equation `x² + y⁴ + z⁴ − 2xy² − 2xz² − 2y²z² = n`.
//!
//! Solving for `x` gives `x = y² + z² ± T` with `T² = (2yz)² + n`, so for
//! fixed `(y, z)` there are at most two integer roots. The integer solutions
//! split into:
//!
//! * `yz = 0`: possible only when `n = k²`, giving the lines
//!   `(t² ± k, t, 0)`, `(t² ± k, 0, t)` for every integer `t`;
//! * `yz ≠ 0`: from factor pairs `n = d1·d2` with `d1 > d2` and
//!   `d1 ≡ d2 (mod 4)`. With `e = (d1 − d2)/4`, `f = (d1 + d2)/2` and `ρ | e`
//!   the solutions are `x = ρ² + (e/ρ)² ± f`, `y = ±ρ`, `z = ±e/ρ`.
//!
//! The equation is not symmetric under `x → −x`, so there is no outer sign
//! on `x` in the second family: for `n = 5` the roots are `x ∈ {5, −1}` and
//! neither `−5` nor `1` is a solution.
//!
//! A factor pair with `d1 ≡ d2 (mod 4)` need not exist even when
//! `n ≡ 0 (mod 4)`; `n = 8` and `n = 24` have none, which [`families`]
//! checks pair by pair.

use std::collections::BTreeSet;

use num_integer::Integer as _;
use num_traits::{Num, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{divisors, exact_sqrt};
use crate::{require_at_least, Error, Integer, Rational, Result, Triple};

/// Left-hand side of the equation.
pub fn eval_quad<T: Clone + Num>(t: &Triple<T>) -> T {
    let sq = |v: &T| v.clone() * v.clone();
    let (x, y2, z2) = (t.x.clone(), sq(&t.y), sq(&t.z));
    let two = T::one() + T::one();
    sq(&x) + sq(&y2) + sq(&z2)
        - two.clone() * x.clone() * y2.clone()
        - two.clone() * x * z2.clone()
        - two * y2 * z2
}

/// Integer `x` with `eval_quad(x, y, z) = n`.
pub fn roots_for(y: &Integer, z: &Integer, n: &Integer) -> Result<BTreeSet<Integer>> {
    require_at_least("n", n, 1)?;
    let two_yz = y * z * 2;
    let disc = &two_yz * &two_yz + n;
    let Some(root) = exact_sqrt(&disc) else {
        return Ok(BTreeSet::new());
    };
    let centre = y * y + z * z;
    Ok([&centre + &root, &centre - &root].into_iter().collect())
}

/// Set when `n ≡ 2` or `3 (mod 4)`, where no integer solution exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mod4Obstruction {
    pub residue: u8,
}

pub fn mod4_filter(n: &Integer) -> Result<Option<Mod4Obstruction>> {
    require_at_least("n", n, 1)?;
    let r = n.mod_floor(&Integer::from(4));
    Ok(if r == Integer::from(2) {
        Some(Mod4Obstruction { residue: 2 })
    } else if r == Integer::from(3) {
        Some(Mod4Obstruction { residue: 3 })
    } else {
        None
    })
}

/// A symbolic description of (possibly infinitely many) integer solutions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum FamilyDescriptor {
    /// `x = t² ± k`, `y = t`, `z = 0` for every integer `t`. On the minus
    /// branch the listed `t` are excluded (they give `x = 0`, which is
    /// reported under [`FamilyDescriptor::Isolated`]).
    YZero {
        #[serde(with = "crate::exact")]
        k: Integer,
        #[serde(with = "crate::exact::vec")]
        excluded: Vec<Integer>,
    },
    /// `x = t² ± k`, `y = 0`, `z = t`, with the same exclusions as `YZero`.
    ZZero {
        #[serde(with = "crate::exact")]
        k: Integer,
        #[serde(with = "crate::exact::vec")]
        excluded: Vec<Integer>,
    },
    /// `x = ρ² + (e/ρ)² ± f`, `y = ±ρ`, `z = ±e/ρ` for each `ρ | e`.
    Rho {
        #[serde(with = "crate::exact")]
        d1: Integer,
        #[serde(with = "crate::exact")]
        d2: Integer,
        #[serde(with = "crate::exact")]
        e: Integer,
        #[serde(with = "crate::exact")]
        f: Integer,
    },
    /// Points outside the line families: `(0, ±m, 0)` and `(0, 0, ±m)`
    /// when `k = m²`.
    Isolated { points: Vec<Triple<Integer>> },
}

impl FamilyDescriptor {
    /// Members with `|y| ≤ bound` and `|z| ≤ bound`.
    pub fn instances(&self, bound: &Integer) -> BTreeSet<Triple<Integer>> {
        let zero = Integer::zero();
        let mut out = BTreeSet::new();
        match self {
            FamilyDescriptor::YZero { k, excluded } | FamilyDescriptor::ZZero { k, excluded } => {
                let on_y = matches!(self, FamilyDescriptor::YZero { .. });
                let mut t = -bound.clone();
                while &t <= bound {
                    let sq = &t * &t;
                    let mut xs = vec![&sq + k];
                    if !excluded.contains(&t) {
                        xs.push(&sq - k);
                    }
                    for x in xs {
                        out.insert(if on_y {
                            Triple::new(x, t.clone(), zero.clone())
                        } else {
                            Triple::new(x, zero.clone(), t.clone())
                        });
                    }
                    t += 1;
                }
            }
            FamilyDescriptor::Rho { e, f, .. } => {
                for rho in divisors(e).unwrap_or_default() {
                    let other = e / &rho;
                    if &rho > bound || &other > bound {
                        continue;
                    }
                    let base = &rho * &rho + &other * &other;
                    for x in [&base + f, &base - f] {
                        for y in [rho.clone(), -rho.clone()] {
                            for z in [other.clone(), -other.clone()] {
                                out.insert(Triple::new(x.clone(), y.clone(), z));
                            }
                        }
                    }
                }
            }
            FamilyDescriptor::Isolated { points } => {
                out.extend(
                    points
                        .iter()
                        .filter(|p| p.y.abs() <= *bound && p.z.abs() <= *bound)
                        .cloned(),
                );
            }
        }
        out
    }
}

/// Symbolic description of every integer solution.
///
/// Order: `YZero`, `ZZero` (when `n` is a square), `Isolated` (when `n` is a
/// fourth power), then `Rho` families by increasing `(d1, d2)`.
pub fn families(n: &Integer) -> Result<Vec<FamilyDescriptor>> {
    if mod4_filter(n)?.is_some() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    if let Some(k) = exact_sqrt(n) {
        let m = exact_sqrt(&k);
        let excluded = m
            .iter()
            .flat_map(|m| [-m.clone(), m.clone()])
            .collect::<Vec<_>>();
        out.push(FamilyDescriptor::YZero {
            k: k.clone(),
            excluded: excluded.clone(),
        });
        out.push(FamilyDescriptor::ZZero {
            k: k.clone(),
            excluded,
        });
        if let Some(m) = m {
            let zero = Integer::zero();
            let mut points = Vec::new();
            for s in [-m.clone(), m] {
                points.push(Triple::new(zero.clone(), s.clone(), zero.clone()));
                points.push(Triple::new(zero.clone(), zero.clone(), s));
            }
            points.sort();
            out.push(FamilyDescriptor::Isolated { points });
        }
    }

    let mut rho = Vec::new();
    for d2 in divisors(n)? {
        let d1 = n / &d2;
        if d1 <= d2 || !(&d1 - &d2).is_multiple_of(&Integer::from(4)) {
            continue;
        }
        rho.push(FamilyDescriptor::Rho {
            e: (&d1 - &d2) / 4,
            f: (&d1 + &d2) / 2,
            d1,
            d2,
        });
    }
    rho.sort_by(|a, b| match (a, b) {
        (FamilyDescriptor::Rho { d1, d2, .. }, FamilyDescriptor::Rho { d1: e1, d2: e2, .. }) => {
            (d1, d2).cmp(&(e1, e2))
        }
        _ => std::cmp::Ordering::Equal,
    });
    out.extend(rho);
    Ok(out)
}

/// All integer solutions with `|y|, |z| ≤ bound` (`x` is unbounded).
pub fn enumerate_integer(n: &Integer, bound: &Integer) -> Result<BTreeSet<Triple<Integer>>> {
    require_at_least("bound", bound, 0)?;
    Ok(families(n)?
        .iter()
        .flat_map(|f| f.instances(bound))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn apply(self, v: Rational) -> Rational {
        match self {
            Sign::Plus => v,
            Sign::Minus => -v,
        }
    }
}

impl std::str::FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" | "+" => Ok(Sign::Plus),
            "minus" | "-" => Ok(Sign::Minus),
            other => Err(Error::Precondition(format!(
                "sign must be plus or minus, got {other:?}"
            ))),
        }
    }
}

/// Parameters of a rational point with `yz ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalPointParams {
    #[serde(with = "crate::exact")]
    pub n1: Integer,
    #[serde(with = "crate::exact")]
    pub n2: Integer,
    #[serde(with = "crate::exact")]
    pub t1: Integer,
    #[serde(with = "crate::exact")]
    pub t2: Integer,
    #[serde(with = "crate::exact")]
    pub r: Rational,
    pub sign: Sign,
}

/// With `s = n1·t1/t2 − n2·t2/t1` and `p = n1·t1/t2 + n2·t2/t1`:
///
/// ```text
/// x = r² + s²/(16r²) ± p/2,   y = r,   z = |s|/(4r)
/// ```
///
/// Since `p² − s² = 4n`, `(2yz)² + n = (p/2)²` and `x` is a root.
pub fn rational_point(n: &Integer, params: &RationalPointParams) -> Result<Triple<Rational>> {
    require_at_least("n", n, 1)?;
    let RationalPointParams {
        n1,
        n2,
        t1,
        t2,
        r,
        sign,
    } = params;
    for (name, v) in [("n1", n1), ("n2", n2), ("t1", t1), ("t2", t2)] {
        require_at_least(name, v, 1)?;
    }
    if &(n1 * n2) != n {
        return Err(Error::Precondition(format!(
            "n1·n2 = {} differs from n = {n}",
            n1 * n2
        )));
    }
    if !t1.gcd(t2).is_one() {
        return Err(Error::Precondition(format!(
            "t1={t1} and t2={t2} are not coprime"
        )));
    }
    if n1 * t1 * t1 == n2 * t2 * t2 {
        return Err(Error::Precondition("n1·t1² = n2·t2² forces z = 0".into()));
    }
    if !r.is_positive() {
        return Err(Error::Precondition(format!("r must be positive, got {r}")));
    }
    let a = Rational::new(n1 * t1, t2.clone());
    let b = Rational::new(n2 * t2, t1.clone());
    let s = &a - &b;
    let p = &a + &b;
    let sixteen = Rational::from_integer(16.into());
    let x = r * r + &s * &s / (sixteen * r * r) + sign.apply(p / Rational::from_integer(2.into()));
    let z = s.abs() / (Rational::from_integer(4.into()) * r);
    Ok(Triple::new(x, r.clone(), z))
}

/// Rational solutions with `yz = 0` for a given `r > 0`.
///
/// Empty unless `n = k²`; otherwise `(±k, 0, 0)` and, for each requested
/// sign, `(r² ± k, ±r, 0)` and `(r² ± k, 0, ±r)`.
pub fn rational_yz_zero(
    n: &Integer,
    r: &Rational,
    signs: &[Sign],
) -> Result<BTreeSet<Triple<Rational>>> {
    require_at_least("n", n, 1)?;
    if !r.is_positive() {
        return Err(Error::Precondition(format!("r must be positive, got {r}")));
    }
    let Some(k) = exact_sqrt(n) else {
        return Ok(BTreeSet::new());
    };
    let k = Rational::from_integer(k);
    let zero = Rational::zero();
    let mut out = BTreeSet::new();
    out.insert(Triple::new(k.clone(), zero.clone(), zero.clone()));
    out.insert(Triple::new(-k.clone(), zero.clone(), zero.clone()));
    for &sign in signs {
        let x = r * r + sign.apply(k.clone());
        for t in [r.clone(), -r.clone()] {
            out.insert(Triple::new(x.clone(), t.clone(), zero.clone()));
            out.insert(Triple::new(x.clone(), zero.clone(), t));
        }
    }
    Ok(out)
}
