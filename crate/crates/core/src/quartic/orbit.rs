use std::collections::BTreeSet;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::{Integer, Triple};

/// Nonnegative coordinates sorted descending.
pub fn canonical<T: Clone + Ord + Signed>(t: &Triple<T>) -> Triple<T> {
    let mut v = [t.x.abs(), t.y.abs(), t.z.abs()];
    v.sort_by(|a, b| b.cmp(a));
    let [x, y, z] = v;
    Triple::new(x, y, z)
}

const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// Every triple reachable by permuting coordinates and flipping signs.
///
/// Up to 48 members; fewer when coordinates coincide or vanish.
pub fn expand_orbit<T: Clone + Ord + Signed>(t: &Triple<T>) -> BTreeSet<Triple<T>> {
    let abs = [t.x.abs(), t.y.abs(), t.z.abs()];
    let mut out = BTreeSet::new();
    for p in PERMUTATIONS {
        for signs in 0u8..8 {
            let coord = |i: usize| {
                let v = abs[p[i]].clone();
                if signs & (1 << i) != 0 {
                    -v
                } else {
                    v
                }
            };
            out.insert(Triple::new(coord(0), coord(1), coord(2)));
        }
    }
    out
}

/// Orbit size predicted from the shape of a triple alone:
///
/// * three distinct nonzero magnitudes: 48
/// * two equal nonzero, one different nonzero: 24
/// * one zero, two distinct nonzero: 24
/// * one zero, two equal nonzero: 12
/// * all three equal and nonzero: 8
/// * two zeros: 6
/// * all zero: 1
pub fn orbit_size<T: Clone + Ord + Signed>(t: &Triple<T>) -> usize {
    let c = canonical(t);
    let zeros = c.as_array().iter().filter(|v| v.is_zero()).count();
    match zeros {
        3 => 1,
        2 => 6,
        1 if c.x == c.y => 12,
        1 => 24,
        _ if c.x == c.y && c.y == c.z => 8,
        _ if c.x == c.y || c.y == c.z => 24,
        _ => 48,
    }
}

/// One symmetry class of integer solutions, named by its canonical member.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SolutionOrbit {
    pub canonical: Triple<Integer>,
    pub size: usize,
}

impl SolutionOrbit {
    pub fn of(t: &Triple<Integer>) -> Self {
        Self::from_canonical(canonical(t))
    }

    pub(crate) fn from_canonical(canonical: Triple<Integer>) -> Self {
        let size = orbit_size(&canonical);
        Self { canonical, size }
    }

    pub fn members(&self) -> BTreeSet<Triple<Integer>> {
        expand_orbit(&self.canonical)
    }
}
