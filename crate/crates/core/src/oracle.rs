//! Brute-force count of regular octahedra in `{0..n}^3`, independent of the
//! catalog construction.
//!
//! A regular octahedron is three mutually orthogonal, equally long diagonals
//! through a common midpoint. For each doubled center `c2` in `[0, 2n]^3`
//! the oracle lists every vertex pair `{P, c2 - P}` inside the grid, groups
//! the doubled semi-axes `P - (c2 - P)` by squared length, and counts
//! pairwise-orthogonal triples in each group. The center of an octahedron is
//! unique, so nothing is counted twice.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::point::{Octahedron, Point};

/// Largest `n` accepted without an explicit override.
pub const FEASIBILITY_BOUND: i64 = 12;

/// One doubled center with all spokes of a single length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterClass {
    pub center2: Point,
    /// Four times the squared circumradius, i.e. `|spoke|^2`.
    pub radius_sq4: i64,
    /// Doubled semi-axes `P - Q`, one per antipodal pair with `P > Q`.
    pub spokes: Vec<Point>,
}

fn center_classes(n: i64, center2: Point) -> Vec<CenterClass> {
    let c = center2.to_array();
    let lo = c.map(|v| (v - n).max(0));
    let hi = c.map(|v| v.min(n));
    let mut by_radius: HashMap<i64, Vec<Point>> = HashMap::new();
    for x in lo[0]..=hi[0] {
        for y in lo[1]..=hi[1] {
            for z in lo[2]..=hi[2] {
                let p = Point::new(x, y, z);
                let q = center2 - p;
                if p > q {
                    let spoke = p - q;
                    by_radius.entry(spoke.norm_sq()).or_default().push(spoke);
                }
            }
        }
    }
    let mut classes: Vec<CenterClass> = by_radius
        .into_iter()
        .filter(|(_, s)| s.len() >= 3)
        .map(|(radius_sq4, spokes)| CenterClass {
            center2,
            radius_sq4,
            spokes,
        })
        .collect();
    classes.sort_by_key(|c| c.radius_sq4);
    classes
}

/// Index triples `i < j < l` of pairwise-orthogonal spokes.
fn orthogonal_triples(spokes: &[Point]) -> Vec<[usize; 3]> {
    let peers: Vec<Vec<usize>> = (0..spokes.len())
        .map(|i| {
            (i + 1..spokes.len())
                .filter(|&j| spokes[i].dot(spokes[j]) == 0)
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    for (i, pi) in peers.iter().enumerate() {
        for (a, &j) in pi.iter().enumerate() {
            for &l in &pi[a + 1..] {
                if spokes[j].dot(spokes[l]) == 0 {
                    out.push([i, j, l]);
                }
            }
        }
    }
    out
}

fn centers(n: i64) -> impl ParallelIterator<Item = Point> {
    let side = 2 * n + 1;
    (0..side * side * side)
        .into_par_iter()
        .map(move |i| Point::new(i / (side * side), (i / side) % side, i % side))
}

fn check_bound(n: i64, allow_large: bool) -> Result<()> {
    if n < 0 {
        return Err(Error::InvalidArgument(format!(
            "grid size must be nonnegative, got {n}"
        )));
    }
    if n > FEASIBILITY_BOUND && !allow_large {
        return Err(Error::OracleBound {
            n,
            bound: FEASIBILITY_BOUND,
        });
    }
    Ok(())
}

/// Number of regular octahedra with all vertices in `{0..n}^3`.
/// Refuses `n` above [`FEASIBILITY_BOUND`].
pub fn brute_force_count(n: i64) -> Result<u64> {
    brute_force_count_with(n, false)
}

/// As [`brute_force_count`], with `allow_large` lifting the size bound.
pub fn brute_force_count_with(n: i64, allow_large: bool) -> Result<u64> {
    check_bound(n, allow_large)?;
    Ok(centers(n)
        .map(|c| {
            center_classes(n, c)
                .iter()
                .map(|cls| orthogonal_triples(&cls.spokes).len() as u64)
                .sum::<u64>()
        })
        .sum())
}

/// Every octahedron the oracle counts, materialized and validated.
pub fn enumerate_octahedra(n: i64) -> Result<Vec<Octahedron>> {
    check_bound(n, false)?;
    let mut out: Vec<Octahedron> = centers(n)
        .map(|c| {
            let mut found = Vec::new();
            for cls in center_classes(n, c) {
                for [i, j, l] in orthogonal_triples(&cls.spokes) {
                    let mut verts = Vec::with_capacity(6);
                    for s in [cls.spokes[i], cls.spokes[j], cls.spokes[l]] {
                        // P = (c2 + s) / 2, Q = (c2 - s) / 2
                        verts.push((c + s).map(|v| v / 2));
                        verts.push((c - s).map(|v| v / 2));
                    }
                    found.push(Octahedron::new(verts));
                }
            }
            found
        })
        .flatten()
        .collect::<Result<_>>()?;
    out.sort_by(|a, b| a.config().cmp(b.config()));
    Ok(out)
}
