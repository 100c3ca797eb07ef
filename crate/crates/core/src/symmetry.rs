//! Orbits under the 48 symmetries of a box and the two placement-counting
//! formulas.
//!
//! A symmetry is a coordinate permutation followed by any subset of the
//! reflections `x -> bound - x`. With all three bounds equal to the cube
//! size this is the full octahedral group acting on `C_m`; with per-axis
//! bounds it gives the box images used for `omega`.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::point::{BoundingBox, Point, PointConfig};

const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// One of the 48 sign/permutation maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CubeSymmetry {
    /// Output axis `i` reads input axis `perm[i]`.
    pub perm: [usize; 3],
    /// Output axis `i` is reflected.
    pub flip: [bool; 3],
}

impl CubeSymmetry {
    pub fn all() -> impl Iterator<Item = CubeSymmetry> {
        PERMUTATIONS.into_iter().flat_map(|perm| {
            (0..8u8).map(move |bits| CubeSymmetry {
                perm,
                flip: [bits & 1 != 0, bits & 2 != 0, bits & 4 != 0],
            })
        })
    }

    pub fn is_identity(&self) -> bool {
        self.perm == [0, 1, 2] && self.flip == [false; 3]
    }

    /// Image of `p`, reflecting axis `i` as `x -> bounds[i] - x`.
    pub fn apply_point(&self, p: Point, bounds: [i64; 3]) -> Point {
        let c = p.to_array();
        let mut out = [0; 3];
        for i in 0..3 {
            let v = c[self.perm[i]];
            out[i] = if self.flip[i] { bounds[i] - v } else { v };
        }
        Point::from_array(out)
    }

    /// Pure linear part (reflections through the origin).
    pub fn apply_linear(&self, p: Point) -> Point {
        let c = p.to_array();
        let mut out = [0; 3];
        for i in 0..3 {
            let v = c[self.perm[i]];
            out[i] = if self.flip[i] { -v } else { v };
        }
        Point::from_array(out)
    }

    pub fn apply(&self, t: &PointConfig, bounds: [i64; 3]) -> PointConfig {
        PointConfig::from_distinct(
            t.points()
                .iter()
                .map(|&p| self.apply_point(p, bounds))
                .collect(),
        )
    }

    /// Permuted extents: the box the image lands in when `bounds = dims`.
    fn permute_dims(&self, dims: [i64; 3]) -> [i64; 3] {
        [dims[self.perm[0]], dims[self.perm[1]], dims[self.perm[2]]]
    }
}

fn cube_size(t: &PointConfig) -> i64 {
    t.max_corner().to_array().into_iter().max().unwrap()
}

/// Images of `t` under all 48 symmetries of its minimal cube `[0, m]^3`,
/// where `m` is the largest coordinate of `t`.
pub fn full_orbit(t: &PointConfig) -> BTreeSet<PointConfig> {
    let m = cube_size(t);
    CubeSymmetry::all().map(|s| s.apply(t, [m; 3])).collect()
}

/// The 48 images of `t` each translated back to the positive octant; two
/// configurations are congruent under symmetries and translations exactly
/// when these sets coincide.
pub fn orbit_class(t: &PointConfig) -> BTreeSet<PointConfig> {
    let t = t.normalized();
    CubeSymmetry::all()
        .map(|s| s.apply(&t, [0; 3]).normalized())
        .collect()
}

pub fn same_orbit(a: &PointConfig, b: &PointConfig) -> bool {
    a.len() == b.len() && orbit_class(a).contains(&b.normalized())
}

/// Distinct images of the normalized `t` under permutation-then-reflection
/// maps that stay inside the box of `t`. Returns `(omega, images)`.
pub fn box_orbit(t: &PointConfig) -> (usize, BTreeSet<PointConfig>) {
    let t = t.normalized();
    let dims = t.bounding_box().dims;
    let reps: BTreeSet<PointConfig> = CubeSymmetry::all()
        .map(|s| s.apply(&t, s.permute_dims(dims)))
        .filter(|img| img.fits_in(dims))
        .collect();
    (reps.len(), reps)
}

/// 1, 3 or 6 according to whether the box has 1, 2 or 3 distinct dimensions.
pub fn multiplicity(b: &BoundingBox) -> u64 {
    match b.distinct_deficit_count() {
        1 => 1,
        2 => 3,
        _ => 6,
    }
}

/// Placements of `t` (all symmetries and translations) in `{0..grid}^3`
/// as `omega * prod(grid - dim_i + 1) * multiplicity`.
pub fn count_in_cube_new(t: &PointConfig, grid: i64) -> u64 {
    let (omega, _) = box_orbit(t);
    CountProfile::new(t.bounding_box(), omega as u64).count(grid)
}

/// The data [`count_in_cube_new`] needs, precomputed once per object.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CountProfile {
    pub dims: [i64; 3],
    pub omega: u64,
    pub multiplicity: u64,
}

impl CountProfile {
    pub fn new(bbox: BoundingBox, omega: u64) -> Self {
        CountProfile {
            dims: bbox.dims,
            omega,
            multiplicity: multiplicity(&bbox),
        }
    }

    pub fn of(t: &PointConfig) -> Self {
        Self::new(t.bounding_box(), box_orbit(t).0 as u64)
    }

    pub fn max_dim(&self) -> i64 {
        self.dims.into_iter().max().unwrap()
    }

    pub fn count(&self, grid: i64) -> u64 {
        if self.dims.iter().any(|&d| d > grid) {
            return 0;
        }
        let slots: u64 = self.dims.iter().map(|&d| (grid - d + 1) as u64).product();
        self.omega * slots * self.multiplicity
    }
}

/// The coefficients of the translation-based counting formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitStats {
    pub alpha0: u64,
    pub alpha: u64,
    pub beta: u64,
    pub gamma: u64,
    pub omega: u64,
    pub multiplicity: u64,
}

/// `(alpha0, alpha, beta, gamma)` by explicit enumeration inside `C_m`.
///
/// `alpha` counts the distinct translates of orbit members inside `C_m`,
/// `beta` those with `z <= m - 1`, `gamma` those with `y, z <= m - 1`.
pub fn translation_stats(t: &PointConfig) -> (u64, u64, u64, u64) {
    let t = t.normalized();
    let m = cube_size(&t);
    let orbit = full_orbit(&t);
    let mut placed: HashSet<PointConfig> = HashSet::new();
    for member in &orbit {
        let lo = member.min_corner();
        let hi = member.max_corner();
        for dx in -lo.x..=m - hi.x {
            for dy in -lo.y..=m - hi.y {
                for dz in -lo.z..=m - hi.z {
                    placed.insert(member.translate(Point::new(dx, dy, dz)));
                }
            }
        }
    }
    let beta = placed.iter().filter(|c| c.fits_in([m, m, m - 1])).count();
    let gamma = placed
        .iter()
        .filter(|c| c.fits_in([m, m - 1, m - 1]))
        .count();
    (
        orbit.len() as u64,
        placed.len() as u64,
        beta as u64,
        gamma as u64,
    )
}

pub fn orbit_stats(t: &PointConfig) -> OrbitStats {
    let (alpha0, alpha, beta, gamma) = translation_stats(t);
    let profile = CountProfile::of(t);
    OrbitStats {
        alpha0,
        alpha,
        beta,
        gamma,
        omega: profile.omega,
        multiplicity: profile.multiplicity,
    }
}

/// `(g-m+1)^3 alpha - 3(g-m)(g-m+1)^2 beta + 3(g-m+1)(g-m)^2 gamma`.
pub fn count_in_cube_old(t: &PointConfig, grid: i64) -> u64 {
    let m = t.bounding_box().max_dim();
    if grid < m {
        return 0;
    }
    let (_, alpha, beta, gamma) = translation_stats(t);
    old_formula(grid - m, alpha, beta, gamma)
}

pub(crate) fn old_formula(slack: i64, alpha: u64, beta: u64, gamma: u64) -> u64 {
    let (s, s1) = (slack as i128, slack as i128 + 1);
    let v =
        s1.pow(3) * alpha as i128 - 3 * s * s1 * s1 * beta as i128 + 3 * s1 * s * s * gamma as i128;
    u64::try_from(v).expect("placement count is nonnegative")
}
