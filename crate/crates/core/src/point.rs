//! Exact integer points, canonical point sets, bounding boxes, and the
//! validated [`Octahedron`] type.
//!
//! Coordinates are `i64`. Every value produced by the pipeline for grids up
//! to 10^4 (and the side-2011 construction) stays far inside that range;
//! overflow panics because the workspace enables overflow checks in every
//! profile.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::{Deserialize, Deserializer};
use serde::ser::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::quadratic::isqrt_exact;

/// An integer 3-vector: a grid vertex or a difference of two vertices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl Point {
    pub const ZERO: Point = Point { x: 0, y: 0, z: 0 };

    pub const fn new(x: i64, y: i64, z: i64) -> Self {
        Point { x, y, z }
    }

    pub const fn from_array(c: [i64; 3]) -> Self {
        Point::new(c[0], c[1], c[2])
    }

    pub const fn to_array(self) -> [i64; 3] {
        [self.x, self.y, self.z]
    }

    #[inline]
    pub fn coord(self, axis: usize) -> i64 {
        match axis {
            0 => self.x,
            1 => self.y,
            2 => self.z,
            _ => panic!("axis {axis} out of range"),
        }
    }

    #[inline]
    pub fn dot(self, other: Point) -> i64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    #[inline]
    pub fn norm_sq(self) -> i64 {
        self.dot(self)
    }

    /// Componentwise difference `self - other`.
    #[inline]
    pub fn subtract(self, other: Point) -> Point {
        self - other
    }

    #[inline]
    pub fn squared_distance(self, other: Point) -> i64 {
        (self - other).norm_sq()
    }

    pub fn map(self, f: impl Fn(i64) -> i64) -> Point {
        Point::new(f(self.x), f(self.y), f(self.z))
    }

    /// Greatest common divisor of the three components (0 for the zero vector).
    pub fn content(self) -> i64 {
        crate::quadratic::gcd(crate::quadratic::gcd(self.x, self.y), self.z)
    }

    pub fn is_even(self) -> bool {
        self.x % 2 == 0 && self.y % 2 == 0 && self.z % 2 == 0
    }

    fn halve(self) -> Point {
        debug_assert!(self.is_even());
        Point::new(self.x / 2, self.y / 2, self.z / 2)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.x, self.y, self.z)
    }
}

impl Add for Point {
    type Output = Point;
    #[inline]
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Point {
    type Output = Point;
    #[inline]
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Point {
    type Output = Point;
    #[inline]
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<i64> for Point {
    type Output = Point;
    #[inline]
    fn mul(self, k: i64) -> Point {
        Point::new(self.x * k, self.y * k, self.z * k)
    }
}

impl From<[i64; 3]> for Point {
    fn from(c: [i64; 3]) -> Self {
        Point::from_array(c)
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_array().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        <[i64; 3]>::deserialize(d).map(Point::from_array)
    }
}

/// A finite set of lattice points kept in lexicographic order, so two
/// configurations are equal exactly when their point lists are equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointConfig {
    points: Vec<Point>,
}

impl PointConfig {
    /// Sorts the points; rejects empty input and duplicates.
    pub fn new(mut points: Vec<Point>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyConfig);
        }
        points.sort_unstable();
        if let Some(w) = points.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicatePoint(w[0]));
        }
        Ok(PointConfig { points })
    }

    /// Builds from points that are already distinct; only re-sorts.
    pub(crate) fn from_distinct(mut points: Vec<Point>) -> Self {
        points.sort_unstable();
        debug_assert!(points.windows(2).all(|w| w[0] != w[1]));
        PointConfig { points }
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn min_corner(&self) -> Point {
        self.fold_axes(i64::min)
    }

    pub fn max_corner(&self) -> Point {
        self.fold_axes(i64::max)
    }

    fn fold_axes(&self, f: fn(i64, i64) -> i64) -> Point {
        let first = self.points[0];
        self.points[1..].iter().fold(first, |acc, p| {
            Point::new(f(acc.x, p.x), f(acc.y, p.y), f(acc.z, p.z))
        })
    }

    pub fn translate(&self, by: Point) -> PointConfig {
        // translation preserves lexicographic order
        PointConfig {
            points: self.points.iter().map(|&p| p + by).collect(),
        }
    }

    pub fn scale(&self, factor: i64) -> PointConfig {
        assert!(factor >= 1, "scale factor must be positive");
        PointConfig {
            points: self.points.iter().map(|&p| p * factor).collect(),
        }
    }

    /// Translates so that the minimum coordinate on every axis is 0.
    pub fn normalized(&self) -> PointConfig {
        self.translate(-self.min_corner())
    }

    pub fn is_normalized(&self) -> bool {
        self.min_corner() == Point::ZERO
    }

    pub fn bounding_box(&self) -> BoundingBox {
        BoundingBox::from_dims((self.max_corner() - self.min_corner()).to_array())
    }

    /// Whether every point lies in `[0, hi.x] x [0, hi.y] x [0, hi.z]`.
    pub fn fits_in(&self, hi: [i64; 3]) -> bool {
        self.points.iter().all(|p| {
            (0..3).all(|a| {
                let c = p.coord(a);
                0 <= c && c <= hi[a]
            })
        })
    }
}

impl Serialize for PointConfig {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.points.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PointConfig {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let points = Vec::<Point>::deserialize(d)?;
        PointConfig::new(points).map_err(serde::de::Error::custom)
    }
}

/// Extents of the smallest axis-aligned box around a configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BoundingBox {
    pub dims: [i64; 3],
    /// `max(dims) - dims[i]` per axis.
    pub deficits: [i64; 3],
}

impl BoundingBox {
    pub fn from_dims(dims: [i64; 3]) -> Self {
        let m = dims.iter().copied().max().unwrap_or(0);
        BoundingBox {
            dims,
            deficits: dims.map(|d| m - d),
        }
    }

    pub fn max_dim(&self) -> i64 {
        self.dims.iter().copied().max().unwrap_or(0)
    }

    pub fn is_cube(&self) -> bool {
        self.distinct_deficit_count() == 1
    }

    pub fn distinct_deficit_count(&self) -> usize {
        let [a, b, c] = self.dims;
        if a == b && b == c {
            1
        } else if a == b || b == c || a == c {
            2
        } else {
            3
        }
    }
}

/// A regular octahedron with integer vertices, checked on construction.
///
/// The checks are: twelve vertex pairs at the minimal squared distance and
/// three antipodal pairs at twice that; one shared antipodal midpoint; and
/// the dual cube test: the semi-axes are integer vectors, pairwise
/// orthogonal and of equal length, and the eight points
/// `center +- e1 +- e2 +- e3` are lattice points. The edge is then `s*sqrt(2)`
/// with `s` an integer.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Octahedron {
    config: PointConfig,
    side_sq: i64,
    center2: Point,
    semi_axes: [Point; 3],
}

impl Octahedron {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if points.len() != 6 {
            return Err(Error::NotOctahedron(format!(
                "expected 6 vertices, got {}",
                points.len()
            )));
        }
        let config = PointConfig::new(points)?;
        Self::from_config(config)
    }

    pub fn from_config(config: PointConfig) -> Result<Self> {
        let fail = |msg: String| Err(Error::NotOctahedron(msg));
        let pts = config.points();
        if pts.len() != 6 {
            return fail(format!("expected 6 vertices, got {}", pts.len()));
        }

        let mut pairs = Vec::with_capacity(15);
        for i in 0..6 {
            for j in i + 1..6 {
                pairs.push((pts[i].squared_distance(pts[j]), i, j));
            }
        }
        let side_sq = pairs.iter().map(|p| p.0).min().unwrap();
        let edges = pairs.iter().filter(|p| p.0 == side_sq).count();
        let diagonals: Vec<(usize, usize)> = pairs
            .iter()
            .filter(|p| p.0 == 2 * side_sq)
            .map(|p| (p.1, p.2))
            .collect();
        if edges != 12 || diagonals.len() != 3 {
            return fail(format!(
                "{edges} edges of squared length {side_sq} and {} diagonals",
                diagonals.len()
            ));
        }
        let mut seen = [false; 6];
        for &(i, j) in &diagonals {
            seen[i] = true;
            seen[j] = true;
        }
        if seen.iter().any(|s| !s) {
            return fail("antipodal pairs do not cover all vertices".into());
        }

        let center2 = pts[diagonals[0].0] + pts[diagonals[0].1];
        if diagonals.iter().any(|&(i, j)| pts[i] + pts[j] != center2) {
            return fail("antipodal pairs do not share a midpoint".into());
        }

        let mut semi_axes = [Point::ZERO; 3];
        for (axis, &(i, j)) in semi_axes.iter_mut().zip(&diagonals) {
            let doubled = pts[j] - pts[i];
            if !doubled.is_even() {
                return fail(format!("semi-axis {doubled}/2 is not an integer vector"));
            }
            *axis = doubled.halve();
        }
        let [e1, e2, e3] = semi_axes;
        let r = e1.norm_sq();
        if e2.norm_sq() != r || e3.norm_sq() != r {
            return fail("semi-axes differ in length".into());
        }
        if e1.dot(e2) != 0 || e1.dot(e3) != 0 || e2.dot(e3) != 0 {
            return fail("semi-axes are not orthogonal".into());
        }
        for sx in [-1, 1] {
            for sy in [-1, 1] {
                for sz in [-1, 1] {
                    let corner2 = center2 + (e1 * sx + e2 * sy + e3 * sz) * 2;
                    if !corner2.is_even() {
                        return fail("dual cube corner is not a lattice point".into());
                    }
                }
            }
        }
        if side_sq % 2 != 0 || isqrt_exact(side_sq / 2).is_none() {
            return fail(format!("squared edge {side_sq} is not 2*s^2"));
        }

        Ok(Octahedron {
            config,
            side_sq,
            center2,
            semi_axes,
        })
    }

    pub fn config(&self) -> &PointConfig {
        &self.config
    }

    pub fn vertices(&self) -> &[Point] {
        self.config.points()
    }

    /// Squared edge length.
    pub fn side_sq(&self) -> i64 {
        self.side_sq
    }

    /// Edge factor `s` with edge length `s * sqrt(2)`.
    pub fn side_factor(&self) -> i64 {
        isqrt_exact(self.side_sq / 2).expect("validated on construction")
    }

    /// Twice the common center.
    pub fn center2(&self) -> Point {
        self.center2
    }

    pub fn semi_axes(&self) -> [Point; 3] {
        self.semi_axes
    }

    /// Corners of the dual (doubled) cube, each `center +- e1 +- e2 +- e3`.
    pub fn dual_cube(&self) -> [Point; 8] {
        let [e1, e2, e3] = self.semi_axes;
        let mut out = [Point::ZERO; 8];
        let mut i = 0;
        for sx in [-1, 1] {
            for sy in [-1, 1] {
                for sz in [-1, 1] {
                    out[i] = (self.center2 + (e1 * sx + e2 * sy + e3 * sz) * 2).halve();
                    i += 1;
                }
            }
        }
        out
    }

    pub fn bounding_box(&self) -> BoundingBox {
        self.config.bounding_box()
    }

    pub fn normalized(&self) -> Octahedron {
        self.translate(-self.config.min_corner())
    }

    pub fn translate(&self, by: Point) -> Octahedron {
        Octahedron {
            config: self.config.translate(by),
            side_sq: self.side_sq,
            center2: self.center2 + by * 2,
            semi_axes: self.semi_axes,
        }
    }

    pub fn scale(&self, factor: i64) -> Octahedron {
        assert!(factor >= 1, "scale factor must be positive");
        Octahedron {
            config: self.config.scale(factor),
            side_sq: self.side_sq * factor * factor,
            center2: self.center2 * factor,
            semi_axes: self.semi_axes.map(|e| e * factor),
        }
    }
}

impl Serialize for Octahedron {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.config.serialize(s)
    }
}
