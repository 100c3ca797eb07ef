//! Construction of irreducible regular octahedra from a face normal
//! `(a, b, c)` and a primitive pair `(m, n)`.
//!
//! The face triangle is built from two integer vectors `zeta`, `eta`
//! spanning the plane `ax + by + cz = 0`; the apex of the regular
//! tetrahedron over it fixes the third vertex, and the dual-cube structure
//! gives the remaining three vertices as pairwise sums.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::point::{Octahedron, Point};
use crate::quadratic::{div_exact, find_rs, isqrt_exact, RsPair};

/// Intermediate values of one construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleParams {
    pub abc: [i64; 3],
    pub d: i64,
    pub q: i64,
    pub a_part: i64,
    pub b_part: i64,
    pub rs: RsPair,
    pub zeta: Point,
    pub eta: Point,
    pub m: i64,
    pub n: i64,
    pub k: i64,
}

/// The three face vertices and the three pairwise sums, before translation.
#[derive(Clone, Debug)]
pub struct RawOctahedron {
    pub params: TriangleParams,
    /// `[T1, T2, T3, T1+T2, T1+T3, T2+T3]`
    pub vertices: [Point; 6],
    pub octahedron: Octahedron,
}

impl RawOctahedron {
    pub fn face(&self) -> [Point; 3] {
        [self.vertices[0], self.vertices[1], self.vertices[2]]
    }
}

/// Builds the octahedron for face normal `abc` and primitive pair `(m, n)`.
///
/// `(r, s)` comes from [`find_rs`] applied to `(ac, -bd, a^2 + b^2)`.
/// Of the two possible apexes the first is used when all three of its
/// coordinates are integral, otherwise the second (which must be).
pub fn build_octahedron(abc: [i64; 3], m: i64, n: i64) -> Result<RawOctahedron> {
    let [a, b, c] = abc;
    let q = a * a + b * b;
    let k = isqrt_exact(m * m - m * n + n * n).ok_or(Error::NotSquare(m * m - m * n + n * n))?;
    let d3 = a * a + b * b + c * c;
    let d = isqrt_exact(div_exact(d3, 3)?).ok_or(Error::NotSquare(d3 / 3))?;
    let a_part = a * c;
    let b_part = b * d;
    let rs = find_rs(a_part, -b_part, q)?;
    let (r, s) = (rs.r, rs.s);

    let eta = Point::new(
        div_exact(-(d * b * (3 * r + s) + a * c * (r - s)), 2 * q)?,
        div_exact(d * a * (3 * r + s) - b * c * (r - s), 2 * q)?,
        div_exact(r - s, 2)?,
    );
    let zeta = Point::new(
        div_exact(-(r * a * c + d * b * s), q)?,
        div_exact(-(r * b * c - d * a * s), q)?,
        r,
    );

    let t1 = zeta * m - (zeta - eta) * n;
    let t2 = eta * m - zeta * n;
    let base = t1 + t2;
    let normal = Point::new(a, b, c) * (2 * k);
    let apex = |p: Point| -> Option<Point> {
        let p = p.to_array();
        if p.iter().all(|v| v % 3 == 0) {
            Some(Point::from_array(p.map(|v| v / 3)))
        } else {
            None
        }
    };
    let t3 = apex(base - normal)
        .or_else(|| apex(base + normal))
        .ok_or_else(|| Error::Inexact {
            num: (base + normal).x,
            den: 3,
        })?;

    let vertices = [t1, t2, t3, t1 + t2, t1 + t3, t2 + t3];
    let octahedron = Octahedron::new(vertices.to_vec())?;
    Ok(RawOctahedron {
        params: TriangleParams {
            abc,
            d,
            q,
            a_part,
            b_part,
            rs,
            zeta,
            eta,
            m,
            n,
            k,
        },
        vertices,
        octahedron,
    })
}

/// Translates so every coordinate plane holds a vertex.
pub fn normalize_to_octant(t: &Octahedron) -> Octahedron {
    t.normalized()
}

/// Smallest `m` with the (normalized) octahedron inside `[0, m]^3`.
pub fn minimal_cube_size(t: &Octahedron) -> i64 {
    t.bounding_box().max_dim()
}

/// `sqrt(|U|^2 / (3 g^2))` with `g` the content of `U`: the `d` of the
/// primitive normal in direction `U`.
pub fn unit_vector_norm(u: Point) -> Result<i64> {
    let g = u.content();
    if g == 0 {
        return Err(Error::InvalidNormal(u));
    }
    let prim = u.map(|c| c / g);
    let sq = prim.norm_sq();
    if sq % 3 != 0 {
        return Err(Error::InvalidNormal(u));
    }
    isqrt_exact(sq / 3).ok_or(Error::InvalidNormal(u))
}

/// The side factors of the four pairs of parallel faces, given one face
/// `t1, t2, t3` of an octahedron whose opposite vertex to `ti` is the sum
/// of the other two.
pub fn four_k_values(t1: Point, t2: Point, t3: Point) -> Result<BTreeSet<i64>> {
    let edge_sq = t1.squared_distance(t2);
    let side = isqrt_exact(div_exact(edge_sq, 2)?).ok_or(Error::NotSquare(edge_sq / 2))?;
    let normals = [
        t1 + t2 + t3,
        t1 + t2 - t3 * 3,
        t1 + t3 - t2 * 3,
        t2 + t3 - t1 * 3,
    ];
    normals
        .into_iter()
        .map(|n| div_exact(side, unit_vector_norm(n)?))
        .collect()
}

/// The same four side factors read off any octahedron: the parallel face
/// pairs have normals `+-e1 +- e2 +- e3` in terms of the semi-axes.
pub fn octahedron_k_values(t: &Octahedron) -> Result<BTreeSet<i64>> {
    let [e1, e2, e3] = t.semi_axes();
    let side = t.side_factor();
    [e1 + e2 + e3, e1 + e2 - e3, e1 - e2 + e3, -e1 + e2 + e3]
        .into_iter()
        .map(|n| div_exact(side, unit_vector_norm(n)?))
        .collect()
}

/// Dilates every vertex by `j`.
pub fn scale_octahedron(t: &Octahedron, j: i64) -> Octahedron {
    t.scale(j)
}

/// One catalog entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrreducibleRecord {
    /// Edge length is `side_factor * sqrt(2)`.
    pub side_factor: i64,
    pub min_cube: i64,
    #[serde(rename = "vertices")]
    pub octahedron: Octahedron,
    pub k_values: BTreeSet<i64>,
    pub abc: [i64; 3],
}

impl IrreducibleRecord {
    pub fn from_raw(raw: &RawOctahedron) -> Result<Self> {
        let [t1, t2, t3] = raw.face();
        let octahedron = normalize_to_octant(&raw.octahedron);
        Ok(IrreducibleRecord {
            side_factor: octahedron.side_factor(),
            min_cube: minimal_cube_size(&octahedron),
            octahedron,
            k_values: four_k_values(t1, t2, t3)?,
            abc: raw.params.abc,
        })
    }

    pub fn scaled(&self, j: i64) -> Self {
        IrreducibleRecord {
            side_factor: self.side_factor * j,
            min_cube: self.min_cube * j,
            octahedron: scale_octahedron(&self.octahedron, j),
            k_values: self.k_values.clone(),
            abc: self.abc,
        }
    }
}
