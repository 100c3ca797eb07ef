#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use lattice_octahedra::{Point, PointConfig};

pub fn config(pts: &[[i64; 3]]) -> PointConfig {
    PointConfig::new(pts.iter().copied().map(Point::from).collect()).unwrap()
}

/// One row of a printed catalog: side factor, minimal cube, vertices,
/// k-values, and the face normal (absent for dilations).
pub struct PrintedEntry {
    pub side_factor: i64,
    pub min_cube: i64,
    pub vertices: [[i64; 3]; 6],
    pub k_values: &'static [i64],
    pub abc: Option<[i64; 3]>,
}

const fn irr(
    side_factor: i64,
    min_cube: i64,
    vertices: [[i64; 3]; 6],
    k_values: &'static [i64],
    abc: [i64; 3],
) -> PrintedEntry {
    PrintedEntry {
        side_factor,
        min_cube,
        vertices,
        k_values,
        abc: Some(abc),
    }
}

const fn mult(
    side_factor: i64,
    min_cube: i64,
    vertices: [[i64; 3]; 6],
    k_values: &'static [i64],
) -> PrintedEntry {
    PrintedEntry {
        side_factor,
        min_cube,
        vertices,
        k_values,
        abc: None,
    }
}

/// The published irreducible catalog for N = 20.
pub const PRINTED_IRREDUCIBLE_20: [PrintedEntry; 13] = [
    irr(
        1,
        2,
        [
            [2, 1, 1],
            [1, 2, 1],
            [1, 1, 0],
            [0, 1, 1],
            [1, 1, 2],
            [1, 0, 1],
        ],
        &[1],
        [1, 1, 1],
    ),
    irr(
        3,
        4,
        [
            [4, 1, 0],
            [0, 3, 4],
            [3, 0, 4],
            [1, 4, 0],
            [4, 4, 3],
            [0, 0, 1],
        ],
        &[1, 3],
        [1, 1, 5],
    ),
    irr(
        5,
        10,
        [
            [8, 5, 7],
            [4, 10, 4],
            [1, 5, 8],
            [4, 0, 4],
            [7, 5, 0],
            [0, 5, 1],
        ],
        &[1],
        [1, 5, 7],
    ),
    irr(
        7,
        12,
        [
            [9, 0, 4],
            [12, 8, 9],
            [0, 4, 3],
            [3, 12, 8],
            [4, 3, 12],
            [8, 9, 0],
        ],
        &[1, 7],
        [1, 5, 11],
    ),
    irr(
        9,
        16,
        [
            [3, 9, 0],
            [11, 7, 16],
            [14, 4, 4],
            [3, 0, 9],
            [0, 12, 12],
            [11, 16, 7],
        ],
        &[1, 3],
        [1, 11, 11],
    ),
    irr(
        11,
        18,
        [
            [7, 18, 13],
            [11, 0, 1],
            [18, 7, 13],
            [15, 15, 0],
            [0, 11, 1],
            [3, 3, 14],
        ],
        &[1],
        [1, 1, 19],
    ),
    irr(
        13,
        24,
        [
            [24, 15, 16],
            [16, 0, 9],
            [8, 24, 15],
            [15, 16, 0],
            [9, 8, 24],
            [0, 9, 8],
        ],
        &[1, 13],
        [5, 11, 19],
    ),
    irr(
        13,
        26,
        [
            [17, 13, 0],
            [24, 13, 17],
            [12, 26, 12],
            [7, 13, 24],
            [12, 0, 12],
            [0, 13, 7],
        ],
        &[1],
        [7, 13, 17],
    ),
    irr(
        15,
        28,
        [
            [15, 28, 13],
            [0, 19, 1],
            [20, 12, 0],
            [20, 9, 21],
            [5, 0, 9],
            [0, 16, 22],
        ],
        &[1, 3],
        [5, 11, 23],
    ),
    irr(
        17,
        24,
        [
            [0, 3, 4],
            [0, 20, 21],
            [13, 0, 24],
            [24, 4, 3],
            [11, 24, 0],
            [24, 21, 20],
        ],
        &[1],
        [1, 5, 29],
    ),
    irr(
        17,
        34,
        [
            [23, 17, 0],
            [15, 34, 15],
            [15, 0, 15],
            [0, 17, 7],
            [30, 17, 23],
            [7, 17, 30],
        ],
        &[1],
        [7, 17, 23],
    ),
    irr(
        19,
        36,
        [
            [0, 12, 12],
            [34, 24, 24],
            [11, 17, 36],
            [11, 36, 17],
            [23, 0, 19],
            [23, 19, 0],
        ],
        &[1],
        [5, 23, 23],
    ),
    irr(
        19,
        30,
        [
            [0, 21, 25],
            [9, 25, 0],
            [21, 5, 30],
            [30, 9, 5],
            [25, 30, 21],
            [5, 0, 9],
        ],
        &[1, 19],
        [1, 11, 31],
    ),
];

/// The published list of dilations for N = 20.
pub const PRINTED_MULTIPLES_20: [PrintedEntry; 14] = [
    mult(
        3,
        6,
        [
            [3, 3, 6],
            [3, 3, 0],
            [3, 6, 3],
            [0, 3, 3],
            [6, 3, 3],
            [3, 0, 3],
        ],
        &[1],
    ),
    mult(
        2,
        4,
        [
            [2, 2, 4],
            [2, 2, 0],
            [2, 4, 2],
            [0, 2, 2],
            [4, 2, 2],
            [2, 0, 2],
        ],
        &[1],
    ),
    mult(
        7,
        14,
        [
            [7, 7, 14],
            [7, 7, 0],
            [7, 14, 7],
            [0, 7, 7],
            [14, 7, 7],
            [7, 0, 7],
        ],
        &[1],
    ),
    mult(
        6,
        12,
        [
            [6, 6, 12],
            [6, 6, 0],
            [6, 12, 6],
            [0, 6, 6],
            [12, 6, 6],
            [6, 0, 6],
        ],
        &[1],
    ),
    mult(
        5,
        10,
        [
            [5, 10, 5],
            [0, 5, 5],
            [5, 5, 10],
            [5, 5, 0],
            [10, 5, 5],
            [5, 0, 5],
        ],
        &[1],
    ),
    mult(
        4,
        8,
        [
            [4, 0, 4],
            [4, 4, 0],
            [4, 4, 8],
            [4, 8, 4],
            [0, 4, 4],
            [8, 4, 4],
        ],
        &[1],
    ),
    mult(
        10,
        20,
        [
            [10, 10, 20],
            [10, 10, 0],
            [10, 20, 10],
            [0, 10, 10],
            [10, 0, 10],
            [20, 10, 10],
        ],
        &[1],
    ),
    mult(
        9,
        18,
        [
            [9, 9, 18],
            [9, 9, 0],
            [9, 18, 9],
            [0, 9, 9],
            [18, 9, 9],
            [9, 0, 9],
        ],
        &[1],
    ),
    mult(
        8,
        16,
        [
            [8, 8, 16],
            [8, 8, 0],
            [8, 16, 8],
            [0, 8, 8],
            [16, 8, 8],
            [8, 0, 8],
        ],
        &[1],
    ),
    mult(
        15,
        20,
        [
            [0, 15, 20],
            [0, 0, 5],
            [15, 0, 20],
            [5, 20, 0],
            [20, 20, 15],
            [20, 5, 0],
        ],
        &[1, 3],
    ),
    mult(
        12,
        16,
        [
            [0, 12, 16],
            [4, 16, 0],
            [16, 4, 0],
            [0, 0, 4],
            [12, 0, 16],
            [16, 16, 12],
        ],
        &[1, 3],
    ),
    mult(
        9,
        12,
        [
            [0, 9, 12],
            [0, 0, 3],
            [9, 0, 12],
            [12, 12, 9],
            [3, 12, 0],
            [12, 3, 0],
        ],
        &[1, 3],
    ),
    mult(
        6,
        8,
        [
            [2, 8, 0],
            [8, 8, 6],
            [8, 2, 0],
            [0, 6, 8],
            [6, 0, 8],
            [0, 0, 2],
        ],
        &[1, 3],
    ),
    mult(
        10,
        20,
        [
            [8, 0, 8],
            [14, 10, 0],
            [8, 20, 8],
            [0, 10, 2],
            [16, 10, 14],
            [2, 10, 16],
        ],
        &[1],
    ),
];

/// The published normalized side-2011 octahedron.
pub const SIDE_2011_NORMALIZED: [[i64; 3]; 6] = [
    [2401, 1521, 3822],
    [3822, 2401, 1521],
    [2301, 0, 1421],
    [1521, 3822, 2401],
    [0, 1421, 2301],
    [1421, 2301, 0],
];

pub fn triangle() -> PointConfig {
    config(&[[0, 2, 2], [5, 7, 0], [7, 0, 1]])
}

pub fn oc2() -> PointConfig {
    config(&[
        [0, 0, 1],
        [0, 3, 4],
        [1, 4, 0],
        [3, 0, 4],
        [4, 1, 0],
        [4, 4, 3],
    ])
}

/// All 48 signed permutation matrices, written out independently of the
/// library's symmetry module.
fn signed_permutations() -> Vec<[[i64; 3]; 3]> {
    let mut out = Vec::new();
    for p in [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ] {
        for signs in 0..8 {
            let mut m = [[0i64; 3]; 3];
            for row in 0..3 {
                m[row][p[row]] = if signs >> row & 1 == 1 { -1 } else { 1 };
            }
            out.push(m);
        }
    }
    out
}

/// Distinct copies of `t` (any rotation or reflection, any translation)
/// with all points in `{0..grid}^3`, counted by literal placement.
pub fn placement_count(t: &PointConfig, grid: i64) -> u64 {
    let mut seen: HashSet<Vec<[i64; 3]>> = HashSet::new();
    for m in signed_permutations() {
        let img: Vec<[i64; 3]> = t
            .points()
            .iter()
            .map(|p| {
                let v = p.to_array();
                [0, 1, 2].map(|r| (0..3).map(|c| m[r][c] * v[c]).sum())
            })
            .collect();
        let lo = [0, 1, 2].map(|a| img.iter().map(|p| p[a]).min().unwrap());
        let hi = [0, 1, 2].map(|a| img.iter().map(|p| p[a]).max().unwrap());
        for tx in -lo[0]..=grid - hi[0] {
            for ty in -lo[1]..=grid - hi[1] {
                for tz in -lo[2]..=grid - hi[2] {
                    let mut placed: Vec<[i64; 3]> = img
                        .iter()
                        .map(|p| [p[0] + tx, p[1] + ty, p[2] + tz])
                        .collect();
                    placed.sort();
                    seen.insert(placed);
                }
            }
        }
    }
    seen.len() as u64
}

pub fn kset(v: &[i64]) -> BTreeSet<i64> {
    v.iter().copied().collect()
}
