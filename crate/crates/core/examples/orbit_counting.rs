//! Orbit statistics and both placement-counting formulas.
//!
//! cargo run --example orbit_counting

use lattice_octahedra::symmetry::{box_orbit, count_in_cube_new, count_in_cube_old, orbit_stats};
use lattice_octahedra::{Point, PointConfig};

fn show(name: &str, t: &PointConfig, grids: std::ops::RangeInclusive<i64>) {
    let s = orbit_stats(t);
    let (omega, reps) = box_orbit(t);
    println!("{name}: box {:?}", t.bounding_box().dims);
    println!(
        "  alpha0 {}  alpha {}  beta {}  gamma {}  omega {omega}",
        s.alpha0, s.alpha, s.beta, s.gamma
    );
    for r in &reps {
        println!("    {}", serde_json::to_string(r).unwrap());
    }
    for g in grids {
        println!(
            "  grid {g:2}: new {:6}  old {:6}",
            count_in_cube_new(t, g),
            count_in_cube_old(t, g)
        );
    }
}

fn config(pts: &[[i64; 3]]) -> PointConfig {
    PointConfig::new(pts.iter().copied().map(Point::from).collect()).unwrap()
}

fn main() {
    show(
        "triangle",
        &config(&[[0, 2, 2], [5, 7, 0], [7, 0, 1]]),
        7..=10,
    );
    show(
        "side-3 octahedron",
        &config(&[
            [0, 0, 1],
            [0, 3, 4],
            [1, 4, 0],
            [3, 0, 4],
            [4, 1, 0],
            [4, 4, 3],
        ]),
        4..=8,
    );
}
