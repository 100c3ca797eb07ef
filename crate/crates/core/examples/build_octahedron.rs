//! Build one octahedron from a face normal and a primitive (m, n) pair.
//!
//! cargo run --example build_octahedron -- 1 1 1 880 2301

use lattice_octahedra::builder::{build_octahedron, IrreducibleRecord};

fn main() {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .filter_map(|s| s.parse().ok())
        .collect();
    let [a, b, c, m, n] = match args.as_slice() {
        [a, b, c, m, n] => [*a, *b, *c, *m, *n],
        _ => [1, 1, 1, 880, 2301],
    };

    let raw = match build_octahedron([a, b, c], m, n) {
        Ok(raw) => raw,
        Err(e) => {
            eprintln!("no octahedron for ({a}, {b}, {c}), (m, n) = ({m}, {n}): {e}");
            std::process::exit(1);
        }
    };
    let p = &raw.params;
    println!(
        "d = {}, k = {}, (r, s) = ({}, {})",
        p.d, p.k, p.rs.r, p.rs.s
    );
    println!("zeta = {:?}, eta = {:?}", p.zeta, p.eta);
    for (i, v) in raw.vertices.iter().enumerate() {
        println!("  vertex {i}: {v:?}");
    }

    let rec = IrreducibleRecord::from_raw(&raw).unwrap();
    println!(
        "side factor {} (edge^2 = {})",
        rec.side_factor,
        rec.octahedron.side_sq()
    );
    println!("minimal cube {}", rec.min_cube);
    println!("face side factors {:?}", rec.k_values);
    println!(
        "normalized: {}",
        serde_json::to_string(&rec.octahedron).unwrap()
    );
}
