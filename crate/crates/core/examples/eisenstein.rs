//! Factorization of u + v*sqrt(-3) over the Eisenstein integers, and the
//! (r, s) parameters derived from it.
//!
//! cargo run --example eisenstein

use lattice_octahedra::quadratic::{eisenstein_factorization, find_rs, unique_decomposition};

fn main() {
    for p in [7, 13, 19, 31, 2011] {
        let (x, y) = unique_decomposition(p).unwrap();
        println!("{p} = {x}^2 + 3*{y}^2");
    }

    for (u, v) in [(13, 17), (29, 85), (-4, 6), (21, 0)] {
        let f = eisenstein_factorization(u, v).unwrap();
        let parts: Vec<String> = f.factors.iter().map(|(e, k)| format!("{e}^{k}")).collect();
        println!(
            "({u}, {v}): content {}, unit {}, factors {}, product {}",
            f.content,
            f.unit,
            parts.join(" "),
            f.product()
        );
    }

    let rs = find_rs(29, 85, 26).unwrap();
    println!("find_rs(29, 85, 26) -> r = {}, s = {}", rs.r, rs.s);
}
