//! The three Diophantine inputs of the construction.
//!
//! cargo run --example quadratic_forms -- 100

use lattice_octahedra::quadratic::{abc_solutions, k_values, primitive_mn_solutions};

fn main() {
    let limit: i64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(50);

    println!("k <= {limit} with k^2 = m^2 - mn + n^2 solvable primitively:");
    for k in k_values(limit) {
        println!("  k = {k:3}  (m, n) = {:?}", primitive_mn_solutions(k));
    }

    println!("\nprimitive a^2 + b^2 + c^2 = 3d^2, 0 < a <= b <= c:");
    for d in (1..=limit.min(25)).step_by(2) {
        let sols = abc_solutions(d);
        println!("  d = {d:2}  {} solution(s)  {:?}", sols.len(), sols);
    }
}
