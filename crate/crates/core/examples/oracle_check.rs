//! Brute-force counts next to the catalog-based counts.
//!
//! cargo run --release --example oracle_check -- 10

use std::time::Instant;

use lattice_octahedra::enumerator::sequence_terms;
use lattice_octahedra::oracle::{brute_force_count, FEASIBILITY_BOUND};

fn main() {
    let max_n: i64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(8)
        .min(FEASIBILITY_BOUND);
    for (n, fast) in sequence_terms(max_n).unwrap() {
        let start = Instant::now();
        let slow = brute_force_count(n).unwrap();
        let mark = if slow == fast { "ok" } else { "MISMATCH" };
        println!(
            "n = {n:2}  catalog {fast:8}  brute force {slow:8}  {mark}  ({:.2?})",
            start.elapsed()
        );
    }
}
