//! Terms of the sequence as a b-file, checked against the bundled table.
//!
//! cargo run --release --example sequence_bfile -- 100

use lattice_octahedra::bfile;
use lattice_octahedra::enumerator::sequence_terms;

fn main() {
    let max_n: i64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(30);
    let terms = sequence_terms(max_n).unwrap();
    print!("{}", bfile::render(&terms));
    match bfile::first_mismatch(&terms, &bfile::reference_terms()) {
        None => eprintln!("all terms agree with the reference table"),
        Some((n, got, want)) => eprintln!("n = {n}: computed {got}, reference {want}"),
    }
}
