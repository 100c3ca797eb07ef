//! Irreducible octahedra and their dilations up to a horizon.
//!
//! cargo run --release --example irreducible_catalog -- 20

use lattice_octahedra::enumerator::Catalog;

fn main() {
    let horizon: i64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(20);
    let cat = Catalog::build(horizon).unwrap();

    println!("{} irreducible:", cat.irreducible.len());
    for r in &cat.irreducible {
        println!(
            "  side {:3}  cube {:3}  box {:?}  k {:?}  abc {:?}",
            r.side_factor,
            r.min_cube,
            r.octahedron.bounding_box().dims,
            r.k_values,
            r.abc
        );
    }
    println!("{} dilations:", cat.multiples.len());
    for r in &cat.multiples {
        println!("  side {:3}  cube {:3}", r.side_factor, r.min_cube);
    }
}
