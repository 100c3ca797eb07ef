//! Exact enumeration of regular octahedra whose six vertices lie in the
//! integer grid `{0, 1, ..., n}^3` (OEIS A178797).
//!
//! The count is assembled from a catalog of irreducible octahedra, each
//! built from a face normal `(a, b, c)` with `a^2 + b^2 + c^2 = 3d^2` and a
//! primitive solution of `k^2 = m^2 - mn + n^2`, deduplicated under the 48
//! cube symmetries, and then dilated. Each catalog entry contributes
//! `omega * (n - m + 1)(n - n' + 1)(n - p + 1)` placements (times 1, 3 or 6
//! depending on how many box dimensions coincide), where `omega` counts the
//! symmetric images that stay in the entry's minimal box `m x n' x p`.
//!
//! An independent brute-force counter in [`oracle`] certifies small terms.
//!
//! ```
//! use lattice_octahedra::enumerator::sequence_terms;
//!
//! let terms = sequence_terms(6).unwrap();
//! assert_eq!(terms.last(), Some(&(6, 261)));
//! ```
//!
//! All arithmetic is on `i64`/`u64`; there is no floating point anywhere.

pub mod bfile;
pub mod builder;
pub mod enumerator;
pub mod error;
pub mod oracle;
pub mod point;
pub mod quadratic;
pub mod symmetry;

pub use builder::{build_octahedron, four_k_values, octahedron_k_values, IrreducibleRecord};
pub use enumerator::{sequence_terms, Catalog, Counter};
pub use error::{Error, Result};
pub use oracle::brute_force_count;
pub use point::{BoundingBox, Octahedron, Point, PointConfig};
pub use symmetry::{box_orbit, count_in_cube_new, count_in_cube_old, full_orbit, OrbitStats};
