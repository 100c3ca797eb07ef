mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use lattice_octahedra::builder::{build_octahedron, octahedron_k_values, IrreducibleRecord};
use lattice_octahedra::enumerator::{sequence_terms, Catalog, Counter};
use lattice_octahedra::quadratic::{abc_solutions, k_values, primitive_mn_solutions};
use lattice_octahedra::symmetry::{box_orbit, orbit_stats, same_orbit, CubeSymmetry};
use lattice_octahedra::{Octahedron, Point};

use common::*;

#[test]
fn terms_are_nondecreasing() {
    let terms = sequence_terms(60).unwrap();
    for w in terms.windows(2) {
        assert!(w[0].1 <= w[1].1, "a({}) > a({})", w[0].0, w[1].0);
    }
}

#[test]
fn smaller_horizon_is_a_prefix() {
    let small = Catalog::build(20).unwrap();
    let large = Catalog::build(100).unwrap();
    let in_range: Vec<_> = large
        .irreducible
        .iter()
        .filter(|r| r.side_factor <= 20)
        .collect();
    assert_eq!(in_range.len(), small.irreducible.len());
    for (a, b) in small.irreducible.iter().zip(in_range) {
        assert_eq!(a, b);
    }
    let small_counter = Counter::new(&small);
    let large_counter = Counter::new(&large);
    for n in 1..=20 {
        assert_eq!(small_counter.count(n), large_counter.count(n), "n={n}");
    }
}

#[test]
fn catalog_json_is_stable() {
    let a = Catalog::build(30).unwrap().to_json();
    let b = Catalog::build(30).unwrap().to_json();
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["irreducible"][0]["side_factor"], 1);
    assert_eq!(v["irreducible"][0]["k_values"], serde_json::json!([1]));
}

#[test]
fn multiples_are_dilations_of_irreducibles() {
    let cat = Catalog::build(60).unwrap();
    for m in &cat.multiples {
        assert!(m.min_cube <= 60);
        let base = cat
            .irreducible
            .iter()
            .find(|r| {
                m.side_factor % r.side_factor == 0
                    && r.octahedron.config().scale(m.side_factor / r.side_factor)
                        == *m.octahedron.config()
            })
            .expect("every multiple has a base");
        let j = m.side_factor / base.side_factor;
        assert!(j >= 2);
        assert_eq!(m.min_cube, base.min_cube * j);
        assert_eq!(m.k_values, base.k_values);
    }
}

#[test]
fn oc2_is_one_of_the_side_three_entries() {
    let cat = Catalog::build(4).unwrap();
    assert!(cat
        .irreducible
        .iter()
        .any(|r| same_orbit(r.octahedron.config(), &oc2())));
}

#[test]
fn recorded_k_values_are_intrinsic() {
    let cat = Catalog::build(100).unwrap();
    for r in &cat.irreducible {
        assert_eq!(octahedron_k_values(&r.octahedron).unwrap(), r.k_values);
    }
    // a dilation by j multiplies every face side factor by j
    for r in &cat.multiples {
        let intrinsic = octahedron_k_values(&r.octahedron).unwrap();
        let j = *intrinsic.first().unwrap();
        assert!(j >= 2);
        let recorded: BTreeSet<i64> = r.k_values.iter().map(|v| v * j).collect();
        assert_eq!(intrinsic, recorded);
    }
}

#[test]
fn constructions_for_small_parameters() {
    for k in k_values(40) {
        for (m, n) in primitive_mn_solutions(k) {
            for d in (1..=9).step_by(2) {
                for abc in abc_solutions(d) {
                    let raw = build_octahedron(abc, m, n).unwrap();
                    let rec = IrreducibleRecord::from_raw(&raw).unwrap();
                    assert_eq!(rec.side_factor, d * k);
                    assert!(rec.k_values.contains(&k));
                    assert!(rec.k_values.iter().all(|v| (d * k) % v == 0));
                    assert!(rec.octahedron.config().is_normalized());
                }
            }
        }
    }
}

#[test]
fn alpha0_divides_48() {
    let cat = Catalog::build(30).unwrap();
    for r in cat.entries() {
        let s = orbit_stats(r.octahedron.config());
        assert_eq!(48 % s.alpha0, 0, "side {}", r.side_factor);
        assert!(s.omega >= 1 && s.omega <= 48);
    }
}

fn any_symmetry() -> impl Strategy<Value = CubeSymmetry> {
    (0usize..48).prop_map(|i| CubeSymmetry::all().nth(i).unwrap())
}

fn any_entry() -> impl Strategy<Value = Octahedron> {
    let cat = Catalog::build(40).unwrap();
    let all: Vec<Octahedron> = cat.entries().map(|r| r.octahedron.clone()).collect();
    prop::sample::select(all)
}

proptest! {
    #[test]
    fn k_values_survive_symmetry_and_translation(
        t in any_entry(),
        sym in any_symmetry(),
        shift in prop::array::uniform3(-50i64..50),
    ) {
        let expected = octahedron_k_values(&t).unwrap();
        let moved: Vec<Point> = t
            .vertices()
            .iter()
            .map(|&p| sym.apply_linear(p) + Point::from(shift))
            .collect();
        let moved = Octahedron::new(moved).unwrap();
        prop_assert_eq!(octahedron_k_values(&moved).unwrap(), expected);
    }

    #[test]
    fn omega_ignores_translation_and_symmetry(
        t in any_entry(),
        sym in any_symmetry(),
        shift in prop::array::uniform3(-50i64..50),
    ) {
        let (omega, reps) = box_orbit(t.config());
        let moved = t.config().translate(Point::from(shift));
        prop_assert_eq!(box_orbit(&moved).0, omega);
        let dims = t.config().bounding_box().dims;
        let image = sym.apply(t.config(), dims).normalized();
        let (omega_image, reps_image) = box_orbit(&image);
        prop_assert_eq!(omega_image, omega);
        prop_assert_eq!(reps_image.len(), reps.len());
        prop_assert!(reps_image.contains(&image));
    }
}
