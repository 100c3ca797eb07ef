//! Catalog of irreducible octahedra, their dilations, and the summation
//! that produces the sequence terms.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::builder::{build_octahedron, IrreducibleRecord};
use crate::error::{Error, Result};
use crate::point::PointConfig;
use crate::quadratic::{abc_solutions, k_values, primitive_mn_solutions};
use crate::symmetry::{box_orbit, full_orbit, CountProfile};

/// Configurations already claimed, bucketed by minimal cube size.
#[derive(Clone, Debug, Default)]
pub struct OrbitRegistry {
    buckets: HashMap<i64, BTreeSet<PointConfig>>,
}

impl OrbitRegistry {
    pub fn bucket(&self, min_cube: i64) -> Option<&BTreeSet<PointConfig>> {
        self.buckets.get(&min_cube)
    }

    pub fn buckets(&self) -> impl Iterator<Item = (i64, &BTreeSet<PointConfig>)> {
        self.buckets.iter().map(|(&k, v)| (k, v))
    }

    /// Whether any image of `candidate` is already registered.
    pub fn claims(&self, min_cube: i64, candidate: &PointConfig) -> bool {
        match self.buckets.get(&min_cube) {
            Some(bucket) => full_orbit(candidate).iter().any(|c| bucket.contains(c)),
            None => false,
        }
    }

    pub fn register(&mut self, min_cube: i64, candidate: &PointConfig) {
        let (_, reps) = box_orbit(candidate);
        self.buckets.entry(min_cube).or_default().extend(reps);
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Catalog {
    pub irreducible: Vec<IrreducibleRecord>,
    pub multiples: Vec<IrreducibleRecord>,
}

impl Catalog {
    /// Irreducible octahedra with side factor at most `horizon`, plus every
    /// dilation whose minimal cube still fits in `horizon`.
    pub fn build(horizon: i64) -> Result<Self> {
        let (irreducible, _) = build_irreducible_catalog(horizon)?;
        let multiples = expand_multiples(horizon, &irreducible);
        Ok(Catalog {
            irreducible,
            multiples,
        })
    }

    pub fn entries(&self) -> impl Iterator<Item = &IrreducibleRecord> {
        self.irreducible.iter().chain(&self.multiples)
    }

    /// Deterministic JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("catalog serializes");
        s.push('\n');
        s
    }
}

/// Face normals listed first for a given `d`, in the order the published
/// N = 20 catalog visited them. Only the recorded `abc` label of an entry
/// depends on this; the set of octahedra admitted does not.
const PUBLISHED_ABC_ORDER: &[(i64, &[[i64; 3]])] = &[
    (15, &[[5, 11, 23]]),
    (19, &[[5, 23, 23], [11, 11, 29], [13, 17, 25], [1, 11, 31]]),
];

/// Face normals of `d`: the published prefix (if any), then the rest sorted.
pub fn abc_visit_order(d: i64) -> Vec<[i64; 3]> {
    let mut sols = abc_solutions(d);
    if let Some((_, first)) = PUBLISHED_ABC_ORDER.iter().find(|(pd, _)| *pd == d) {
        sols.sort_by_key(|abc| first.iter().position(|f| f == abc).unwrap_or(first.len()));
    }
    sols
}

/// Walks `k`, then the primitive `(m, n)` pairs of `k`, then odd `d` with
/// `d*k <= horizon`, then the face normals of `d`. A candidate is
/// considered only when `k = 1` or none of its face side factors is 1 (a
/// face with factor 1 means the same octahedron arises at `k = 1`). It is
/// kept unless one of its symmetry images is already registered.
pub fn build_irreducible_catalog(horizon: i64) -> Result<(Vec<IrreducibleRecord>, OrbitRegistry)> {
    if horizon < 1 {
        return Err(Error::InvalidArgument(format!(
            "horizon must be at least 1, got {horizon}"
        )));
    }
    let mut registry = OrbitRegistry::default();
    let mut records = Vec::new();
    for k in k_values(horizon) {
        for (m, n) in primitive_mn_solutions(k) {
            for d in (1..).step_by(2).take_while(|d| d * k <= horizon) {
                for abc in abc_visit_order(d) {
                    let wrap = |e: Error| Error::Construction {
                        k,
                        m,
                        n,
                        abc,
                        source: Box::new(e),
                    };
                    let raw = build_octahedron(abc, m, n).map_err(wrap)?;
                    let record = IrreducibleRecord::from_raw(&raw).map_err(wrap)?;
                    if k != 1 && record.k_values.contains(&1) {
                        continue;
                    }
                    let candidate = record.octahedron.config();
                    if registry.claims(record.min_cube, candidate) {
                        continue;
                    }
                    registry.register(record.min_cube, candidate);
                    records.push(record);
                }
            }
        }
    }
    Ok((records, registry))
}

/// Dilations `j = 2..=horizon/min_cube` of every entry that fits.
pub fn expand_multiples(horizon: i64, irreducible: &[IrreducibleRecord]) -> Vec<IrreducibleRecord> {
    irreducible
        .iter()
        .filter(|r| r.min_cube <= horizon)
        .flat_map(|r| (2..=horizon / r.min_cube).map(move |j| r.scaled(j)))
        .collect()
}

/// Number of regular octahedra in `{0..n}^3` contributed by the listed
/// entries (those with minimal cube above `n` contribute nothing).
pub fn total_count(
    n: i64,
    irreducible: &[IrreducibleRecord],
    multiples: &[IrreducibleRecord],
) -> u64 {
    irreducible
        .iter()
        .chain(multiples)
        .filter(|r| r.min_cube <= n)
        .map(|r| CountProfile::of(r.octahedron.config()).count(n))
        .sum()
}

/// Precomputed count profiles for fast evaluation at many grid sizes.
#[derive(Clone, Debug)]
pub struct Counter {
    profiles: Vec<CountProfile>,
}

impl Counter {
    pub fn new(catalog: &Catalog) -> Self {
        let profiles = catalog
            .entries()
            .collect::<Vec<_>>()
            .par_iter()
            .map(|r| CountProfile::of(r.octahedron.config()))
            .collect();
        Counter { profiles }
    }

    pub fn count(&self, n: i64) -> u64 {
        self.profiles.iter().map(|p| p.count(n)).sum()
    }
}

/// `(n, a(n))` for `n = 1..=max_n`, building the catalog once at `max_n`.
pub fn sequence_terms(max_n: i64) -> Result<Vec<(i64, u64)>> {
    let catalog = Catalog::build(max_n)?;
    let counter = Counter::new(&catalog);
    Ok((1..=max_n)
        .into_par_iter()
        .map(|n| (n, counter.count(n)))
        .collect())
}
