#![allow(dead_code)]

pub mod suites;

use std::collections::HashSet;

use oig_core::bits::{self, ElemSet};
use oig_core::covec::all_covectors;
use oig_core::flats::FlatLattice;
use oig_core::geom::linalg::q;
use oig_core::geom::{complexified_oig, convex_geometry, om_from_vectors, PointConfiguration, RationalArrangement};
use oig_core::orient::{oig_from_antimatroid, OrientedSystem};
use oig_core::setsys::{build_set_system, check_axioms, AxiomClass, GroundSet, SetSystem};

pub const MAX_ELEMENTS: usize = 5;
pub const MAX_FAMILY: usize = 40;

pub fn colinear_system() -> SetSystem {
    build_set_system(
        &["x", "y", "z"],
        &[vec![], vec!["x"], vec!["z"], vec!["x", "y"], vec!["x", "z"], vec!["y", "z"], vec!["x", "y", "z"]],
    )
    .unwrap()
}

pub fn colinear() -> OrientedSystem {
    oig_from_antimatroid(&colinear_system()).unwrap()
}

pub fn rows(v: &[&[i64]]) -> Vec<Vec<oig_core::geom::Q>> {
    v.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
}

pub fn arrangement(d: usize, forms: &[&[i64]]) -> RationalArrangement {
    RationalArrangement::new(d, rows(forms)).unwrap()
}

pub fn rank_one_complexified() -> OrientedSystem {
    complexified_oig(&arrangement(1, &[&[1]])).unwrap()
}

/// Three pairwise independent vectors in the plane.
pub fn three_vectors() -> OrientedSystem {
    om_from_vectors(&rows(&[&[1, 0], &[0, 1], &[1, 1]]), None).unwrap()
}

/// Named examples, each with a short name.
pub fn named_corpus() -> Vec<(&'static str, OrientedSystem)> {
    let square = PointConfiguration::unlabeled(2, rows(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2], &[1, 1]])).unwrap();
    let triangle = PointConfiguration::unlabeled(2, rows(&[&[0, 0], &[3, 0], &[0, 3], &[1, 1]])).unwrap();
    vec![
        ("colinear", colinear()),
        ("rank-one complexified", rank_one_complexified()),
        ("three vectors", three_vectors()),
        ("coordinate frame", om_from_vectors(&rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), None).unwrap()),
        ("four vectors", om_from_vectors(&rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]), None).unwrap()),
        ("two complexified lines", complexified_oig(&arrangement(2, &[&[1, 0], &[0, 1]])).unwrap()),
        ("square with centre", oig_from_antimatroid(&convex_geometry(&square).unwrap().into_system()).unwrap()),
        ("triangle with interior point", oig_from_antimatroid(&convex_geometry(&triangle).unwrap().into_system()).unwrap()),
    ]
}

fn accessible_candidates(n: usize, prev: &[ElemSet], k: usize) -> Vec<ElemSet> {
    let prev: HashSet<ElemSet> = prev.iter().copied().collect();
    bits::subsets(bits::full(n))
        .filter(|&s| bits::len(s) == k && bits::elems(s).any(|e| prev.contains(&(s & !bits::bit(e)))))
        .collect()
}

fn extend(n: usize, family: &mut Vec<ElemSet>, prev: &[ElemSet], k: usize, out: &mut Vec<Vec<ElemSet>>) {
    out.push(family.clone());
    if k > n {
        return;
    }
    let cands = accessible_candidates(n, prev, k);
    let room = MAX_FAMILY - family.len();
    for pick in 1u64..(1u64 << cands.len()) {
        if bits::len(pick) > room {
            continue;
        }
        let layer: Vec<ElemSet> = bits::elems(pick).map(|i| cands[i]).collect();
        let exchange = layer
            .iter()
            .all(|&x| prev.iter().all(|&y| bits::elems(x & !y).any(|e| layer.contains(&(y | bits::bit(e))))));
        if exchange {
            let before = family.len();
            family.extend(&layer);
            extend(n, family, &layer, k + 1, out);
            family.truncate(before);
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn canonical_form(family: &[ElemSet], perms: &[Vec<usize>]) -> Vec<ElemSet> {
    perms
        .iter()
        .map(|p| {
            let mut f: Vec<ElemSet> =
                family.iter().map(|&s| bits::elems(s).fold(0, |acc, e| acc | bits::bit(p[e]))).collect();
            f.sort_unstable();
            f
        })
        .min()
        .expect("at least one permutation")
}

/// Interval greedoids on exactly `n` elements, loops allowed, one per
/// isomorphism class, with at most [`MAX_FAMILY`] feasible sets. Accessible
/// families are grown one cardinality at a time, keeping only layers that
/// satisfy exchange with the layer below; the singletons are taken to be
/// the first few elements, which loses nothing up to isomorphism.
pub fn interval_greedoids(n: usize) -> Vec<SetSystem> {
    let labels: Vec<String> = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
    let ground = GroundSet::new(&labels).unwrap();
    let perms = permutations(n);
    let mut seen = HashSet::new();
    let mut result = Vec::new();
    for m in 0..=n {
        let singles: Vec<ElemSet> = (0..m).map(bits::bit).collect();
        let mut family = vec![0];
        family.extend(&singles);
        let mut families = Vec::new();
        if m == 0 {
            families.push(family);
        } else {
            extend(n, &mut family, &singles, 2, &mut families);
        }
        for f in families {
            let sys = SetSystem::new(ground.clone(), f.iter().copied()).unwrap();
            if !check_axioms(&sys, AxiomClass::IntervalGreedoid, false).passed {
                continue;
            }
            if seen.insert(canonical_form(&f, &perms)) {
                result.push(sys);
            }
        }
    }
    result
}

pub fn all_interval_greedoids() -> Vec<SetSystem> {
    (0..=MAX_ELEMENTS).flat_map(interval_greedoids).collect()
}

/// The full covector set of `sys`, when it orients the greedoid.
pub fn full_orientation(sys: &SetSystem) -> Option<OrientedSystem> {
    let lat = FlatLattice::new(sys).ok()?;
    let all: Vec<_> = all_covectors(&lat).ok()?.into_iter().map(|c| c.signs).collect();
    let oig = OrientedSystem::from_lattice(lat, &all, false).ok()?;
    oig.passed().then_some(oig)
}

/// Named examples plus every enumerated greedoid whose full covector set is
/// an orientation.
pub fn oig_corpus(greedoids: &[SetSystem]) -> Vec<(String, OrientedSystem)> {
    let mut out: Vec<(String, OrientedSystem)> = named_corpus().into_iter().map(|(n, o)| (n.to_string(), o)).collect();
    for (i, g) in greedoids.iter().enumerate() {
        if let Some(o) = full_orientation(g) {
            out.push((format!("greedoid #{i}"), o));
        }
    }
    out
}
