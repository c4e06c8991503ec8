//! Exhaustive property checks over a corpus. Each suite returns a list of
//! human-readable violations; an empty list means the suite passed.

use std::collections::{HashMap, HashSet};

use oig_core::bits::{self, ElemSet};
use oig_core::covec::{all_covectors, circ, Covector, Sign, SignVector};
use oig_core::flats::{FlatId, FlatLattice};
use oig_core::orient::{
    bottom, classify_rank2, contract_oig, drop_witness, rank1_elements, restrict_to_xi, restriction_semigroup_check,
    validate_om, OrientedSystem,
};
use oig_core::setsys::{check_axioms, AxiomClass, SetSystem};

pub type Violations = Vec<String>;

/// A greedoid with its lattice and every covector.
pub struct Prepared {
    pub system: SetSystem,
    pub lattice: FlatLattice,
    pub covectors: Vec<Covector>,
}

pub fn prepare(greedoids: &[SetSystem]) -> Vec<Prepared> {
    greedoids
        .iter()
        .map(|g| {
            let lattice = FlatLattice::new(g).expect("generated systems are interval greedoids");
            let covectors = all_covectors(&lattice).expect("small ground sets");
            Prepared { system: g.clone(), lattice, covectors }
        })
        .collect()
}

fn name(sys: &SetSystem) -> String {
    let sets: Vec<String> = sys.feasible().iter().map(|&s| sys.format_set(s)).collect();
    format!("[{}]", sets.join(" "))
}

fn flat_of(lat: &FlatLattice, x: ElemSet) -> FlatId {
    lat.flat_of_set(x)
}

/// Maximal feasible subsets, the μ/ξ laws and closure containment.
pub fn mu_and_xi(corpus: &[Prepared]) -> Violations {
    let mut v = Vec::new();
    for p in corpus {
        let (sys, lat) = (&p.system, &p.lattice);
        let full = sys.full();
        for a in bits::subsets(full) {
            let maximal = sys.maximal_feasible_in(a).unwrap();
            let first = sys.contract(maximal[0]).unwrap();
            if maximal.iter().any(|&m| sys.contract(m).unwrap() != first) {
                v.push(format!("{}: maximal subsets of {} differ in contraction", name(sys), sys.format_set(a)));
            }
            let mu_a = lat.mu(a);
            if maximal.iter().any(|&m| flat_of(lat, m) != mu_a) {
                v.push(format!("{}: μ({}) is not the class of its maximal subsets", name(sys), sys.format_set(a)));
            }
            let (_, closure) = sys.rank_and_closure(a).unwrap();
            if !bits::is_subset(lat.xi(mu_a), closure) {
                v.push(format!("{}: ξμ({}) escapes the closure", name(sys), sys.format_set(a)));
            }
            for b in bits::subsets(full & !a) {
                let ab = a | b;
                if !lat.leq(lat.mu(ab), mu_a) {
                    v.push(format!("{}: μ not order-reversing at {} ⊆ {}", name(sys), sys.format_set(a), sys.format_set(ab)));
                }
            }
        }
        for f in 0..lat.len() {
            if lat.mu(lat.xi(f)) != f {
                v.push(format!("{}: μξ ≠ id at {}", name(sys), lat.label(f)));
            }
            for g in 0..lat.len() {
                let by_ext = lat.leq_by_extension(f, g);
                let by_xi = bits::is_subset(lat.xi(g), lat.xi(f));
                if by_ext != by_xi || lat.leq(f, g) != by_ext {
                    v.push(format!("{}: order criteria disagree at {}, {}", name(sys), lat.label(f), lat.label(g)));
                }
            }
            for &y in sys.feasible() {
                if bits::is_subset(y, lat.xi(f)) && !lat.leq(f, flat_of(lat, y)) {
                    v.push(format!("{}: {} ⊆ ξ({}) but not above", name(sys), sys.format_set(y), lat.label(f)));
                }
            }
        }
        for &x in sys.feasible() {
            for &y in sys.feasible() {
                let same_gamma = sys.continuations(x).unwrap() == sys.continuations(y).unwrap();
                let same_contraction = sys.contract(x).unwrap() == sys.contract(y).unwrap();
                if same_gamma != same_contraction {
                    v.push(format!("{}: Γ and contraction disagree on {}, {}", name(sys), sys.format_set(x), sys.format_set(y)));
                }
            }
        }
    }
    v
}

/// Feasible-set semimodularity and lower semimodularity of the lattice.
pub fn semimodularity(corpus: &[Prepared]) -> Violations {
    let mut v = Vec::new();
    for p in corpus {
        let (sys, lat) = (&p.system, &p.lattice);
        for &x in sys.feasible() {
            let g = sys.gamma(x);
            for a in bits::elems(g) {
                for b in bits::elems(g & !bits::full(a + 1)) {
                    let (xa, xb) = (x | bits::bit(a), x | bits::bit(b));
                    if flat_of(lat, xa) != flat_of(lat, xb) && !sys.is_feasible(xa | xb) {
                        v.push(format!("{}: {} ∪ {{{a},{b}}} not feasible", name(sys), sys.format_set(x)));
                    }
                }
            }
        }
        let covers = |lo: FlatId, hi: FlatId| lat.lt(lo, hi) && (0..lat.len()).all(|c| !(lat.lt(lo, c) && lat.lt(c, hi)));
        for a in 0..lat.len() {
            for b in 0..lat.len() {
                let (j, m) = (lat.join(a, b), lat.meet(a, b));
                if a != b && covers(a, j) && covers(b, j) && !(covers(m, a) && covers(m, b)) {
                    v.push(format!("{}: not lower semimodular at {}, {}", name(sys), lat.label(a), lat.label(b)));
                }
            }
        }
    }
    v
}

/// The four continuation laws, over all flats and feasible sets.
pub fn continuations(corpus: &[Prepared]) -> Violations {
    let mut v = Vec::new();
    for p in corpus {
        let (sys, lat) = (&p.system, &p.lattice);
        for &x in sys.feasible() {
            let fx = flat_of(lat, x);
            for b in 0..lat.len() {
                if !lat.leq(b, fx) {
                    continue;
                }
                for e in bits::elems(sys.gamma(x)) {
                    if !bits::contains(lat.gamma(b), e) && !lat.leq(b, flat_of(lat, x | bits::bit(e))) {
                        v.push(format!("{}: continuation not inherited by lower flat at {}, {}, {e}", name(sys), sys.format_set(x), lat.label(b)));
                    }
                }
            }
        }
        for a in 0..lat.len() {
            for b in 0..lat.len() {
                let (ga, gb, xa, xb) = (lat.gamma(a), lat.gamma(b), lat.xi(a), lat.xi(b));
                if lat.leq(a, b) && !bits::is_subset(gb, ga | xa) {
                    v.push(format!("{}: continuations not monotone at {}, {}", name(sys), lat.label(a), lat.label(b)));
                }
                let j = lat.join(a, b);
                if !bits::is_subset(lat.gamma(j), ga | gb) {
                    v.push(format!("{}: join continuations escape at {}, {}", name(sys), lat.label(a), lat.label(b)));
                }
                if !bits::is_subset(lat.gamma(j) | lat.xi(j), (ga | xa) & (gb | xb)) {
                    v.push(format!("{}: join span escapes at {}, {}", name(sys), lat.label(a), lat.label(b)));
                }
            }
        }
    }
    v
}

/// Contraction composes, and feasible orderings and strong exchange exist.
pub fn contraction_laws(corpus: &[Prepared]) -> Violations {
    let mut v = Vec::new();
    for p in corpus {
        let sys = &p.system;
        for &x in sys.feasible() {
            let con = sys.contract(x).unwrap();
            let w = sys.contraction_ground(x);
            for &y in con.feasible() {
                let y_orig = bits::expand(y, w);
                let lhs = con.contract(y).unwrap();
                let rhs = sys.contract(x | y_orig).unwrap();
                let same = lhs == rhs;
                if !same {
                    v.push(format!("{}: (F/{})/{} ≠ F/{}", name(sys), sys.format_set(x), con.format_set(y), sys.format_set(x | y_orig)));
                }
            }
            let order = sys.feasible_ordering(x).unwrap();
            for &y in sys.feasible() {
                if bits::len(x) > bits::len(y) && sys.strong_exchange(&order, y).is_err() {
                    v.push(format!("{}: strong exchange fails for {}, {}", name(sys), sys.format_set(x), sys.format_set(y)));
                }
            }
        }
    }
    v
}

fn product_by_definition(lat: &FlatLattice, a: &Covector, b: &Covector, n: usize) -> SignVector {
    let j = lat.join(a.support, b.support);
    let ga = lat.gamma(a.support);
    let mut s = SignVector::ones(n);
    for e in 0..n {
        if bits::contains(lat.xi(j), e) {
            s.set(e, Sign::Zero);
        } else if bits::contains(lat.gamma(j), e) {
            s.set(e, if bits::contains(ga, e) { a.signs.get(e) } else { b.signs.get(e) });
        }
    }
    s
}

fn leq_by_definition(lat: &FlatLattice, a: &Covector, b: &Covector) -> bool {
    let common = lat.gamma(a.support) & lat.gamma(b.support);
    lat.leq(a.support, b.support) && a.signs.agrees_on(&b.signs, common)
}

/// Largest covector set for which associativity is checked on all triples.
pub const TRIPLE_LIMIT: usize = 128;

/// The six product laws on covectors of every greedoid, with the product
/// recomputed from its definition.
pub fn product_laws(corpus: &[Prepared]) -> Violations {
    let mut v = Vec::new();
    for p in corpus {
        let (sys, lat, cov) = (&p.system, &p.lattice, &p.covectors);
        let n = sys.n();
        let index: HashMap<SignVector, usize> = cov.iter().enumerate().map(|(i, c)| (c.signs, i)).collect();
        let k = cov.len();
        // table[i * k + j] is the index of cov[i] ∘ cov[j]
        let mut table = vec![usize::MAX; k * k];
        for (i, a) in cov.iter().enumerate() {
            for (j, b) in cov.iter().enumerate() {
                let ab = circ(lat, a, b);
                match index.get(&ab.signs) {
                    Some(&t) if ab.signs == product_by_definition(lat, a, b, n) => table[i * k + j] = t,
                    _ => v.push(format!("{}: product {a}∘{b} = {ab} is wrong", name(sys))),
                }
            }
        }
        if table.contains(&usize::MAX) {
            continue;
        }
        let prod = |i: usize, j: usize| table[i * k + j];
        for (i, a) in cov.iter().enumerate() {
            if prod(i, i) != i {
                v.push(format!("{}: {a}∘{a} ≠ {a}", name(sys)));
            }
            for (j, b) in cov.iter().enumerate() {
                let ab = prod(i, j);
                if a.leq(b) != (ab == j) {
                    v.push(format!("{}: order is not absorption at {a}, {b}", name(sys)));
                }
                if !a.leq(&cov[ab]) {
                    v.push(format!("{}: product not above left factor at {a}, {b}", name(sys)));
                }
                if lat.leq(a.support, b.support) && prod(j, i) != j {
                    v.push(format!("{}: lower support not absorbed at {a}, {b}", name(sys)));
                }
                if prod(ab, i) != ab {
                    v.push(format!("{}: left factor not absorbed at {a}, {b}", name(sys)));
                }
                if k <= TRIPLE_LIMIT {
                    for (c, cc) in cov.iter().enumerate().take(k) {
                        if prod(ab, c) != prod(i, prod(j, c)) {
                            v.push(format!("{}: product not associative at {a}, {b}, {cc}", name(sys)));
                        }
                    }
                }
            }
        }
    }
    v
}

/// The order criteria, `1` absorption, commutation off the separation set
/// and supports of products. Returns violations and whether some pair
/// shows that the converse of `1` absorption fails.
pub fn separation_sets(corpus: &[Prepared]) -> (Violations, bool) {
    let mut v = Vec::new();
    let mut converse_fails = false;
    for p in corpus {
        let (sys, lat, cov) = (&p.system, &p.lattice, &p.covectors);
        for a in cov {
            for b in cov {
                let ab = circ(lat, a, b);
                let ba = circ(lat, b, a);
                let sep = a.separation_set(b);
                let criteria = [
                    leq_by_definition(lat, a, b),
                    ab == *b,
                    (0..sys.n()).all(|e| a.signs.get(e) <= b.signs.get(e)),
                    sep == 0 && lat.leq(a.support, b.support),
                ];
                if criteria.iter().any(|&c| c != criteria[0]) || a.leq(b) != criteria[0] {
                    v.push(format!("{}: order criteria disagree at {a}, {b}: {criteria:?}", name(sys)));
                }
                for e in 0..sys.n() {
                    let one = a.signs.get(e) == Sign::One || b.signs.get(e) == Sign::One;
                    if one && (ab.signs.get(e) != Sign::One || ba.signs.get(e) != Sign::One) {
                        v.push(format!("{}: 1 not absorbing at {a}, {b}, {e}", name(sys)));
                    }
                    if !one && ab.signs.get(e) == Sign::One {
                        converse_fails = true;
                    }
                    if ab.signs.get(e) != ba.signs.get(e) {
                        let opposite = matches!(a.signs.get(e), Sign::Plus | Sign::Minus) && b.signs.get(e) == -a.signs.get(e);
                        if !bits::contains(sep, e) || !opposite {
                            v.push(format!("{}: products differ at {e} off the separation set of {a}, {b}", name(sys)));
                        }
                    }
                }
                if ab.support != lat.join(a.support, b.support) {
                    v.push(format!("{}: supp({a}∘{b}) is not the join", name(sys)));
                }
            }
        }
    }
    (v, converse_fails)
}

fn oig_covers(oig: &OrientedSystem, lo: &Covector, hi: &Covector) -> bool {
    lo.leq(hi) && lo != hi && oig.lattice().covers(lo.support, hi.support)
}

/// Every qualifying pair has a member covered by the second that agrees
/// with it off the separation set, wherever it is not `1`.
pub fn drop_witnesses(corpus: &[(String, OrientedSystem)]) -> Violations {
    let mut v = Vec::new();
    for (label, oig) in corpus {
        let lat = oig.lattice();
        for a in oig.covectors() {
            for b in oig.covectors() {
                if !lat.leq(a.support, b.support) || a.leq(b) {
                    continue;
                }
                let keep = bits::full(oig.n()) & !a.separation_set(b) & !b.signs.one();
                let exists = oig.covectors().iter().any(|d| oig_covers(oig, d, b) && d.signs.agrees_on(&b.signs, keep));
                if !exists {
                    v.push(format!("{label}: no witness for {a}, {b}"));
                    continue;
                }
                match drop_witness(oig, a, b) {
                    Ok(d) if oig_covers(oig, &d, b) && d.signs.agrees_on(&b.signs, keep) => {}
                    other => v.push(format!("{label}: drop_witness({a}, {b}) returned {other:?}")),
                }
            }
        }
    }
    v
}

/// Unique bottom, grading by support height, covers of supports, diamonds,
/// and the low-rank shapes.
pub fn poset_shape(corpus: &[(String, OrientedSystem)]) -> Violations {
    let mut v = Vec::new();
    for (label, oig) in corpus {
        let lat = oig.lattice();
        let cov = oig.covectors();
        let bottoms: Vec<&Covector> = cov.iter().filter(|c| cov.iter().all(|d| c.leq(d))).collect();
        if bottoms.len() != 1 || bottom(oig).ok().as_ref() != bottoms.first().copied() {
            v.push(format!("{label}: {} least elements", bottoms.len()));
        }
        let supports: HashSet<FlatId> = cov.iter().map(|c| c.support).collect();
        if supports.len() != lat.len() {
            v.push(format!("{label}: supp is not surjective"));
        }
        for a in cov {
            let ups: Vec<&Covector> = cov.iter().filter(|b| a.leq(b) && *b != a).collect();
            for b in &ups {
                let between = ups.iter().filter(|c| c.leq(b) && **c != *b).count();
                let covers = between == 0;
                if covers != lat.covers(a.support, b.support) {
                    v.push(format!("{label}: supp does not preserve the cover {a} < {b}"));
                }
                if lat.height(b.support) == lat.height(a.support) + 2 && between != 2 {
                    v.push(format!("{label}: interval [{a}, {b}] has {} elements", between + 2));
                }
            }
            if lat.height(a.support) != oig.height(a) {
                v.push(format!("{label}: rank of {a} is not the height of its support"));
            }
        }
        match oig.rank() {
            1 => {
                if let Err(e) = rank1_elements(oig) {
                    v.push(format!("{label}: {e}"));
                }
            }
            2 => {
                if let Err(e) = classify_rank2(oig) {
                    v.push(format!("{label}: {e}"));
                }
            }
            _ => {}
        }
    }
    v
}

/// Sizes of contractions and restrictions to `ξ`, against direct counts.
pub fn semigroup_cardinalities(corpus: &[(String, OrientedSystem)]) -> Violations {
    let mut v = Vec::new();
    for (label, oig) in corpus {
        let lat = oig.lattice();
        let sys = oig.system();
        for &x in sys.feasible() {
            let a = lat.flat_of_set(x);
            let below = oig.covectors().iter().filter(|c| lat.leq(c.support, a)).count();
            match contract_oig(oig, x) {
                Ok(c) if c.len() == below && c.passed() => {}
                Ok(c) => v.push(format!("{label}: contraction by {} has {} members, expected {below}", sys.format_set(x), c.len())),
                Err(e) => v.push(format!("{label}: contraction by {}: {e}", sys.format_set(x))),
            }
            let alpha = oig.covectors().iter().find(|c| c.support == a).expect("supp is surjective");
            let above = oig.covectors().iter().filter(|b| alpha.leq(b)).count();
            match (restriction_semigroup_check(oig, x), restrict_to_xi(oig, x)) {
                (Ok(k), Ok(r)) if k == above && r.len() == above && r.passed() => {}
                (k, r) => v.push(format!(
                    "{label}: restriction to ξ[{}]: {:?} / {:?}, expected {above}",
                    sys.format_set(x),
                    k,
                    r.map(|r| r.len())
                )),
            }
        }
    }
    v
}

/// Both validators agree on the full covector set of every loopless matroid.
pub fn matroid_agreement(corpus: &[Prepared]) -> Violations {
    let mut v = Vec::new();
    for p in corpus {
        let sys = &p.system;
        if sys.loops() != 0 || !check_axioms(sys, AxiomClass::Matroid, false).passed {
            continue;
        }
        let vectors: Vec<SignVector> = p.covectors.iter().map(|c| c.signs).collect();
        let oig = OrientedSystem::from_lattice(p.lattice.clone(), &vectors, false).unwrap();
        if oig.passed() != validate_om(&vectors).passed {
            v.push(format!("{}: OIG {} but OM {}", name(sys), oig.passed(), !oig.passed()));
        }
    }
    v
}
