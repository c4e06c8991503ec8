//! The lattice of flats of an interval greedoid.
//!
//! Feasible sets with the same continuations are equivalent; the classes are
//! the flats. Flats are ordered by reverse inclusion of their unions ξ, and
//! `μ(A)` is the flat of any maximal feasible subset of `A`.

use std::collections::HashMap;

use crate::bits::{self, BitSet, ElemSet};
use crate::error::{Error, Result};
use crate::setsys::{check_axioms, AxiomClass, SetSystem};
use crate::topo::poset::FinitePoset;

pub type FlatId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat {
    pub id: FlatId,
    /// The feasible sets of the class, in canonical order.
    pub members: Vec<ElemSet>,
    pub gamma: ElemSet,
    pub xi: ElemSet,
    pub corank: usize,
}

const MAX_FLATS: usize = 4096;
const VERIFY_IN_DEBUG: usize = 128;

#[derive(Clone, Debug)]
pub struct FlatLattice {
    system: SetSystem,
    flats: Vec<Flat>,
    flat_of_feasible: Vec<FlatId>,
    leq: Vec<BitSet>,
    join: Vec<FlatId>,
    meet: Vec<FlatId>,
    upper_covers: Vec<Vec<FlatId>>,
    lower_covers: Vec<Vec<FlatId>>,
    top: FlatId,
    bottom: FlatId,
}

impl FlatLattice {
    /// Validates the interval greedoid axioms, then builds the lattice.
    pub fn new(sys: &SetSystem) -> Result<Self> {
        let report = check_axioms(sys, AxiomClass::IntervalGreedoid, false);
        if let Some(v) = report.violations.first() {
            return Err(Error::AxiomFailure {
                class: AxiomClass::IntervalGreedoid.to_string(),
                detail: v.describe(sys.ground()),
            });
        }
        Self::from_interval_greedoid(sys.clone())
    }

    /// Builds the lattice of a system already known to be an interval greedoid.
    pub fn from_interval_greedoid(system: SetSystem) -> Result<Self> {
        let mut by_gamma: HashMap<ElemSet, Vec<ElemSet>> = HashMap::new();
        for &x in system.feasible() {
            by_gamma.entry(system.gamma(x)).or_default().push(x);
        }
        if by_gamma.len() > MAX_FLATS {
            return Err(Error::CapExceeded { what: "number of flats".into(), limit: MAX_FLATS, actual: by_gamma.len() });
        }
        let mut flats: Vec<Flat> = by_gamma
            .into_iter()
            .map(|(gamma, members)| {
                let xi = members.iter().fold(0, |m, &s| m | s);
                let corank = bits::len(members[0]);
                Flat { id: 0, members, gamma, xi, corank }
            })
            .collect();
        flats.sort_by(|a, b| b.corank.cmp(&a.corank).then_with(|| bits::lex_cmp(a.xi, b.xi)));
        let mut flat_of_feasible = vec![0; system.feasible().len()];
        for (id, f) in flats.iter_mut().enumerate() {
            f.id = id;
            for &m in &f.members {
                flat_of_feasible[system.position(m).expect("member is feasible")] = id;
            }
        }
        let k = flats.len();
        let mut leq = vec![BitSet::new(k); k];
        for a in 0..k {
            for b in 0..k {
                if bits::is_subset(flats[b].xi, flats[a].xi) {
                    leq[a].insert(b);
                }
            }
        }
        let mut lat = FlatLattice {
            system,
            flats,
            flat_of_feasible,
            leq,
            join: Vec::new(),
            meet: Vec::new(),
            upper_covers: vec![Vec::new(); k],
            lower_covers: vec![Vec::new(); k],
            top: 0,
            bottom: 0,
        };
        lat.top = lat.flat_of_set(0);
        lat.bottom = lat.mu(lat.system.full());
        let mut join = vec![0; k * k];
        let mut meet = vec![0; k * k];
        for a in 0..k {
            for b in a..k {
                let j = lat.mu(lat.flats[a].xi & lat.flats[b].xi);
                let m = lat.mu(lat.flats[a].xi | lat.flats[b].xi);
                join[a * k + b] = j;
                join[b * k + a] = j;
                meet[a * k + b] = m;
                meet[b * k + a] = m;
            }
        }
        lat.join = join;
        lat.meet = meet;
        for a in 0..k {
            for b in lat.leq[a].iter() {
                if lat.flats[a].corank == lat.flats[b].corank + 1 {
                    lat.upper_covers[a].push(b);
                    lat.lower_covers[b].push(a);
                }
            }
        }
        if cfg!(debug_assertions) && k <= VERIFY_IN_DEBUG {
            lat.verify()?;
        }
        Ok(lat)
    }

    pub fn system(&self) -> &SetSystem {
        &self.system
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn flat(&self, id: FlatId) -> &Flat {
        &self.flats[id]
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// The flat `[∅]`.
    pub fn top(&self) -> FlatId {
        self.top
    }

    /// The flat of the maximal feasible sets.
    pub fn bottom(&self) -> FlatId {
        self.bottom
    }

    /// Length of the lattice: the corank of the bottom flat.
    pub fn rank(&self) -> usize {
        self.flats[self.bottom].corank
    }

    /// Height above the bottom flat.
    pub fn height(&self, a: FlatId) -> usize {
        self.rank() - self.flats[a].corank
    }

    #[inline]
    pub fn xi(&self, a: FlatId) -> ElemSet {
        self.flats[a].xi
    }

    #[inline]
    pub fn gamma(&self, a: FlatId) -> ElemSet {
        self.flats[a].gamma
    }

    /// Flat containing a feasible set; panics if `x` is not feasible.
    #[inline]
    pub fn flat_of_set(&self, x: ElemSet) -> FlatId {
        self.flat_of_feasible[self.system.position(x).expect("flat_of_set needs a feasible set")]
    }

    pub fn try_flat_of_set(&self, x: ElemSet) -> Result<FlatId> {
        self.system
            .position(x)
            .map(|p| self.flat_of_feasible[p])
            .ok_or_else(|| Error::NotFeasible(self.system.format_set(x)))
    }

    /// μ without a subset check.
    #[inline]
    pub fn mu(&self, a: ElemSet) -> FlatId {
        self.flat_of_set(self.system.grow_within(0, a))
    }

    pub fn mu_map(&self, a: ElemSet) -> Result<FlatId> {
        if !bits::is_subset(a, self.system.full()) {
            return Err(Error::NotSubset(format!("{a:#b}")));
        }
        Ok(self.mu(a))
    }

    #[inline]
    pub fn leq(&self, a: FlatId, b: FlatId) -> bool {
        self.leq[a].contains(b)
    }

    #[inline]
    pub fn lt(&self, a: FlatId, b: FlatId) -> bool {
        a != b && self.leq(a, b)
    }

    #[inline]
    pub fn join(&self, a: FlatId, b: FlatId) -> FlatId {
        self.join[a * self.flats.len() + b]
    }

    #[inline]
    pub fn meet(&self, a: FlatId, b: FlatId) -> FlatId {
        self.meet[a * self.flats.len() + b]
    }

    pub fn upper_covers(&self, a: FlatId) -> &[FlatId] {
        &self.upper_covers[a]
    }

    pub fn lower_covers(&self, a: FlatId) -> &[FlatId] {
        &self.lower_covers[a]
    }

    pub fn covers(&self, a: FlatId, b: FlatId) -> bool {
        self.upper_covers[a].contains(&b)
    }

    /// `[X] ≤ [Y]` iff some feasible superset of a member of `[Y]` lies in `[X]`.
    pub fn leq_by_extension(&self, a: FlatId, b: FlatId) -> bool {
        let y = self.flats[b].members[0];
        self.flats[a].members.iter().any(|&w| bits::is_subset(y, w))
    }

    /// Flats `c` with `lo ≤ c ≤ hi`.
    pub fn interval(&self, lo: FlatId, hi: FlatId) -> Vec<FlatId> {
        self.leq[lo].iter().filter(|&c| self.leq(c, hi)).collect()
    }

    pub fn label(&self, a: FlatId) -> String {
        self.system.format_set(self.flats[a].xi)
    }

    /// Checks partial order, lattice, grading and lower semimodularity.
    pub fn verify(&self) -> Result<()> {
        let k = self.len();
        let bad = |msg: String| Err(Error::Internal(msg));
        for a in 0..k {
            for b in 0..k {
                if self.leq(a, b) != self.leq_by_extension(a, b) {
                    return bad(format!("order criteria disagree on {}, {}", self.label(a), self.label(b)));
                }
                if a != b && self.leq(a, b) && self.leq(b, a) {
                    return bad("order not antisymmetric".into());
                }
                let (j, m) = (self.join(a, b), self.meet(a, b));
                if !(self.leq(a, j) && self.leq(b, j) && self.leq(m, a) && self.leq(m, b)) {
                    return bad(format!("bounds of {}, {} are not bounds", self.label(a), self.label(b)));
                }
                for c in 0..k {
                    if self.leq(a, c) && self.leq(b, c) && !self.leq(j, c) {
                        return bad(format!("join of {}, {} is not least", self.label(a), self.label(b)));
                    }
                    if self.leq(c, a) && self.leq(c, b) && !self.leq(c, m) {
                        return bad(format!("meet of {}, {} is not greatest", self.label(a), self.label(b)));
                    }
                }
            }
            for &b in &self.upper_covers[a] {
                if self.flats[a].corank != self.flats[b].corank + 1 {
                    return bad("cover does not change corank by one".into());
                }
            }
            let strictly_above = self.leq[a].iter().filter(|&b| b != a).count();
            if strictly_above > 0 && self.upper_covers[a].is_empty() {
                return bad(format!("{} has no upper cover", self.label(a)));
            }
        }
        if self.flats[self.top].corank != 0 {
            return bad("top flat has nonzero corank".into());
        }
        for c in 0..k {
            let lc = &self.lower_covers[c];
            for (i, &a) in lc.iter().enumerate() {
                for &b in &lc[i + 1..] {
                    let m = self.meet(a, b);
                    if !(self.covers(m, a) && self.covers(m, b)) {
                        return bad(format!("not lower semimodular below {}", self.label(c)));
                    }
                }
            }
        }
        Ok(())
    }

    /// The lattice as a generic poset on flat ids, labeled by ξ.
    pub fn to_poset(&self) -> FinitePoset {
        let labels = (0..self.len()).map(|a| self.label(a)).collect();
        FinitePoset::from_leq(labels, |a, b| self.leq(a, b)).expect("flat order is a partial order")
    }

    /// Hasse diagram in DOT with one node per flat, labeled by ξ.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph flats {\n  rankdir=BT;\n");
        for a in 0..self.len() {
            s.push_str(&format!("  f{a} [label=\"{}\"];\n", self.label(a)));
        }
        for a in 0..self.len() {
            for &b in &self.upper_covers[a] {
                s.push_str(&format!("  f{a} -> f{b};\n"));
            }
        }
        s.push_str("}\n");
        s
    }
}

/// The interval greedoid whose flat lattice is the lower semimodular
/// lattice `l`, with the isomorphism from flat ids to elements of `l`.
///
/// Ground elements are the meet-irreducibles of `l`, labeled as in `l`.
pub fn ig_from_semimodular_lattice(l: &FinitePoset) -> Result<(SetSystem, Vec<usize>)> {
    if l.is_empty() {
        return Err(Error::NotALattice("empty poset".into()));
    }
    let meet = l.meet_table()?;
    l.join_table()?;
    for c in 0..l.len() {
        let lc = l.lower_covers(c);
        for (i, &a) in lc.iter().enumerate() {
            for &b in &lc[i + 1..] {
                let m = meet[a][b];
                if !(l.covers(m, a) && l.covers(m, b)) {
                    return Err(Error::NotSemimodular(format!(
                        "{} and {} are covered by {} but their meet {} is not covered by both",
                        l.label(a),
                        l.label(b),
                        l.label(c),
                        l.label(m)
                    )));
                }
            }
        }
    }
    let top = l.top().ok_or_else(|| Error::NotALattice("no maximum".into()))?;
    let irreducibles: Vec<usize> = (0..l.len()).filter(|&x| l.upper_covers(x).len() == 1).collect();
    if irreducibles.len() > bits::MAX_GROUND {
        return Err(Error::GroundTooLarge(irreducibles.len()));
    }
    let labels: Vec<&str> = irreducibles.iter().map(|&x| l.label(x)).collect();
    let ground = crate::setsys::GroundSet::new(&labels)?;

    let mut seen: HashMap<ElemSet, usize> = HashMap::from([(0, top)]);
    let mut frontier = vec![0 as ElemSet];
    while let Some(x) = frontier.pop() {
        let m = seen[&x];
        for (i, &e) in irreducibles.iter().enumerate() {
            let next = x | bits::bit(i);
            if next == x || seen.contains_key(&next) {
                continue;
            }
            let m2 = meet[m][e];
            if l.covers(m2, m) {
                seen.insert(next, m2);
                frontier.push(next);
            }
        }
    }
    let sys = SetSystem::new(ground, seen.keys().copied())?;
    let lat = FlatLattice::new(&sys).map_err(|e| Error::Internal(format!("constructed system: {e}")))?;
    let iso: Vec<usize> = lat.flats().iter().map(|f| seen[&f.members[0]]).collect();
    let mut hit = vec![false; l.len()];
    for &x in &iso {
        hit[x] = true;
    }
    if iso.len() != l.len() || hit.contains(&false) {
        return Err(Error::Internal("flat lattice is not in bijection with the input".into()));
    }
    for a in 0..lat.len() {
        for b in 0..lat.len() {
            if lat.leq(a, b) != l.leq(iso[a], iso[b]) {
                return Err(Error::Internal("meet map is not an order isomorphism".into()));
            }
        }
    }
    Ok((sys, iso))
}
