//! Finite set systems over an ordered ground set.
//!
//! A [`SetSystem`] stores its feasible sets as bit masks in canonical order
//! (by size, then lexicographically). Axiom checks, feasible orderings,
//! contraction, restriction, rank and closure live here.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{self, ElemSet, MAX_GROUND};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl GroundSet {
    pub fn new<S: AsRef<str>>(labels: &[S]) -> Result<Self> {
        if labels.len() > MAX_GROUND {
            return Err(Error::GroundTooLarge(labels.len()));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.as_ref().to_string(), i).is_some() {
                return Err(Error::DuplicateLabel(l.as_ref().to_string()));
            }
        }
        Ok(GroundSet { labels: labels.iter().map(|l| l.as_ref().to_string()).collect(), index })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn full(&self) -> ElemSet {
        bits::full(self.len())
    }

    pub fn parse_subset<S: AsRef<str>>(&self, labels: &[S]) -> Result<ElemSet> {
        let mut m = 0;
        for l in labels {
            let i = self.index_of(l.as_ref()).ok_or_else(|| Error::UnknownLabel(l.as_ref().to_string()))?;
            m |= bits::bit(i);
        }
        Ok(m)
    }

    pub fn labels_of(&self, s: ElemSet) -> Vec<String> {
        bits::elems(s).map(|i| self.labels[i].clone()).collect()
    }

    /// `{x,y}` style rendering.
    pub fn format_set(&self, s: ElemSet) -> String {
        format!("{{{}}}", self.labels_of(s).join(","))
    }

    /// The sub-ground set on the elements of `w`, in canonical order.
    pub fn subset_ground(&self, w: ElemSet) -> GroundSet {
        let labels: Vec<&str> = bits::elems(w).map(|i| self.label(i)).collect();
        GroundSet::new(&labels).expect("labels of a ground set are distinct")
    }
}

#[derive(Clone, Debug)]
enum Lookup {
    Dense(Vec<u32>),
    Sparse(HashMap<ElemSet, u32>),
}

const DENSE_LIMIT: usize = 16;
const ABSENT: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct SetSystem {
    ground: GroundSet,
    feasible: Vec<ElemSet>,
    lookup: Lookup,
}

impl PartialEq for SetSystem {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.feasible == other.feasible
    }
}

impl Eq for SetSystem {}

/// Builds a system from labels and label subsets.
pub fn build_set_system<S: AsRef<str>, T: AsRef<str>>(labels: &[S], members: &[Vec<T>]) -> Result<SetSystem> {
    let ground = GroundSet::new(labels)?;
    let sets = members.iter().map(|m| ground.parse_subset(m)).collect::<Result<Vec<_>>>()?;
    SetSystem::new(ground, sets)
}

impl SetSystem {
    pub fn new<I: IntoIterator<Item = ElemSet>>(ground: GroundSet, sets: I) -> Result<Self> {
        let full = ground.full();
        let mut feasible: Vec<ElemSet> = Vec::new();
        for s in sets {
            if !bits::is_subset(s, full) {
                return Err(Error::NotSubset(format!("{s:#b}")));
            }
            feasible.push(s);
        }
        feasible.sort_by(|&a, &b| bits::canonical_cmp(a, b));
        feasible.dedup();
        let lookup = if ground.len() <= DENSE_LIMIT {
            let mut v = vec![ABSENT; 1usize << ground.len()];
            for (k, &s) in feasible.iter().enumerate() {
                v[s as usize] = k as u32;
            }
            Lookup::Dense(v)
        } else {
            Lookup::Sparse(feasible.iter().enumerate().map(|(k, &s)| (s, k as u32)).collect())
        };
        Ok(SetSystem { ground, feasible, lookup })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    pub fn full(&self) -> ElemSet {
        self.ground.full()
    }

    /// Feasible sets in canonical order.
    pub fn feasible(&self) -> &[ElemSet] {
        &self.feasible
    }

    /// Position of `s` in [`SetSystem::feasible`], if feasible.
    #[inline]
    pub fn position(&self, s: ElemSet) -> Option<usize> {
        let k = match &self.lookup {
            Lookup::Dense(v) => *v.get(s as usize)?,
            Lookup::Sparse(m) => *m.get(&s)?,
        };
        (k != ABSENT).then_some(k as usize)
    }

    #[inline]
    pub fn is_feasible(&self, s: ElemSet) -> bool {
        self.position(s).is_some()
    }

    pub fn format_set(&self, s: ElemSet) -> String {
        self.ground.format_set(s)
    }

    /// Elements lying in no feasible set.
    pub fn loops(&self) -> ElemSet {
        let used = self.feasible.iter().fold(0, |m, &s| m | s);
        self.full() & !used
    }

    /// Largest feasible cardinality.
    pub fn rank(&self) -> usize {
        self.feasible.last().map_or(0, |&s| bits::len(s))
    }

    fn require_feasible(&self, x: ElemSet) -> Result<()> {
        if self.is_feasible(x) {
            Ok(())
        } else {
            Err(Error::NotFeasible(self.describe(x)))
        }
    }

    fn require_subset(&self, a: ElemSet) -> Result<()> {
        if bits::is_subset(a, self.full()) {
            Ok(())
        } else {
            Err(Error::NotSubset(format!("{a:#b}")))
        }
    }

    fn describe(&self, s: ElemSet) -> String {
        if bits::is_subset(s, self.full()) {
            self.format_set(s)
        } else {
            format!("{s:#b}")
        }
    }

    /// Γ(X) without checking that X is feasible.
    #[inline]
    pub fn gamma(&self, x: ElemSet) -> ElemSet {
        let mut g = 0;
        for e in bits::elems(self.full() & !x) {
            if self.is_feasible(x | bits::bit(e)) {
                g |= bits::bit(e);
            }
        }
        g
    }

    pub fn continuations(&self, x: ElemSet) -> Result<ElemSet> {
        self.require_feasible(x)?;
        Ok(self.gamma(x))
    }

    /// Lexicographically least ordering of `x` all of whose prefixes are feasible.
    pub fn feasible_ordering(&self, x: ElemSet) -> Result<Vec<usize>> {
        self.require_feasible(x)?;
        let mut out = Vec::with_capacity(bits::len(x));
        if self.ordering_from(0, x, &mut out) {
            Ok(out)
        } else {
            Err(Error::Internal(format!("no feasible ordering of {}", self.format_set(x))))
        }
    }

    fn ordering_from(&self, prefix: ElemSet, target: ElemSet, out: &mut Vec<usize>) -> bool {
        if prefix == target {
            return true;
        }
        for e in bits::elems(target & !prefix) {
            let next = prefix | bits::bit(e);
            if self.is_feasible(next) {
                out.push(e);
                if self.ordering_from(next, target, out) {
                    return true;
                }
                out.pop();
            }
        }
        false
    }

    /// Elements of X∖Y, increasing along `x_ordering`, whose running unions
    /// with Y are feasible; the lexicographically least choice is returned.
    pub fn strong_exchange(&self, x_ordering: &[usize], y: ElemSet) -> Result<Vec<usize>> {
        let mut prefix = 0;
        for &e in x_ordering {
            if e >= self.n() || bits::contains(prefix, e) {
                return Err(Error::Precondition("ordering repeats or leaves the ground set".into()));
            }
            prefix |= bits::bit(e);
            if !self.is_feasible(prefix) {
                return Err(Error::Precondition(format!(
                    "prefix {} of the ordering is not feasible",
                    self.format_set(prefix)
                )));
            }
        }
        self.require_feasible(y)?;
        let x = prefix;
        if bits::len(y) >= bits::len(x) {
            return Err(Error::Precondition("need |Y| < |X|".into()));
        }
        let k = bits::len(x) - bits::len(y);
        let candidates: Vec<usize> = x_ordering.iter().copied().filter(|&e| !bits::contains(y, e)).collect();
        let mut best: Option<Vec<usize>> = None;
        let mut cur = Vec::with_capacity(k);
        self.exchange_search(&candidates, 0, y, k, &mut cur, &mut best);
        best.ok_or_else(|| Error::Internal("strong exchange search found no subset".into()))
    }

    fn exchange_search(
        &self,
        cand: &[usize],
        from: usize,
        acc: ElemSet,
        k: usize,
        cur: &mut Vec<usize>,
        best: &mut Option<Vec<usize>>,
    ) {
        if cur.len() == k {
            if best.as_ref().is_none_or(|b| *cur < *b) {
                *best = Some(cur.clone());
            }
            return;
        }
        for i in from..cand.len() {
            let next = acc | bits::bit(cand[i]);
            if self.is_feasible(next) {
                cur.push(cand[i]);
                self.exchange_search(cand, i + 1, next, k, cur, best);
                cur.pop();
            }
        }
    }

    /// F/X over the ground set formed by the union of its members.
    pub fn contract(&self, x: ElemSet) -> Result<SetSystem> {
        self.require_feasible(x)?;
        Ok(self.contract_unchecked(x))
    }

    pub(crate) fn contract_unchecked(&self, x: ElemSet) -> SetSystem {
        let members: Vec<ElemSet> = self
            .feasible
            .iter()
            .filter(|&&z| bits::is_subset(x, z))
            .map(|&z| z & !x)
            .collect();
        let w = members.iter().fold(0, |m, &s| m | s);
        let ground = self.ground.subset_ground(w);
        SetSystem::new(ground, members.into_iter().map(|s| bits::compress(s, w)))
            .expect("compressed members lie in the new ground")
    }

    /// The union of all members of F/X, as a subset of this ground set.
    pub fn contraction_ground(&self, x: ElemSet) -> ElemSet {
        self.feasible
            .iter()
            .filter(|&&z| bits::is_subset(x, z))
            .fold(0, |m, &z| m | (z & !x))
    }

    /// F|_W over the ground set W.
    pub fn restrict(&self, w: ElemSet) -> Result<SetSystem> {
        self.require_subset(w)?;
        let ground = self.ground.subset_ground(w);
        let members = self
            .feasible
            .iter()
            .filter(|&&z| bits::is_subset(z, w))
            .map(|&z| bits::compress(z, w));
        SetSystem::new(ground, members)
    }

    /// Largest feasible cardinality inside `a`.
    pub fn rank_of(&self, a: ElemSet) -> usize {
        self.feasible
            .iter()
            .rev()
            .find(|&&z| bits::is_subset(z, a))
            .map_or(0, |&z| bits::len(z))
    }

    /// Rank of `a` and its closure `{e : rank(a ∪ e) = rank(a)}`.
    pub fn rank_and_closure(&self, a: ElemSet) -> Result<(usize, ElemSet)> {
        self.require_subset(a)?;
        let r = self.rank_of(a);
        let closure = bits::elems(self.full()).fold(a, |c, e| {
            if self.rank_of(a | bits::bit(e)) == r {
                c | bits::bit(e)
            } else {
                c
            }
        });
        Ok((r, closure))
    }

    /// True if every proper superset of `a` has larger rank.
    pub fn is_closed(&self, a: ElemSet) -> bool {
        let r = self.rank_of(a);
        bits::elems(self.full() & !a).all(|e| self.rank_of(a | bits::bit(e)) > r)
    }

    /// Inclusion-maximal feasible subsets of `a`.
    pub fn maximal_feasible_in(&self, a: ElemSet) -> Result<Vec<ElemSet>> {
        self.require_subset(a)?;
        let inside: Vec<ElemSet> = self.feasible.iter().copied().filter(|&z| bits::is_subset(z, a)).collect();
        let maximal: Vec<ElemSet> = inside
            .iter()
            .copied()
            .filter(|&z| !inside.iter().any(|&w| w != z && bits::is_subset(z, w)))
            .collect();
        debug_assert!(maximal.windows(2).all(|p| {
            bits::len(p[0]) == bits::len(p[1]) && self.contract_unchecked(p[0]) == self.contract_unchecked(p[1])
        }));
        Ok(maximal)
    }

    /// A maximal feasible subset of `a`, grown greedily by least index.
    pub fn grow_within(&self, start: ElemSet, a: ElemSet) -> ElemSet {
        let mut x = start;
        'outer: loop {
            for e in bits::elems(a & !x) {
                if self.is_feasible(x | bits::bit(e)) {
                    x |= bits::bit(e);
                    continue 'outer;
                }
            }
            return x;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AxiomClass {
    Accessible,
    Greedoid,
    IntervalGreedoid,
    Matroid,
    Antimatroid,
}

impl AxiomClass {
    pub const ALL: [AxiomClass; 5] = [
        AxiomClass::Accessible,
        AxiomClass::Greedoid,
        AxiomClass::IntervalGreedoid,
        AxiomClass::Matroid,
        AxiomClass::Antimatroid,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomClass::Accessible => "accessible",
            AxiomClass::Greedoid => "greedoid",
            AxiomClass::IntervalGreedoid => "interval_greedoid",
            AxiomClass::Matroid => "matroid",
            AxiomClass::Antimatroid => "antimatroid",
        }
    }

    pub fn axioms(self) -> &'static [Axiom] {
        match self {
            AxiomClass::Accessible => &[Axiom::IG1],
            AxiomClass::Greedoid => &[Axiom::IG1, Axiom::IG2],
            AxiomClass::IntervalGreedoid => &[Axiom::IG1, Axiom::IG2, Axiom::IG3],
            AxiomClass::Matroid => &[Axiom::M1, Axiom::IG2],
            AxiomClass::Antimatroid => &[Axiom::IG1, Axiom::IG2, Axiom::UIP],
        }
    }
}

impl fmt::Display for AxiomClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for AxiomClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        AxiomClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Malformed(format!("unknown axiom class `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Axiom {
    IG1,
    IG2,
    IG3,
    M1,
    LIP,
    UIP,
}

/// A falsifying instance. Unused witness slots are `None`; an empty family
/// is reported as an IG1 (or M1) violation with no witnesses at all.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub x: Option<ElemSet>,
    pub y: Option<ElemSet>,
    pub z: Option<ElemSet>,
    pub e: Option<usize>,
}

impl Violation {
    fn new(axiom: Axiom) -> Self {
        Violation { axiom, x: None, y: None, z: None, e: None }
    }

    pub fn describe(&self, ground: &GroundSet) -> String {
        let mut parts = vec![format!("{:?}", self.axiom)];
        for (name, s) in [("X", self.x), ("Y", self.y), ("Z", self.z)] {
            if let Some(s) = s {
                parts.push(format!("{name}={}", ground.format_set(s)));
            }
        }
        if let Some(e) = self.e {
            parts.push(format!("e={}", ground.label(e)));
        }
        parts.join(" ")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub class_checked: AxiomClass,
    pub passed: bool,
    pub violations: Vec<Violation>,
    /// Elements in no feasible set; admitted, but listed here.
    pub loops: ElemSet,
}

/// Checks the axioms of `class`, keeping the first witness per axiom
/// unless `exhaustive` is set.
pub fn check_axioms(sys: &SetSystem, class: AxiomClass, exhaustive: bool) -> AxiomReport {
    let mut violations = Vec::new();
    for &ax in class.axioms() {
        violations.extend(axiom_violations(sys, ax, exhaustive));
    }
    AxiomReport { class_checked: class, passed: violations.is_empty(), violations, loops: sys.loops() }
}

impl SetSystem {
    pub fn is_interval_greedoid(&self) -> bool {
        check_axioms(self, AxiomClass::IntervalGreedoid, false).passed
    }
}

/// Violations of a single axiom, in the iteration order of canonical
/// feasible sets.
pub fn axiom_violations(sys: &SetSystem, axiom: Axiom, exhaustive: bool) -> Vec<Violation> {
    let mut out = Vec::new();
    let f = sys.feasible();
    let n = sys.n();
    let mut push = |v: Violation| -> bool {
        out.push(v);
        exhaustive
    };
    match axiom {
        Axiom::IG1 | Axiom::M1 if f.is_empty() => {
            push(Violation::new(axiom));
        }
        Axiom::IG1 => {
            for &x in f {
                if x != 0 && !bits::elems(x).any(|e| sys.is_feasible(x & !bits::bit(e))) && !push(Violation {
                    x: Some(x),
                    ..Violation::new(axiom)
                }) {
                    break;
                }
            }
        }
        Axiom::M1 => {
            'm1: for &x in f {
                for e in bits::elems(x) {
                    let y = x & !bits::bit(e);
                    if !sys.is_feasible(y)
                        && !push(Violation { x: Some(x), y: Some(y), e: Some(e), ..Violation::new(axiom) })
                    {
                        break 'm1;
                    }
                }
            }
        }
        Axiom::IG2 => {
            'ig2: for &x in f {
                for &y in f {
                    if bits::len(y) >= bits::len(x) {
                        break;
                    }
                    let ok = bits::elems(x & !y).any(|e| sys.is_feasible(y | bits::bit(e)));
                    if !ok && !push(Violation { x: Some(x), y: Some(y), ..Violation::new(axiom) }) {
                        break 'ig2;
                    }
                }
            }
        }
        Axiom::IG3 => {
            'ig3: for &x in f {
                for e in bits::elems(sys.gamma(x)) {
                    let eb = bits::bit(e);
                    for &y in f {
                        if !bits::is_subset(x, y) || y & eb != 0 || sys.is_feasible(y | eb) {
                            continue;
                        }
                        for &z in f {
                            if bits::is_subset(y, z) && z & eb == 0 && sys.is_feasible(z | eb) {
                                let v = Violation { x: Some(x), y: Some(y), z: Some(z), e: Some(e), ..Violation::new(axiom) };
                                if !push(v) {
                                    break 'ig3;
                                }
                            }
                        }
                    }
                }
            }
        }
        Axiom::UIP | Axiom::LIP => {
            'ip: for &x in f {
                for &y in f {
                    if x == y || !bits::is_subset(x, y) {
                        continue;
                    }
                    for e in 0..n {
                        let eb = bits::bit(e);
                        if y & eb != 0 {
                            continue;
                        }
                        let (lo, hi) = (sys.is_feasible(x | eb), sys.is_feasible(y | eb));
                        let bad = if axiom == Axiom::UIP { lo && !hi } else { hi && !lo };
                        if bad && !push(Violation { x: Some(x), y: Some(y), e: Some(e), ..Violation::new(axiom) }) {
                            break 'ip;
                        }
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn colinear() -> SetSystem {
        build_set_system(
            &["x", "y", "z"],
            &[vec![], vec!["x"], vec!["z"], vec!["x", "y"], vec!["x", "z"], vec!["y", "z"], vec!["x", "y", "z"]],
        )
        .unwrap()
    }

    fn set(sys: &SetSystem, l: &[&str]) -> ElemSet {
        sys.ground().parse_subset(l).unwrap()
    }

    #[test]
    fn build_rejects_bad_labels() {
        assert_eq!(build_set_system(&["a", "a"], &[Vec::<&str>::new()]).unwrap_err(), Error::DuplicateLabel("a".into()));
        assert_eq!(build_set_system(&["a"], &[vec!["b"]]).unwrap_err(), Error::UnknownLabel("b".into()));
    }

    #[test]
    fn build_dedups_and_orders() {
        let s = build_set_system(&["a", "b"], &[vec!["b", "a"], vec![], vec!["a", "b"], vec!["b"]]).unwrap();
        assert_eq!(s.feasible(), &[0b00, 0b10, 0b11]);
        let single = build_set_system(&["a"], &[Vec::<&str>::new()]).unwrap();
        assert_eq!(single.feasible(), &[0]);
    }

    #[test]
    fn colinear_is_interval_greedoid_and_antimatroid() {
        let s = colinear();
        for class in [AxiomClass::Accessible, AxiomClass::Greedoid, AxiomClass::IntervalGreedoid, AxiomClass::Antimatroid] {
            assert!(check_axioms(&s, class, false).passed, "{class}");
        }
        let m = check_axioms(&s, AxiomClass::Matroid, false);
        assert!(!m.passed);
        assert_eq!(m.violations[0].axiom, Axiom::M1);
    }

    #[test]
    fn missing_singletons_fail_accessibility() {
        let s = build_set_system(&["a", "b"], &[vec![], vec!["a", "b"]]).unwrap();
        let r = check_axioms(&s, AxiomClass::Accessible, false);
        assert!(!r.passed);
        assert_eq!(r.violations, vec![Violation { x: Some(0b11), ..Violation::new(Axiom::IG1) }]);
    }

    #[test]
    fn empty_set_is_not_inserted() {
        let s = build_set_system(&["a"], &[vec!["a"]]).unwrap();
        let r = check_axioms(&s, AxiomClass::Accessible, false);
        assert_eq!(r.violations[0].x, Some(0b1));
        let none = build_set_system::<&str, &str>(&["a"], &[]).unwrap();
        assert!(!check_axioms(&none, AxiomClass::Accessible, false).passed);
    }

    #[test]
    fn uniform_matroid_passes() {
        let s = build_set_system(
            &["x", "y", "z"],
            &[vec![], vec!["x"], vec!["y"], vec!["z"], vec!["x", "y"], vec!["x", "z"], vec!["y", "z"]],
        )
        .unwrap();
        assert!(check_axioms(&s, AxiomClass::Matroid, false).passed);
        assert!(check_axioms(&s, AxiomClass::IntervalGreedoid, false).passed);
        assert!(axiom_violations(&s, Axiom::LIP, false).is_empty());
    }

    #[test]
    fn ig3_witness_is_reported() {
        // X={a}, Y={a,b}, Z={a,b,d}, e=c
        let s = build_set_system(
            &["a", "b", "c", "d"],
            &[vec![], vec!["a"], vec!["a", "c"], vec!["a", "b"], vec!["a", "b", "d"], vec!["a", "b", "d", "c"]],
        )
        .unwrap();
        let v = axiom_violations(&s, Axiom::IG3, true);
        assert!(!v.is_empty());
        for w in v {
            let (x, y, z, e) = (w.x.unwrap(), w.y.unwrap(), w.z.unwrap(), bits::bit(w.e.unwrap()));
            assert!(bits::is_subset(x, y) && bits::is_subset(y, z));
            assert!(s.is_feasible(x | e) && s.is_feasible(z | e) && !s.is_feasible(y | e));
        }
    }

    #[test]
    fn exhaustive_lists_more() {
        let s = build_set_system(&["a", "b", "c"], &[vec![], vec!["a", "b"], vec!["b", "c"]]).unwrap();
        assert_eq!(axiom_violations(&s, Axiom::IG1, false).len(), 1);
        assert_eq!(axiom_violations(&s, Axiom::IG1, true).len(), 2);
    }

    #[test]
    fn orderings() {
        let s = colinear();
        assert_eq!(s.feasible_ordering(s.full()).unwrap(), vec![0, 1, 2]);
        assert_eq!(s.feasible_ordering(0).unwrap(), Vec::<usize>::new());
        assert_eq!(s.feasible_ordering(set(&s, &["y", "z"])).unwrap(), vec![2, 1]);
        assert!(s.feasible_ordering(set(&s, &["y"])).is_err());
    }

    #[test]
    fn strong_exchange_examples() {
        let s = colinear();
        assert_eq!(s.strong_exchange(&[0, 1, 2], set(&s, &["z"])).unwrap(), vec![0, 1]);
        assert_eq!(s.strong_exchange(&[2, 1], set(&s, &["x"])).unwrap(), vec![1]);
        assert_eq!(s.strong_exchange(&[0, 1, 2], 0).unwrap(), vec![0, 1, 2]);
        assert!(s.strong_exchange(&[1, 2], 0).is_err());
        assert!(s.strong_exchange(&[0], set(&s, &["z"])).is_err());
    }

    #[test]
    fn continuation_table() {
        let s = colinear();
        let table = [
            (vec![], vec!["x", "z"]),
            (vec!["x"], vec!["y", "z"]),
            (vec!["z"], vec!["x", "y"]),
            (vec!["x", "y"], vec!["z"]),
            (vec!["x", "z"], vec!["y"]),
            (vec!["y", "z"], vec!["x"]),
            (vec!["x", "y", "z"], vec![]),
        ];
        for (x, g) in table {
            assert_eq!(s.continuations(set(&s, &x)).unwrap(), set(&s, &g), "{x:?}");
        }
        assert!(s.continuations(set(&s, &["y"])).is_err());
    }

    #[test]
    fn contraction_examples() {
        let s = colinear();
        let c = s.contract(set(&s, &["x"])).unwrap();
        assert_eq!(c.ground().labels(), &["y", "z"]);
        assert_eq!(c.feasible(), &[0b00, 0b01, 0b10, 0b11]);
        assert_eq!(s.contract(0).unwrap(), s);
        let top = s.contract(s.full()).unwrap();
        assert_eq!(top.n(), 0);
        assert_eq!(top.feasible(), &[0]);
    }

    #[test]
    fn restriction_examples() {
        let s = build_set_system(&["a", "b", "c"], &[vec![], vec!["a"], vec!["a", "b"], vec!["a", "c"]]).unwrap();
        assert!(s.is_interval_greedoid());
        let r = s.restrict(0b110).unwrap();
        assert_eq!(r.ground().labels(), &["b", "c"]);
        assert_eq!(r.feasible(), &[0]);
        let c = colinear();
        assert_eq!(c.restrict(c.full()).unwrap(), c);
        assert_eq!(c.restrict(0b011).unwrap().feasible(), &[0b00, 0b01, 0b11]);
        assert!(c.restrict(0b1000).is_err());
    }

    #[test]
    fn rank_and_closure_examples() {
        let s = colinear();
        assert_eq!(s.rank_and_closure(0).unwrap(), (0, set(&s, &["y"])));
        assert_eq!(s.rank_and_closure(set(&s, &["x"])).unwrap(), (1, set(&s, &["x"])));
        assert_eq!(s.rank_and_closure(s.full()).unwrap(), (3, s.full()));
        // {x} and {y} are both closed, so closed supersets of ∅ do not have a closed meet
        assert!(s.is_closed(set(&s, &["x"])) && s.is_closed(set(&s, &["y"])) && !s.is_closed(0));
    }

    #[test]
    fn maximal_feasible_examples() {
        let s = colinear();
        assert_eq!(s.maximal_feasible_in(set(&s, &["x", "z"])).unwrap(), vec![set(&s, &["x", "z"])]);
        assert_eq!(s.maximal_feasible_in(0).unwrap(), vec![0]);
        assert_eq!(s.maximal_feasible_in(set(&s, &["y"])).unwrap(), vec![0]);
    }

    #[test]
    fn loops_are_reported() {
        let s = build_set_system(&["a", "l"], &[vec![], vec!["a"]]).unwrap();
        let r = check_axioms(&s, AxiomClass::IntervalGreedoid, false);
        assert!(r.passed);
        assert_eq!(r.loops, 0b10);
    }
}
