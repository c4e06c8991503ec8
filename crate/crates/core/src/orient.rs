//! Oriented interval greedoids: validation of covector sets, the antimatroid
//! orientation, contraction and restriction, and small-rank structure.
//!
//! Two oriented systems are treated as isomorphic when a bijection of ground
//! sets carries feasible sets to feasible sets and sign strings to sign
//! strings; see [`isomorphism`].

use std::collections::{HashMap, HashSet};

use crate::bits::{self, ElemSet};
use crate::covec::{all_covectors, circ, support_of, Covector, SignVector};
use crate::error::{Error, Result};
use crate::flats::{FlatId, FlatLattice};
use crate::setsys::{check_axioms, AxiomClass, SetSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OgAxiom {
    OG1,
    OG2,
    OG3,
    OG4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OmAxiom {
    OM1,
    OM2,
    OM3,
    OM4,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A flat that is the support of no member.
    MissingSupport { flat: FlatId },
    /// A member whose negation is absent.
    MissingNegation { covector: SignVector },
    /// A pair whose product is absent.
    MissingProduct { a: SignVector, b: SignVector, product: SignVector },
    /// A pair and a separating element admitting no eliminating member.
    NoElimination { a: SignVector, b: SignVector, x: usize },
    /// The all-zero vector is absent.
    MissingZero,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomOutcome<A> {
    pub axiom: A,
    pub passed: bool,
    pub witnesses: Vec<Witness>,
}

impl<A> AxiomOutcome<A> {
    fn new(axiom: A, witnesses: Vec<Witness>) -> Self {
        AxiomOutcome { axiom, passed: witnesses.is_empty(), witnesses }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientationReport {
    pub passed: bool,
    pub axioms: Vec<AxiomOutcome<OgAxiom>>,
    /// Inputs that are not covectors of the greedoid.
    pub non_covectors: Vec<SignVector>,
}

impl OrientationReport {
    pub fn outcome(&self, axiom: OgAxiom) -> &AxiomOutcome<OgAxiom> {
        self.axioms.iter().find(|o| o.axiom == axiom).expect("all four axioms are reported")
    }

    /// True when OG1 to OG3 hold and every input was a covector.
    pub fn semigroup_axioms_hold(&self) -> bool {
        self.non_covectors.is_empty() && self.axioms.iter().filter(|o| o.axiom != OgAxiom::OG4).all(|o| o.passed)
    }
}

#[derive(Clone, Debug)]
pub struct OrientedSystem {
    lattice: FlatLattice,
    covectors: Vec<Covector>,
    index: HashMap<SignVector, usize>,
    report: OrientationReport,
}

/// Validates `vectors` as the covector set of an oriented interval greedoid
/// on `system`, keeping the first witness per axiom.
pub fn validate_oig(system: &SetSystem, vectors: &[SignVector]) -> Result<OrientedSystem> {
    validate_oig_with(system, vectors, false)
}

pub fn validate_oig_with(system: &SetSystem, vectors: &[SignVector], exhaustive: bool) -> Result<OrientedSystem> {
    let lattice = FlatLattice::new(system)?;
    OrientedSystem::from_lattice(lattice, vectors, exhaustive)
}

impl OrientedSystem {
    pub fn from_lattice(lattice: FlatLattice, vectors: &[SignVector], exhaustive: bool) -> Result<Self> {
        let n = lattice.system().n();
        let mut covectors = Vec::with_capacity(vectors.len());
        let mut non_covectors = Vec::new();
        for v in vectors {
            if v.len() != n {
                return Err(Error::Malformed(format!("sign vector {v} has length {}, expected {n}", v.len())));
            }
            match support_of(&lattice, v) {
                Some(support) => covectors.push(Covector { signs: *v, support }),
                None => non_covectors.push(*v),
            }
        }
        covectors.sort();
        covectors.dedup();
        non_covectors.sort();
        non_covectors.dedup();
        let index = covectors.iter().enumerate().map(|(i, c)| (c.signs, i)).collect();
        let mut sys = OrientedSystem {
            lattice,
            covectors,
            index,
            report: OrientationReport { passed: false, axioms: Vec::new(), non_covectors },
        };
        sys.report.axioms = vec![
            AxiomOutcome::new(OgAxiom::OG1, sys.og1(exhaustive)),
            AxiomOutcome::new(OgAxiom::OG2, sys.og2(exhaustive)),
            AxiomOutcome::new(OgAxiom::OG3, sys.og3(exhaustive)),
            AxiomOutcome::new(OgAxiom::OG4, sys.og4(exhaustive)),
        ];
        sys.report.passed = sys.report.non_covectors.is_empty() && sys.report.axioms.iter().all(|o| o.passed);
        Ok(sys)
    }

    pub fn system(&self) -> &SetSystem {
        self.lattice.system()
    }

    pub fn lattice(&self) -> &FlatLattice {
        &self.lattice
    }

    pub fn covectors(&self) -> &[Covector] {
        &self.covectors
    }

    pub fn report(&self) -> &OrientationReport {
        &self.report
    }

    pub fn passed(&self) -> bool {
        self.report.passed
    }

    pub fn len(&self) -> usize {
        self.covectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covectors.is_empty()
    }

    pub fn n(&self) -> usize {
        self.system().n()
    }

    /// Rank of the lattice of flats.
    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn position(&self, v: &SignVector) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn contains(&self, v: &SignVector) -> bool {
        self.index.contains_key(v)
    }

    pub fn get(&self, v: &SignVector) -> Option<&Covector> {
        self.position(v).map(|i| &self.covectors[i])
    }

    /// Looks up a member by its sign string.
    pub fn covector(&self, s: &str) -> Result<Covector> {
        let v: SignVector = s.parse()?;
        self.get(&v).copied().ok_or_else(|| Error::Precondition(format!("{s} is not a member")))
    }

    /// Height of a member in the covector poset: the height of its support.
    pub fn height(&self, c: &Covector) -> usize {
        self.lattice.height(c.support)
    }

    /// Members with support `[∅]`.
    pub fn topes(&self) -> Vec<Covector> {
        let top = self.lattice.top();
        self.covectors.iter().copied().filter(|c| c.support == top).collect()
    }

    pub fn circ(&self, a: &Covector, b: &Covector) -> Covector {
        circ(&self.lattice, a, b)
    }

    /// Members strictly below `c` whose height is one less.
    pub fn lower_covers(&self, c: &Covector) -> Vec<Covector> {
        let h = self.height(c);
        if h == 0 {
            return Vec::new();
        }
        self.covectors
            .iter()
            .copied()
            .filter(|d| self.lattice.covers(d.support, c.support) && d.leq(c))
            .collect()
    }

    pub fn upper_covers(&self, c: &Covector) -> Vec<Covector> {
        self.covectors
            .iter()
            .copied()
            .filter(|d| self.lattice.covers(c.support, d.support) && c.leq(d))
            .collect()
    }

    pub fn sign_strings(&self) -> Vec<String> {
        self.covectors.iter().map(|c| c.to_string()).collect()
    }

    fn og1(&self, exhaustive: bool) -> Vec<Witness> {
        let mut hit = vec![false; self.lattice.len()];
        for c in &self.covectors {
            hit[c.support] = true;
        }
        let missing = hit.iter().enumerate().filter(|(_, &h)| !h).map(|(flat, _)| Witness::MissingSupport { flat });
        take(missing, exhaustive)
    }

    fn og2(&self, exhaustive: bool) -> Vec<Witness> {
        let missing = self
            .covectors
            .iter()
            .filter(|c| !self.contains(&c.signs.negate()))
            .map(|c| Witness::MissingNegation { covector: c.signs });
        take(missing, exhaustive)
    }

    fn og3(&self, exhaustive: bool) -> Vec<Witness> {
        let mut out = Vec::new();
        for a in &self.covectors {
            for b in &self.covectors {
                let p = self.circ(a, b);
                if !self.contains(&p.signs) {
                    out.push(Witness::MissingProduct { a: a.signs, b: b.signs, product: p.signs });
                    if !exhaustive {
                        return out;
                    }
                }
            }
        }
        out
    }

    fn og4(&self, exhaustive: bool) -> Vec<Witness> {
        let n = self.n();
        let mut zero_at: Vec<Vec<SignVector>> = vec![Vec::new(); n];
        for c in &self.covectors {
            for x in bits::elems(c.signs.zero()) {
                zero_at[x].push(c.signs);
            }
        }
        let full = bits::full(n);
        let mut out = Vec::new();
        for (i, a) in self.covectors.iter().enumerate() {
            for b in &self.covectors[i + 1..] {
                let s = a.separation_set(b);
                if s == 0 {
                    continue;
                }
                let p = self.circ(a, b);
                let targets = s & !p.signs.one();
                if targets == 0 {
                    continue;
                }
                let d = full & !s & !p.signs.one();
                let symmetric = p.signs.agrees_on(&self.circ(b, a).signs, d);
                for x in bits::elems(targets) {
                    let found = symmetric && zero_at[x].iter().any(|g| g.agrees_on(&p.signs, d));
                    if !found {
                        out.push(Witness::NoElimination { a: a.signs, b: b.signs, x });
                        if !exhaustive {
                            return out;
                        }
                    }
                }
            }
        }
        out
    }

    /// Every member that eliminates `x` between `a` and `b`.
    pub fn og4_witnesses(&self, a: &Covector, b: &Covector, x: usize) -> Vec<Covector> {
        let s = a.separation_set(b);
        let p = self.circ(a, b);
        let d = bits::full(self.n()) & !s & !p.signs.one();
        if !p.signs.agrees_on(&self.circ(b, a).signs, d) {
            return Vec::new();
        }
        self.covectors
            .iter()
            .copied()
            .filter(|g| bits::contains(g.signs.zero(), x) && g.signs.agrees_on(&p.signs, d))
            .collect()
    }
}

fn take<I: Iterator<Item = Witness>>(it: I, exhaustive: bool) -> Vec<Witness> {
    if exhaustive {
        it.collect()
    } else {
        it.take(1).collect()
    }
}

/// The orientation of an antimatroid by all of its covectors.
pub fn oig_from_antimatroid(sys: &SetSystem) -> Result<OrientedSystem> {
    let report = check_axioms(sys, AxiomClass::Antimatroid, false);
    if let Some(v) = report.violations.first() {
        return Err(Error::AxiomFailure { class: AxiomClass::Antimatroid.to_string(), detail: v.describe(sys.ground()) });
    }
    let lattice = FlatLattice::from_interval_greedoid(sys.clone())?;
    let all: Vec<SignVector> = all_covectors(&lattice)?.into_iter().map(|c| c.signs).collect();
    let oig = OrientedSystem::from_lattice(lattice, &all, false)?;
    if !oig.passed() {
        return Err(Error::Internal("covectors of an antimatroid failed validation".into()));
    }
    Ok(oig)
}

/// Members paired with their images under a minor operation.
pub type ImagePairs = Vec<(Covector, SignVector)>;

/// Images of the members with support at most `[X]` in the contraction by
/// `X`, paired with their preimages. The second value is the contraction's
/// ground set as a subset of the original one.
pub fn contraction_map(oig: &OrientedSystem, x: ElemSet) -> Result<(SetSystem, ElemSet, ImagePairs)> {
    let lat = oig.lattice();
    let sys = oig.system();
    let a = lat.try_flat_of_set(x)?;
    let w = sys.contraction_ground(x);
    let con = sys.contract(x)?;
    let con_lat = FlatLattice::from_interval_greedoid(con.clone())?;
    let mut pairs = Vec::new();
    for alpha in oig.covectors() {
        if !lat.leq(alpha.support, a) {
            continue;
        }
        let z = sys.grow_within(x, lat.xi(alpha.support));
        let y = bits::compress(z & !x, w);
        let b = con_lat.flat_of_set(y);
        let g = con_lat.gamma(b);
        let plus = bits::compress(alpha.signs.plus(), w) & g;
        let minus = bits::compress(alpha.signs.minus(), w) & g;
        if plus | minus != g {
            return Err(Error::Internal(format!("contraction of {alpha} is not signed on Γ")));
        }
        pairs.push((*alpha, SignVector::from_masks(bits::len(w), con_lat.xi(b), plus, minus)));
    }
    Ok((con, w, pairs))
}

/// The oriented interval greedoid on the contraction by a feasible `x`,
/// checked to be a bijective image preserving products.
pub fn contract_oig(oig: &OrientedSystem, x: ElemSet) -> Result<OrientedSystem> {
    let (con, _, pairs) = contraction_map(oig, x)?;
    let images: Vec<SignVector> = pairs.iter().map(|p| p.1).collect();
    let result = validate_oig(&con, &images)?;
    if result.len() != pairs.len() {
        return Err(Error::Internal("contraction map is not injective".into()));
    }
    let image_of: HashMap<SignVector, SignVector> = pairs.iter().map(|(a, b)| (a.signs, *b)).collect();
    for (a, ia) in &pairs {
        for (b, ib) in &pairs {
            let ab = oig.circ(a, b);
            let lhs = image_of[&ab.signs];
            let rhs = result.circ(result.get(ia).expect("image"), result.get(ib).expect("image"));
            if lhs != rhs.signs {
                return Err(Error::Internal(format!("contraction does not preserve the product of {a} and {b}")));
            }
        }
    }
    if oig.passed() && !result.passed() {
        return Err(Error::Internal("contraction of an oriented interval greedoid failed validation".into()));
    }
    Ok(result)
}

#[derive(Clone, Debug)]
pub struct Restriction {
    pub system: SetSystem,
    /// Distinct restricted covectors, sorted.
    pub covectors: Vec<SignVector>,
    /// True when every restricted covector is the plain restriction of its preimage.
    pub hypothesis_holds: bool,
    pub oig: OrientedSystem,
}

/// The restriction of each member to `w`, with the preimages.
pub fn restriction_map(oig: &OrientedSystem, w: ElemSet) -> Result<(SetSystem, FlatLattice, ImagePairs)> {
    let sys = oig.system();
    let lat = oig.lattice();
    let rsys = sys.restrict(w)?;
    let rlat = FlatLattice::new(&rsys).map_err(|e| Error::Internal(format!("restriction is not an interval greedoid: {e}")))?;
    let mut pairs = Vec::with_capacity(oig.len());
    for alpha in oig.covectors() {
        let aw = rlat.mu(bits::compress(w & lat.xi(alpha.support), w));
        let g = rlat.gamma(aw);
        let plus = bits::compress(alpha.signs.plus(), w) & g;
        let minus = bits::compress(alpha.signs.minus(), w) & g;
        if plus | minus != g {
            return Err(Error::Internal(format!("restriction of {alpha} is not signed on Γ")));
        }
        pairs.push((*alpha, SignVector::from_masks(bits::len(w), rlat.xi(aw), plus, minus)));
    }
    Ok((rsys, rlat, pairs))
}

/// Restriction to `w`. Only OG1 to OG3 are guaranteed when the plain
/// restriction hypothesis fails; callers must check `hypothesis_holds`.
pub fn restrict_oig(oig: &OrientedSystem, w: ElemSet) -> Result<Restriction> {
    let (rsys, rlat, pairs) = restriction_map(oig, w)?;
    let hypothesis_holds = pairs.iter().all(|(a, r)| a.signs.restrict(w) == *r);
    let mut covectors: Vec<SignVector> = pairs.iter().map(|p| p.1).collect();
    covectors.sort();
    covectors.dedup();
    let result = OrientedSystem::from_lattice(rlat, &covectors, false)?;
    if oig.passed() {
        if hypothesis_holds && !result.passed() {
            return Err(Error::Internal("restriction under the hypothesis failed validation".into()));
        }
        if !result.report().semigroup_axioms_hold() {
            return Err(Error::Internal("restriction violates OG1 to OG3".into()));
        }
    }
    Ok(Restriction { system: rsys, covectors, hypothesis_holds, oig: result })
}

/// Restriction to `ξ([X])`, after checking that `res(β) ↦ α∘β` is a
/// semigroup isomorphism onto the members above a fixed `α` with support `[X]`.
pub fn restrict_to_xi(oig: &OrientedSystem, x: ElemSet) -> Result<OrientedSystem> {
    restriction_semigroup_check(oig, x)?;
    let w = oig.lattice().xi(oig.lattice().try_flat_of_set(x)?);
    let r = restrict_oig(oig, w)?;
    if oig.passed() && !r.oig.passed() {
        return Err(Error::Internal("restriction to ξ failed validation".into()));
    }
    Ok(r.oig)
}

/// Checks the isomorphism between the restriction to `ξ([X])` and the
/// members above the least `α` with support `[X]`. Returns the common size.
pub fn restriction_semigroup_check(oig: &OrientedSystem, x: ElemSet) -> Result<usize> {
    let lat = oig.lattice();
    let a = lat.try_flat_of_set(x)?;
    let alpha = *oig
        .covectors()
        .iter()
        .find(|c| c.support == a)
        .ok_or_else(|| Error::Precondition(format!("no member with support {}", lat.label(a))))?;
    let w = lat.xi(a);
    let (_, rlat, pairs) = restriction_map(oig, w)?;
    let mut forward: HashMap<SignVector, Covector> = HashMap::new();
    for (beta, r) in &pairs {
        let image = oig.circ(&alpha, beta);
        if let Some(prev) = forward.insert(*r, image) {
            if prev != image {
                return Err(Error::Internal(format!("α∘β is not determined by res(β) at {r}")));
            }
        }
    }
    let above: HashSet<SignVector> = oig.covectors().iter().filter(|b| alpha.leq(b)).map(|b| b.signs).collect();
    let image: HashSet<SignVector> = forward.values().map(|c| c.signs).collect();
    if image != above || forward.len() != above.len() {
        return Err(Error::Internal("restriction is not in bijection with the members above α".into()));
    }
    let restricted: HashMap<SignVector, Covector> = forward
        .keys()
        .map(|r| (*r, Covector { signs: *r, support: support_of(&rlat, r).expect("restricted covector") }))
        .collect();
    for (r1, c1) in &restricted {
        for (r2, c2) in &restricted {
            let prod = circ(&rlat, c1, c2);
            let lhs = forward.get(&prod.signs).ok_or_else(|| Error::Internal("restriction not closed".into()))?;
            let rhs = oig.circ(&forward[r1], &forward[r2]);
            if *lhs != rhs {
                return Err(Error::Internal(format!("products of {r1} and {r2} are not preserved")));
            }
        }
    }
    Ok(above.len())
}

/// Restriction to `Γ([∅])`, checked to be an oriented matroid.
pub fn underlying_oriented_matroid(oig: &OrientedSystem) -> Result<OrientedSystem> {
    let w = oig.lattice().gamma(oig.lattice().top());
    let r = restrict_oig(oig, w)?;
    if !oig.passed() {
        return Ok(r.oig);
    }
    if !r.hypothesis_holds || !r.oig.passed() {
        return Err(Error::Internal("restriction to Γ(∅) is not a plain oriented restriction".into()));
    }
    if !check_axioms(&r.system, AxiomClass::Matroid, false).passed {
        return Err(Error::Internal("restriction to Γ(∅) is not a matroid".into()));
    }
    if r.oig.covectors().iter().any(|c| c.signs.one() != 0) {
        return Err(Error::Internal("underlying oriented matroid has a `1` entry".into()));
    }
    Ok(r.oig)
}

/// The unique member with support `0̂`.
pub fn bottom(oig: &OrientedSystem) -> Result<Covector> {
    let b = oig.lattice().bottom();
    let found: Vec<&Covector> = oig.covectors().iter().filter(|c| c.support == b).collect();
    match found.as_slice() {
        [c] => Ok(**c),
        _ => Err(Error::Internal(format!("{} members with support 0̂", found.len()))),
    }
}

/// For `supp a ≤ supp b` and `a ≰ b`: the least `δ` covered by `b` that
/// agrees with `b` off `S(a,b)` wherever `b` is not `1`.
pub fn drop_witness(oig: &OrientedSystem, a: &Covector, b: &Covector) -> Result<Covector> {
    let lat = oig.lattice();
    if !lat.leq(a.support, b.support) {
        return Err(Error::Precondition(format!("supp {a} is not below supp {b}")));
    }
    if a.leq(b) {
        return Err(Error::Precondition(format!("{a} ≤ {b}")));
    }
    let s = a.separation_set(b);
    let d = bits::full(oig.n()) & !s & !b.signs.one();
    oig.covectors()
        .iter()
        .copied()
        .filter(|delta| lat.covers(delta.support, b.support) && delta.leq(b) && delta.signs.agrees_on(&b.signs, d))
        .min()
        .ok_or_else(|| Error::Internal(format!("no member covered by {b} drops away from {a}")))
}

/// Outcome of the rank-2 classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rank2Kind {
    /// Isomorphic to its underlying oriented matroid.
    OrientedMatroid,
    /// The five-element poset over a three-element chain of flats.
    Special,
}

/// The three members `⊥, β, -β` of a rank-1 system.
pub fn rank1_elements(oig: &OrientedSystem) -> Result<[Covector; 3]> {
    if oig.rank() != 1 {
        return Err(Error::Precondition(format!("rank is {}, not 1", oig.rank())));
    }
    match oig.covectors() {
        [a, b, c] => {
            let bot = bottom(oig)?;
            let mut rest: Vec<Covector> = [*a, *b, *c].into_iter().filter(|x| *x != bot).collect();
            rest.sort();
            if rest.len() == 2 && rest[0].negate() == rest[1] && rest.iter().all(|t| bot.leq(t)) {
                Ok([bot, rest[0], rest[1]])
            } else {
                Err(Error::Internal("rank-1 members are not ⊥, β, -β".into()))
            }
        }
        other => Err(Error::Internal(format!("rank-1 system with {} members", other.len()))),
    }
}

pub fn classify_rank2(oig: &OrientedSystem) -> Result<Rank2Kind> {
    let lat = oig.lattice();
    if oig.rank() != 2 {
        return Err(Error::Precondition(format!("rank is {}, not 2", oig.rank())));
    }
    if lat.lower_covers(lat.top()).len() >= 2 {
        let om = underlying_oriented_matroid(oig)?;
        let w = lat.gamma(lat.top());
        let images: HashSet<SignVector> = oig.covectors().iter().map(|c| c.signs.restrict(w)).collect();
        if images.len() != oig.len() || om.len() != oig.len() {
            return Err(Error::Internal("restriction to Γ(∅) is not injective".into()));
        }
        for a in oig.covectors() {
            for b in oig.covectors() {
                if a.leq(b) != a.signs.restrict(w).leq(&b.signs.restrict(w)) {
                    return Err(Error::Internal("restriction to Γ(∅) is not an order isomorphism".into()));
                }
            }
        }
        if om.rank() != 2 || validate_om(&om.covectors().iter().map(|c| c.signs).collect::<Vec<_>>()).passed {
            return Ok(Rank2Kind::OrientedMatroid);
        }
        return Err(Error::Internal("underlying oriented matroid fails the covector axioms".into()));
    }
    // one coatom: Φ is a chain and L must be ⊥ < ±γ < ±β with every cover present
    if oig.len() != 5 || lat.len() != 3 {
        return Err(Error::Internal("rank-2 system with one coatom is not the five-element poset".into()));
    }
    let bot = bottom(oig)?;
    let mid: Vec<Covector> = oig.covectors().iter().copied().filter(|c| oig.height(c) == 1).collect();
    let top: Vec<Covector> = oig.topes();
    let shape = mid.len() == 2
        && top.len() == 2
        && mid[0].negate() == mid[1]
        && top[0].negate() == top[1]
        && mid.iter().all(|m| bot.leq(m) && top.iter().all(|t| m.leq(t)));
    if shape {
        Ok(Rank2Kind::Special)
    } else {
        Err(Error::Internal("rank-2 system with one coatom has the wrong Hasse diagram".into()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmReport {
    pub passed: bool,
    pub axioms: Vec<AxiomOutcome<OmAxiom>>,
    /// Inputs with a `1` entry, which no oriented matroid covector has.
    pub invalid: Vec<SignVector>,
}

/// Composition of sign vectors without `1` entries.
pub fn compose(a: &SignVector, b: &SignVector) -> SignVector {
    SignVector::from_masks(
        a.len(),
        a.zero() & b.zero(),
        a.plus() | (a.zero() & b.plus()),
        a.minus() | (a.zero() & b.minus()),
    )
}

/// Checks the oriented matroid covector axioms OM1 to OM4.
pub fn validate_om(vectors: &[SignVector]) -> OmReport {
    let mut set: Vec<SignVector> = vectors.to_vec();
    set.sort();
    set.dedup();
    let invalid: Vec<SignVector> = set.iter().copied().filter(|v| v.one() != 0).collect();
    let n = set.first().map_or(0, |v| v.len());
    let members: HashSet<SignVector> = set.iter().copied().collect();
    let zero = SignVector::from_masks(n, bits::full(n), 0, 0);
    let om1 = if members.contains(&zero) { vec![] } else { vec![Witness::MissingZero] };
    let om2: Vec<Witness> = set
        .iter()
        .filter(|v| !members.contains(&v.negate()))
        .take(1)
        .map(|v| Witness::MissingNegation { covector: *v })
        .collect();
    let mut om3 = Vec::new();
    'om3: for a in &set {
        for b in &set {
            let p = compose(a, b);
            if !members.contains(&p) {
                om3.push(Witness::MissingProduct { a: *a, b: *b, product: p });
                break 'om3;
            }
        }
    }
    let mut om4 = Vec::new();
    'om4: for (i, a) in set.iter().enumerate() {
        for b in &set[i + 1..] {
            let s = a.separation_set(b);
            let keep = bits::full(n) & !s;
            let p = compose(a, b);
            let symmetric = p.agrees_on(&compose(b, a), keep);
            for x in bits::elems(s) {
                let ok = symmetric && set.iter().any(|g| bits::contains(g.zero(), x) && g.agrees_on(&p, keep));
                if !ok {
                    om4.push(Witness::NoElimination { a: *a, b: *b, x });
                    break 'om4;
                }
            }
        }
    }
    let axioms = vec![
        AxiomOutcome::new(OmAxiom::OM1, om1),
        AxiomOutcome::new(OmAxiom::OM2, om2),
        AxiomOutcome::new(OmAxiom::OM3, om3),
        AxiomOutcome::new(OmAxiom::OM4, om4),
    ];
    OmReport { passed: invalid.is_empty() && axioms.iter().all(|o| o.passed), axioms, invalid }
}

/// A ground bijection (`perm[i]` is the image of element `i`) carrying
/// `a` onto `b`, found by exhaustive search over permutations.
pub fn isomorphism(a: &OrientedSystem, b: &OrientedSystem) -> Result<Option<Vec<usize>>> {
    const LIMIT: usize = 9;
    let n = a.n();
    if n != b.n() || a.len() != b.len() || a.system().feasible().len() != b.system().feasible().len() {
        return Ok(None);
    }
    if n > LIMIT {
        return Err(Error::CapExceeded { what: "ground set size for isomorphism search".into(), limit: LIMIT, actual: n });
    }
    let map_set = |s: ElemSet, perm: &[usize]| bits::elems(s).fold(0, |m, i| m | bits::bit(perm[i]));
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let sets_ok = a.system().feasible().iter().all(|&s| b.system().is_feasible(map_set(s, &perm)));
        if sets_ok {
            let cov_ok = a.covectors().iter().all(|c| {
                let v = SignVector::from_masks(
                    n,
                    map_set(c.signs.zero(), &perm),
                    map_set(c.signs.plus(), &perm),
                    map_set(c.signs.minus(), &perm),
                );
                b.contains(&v)
            });
            if cov_ok {
                return Ok(Some(perm));
            }
        }
        if !next_permutation(&mut perm) {
            return Ok(None);
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
