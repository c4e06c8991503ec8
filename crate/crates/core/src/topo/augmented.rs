//! The covector poset with an adjoined maximum, topes, the tope graph and
//! tope posets.

use std::collections::{BTreeSet, HashMap};

use crate::covec::Covector;
use crate::error::{Error, Result};
use crate::orient::{underlying_oriented_matroid, OrientedSystem};
use crate::topo::FinitePoset;

pub const TOP_LABEL: &str = "1hat";

/// Covectors under their order, indexed as in the system, plus `1̂` last.
#[derive(Clone, Debug)]
pub struct AugmentedPoset {
    pub poset: FinitePoset,
    pub covectors: Vec<Covector>,
}

impl AugmentedPoset {
    pub fn top(&self) -> usize {
        self.covectors.len()
    }

    pub fn bottom(&self) -> usize {
        self.poset.bottom().expect("augmented poset is bounded")
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn rank(&self) -> usize {
        self.poset.rank_of(self.top()).expect("augmented poset is graded")
    }

    /// Number of elements at each rank from 1 to the rank of the topes.
    pub fn cell_counts(&self) -> Vec<usize> {
        let r = self.rank();
        let mut counts = vec![0; r.saturating_sub(1)];
        for x in 0..self.covectors.len() {
            let k = self.poset.rank_of(x).expect("graded");
            if k >= 1 {
                counts[k - 1] += 1;
            }
        }
        counts
    }

    /// First pair `x ≤ y` where `μ(x, y)` differs from `(-1)^(rank y - rank x)`.
    pub fn eulerian_violation(&self) -> Option<(usize, usize)> {
        let p = &self.poset;
        for x in 0..p.len() {
            let rx = p.rank_of(x)?;
            for y in p.up_set(x).iter() {
                let ry = p.rank_of(y)?;
                let expect = if (ry - rx) % 2 == 0 { 1 } else { -1 };
                if p.mobius(x, y) != expect {
                    return Some((x, y));
                }
            }
        }
        None
    }
}

/// The covector poset with `1̂` adjoined; errors if it is not graded with
/// covector ranks given by the heights of supports.
pub fn augment(oig: &OrientedSystem) -> Result<AugmentedPoset> {
    let covectors = oig.covectors().to_vec();
    let n = covectors.len();
    let mut labels: Vec<String> = covectors.iter().map(|c| c.to_string()).collect();
    labels.push(TOP_LABEL.to_string());
    let poset = FinitePoset::from_leq(labels, |a, b| b == n || (a < n && covectors[a].leq(&covectors[b])))?;
    let ranks = poset.rank().ok_or_else(|| Error::Internal("augmented covector poset is not graded".into()))?;
    for (i, c) in covectors.iter().enumerate() {
        if ranks[i] != oig.height(c) {
            return Err(Error::Internal(format!("rank of {c} is not the height of its support")));
        }
    }
    if ranks[n] != oig.rank() + 1 {
        return Err(Error::Internal("1̂ has the wrong rank".into()));
    }
    Ok(AugmentedPoset { poset, covectors })
}

/// Topes with an edge whenever two topes cover a common element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopeGraph {
    pub topes: Vec<Covector>,
    pub edges: Vec<(usize, usize)>,
}

impl TopeGraph {
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph topes {\n");
        for (i, t) in self.topes.iter().enumerate() {
            s.push_str(&format!("  t{i} [label=\"{t}\"];\n"));
        }
        for (a, b) in &self.edges {
            s.push_str(&format!("  t{a} -- t{b};\n"));
        }
        s.push_str("}\n");
        s
    }

    pub fn degree(&self, i: usize) -> usize {
        self.edges.iter().filter(|(a, b)| *a == i || *b == i).count()
    }
}

fn raw_tope_graph(oig: &OrientedSystem) -> TopeGraph {
    let topes = oig.topes();
    let mut by_subtope: HashMap<Covector, Vec<usize>> = HashMap::new();
    for (i, t) in topes.iter().enumerate() {
        for s in oig.lower_covers(t) {
            by_subtope.entry(s).or_default().push(i);
        }
    }
    let mut edges = BTreeSet::new();
    for list in by_subtope.values() {
        for (k, &a) in list.iter().enumerate() {
            for &b in &list[k + 1..] {
                edges.insert((a.min(b), a.max(b)));
            }
        }
    }
    TopeGraph { topes, edges: edges.into_iter().collect() }
}

/// The tope graph, checked against the tope graph of the underlying
/// oriented matroid through restriction to `Γ(∅)`.
pub fn tope_graph(oig: &OrientedSystem) -> Result<TopeGraph> {
    let g = raw_tope_graph(oig);
    let w = oig.lattice().gamma(oig.lattice().top());
    let om = underlying_oriented_matroid(oig)?;
    let og = raw_tope_graph(&om);
    let pos: HashMap<_, usize> = og.topes.iter().enumerate().map(|(i, t)| (t.signs, i)).collect();
    let image: Vec<usize> = g
        .topes
        .iter()
        .map(|t| pos.get(&t.signs.restrict(w)).copied())
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Internal("a tope does not restrict to a tope".into()))?;
    let mapped: BTreeSet<(usize, usize)> = g.edges.iter().map(|&(a, b)| (image[a].min(image[b]), image[a].max(image[b]))).collect();
    if image.len() != og.topes.len() || mapped != og.edges.iter().copied().collect() {
        return Err(Error::Internal("tope graph differs from that of the underlying oriented matroid".into()));
    }
    Ok(g)
}

/// The topes below `1̂` ordered by growth of the separation set from `base`.
#[derive(Clone, Debug)]
pub struct TopePoset {
    pub base: Covector,
    pub topes: Vec<Covector>,
    pub poset: FinitePoset,
}

impl TopePoset {
    /// Sorted by separation set size, then sign string.
    pub fn default_extension(&self) -> Vec<Covector> {
        let mut v = self.topes.clone();
        v.sort_by_key(|t| (crate::bits::len(self.base.separation_set(t)), *t));
        v
    }

    /// Checks that `ext` lists every tope once, respecting the order.
    pub fn check_extension(&self, ext: &[Covector]) -> Result<()> {
        let pos: HashMap<Covector, usize> = ext.iter().enumerate().map(|(i, t)| (*t, i)).collect();
        if ext.len() != self.topes.len() || pos.len() != ext.len() || self.topes.iter().any(|t| !pos.contains_key(t)) {
            return Err(Error::Precondition("extension does not list every tope exactly once".into()));
        }
        for (a, ta) in self.topes.iter().enumerate() {
            for &b in self.poset.upper_covers(a) {
                if pos[ta] > pos[&self.topes[b]] {
                    return Err(Error::Precondition(format!("{ta} must precede {}", self.topes[b])));
                }
            }
        }
        Ok(())
    }
}

/// Tope poset of the members with support `support`, based at `base`.
pub fn tope_poset_within(oig: &OrientedSystem, support: usize, base: &Covector) -> Result<TopePoset> {
    if base.support != support {
        return Err(Error::Precondition(format!("{base} is not a tope")));
    }
    let topes: Vec<Covector> = oig.covectors().iter().copied().filter(|c| c.support == support).collect();
    let sep: Vec<u64> = topes.iter().map(|t| base.separation_set(t)).collect();
    let labels = topes.iter().map(|t| t.to_string()).collect();
    let poset = FinitePoset::from_leq(labels, |a, b| sep[a] & !sep[b] == 0)?;
    Ok(TopePoset { base: *base, topes, poset })
}

/// Tope poset based at `base`, checked to have `base` as minimum, `-base`
/// as maximum, and Hasse diagram equal to the tope graph.
pub fn tope_poset(oig: &OrientedSystem, base: &Covector) -> Result<TopePoset> {
    let top = oig.lattice().top();
    let tp = tope_poset_within(oig, top, base)?;
    let p = &tp.poset;
    let idx = |c: &Covector| tp.topes.iter().position(|t| t == c);
    if p.bottom() != idx(base) || p.top() != idx(&base.negate()) {
        return Err(Error::Internal("base is not the minimum or its negation is not the maximum".into()));
    }
    let g = raw_tope_graph(oig);
    let hasse: BTreeSet<(usize, usize)> =
        (0..p.len()).flat_map(|a| p.upper_covers(a).iter().map(move |&b| (a.min(b), a.max(b)))).collect();
    if hasse != g.edges.iter().copied().collect() {
        return Err(Error::Internal("Hasse diagram of the tope poset is not the tope graph".into()));
    }
    Ok(tp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orient::oig_from_antimatroid;
    use crate::setsys::build_set_system;

    fn colinear() -> OrientedSystem {
        let s = build_set_system(
            &["x", "y", "z"],
            &[vec![], vec!["x"], vec!["z"], vec!["x", "y"], vec!["x", "z"], vec!["y", "z"], vec!["x", "y", "z"]],
        )
        .unwrap();
        oig_from_antimatroid(&s).unwrap()
    }

    #[test]
    fn augmented_colinear() {
        let a = augment(&colinear()).unwrap();
        assert_eq!(a.len(), 20);
        assert!(a.poset.is_thin().unwrap());
        assert_eq!(a.cell_counts(), vec![6, 8, 4]);
        assert_eq!(a.eulerian_violation(), None);
        assert_eq!(a.rank(), 4);
    }

    #[test]
    fn colinear_topes() {
        let oig = colinear();
        let g = tope_graph(&oig).unwrap();
        let names: Vec<String> = g.topes.iter().map(|t| t.to_string()).collect();
        assert_eq!(names, ["+1+", "+1-", "-1+", "-1-"]);
        assert_eq!(g.edges.len(), 4);
        assert!((0..4).all(|i| g.degree(i) == 2));
        let base = oig.covector("+1+").unwrap();
        let tp = tope_poset(&oig, &base).unwrap();
        let at = |s: &str| tp.topes.iter().position(|t| t.to_string() == s).unwrap();
        assert!(tp.poset.covers(at("+1+"), at("+1-")));
        assert!(tp.poset.covers(at("+1+"), at("-1+")));
        assert!(tp.poset.covers(at("+1-"), at("-1-")));
        assert!(!tp.poset.leq(at("+1-"), at("-1+")));
        assert!(tope_poset(&oig, &oig.covector("0++").unwrap()).is_err());
    }

    #[test]
    fn extension_checks() {
        let oig = colinear();
        let tp = tope_poset(&oig, &oig.covector("+1+").unwrap()).unwrap();
        let ext = tp.default_extension();
        assert!(tp.check_extension(&ext).is_ok());
        let mut bad = ext.clone();
        bad.swap(0, 3);
        assert!(tp.check_extension(&bad).is_err());
        assert!(tp.check_extension(&ext[..3]).is_err());
    }
}
