//! Recursive coatom orderings of augmented covector posets: construction
//! from tope-poset chains and an independent verifier.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::augmented::{tope_poset, tope_poset_within, AugmentedPoset};
use crate::bits::{self, BitSet};
use crate::covec::Covector;
use crate::error::{Error, Result};
use crate::flats::FlatId;
use crate::orient::OrientedSystem;
use crate::topo::FinitePoset;

/// An element with the ordered coatoms of the interval below it. Intervals
/// of rank at most one carry no children.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RcoNode {
    pub element: usize,
    pub children: Vec<RcoNode>,
}

impl RcoNode {
    pub fn leaf(element: usize) -> Self {
        RcoNode { element, children: Vec::new() }
    }

    pub fn coatoms(&self) -> Vec<usize> {
        self.children.iter().map(|c| c.element).collect()
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        1 + self.children.iter().map(RcoNode::size).sum::<usize>()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RcoCondition {
    /// Coatoms below earlier siblings do not come first.
    EarlierFirst,
    /// An element below the node and an earlier sibling misses the shared coatoms.
    SharedBelowCoatom,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RcoViolation {
    /// Elements from the root to the parent of the offending node.
    pub path: Vec<usize>,
    pub element: usize,
    pub condition: RcoCondition,
    pub witness: Option<usize>,
}

/// Checks both ordering conditions at every node. Errors when the tree does
/// not list the coatoms of the poset or the poset is not bounded and graded.
pub fn verify_rco(p: &FinitePoset, root: &RcoNode) -> Result<Option<RcoViolation>> {
    let bottom = p.bottom().ok_or_else(|| Error::Precondition("poset has no minimum".into()))?;
    if p.rank().is_none() {
        return Err(Error::Precondition("poset is not graded".into()));
    }
    if p.top() != Some(root.element) {
        return Err(Error::Precondition("root is not the maximum".into()));
    }
    let mut path = Vec::new();
    verify_node(p, bottom, root, &mut path)
}

fn verify_node(p: &FinitePoset, bottom: usize, node: &RcoNode, path: &mut Vec<usize>) -> Result<Option<RcoViolation>> {
    let rank = p.rank_of(node.element).expect("graded") - p.rank_of(bottom).expect("graded");
    if rank <= 1 {
        return Ok(None);
    }
    let listed = node.coatoms();
    let expected: HashSet<usize> = p.lower_covers(node.element).iter().copied().collect();
    let got: HashSet<usize> = listed.iter().copied().collect();
    if got != expected || got.len() != listed.len() {
        return Err(Error::Precondition(format!("children of {} are not its coatoms", p.label(node.element))));
    }
    path.push(node.element);
    let mut earlier = BitSet::new(p.len());
    for (i, child) in node.children.iter().enumerate() {
        let q = child.element;
        if i > 0 {
            let below_earlier: Vec<bool> = child.children.iter().map(|c| earlier.contains(c.element)).collect();
            if let Some(k) = below_earlier.windows(2).position(|w| !w[0] && w[1]) {
                return Ok(Some(RcoViolation {
                    path: path.clone(),
                    element: q,
                    condition: RcoCondition::EarlierFirst,
                    witness: Some(child.children[k + 1].element),
                }));
            }
            let shared: Vec<usize> = p.lower_covers(q).iter().copied().filter(|&c| earlier.contains(c)).collect();
            let mut d = p.down_set(q).clone();
            d.intersect_with(&earlier);
            for x in d.iter() {
                if !shared.iter().any(|&c| p.leq(x, c)) {
                    return Ok(Some(RcoViolation {
                        path: path.clone(),
                        element: q,
                        condition: RcoCondition::SharedBelowCoatom,
                        witness: Some(x),
                    }));
                }
            }
        }
        earlier.union_with(p.down_set(q));
    }
    for child in &node.children {
        if let Some(v) = verify_node(p, bottom, child, path)? {
            return Ok(Some(v));
        }
    }
    path.pop();
    Ok(None)
}

struct Builder<'a> {
    oig: &'a OrientedSystem,
}

impl Builder<'_> {
    fn index(&self, c: &Covector) -> usize {
        self.oig.position(&c.signs).expect("member")
    }

    fn topes_of(&self, f: FlatId) -> Vec<Covector> {
        self.oig.covectors().iter().copied().filter(|c| c.support == f).collect()
    }

    /// Lexicographically least maximal chain from `from` to `-from` through
    /// `via` in the tope poset of support `f` based at `from`.
    fn gallery(&self, f: FlatId, from: &Covector, via: &Covector) -> Result<Vec<Covector>> {
        let topes = self.topes_of(f);
        let sep = |t: &Covector| from.separation_set(t);
        let covers = |a: &Covector, b: &Covector| {
            let (sa, sb) = (sep(a), sep(b));
            sa != sb
                && bits::is_subset(sa, sb)
                && !topes.iter().any(|t| {
                    let st = sep(t);
                    st != sa && st != sb && bits::is_subset(sa, st) && bits::is_subset(st, sb)
                })
        };
        let mut path = vec![*from];
        for target in [*via, from.negate()] {
            let goal = sep(&target);
            if !bits::is_subset(sep(path.last().expect("nonempty")), goal) {
                return Err(Error::Internal(format!("{via} does not lie between {from} and its negation")));
            }
            while *path.last().expect("nonempty") != target {
                let cur = *path.last().expect("nonempty");
                let next = topes
                    .iter()
                    .filter(|t| bits::is_subset(sep(t), goal) && covers(&cur, t))
                    .min()
                    .copied()
                    .ok_or_else(|| Error::Internal(format!("no tope covers {cur} towards {target}")))?;
                path.push(next);
            }
        }
        Ok(path)
    }

    fn node(&self, f: FlatId, base: &Covector, tope: &Covector) -> Result<RcoNode> {
        let lat = self.oig.lattice();
        if lat.height(f) <= 1 {
            return Ok(RcoNode::leaf(self.index(tope)));
        }
        let chain = self.gallery(f, tope, base)?;
        let mut gammas = Vec::with_capacity(chain.len() - 1);
        for w in chain.windows(2) {
            let below: HashSet<Covector> = self.oig.lower_covers(&w[0]).into_iter().collect();
            let common = self
                .oig
                .lower_covers(&w[1])
                .into_iter()
                .filter(|c| below.contains(c))
                .min()
                .ok_or_else(|| Error::Internal(format!("{} and {} have no common facet", w[0], w[1])))?;
            gammas.push(common);
        }
        let supports: Vec<FlatId> = gammas.iter().map(|g| g.support).collect();
        if supports.iter().collect::<HashSet<_>>().len() != supports.len() {
            return Err(Error::Internal(format!("gallery from {tope} crosses a support twice")));
        }
        let facets = self.oig.lower_covers(tope);
        if let Some(f) = facets.iter().find(|c| !supports.contains(&c.support)) {
            return Err(Error::Internal(format!("facet {f} of {tope} has a support missed by the gallery")));
        }
        let mut children = Vec::with_capacity(facets.len());
        for (i, gamma) in gammas.iter().enumerate() {
            if !facets.iter().any(|c| c.support == gamma.support) {
                continue;
            }
            for eps in self.adapted_extension(i, &gammas, tope)? {
                if facets.contains(&eps) {
                    children.push(self.node(gamma.support, gamma, &eps)?);
                }
            }
        }
        Ok(RcoNode { element: self.index(tope), children })
    }

    /// A linear extension of the tope poset of `supp γ_i` based at `γ_i`:
    /// first topes on the far side of an earlier support, then facets of
    /// `tope`, then the rest; within blocks by separation size and string.
    fn adapted_extension(&self, i: usize, gammas: &[Covector], tope: &Covector) -> Result<Vec<Covector>> {
        let lat = self.oig.lattice();
        let gamma = &gammas[i];
        let g = gamma.support;
        let tp = tope_poset_within(self.oig, g, gamma)?;
        let far_side = |eps: &Covector| {
            gammas[..i].iter().any(|gj| {
                let ys = lat.gamma(g) & lat.xi(gj.support);
                ys != 0 && eps.signs.agrees_on(&gamma.signs, ys)
            })
        };
        let block = |eps: &Covector| {
            if far_side(eps) {
                0
            } else if eps.leq(tope) {
                1
            } else {
                2
            }
        };
        let mut ext = tp.topes.clone();
        ext.sort_by_key(|e| (block(e), bits::len(gamma.separation_set(e)), *e));
        tp.check_extension(&ext).map_err(|e| Error::Internal(format!("adapted order is not a linear extension: {e}")))?;
        Ok(ext)
    }
}

/// Builds the recursive coatom ordering of the augmented poset induced by
/// `ext`, a linear extension of the tope poset at `base` (the default
/// extension when `None`), and verifies it.
pub fn recursive_coatom_ordering(
    oig: &OrientedSystem,
    aug: &AugmentedPoset,
    base: &Covector,
    ext: Option<&[Covector]>,
) -> Result<RcoNode> {
    let root = if oig.rank() == 0 {
        RcoNode::leaf(aug.top())
    } else {
        let tp = tope_poset(oig, base)?;
        let ext: Vec<Covector> = match ext {
            Some(e) => {
                tp.check_extension(e)?;
                e.to_vec()
            }
            None => tp.default_extension(),
        };
        let b = Builder { oig };
        let top = oig.lattice().top();
        let children = ext.iter().map(|t| b.node(top, base, t)).collect::<Result<Vec<_>>>()?;
        RcoNode { element: aug.top(), children }
    };
    if let Some(v) = verify_rco(&aug.poset, &root)? {
        return Err(Error::Internal(format!(
            "constructed ordering violates {:?} at {}",
            v.condition,
            aug.poset.label(v.element)
        )));
    }
    Ok(root)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orient::{oig_from_antimatroid, validate_oig};
    use crate::setsys::build_set_system;
    use crate::topo::augmented::augment;
    use crate::topo::poset::boolean_lattice;

    fn colinear() -> OrientedSystem {
        let s = build_set_system(
            &["x", "y", "z"],
            &[vec![], vec!["x"], vec!["z"], vec!["x", "y"], vec!["x", "z"], vec!["y", "z"], vec!["x", "y", "z"]],
        )
        .unwrap();
        oig_from_antimatroid(&s).unwrap()
    }

    fn rank1_complex() -> OrientedSystem {
        let s = build_set_system(&["H0", "H0R"], &[vec![], vec!["H0R"], vec!["H0", "H0R"]]).unwrap();
        let v: Vec<_> = ["00", "+0", "-0", "1+", "1-"].iter().map(|s| s.parse().unwrap()).collect();
        validate_oig(&s, &v).unwrap()
    }

    #[test]
    fn colinear_every_base() {
        let oig = colinear();
        let aug = augment(&oig).unwrap();
        for base in oig.topes() {
            let r = recursive_coatom_ordering(&oig, &aug, &base, None).unwrap();
            assert_eq!(r.children[0].element, oig.position(&base.signs).unwrap());
            assert_eq!(verify_rco(&aug.poset, &r).unwrap(), None);
        }
    }

    #[test]
    fn rank_one_orderings() {
        let one = oig_from_antimatroid(&build_set_system(&["e"], &[vec![], vec!["e"]]).unwrap()).unwrap();
        let aug = augment(&one).unwrap();
        let plus = one.covector("+").unwrap();
        let r = recursive_coatom_ordering(&one, &aug, &plus, None).unwrap();
        let names: Vec<&str> = r.coatoms().iter().map(|&i| aug.poset.label(i)).collect();
        assert_eq!(names, ["+", "-"]);
        let swapped = RcoNode { element: r.element, children: r.children.iter().rev().cloned().collect() };
        assert_eq!(verify_rco(&aug.poset, &swapped).unwrap(), None);

        let c = rank1_complex();
        let aug = augment(&c).unwrap();
        assert_eq!(aug.len(), 6);
        let r = recursive_coatom_ordering(&c, &aug, &c.covector("1+").unwrap(), None).unwrap();
        assert_eq!(r.size(), 1 + 2 + 4);
    }

    fn by_index(p: &FinitePoset, e: usize) -> RcoNode {
        let kids = if p.rank_of(e).unwrap() <= 1 { vec![] } else { p.lower_covers(e).iter().map(|&c| by_index(p, c)).collect() };
        RcoNode { element: e, children: kids }
    }

    fn boolean3_ordering(inner: [usize; 2]) -> RcoNode {
        // coatoms {a0,a1}=3, {a0,a2}=5, {a1,a2}=6
        let node = |e: usize, kids: [usize; 2]| RcoNode { element: e, children: kids.iter().map(|&k| RcoNode::leaf(k)).collect() };
        RcoNode { element: 7, children: vec![node(3, [1, 2]), node(5, inner), node(6, [2, 4])] }
    }

    #[test]
    fn corrupted_boolean_ordering() {
        let b = boolean_lattice(3);
        assert_eq!(verify_rco(&b, &boolean3_ordering([1, 4])).unwrap(), None);
        let v = verify_rco(&b, &boolean3_ordering([4, 1])).unwrap().unwrap();
        assert_eq!(v.condition, RcoCondition::EarlierFirst);
        assert_eq!(v.element, 5);
        assert_eq!(v.path, vec![7]);
        assert_eq!(v.witness, Some(1));
        let mut wrong = boolean3_ordering([1, 4]);
        wrong.children.pop();
        assert!(verify_rco(&b, &wrong).is_err());
    }

    #[test]
    fn condition_two_detected() {
        // two triangles glued at a vertex: the shared vertex is below both
        // but lies under no shared edge
        let labels: Vec<String> = ["0", "v", "a", "b", "c", "d", "va", "vb", "ab", "vc", "vd", "cd", "T1", "T2", "1"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let covers = [
            (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
            (1, 6), (2, 6), (1, 7), (3, 7), (2, 8), (3, 8),
            (1, 9), (4, 9), (1, 10), (5, 10), (4, 11), (5, 11),
            (6, 12), (7, 12), (8, 12), (9, 13), (10, 13), (11, 13),
            (12, 14), (13, 14),
        ];
        let p = FinitePoset::from_covers(labels, &covers).unwrap();
        let root = RcoNode { element: 14, children: vec![by_index(&p, 12), by_index(&p, 13)] };
        let v = verify_rco(&p, &root).unwrap().unwrap();
        assert_eq!(v.condition, RcoCondition::SharedBelowCoatom);
        assert_eq!(v.witness, Some(0));
    }
}
